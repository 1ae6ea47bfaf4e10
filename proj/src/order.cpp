#include "ordmetric/order.hpp"

#include <algorithm>

#include "ordmetric/errors.hpp"

namespace ordmetric {

FiniteOrderedSet::FiniteOrderedSet(std::vector<std::string> ascending) : labels_(std::move(ascending)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw DomainError("duplicate label \"" + labels_[i] + "\" in ordered set");
    }
  }
}

std::optional<std::size_t> FiniteOrderedSet::position(const std::string& label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteOrderedSet::require(const std::string& label) const {
  const auto p = position(label);
  if (!p) throw DomainError("label \"" + label + "\" is not in the ordered set");
  return *p;
}

BottomedOrderedSet::BottomedOrderedSet(FiniteOrderedSet base) : base_(std::move(base)) {
  if (base_.empty()) throw DomainError("a bottomed ordered set needs at least its bottom");
}

FiniteOrderedSet BottomedOrderedSet::stars() const {
  return FiniteOrderedSet({base_.labels().begin() + 1, base_.labels().end()});
}

FiniteOrderedSet dual(const FiniteOrderedSet& set) {
  return FiniteOrderedSet({set.labels().rbegin(), set.labels().rend()});
}

BottomedOrderedSet one_point_extension(const FiniteOrderedSet& set, const std::string& bottom_label) {
  if (set.contains(bottom_label)) {
    throw DomainError("label collision: \"" + bottom_label + "\" already belongs to the set");
  }
  std::vector<std::string> labels;
  labels.reserve(set.size() + 1);
  labels.push_back(bottom_label);
  labels.insert(labels.end(), set.labels().begin(), set.labels().end());
  return BottomedOrderedSet(FiniteOrderedSet(std::move(labels)));
}

bool is_characteristic(const std::vector<std::string>& subset, const BottomedOrderedSet& set) {
  std::vector<bool> member(set.size(), false);
  for (const auto& label : subset) member[set.base().require(label)] = true;
  if (!member[0]) return false;
  // Every s > bottom needs a member t with bottom < t <= s; it suffices to
  // check the least non-bottom element.
  if (set.size() == 1) return true;
  return member[1];
}

bool is_cut(const std::vector<std::size_t>& members, const FiniteOrderedSet& set) {
  if (members.empty()) return false;
  std::vector<bool> in(set.size(), false);
  for (auto p : members) in.at(p) = true;
  // Bounded above: a finite nonempty subset always has an upper bound in L.
  for (std::size_t x = 0; x < set.size(); ++x) {
    if (!in[x]) continue;
    for (std::size_t y = 0; y < x; ++y) {
      if (!in[y]) return false;
    }
  }
  // In a finite chain the supremum of a nonempty set is its maximum.
  const auto sup = *std::max_element(members.begin(), members.end());
  return in[sup];
}

DedekindCompletion dedekind_completion(const FiniteOrderedSet& set) {
  if (set.empty()) throw DomainError("Dedekind completion of an empty set");
  DedekindCompletion out;
  // Cuts of a chain are downward closed, so only prefixes can qualify.
  std::vector<std::string> labels;
  for (std::size_t len = 1; len <= set.size(); ++len) {
    std::vector<std::size_t> prefix(len);
    for (std::size_t i = 0; i < len; ++i) prefix[i] = i;
    if (!is_cut(prefix, set)) continue;
    std::string name = "{";
    for (std::size_t i = 0; i < len; ++i) name += (i ? "," : "") + set.label(i);
    labels.push_back(name + "}");
    out.cuts.push_back(std::move(prefix));
  }
  out.ordered = FiniteOrderedSet(std::move(labels));
  out.embedding.resize(set.size());
  for (std::size_t a = 0; a < set.size(); ++a) {
    for (std::size_t c = 0; c < out.cuts.size(); ++c) {
      if (out.cuts[c].back() == a && out.cuts[c].size() == a + 1) out.embedding[a] = c;
    }
  }
  return out;
}

namespace {

std::vector<std::size_t> resolve(const LabelMap& f, const FiniteOrderedSet& from, const FiniteOrderedSet& to) {
  std::vector<std::size_t> image(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    const auto it = f.find(from.label(i));
    if (it == f.end()) throw DomainError("map is not total: no image for \"" + from.label(i) + "\"");
    image[i] = to.require(it->second);
  }
  for (const auto& [key, value] : f) from.require(key);
  return image;
}

}  // namespace

bool check_isotone(const LabelMap& f, const FiniteOrderedSet& from, const FiniteOrderedSet& to) {
  const auto image = resolve(f, from, to);
  for (std::size_t x = 0; x < image.size(); ++x) {
    for (std::size_t y = x; y < image.size(); ++y) {
      if (image[x] > image[y]) return false;
    }
  }
  return true;
}

bool check_antitone(const LabelMap& f, const FiniteOrderedSet& from, const FiniteOrderedSet& to) {
  const auto image = resolve(f, from, to);
  for (std::size_t x = 0; x < image.size(); ++x) {
    for (std::size_t y = x; y < image.size(); ++y) {
      if (image[y] > image[x]) return false;
    }
  }
  return true;
}

bool check_coinitial(const LabelMap& f, const FiniteOrderedSet& from, const FiniteOrderedSet& to) {
  const auto image = resolve(f, from, to);
  for (std::size_t r = 0; r < to.size(); ++r) {
    const bool below = std::any_of(image.begin(), image.end(), [r](std::size_t e) { return e <= r; });
    if (!below) return false;
  }
  return true;
}

}  // namespace ordmetric
