#include "ordmetric/generate.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "ordmetric/errors.hpp"

namespace ordmetric {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw DomainError("Rng::below(0)");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % n;
}

std::vector<std::string> numbered_labels(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::vector<std::string> random_subset(Rng& rng, const std::vector<std::string>& labels) {
  if (labels.empty()) return {};
  std::vector<std::string> out;
  for (const auto& l : labels) {
    if (rng.coin()) out.push_back(l);
  }
  if (out.empty()) out.push_back(labels[rng.below(labels.size())]);
  return out;
}

std::vector<std::vector<std::size_t>> random_paths(Rng& rng, std::size_t points, std::size_t depth) {
  if (points > 1 && depth == 0) throw DomainError("a tree of depth 0 has a single leaf");
  std::size_t branch = 2;
  auto capacity = [depth](std::size_t b) {
    std::size_t c = 1;
    for (std::size_t i = 0; i < depth && c < (1u << 20); ++i) c *= b;
    return c;
  };
  while (capacity(branch) < points) ++branch;
  ++branch;
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> out;
  while (out.size() < points) {
    std::vector<std::size_t> path(depth);
    for (auto& c : path) c = rng.below(branch);
    if (seen.insert(path).second) out.push_back(std::move(path));
  }
  return out;
}

MetricTable<Element> tree_ultrametric(const PointSpace& space, const std::vector<std::vector<std::size_t>>& paths,
                                      const std::vector<Element>& levels) {
  if (paths.size() != space.size()) throw DomainError("one path per point is required");
  if (levels.empty()) {
    if (space.size() > 1) throw DomainError("levels are required for more than one point");
    return MetricTable<Element>::checked(Table<Element>(space, Element::rational(0)), Flavor::ultrametric);
  }
  Table<Element> t(space, Element::zero(levels.front().domain()));
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = 0; j < space.size(); ++j) {
      if (i == j) continue;
      std::size_t l = 0;
      while (paths[i][l] == paths[j][l]) ++l;
      t.set(i, j, levels.at(l));
    }
  }
  return MetricTable<Element>::checked(std::move(t), Flavor::ultrametric);
}

std::vector<Element> random_dyadic_levels(Rng& rng, std::size_t depth) {
  std::vector<Element> out;
  long e = rng.between(-1, 1);
  for (std::size_t i = 0; i < depth; ++i) {
    const Rational v = e >= 0 ? Rational(1, 1L << e) : Rational(1L << (-e));
    out.push_back(Element::rational(v));
    e += rng.between(1, 2);
  }
  return out;
}

MetricTable<Element> random_ultrametric(Rng& rng, std::size_t points, std::size_t depth) {
  const auto labels = numbered_labels("x", points);
  const PointSpace space(labels, random_subset(rng, labels));
  return tree_ultrametric(space, random_paths(rng, points, depth), random_dyadic_levels(rng, depth));
}

MetricTable<Element> random_ultrametric_on(Rng& rng, const PointSpace& space, const std::vector<Element>& levels) {
  if (levels.empty()) throw DomainError("no levels to draw from");
  const std::size_t depth = std::min<std::size_t>(levels.size(), 3);
  std::vector<std::size_t> picks(levels.size());
  for (std::size_t i = 0; i < picks.size(); ++i) picks[i] = i;
  // Partial Fisher-Yates, then sort the chosen indices so values descend.
  for (std::size_t i = 0; i < depth; ++i) std::swap(picks[i], picks[i + rng.below(picks.size() - i)]);
  picks.resize(depth);
  std::sort(picks.begin(), picks.end());
  std::vector<Element> chosen;
  for (auto p : picks) chosen.push_back(levels[p]);
  return tree_ultrametric(space, random_paths(rng, space.size(), depth), chosen);
}

ExtensionInstance random_extension_instance(Rng& rng, std::size_t max_points) {
  const std::size_t n = 1 + rng.below(std::max<std::size_t>(max_points, 1));
  const auto labels = numbered_labels("x", n);
  const PointSpace space(labels, random_subset(rng, labels));
  // Chain exponents reach at least 6, d's levels stop at 5 or earlier.
  GaugeChain chain(random_dyadic_levels(rng, 8));
  auto h = random_ultrametric_on(rng, space, chain.values());
  const PointSpace on_A = space.subset_space();
  const std::size_t depth = 1 + rng.below(3);
  auto d = tree_ultrametric(on_A, random_paths(rng, on_A.size(), depth), random_dyadic_levels(rng, depth));
  return ExtensionInstance{std::move(h), std::move(d), std::move(chain)};
}

MetricTable<Element> random_partner(Rng& rng, const ExtensionInstance& inst) {
  const PointSpace& on_A = inst.d.space();
  const std::size_t depth = 1 + rng.below(3);
  return tree_ultrametric(on_A, random_paths(rng, on_A.size(), depth), random_dyadic_levels(rng, depth));
}

}  // namespace ordmetric
