#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ordmetric {

/// A finite linearly ordered set of opaque labels. The order is the list
/// position; label text plays no role in comparisons.
class FiniteOrderedSet {
 public:
  FiniteOrderedSet() = default;
  /// Throws DomainError on duplicate labels.
  explicit FiniteOrderedSet(std::vector<std::string> ascending);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::string& label(std::size_t position) const { return labels_.at(position); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> position(const std::string& label) const;
  bool contains(const std::string& label) const { return position(label).has_value(); }
  /// Throws DomainError if the label is absent.
  std::size_t require(const std::string& label) const;

  friend bool operator==(const FiniteOrderedSet& a, const FiniteOrderedSet& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// A finite linearly ordered set whose least element (position 0) is the
/// distinguished bottom.
class BottomedOrderedSet {
 public:
  /// Throws DomainError if `base` is empty.
  explicit BottomedOrderedSet(FiniteOrderedSet base);

  const FiniteOrderedSet& base() const { return base_; }
  const std::string& bottom() const { return base_.label(0); }
  std::size_t size() const { return base_.size(); }
  /// Every element except the bottom, in ascending order.
  FiniteOrderedSet stars() const;

  friend bool operator==(const BottomedOrderedSet& a, const BottomedOrderedSet& b) { return a.base_ == b.base_; }

 private:
  FiniteOrderedSet base_;
};

FiniteOrderedSet dual(const FiniteOrderedSet& set);

/// L° = {bottom} ⊔ L. Throws DomainError when the label is already in L.
BottomedOrderedSet one_point_extension(const FiniteOrderedSet& set, const std::string& bottom_label);

/// T is characteristic in S when it holds the bottom and every non-bottom s
/// has some non-bottom t <= s in T. Throws DomainError if T ⊄ S.
bool is_characteristic(const std::vector<std::string>& subset, const BottomedOrderedSet& set);

/// True when `members` (positions of L) satisfies the four cut conditions:
/// nonempty, bounded above, downward closed, contains its supremum if any.
bool is_cut(const std::vector<std::size_t>& members, const FiniteOrderedSet& set);

struct DedekindCompletion {
  /// Cuts ordered by inclusion, each given as ascending positions of L.
  std::vector<std::vector<std::size_t>> cuts;
  /// The completion as an ordered set; cut labels are "{a,b,...}".
  FiniteOrderedSet ordered;
  /// embedding[p] is the cut index of ι(L[p]) = {x : x <= L[p]}.
  std::vector<std::size_t> embedding;
};

/// Throws DomainError on an empty set.
DedekindCompletion dedekind_completion(const FiniteOrderedSet& set);

using LabelMap = std::map<std::string, std::string>;

// Map checks decided by exhaustive pair scan. All throw DomainError when the
// map is not total on `from` or sends a label outside `to`.
bool check_isotone(const LabelMap& f, const FiniteOrderedSet& from, const FiniteOrderedSet& to);
bool check_antitone(const LabelMap& f, const FiniteOrderedSet& from, const FiniteOrderedSet& to);
bool check_coinitial(const LabelMap& f, const FiniteOrderedSet& from, const FiniteOrderedSet& to);

}  // namespace ordmetric
