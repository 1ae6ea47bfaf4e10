#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ordmetric/errors.hpp"

namespace ordmetric {

/// Named points X with a distinguished subset A. Subset entries are kept as
/// ascending point indices.
class PointSpace {
 public:
  PointSpace() = default;
  /// Throws DomainError on duplicate points or a subset label outside X.
  PointSpace(std::vector<std::string> points, const std::vector<std::string>& subset);

  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& label(std::size_t i) const { return points_.at(i); }
  std::optional<std::size_t> find(const std::string& label) const;
  /// Throws DomainError on an unknown label.
  std::size_t index(const std::string& label) const;

  const std::vector<std::size_t>& subset() const { return subset_; }
  std::vector<std::string> subset_labels() const;
  bool in_subset(std::size_t i) const { return member_.at(i); }

  /// The space whose points are A (in index order) and whose subset is all of A.
  PointSpace subset_space() const;
  /// Same points, different subset.
  PointSpace with_subset(const std::vector<std::string>& subset) const { return PointSpace(points_, subset); }

  friend bool operator==(const PointSpace& a, const PointSpace& b) {
    return a.points_ == b.points_ && a.subset_ == b.subset_;
  }

 private:
  std::vector<std::string> points_;
  std::vector<std::size_t> subset_;
  std::vector<bool> member_;
  std::unordered_map<std::string, std::size_t> index_;
};

template <class V>
concept TableValue = std::totally_ordered<V> && std::copy_constructible<V>;

template <class V>
concept AdditiveValue = TableValue<V> && requires(const V& a, const V& b) {
  { a + b } -> std::convertible_to<V>;
};

enum class Flavor { metric, ultrametric };

inline const char* flavor_name(Flavor f) { return f == Flavor::metric ? "metric" : "ultrametric"; }

/// A raw n×n table of values over a point space. `zero` is 0_G or ⊚_S.
template <TableValue V>
class Table {
 public:
  Table(PointSpace space, V zero) : space_(std::move(space)), zero_(std::move(zero)) {
    cells_.assign(space_.size() * space_.size(), zero_);
  }

  /// Throws DomainError when the rows do not form an n×n matrix.
  Table(PointSpace space, V zero, std::vector<std::vector<V>> rows) : Table(std::move(space), std::move(zero)) {
    const std::size_t n = space_.size();
    if (rows.size() != n) throw DomainError("table has " + std::to_string(rows.size()) + " rows for " + std::to_string(n) + " points");
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) throw DomainError("table row " + std::to_string(i) + " has the wrong length");
      for (std::size_t j = 0; j < n; ++j) cells_[i * n + j] = std::move(rows[i][j]);
    }
  }

  const PointSpace& space() const { return space_; }
  std::size_t size() const { return space_.size(); }
  const V& zero() const { return zero_; }
  const V& operator()(std::size_t i, std::size_t j) const { return cells_[i * size() + j]; }
  void set(std::size_t i, std::size_t j, V v) { cells_[i * size() + j] = std::move(v); }
  void set_symmetric(std::size_t i, std::size_t j, const V& v) {
    set(i, j, v);
    set(j, i, v);
  }

  friend bool operator==(const Table& a, const Table& b) { return a.space_ == b.space_ && a.cells_ == b.cells_; }

 private:
  PointSpace space_;
  V zero_;
  std::vector<V> cells_;
};

struct Violation {
  std::string axiom;
  /// (x) for M1/U1, (x,y) for M0/M2/M3, (x,y,z) for the triangle laws with z
  /// the intermediate point.
  std::vector<std::size_t> witness;
  std::size_t count = 0;
};

struct ValidationReport {
  Flavor flavor = Flavor::metric;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  const Violation* find(const std::string& axiom) const {
    for (const auto& v : violations) {
      if (v.axiom == axiom) return &v;
    }
    return nullptr;
  }
};

/// Checks every axiom of the flavor and records the first witness and the
/// number of violations for each failed one. With `pseudo` the separation
/// axiom (M0/U0) is skipped. The metric triangle law needs an additive V.
template <TableValue V>
ValidationReport validate(const Table<V>& t, Flavor flavor, bool pseudo = false) {
  const char p = flavor == Flavor::metric ? 'M' : 'U';
  ValidationReport report{flavor, {}};
  const std::size_t n = t.size();
  auto note = [&](int axiom, std::vector<std::size_t> witness) {
    const std::string name = std::string(1, p) + std::to_string(axiom);
    for (auto& v : report.violations) {
      if (v.axiom == name) {
        ++v.count;
        return;
      }
    }
    report.violations.push_back(Violation{name, std::move(witness), 1});
  };
  if (!pseudo) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x != y && t(x, y) == t.zero()) note(0, {x, y});
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (t(x, x) != t.zero()) note(1, {x});
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (t(x, y) < t.zero()) note(2, {x, y});
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (t(x, y) != t(y, x)) note(3, {x, y});
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        bool broken = false;
        if (flavor == Flavor::ultrametric) {
          broken = t(x, z) < t(x, y) && t(z, y) < t(x, y);
        } else if constexpr (AdditiveValue<V>) {
          broken = t(x, z) + t(z, y) < t(x, y);
        } else {
          throw DomainError("the metric triangle law needs an additive value domain");
        }
        if (broken) note(4, {x, y, z});
      }
    }
  }
  // Report axioms in numeric order regardless of discovery order.
  std::sort(report.violations.begin(), report.violations.end(),
            [](const Violation& a, const Violation& b) { return a.axiom < b.axiom; });
  return report;
}

/// A table that satisfied its flavor's axioms when it was built.
template <TableValue V>
class MetricTable {
 public:
  /// Throws DomainError naming the first violated axiom.
  static MetricTable checked(Table<V> t, Flavor flavor) {
    const auto report = validate(t, flavor);
    if (!report.ok()) {
      const auto& v = report.violations.front();
      std::string where;
      for (auto i : v.witness) where += (where.empty() ? "" : ",") + t.space().label(i);
      throw DomainError(std::string("not a valid ") + flavor_name(flavor) + ": " + v.axiom + " fails at (" + where + ")");
    }
    return MetricTable(std::move(t), flavor);
  }

  const Table<V>& table() const { return table_; }
  const PointSpace& space() const { return table_.space(); }
  std::size_t size() const { return table_.size(); }
  const V& zero() const { return table_.zero(); }
  Flavor flavor() const { return flavor_; }
  const V& operator()(std::size_t i, std::size_t j) const { return table_(i, j); }

  friend bool operator==(const MetricTable& a, const MetricTable& b) { return a.table_ == b.table_; }

 private:
  MetricTable(Table<V> t, Flavor flavor) : table_(std::move(t)), flavor_(flavor) {}

  Table<V> table_;
  Flavor flavor_;
};

/// A table that may vanish off the diagonal. Never accepted where a
/// MetricTable is required.
template <TableValue V>
struct PseudoTable {
  Table<V> table;
  Flavor flavor;

  const V& operator()(std::size_t i, std::size_t j) const { return table(i, j); }
  std::size_t size() const { return table.size(); }
};

}  // namespace ordmetric
