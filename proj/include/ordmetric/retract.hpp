#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "ordmetric/element.hpp"
#include "ordmetric/errors.hpp"
#include "ordmetric/hahn.hpp"
#include "ordmetric/space.hpp"

namespace ordmetric {

struct LipschitzCertificate {
  bool holds = true;
  Rational factor;
  /// The first violating pair when the bound fails; otherwise the first pair
  /// attaining max_ratio (if there is one).
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  /// max d(r(x),r(y)) / d(x,y) over x != y; only for rational-valued tables.
  std::optional<Rational> max_ratio;
};

/// A map X -> A fixing A pointwise; mapping[i] is a point index.
struct Retraction {
  PointSpace space;
  std::vector<std::size_t> mapping;
  std::optional<Rational> tau;
  std::optional<LipschitzCertificate> certificate;

  std::size_t operator()(std::size_t x) const { return mapping.at(x); }
  bool is_identity() const {
    for (std::size_t i = 0; i < mapping.size(); ++i) {
      if (mapping[i] != i) return false;
    }
    return true;
  }
};

/// Checks that r maps into A and fixes A; throws DomainError otherwise.
void require_retraction(const Retraction& r, const PointSpace& space);

/// Decides a <= c·b for values of a table and a positive rational c. Values
/// of a field domain are compared in that field. Any other value set is
/// first embedded into 𝒫(S) through I, S being the values the table
/// realizes, and compared there.
template <TableValue V>
class ScaledOrder {
 public:
  explicit ScaledOrder(const Table<V>& d) {
    if constexpr (std::is_same_v<V, Element>) {
      if (is_field(d.zero().domain())) {
        direct_ = true;
        return;
      }
    }
    for (std::size_t i = 0; i < d.size(); ++i) {
      for (std::size_t j = 0; j < d.size(); ++j) values_.push_back(d(i, j));
    }
    values_.push_back(d.zero());
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < values_.size(); ++k) labels.push_back("v" + std::to_string(k));
    const BottomedOrderedSet S{FiniteOrderedSet(labels)};
    field_ = powerset_field(S);
    for (const auto& l : labels) images_.push_back(embed_I(S, field_, l));
  }

  bool le(const V& a, const Rational& c, const V& b) const {
    if constexpr (std::is_same_v<V, Element>) {
      if (direct_) {
        if (std::holds_alternative<RationalKind>(a.domain()->kind)) return a.as_rational() <= c * b.as_rational();
        return a <= Element::field_constant(a.domain(), c) * b;
      }
    }
    return image(a) <= Element::field_constant(field_, c) * image(b);
  }

 private:
  const Element& image(const V& v) const {
    const auto it = std::lower_bound(values_.begin(), values_.end(), v);
    if (it == values_.end() || !(*it == v)) throw DomainError("value outside the table's realized set");
    return images_[static_cast<std::size_t>(it - values_.begin())];
  }

  bool direct_ = false;
  std::vector<V> values_;
  Domain field_;
  std::vector<Element> images_;
};

inline void require_tau(const Rational& tau) {
  if (tau <= Rational(1)) throw DomainError("tau must be > 1, got " + tau.str());
}

template <TableValue V>
void require_ultrametric_with_subset(const MetricTable<V>& d) {
  if (d.flavor() != Flavor::ultrametric) throw DomainError("retraction needs an ultrametric");
  if (d.space().subset().empty()) throw DomainError("retraction needs a nonempty subset A");
}

/// St(x) = {a in A : d(x,a) <= τ·ϱ_{d,A}(x)}, ascending by index.
template <TableValue V>
std::vector<std::size_t> st_set(const MetricTable<V>& d, std::size_t x, const Rational& tau,
                                const ScaledOrder<V>& order) {
  const auto& A = d.space().subset();
  const V rho = dist_to_set(d.table(), x, A);
  std::vector<std::size_t> out;
  for (auto a : A) {
    if (order.le(d(x, a), tau, rho)) out.push_back(a);
  }
  return out;
}

template <TableValue V>
std::vector<std::size_t> st_set(const MetricTable<V>& d, std::size_t x, const Rational& tau) {
  require_ultrametric_with_subset(d);
  require_tau(tau);
  return st_set(d, x, tau, ScaledOrder<V>(d.table()));
}

/// Checks d(r(x), r(y)) <= factor·d(x,y) on every pair.
template <TableValue V>
LipschitzCertificate lipschitz_certificate(const MetricTable<V>& d, const Retraction& r, const Rational& factor,
                                           const ScaledOrder<V>& order) {
  LipschitzCertificate cert;
  cert.factor = factor;
  const std::size_t n = d.size();
  for (std::size_t x = 0; x < n && cert.holds; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!order.le(d(r(x), r(y)), factor, d(x, y))) {
        cert.holds = false;
        cert.witness = std::make_pair(x, y);
        break;
      }
    }
  }
  if constexpr (std::is_same_v<V, Element>) {
    if (cert.holds && std::holds_alternative<RationalKind>(d.zero().domain()->kind)) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
          const Rational ratio = d(r(x), r(y)).as_rational() / d(x, y).as_rational();
          if (!cert.max_ratio || *cert.max_ratio < ratio) {
            cert.max_ratio = ratio;
            cert.witness = std::make_pair(x, y);
          }
        }
      }
    }
  }
  return cert;
}

template <TableValue V>
LipschitzCertificate lipschitz_certificate(const MetricTable<V>& d, const Retraction& r, const Rational& factor) {
  return lipschitz_certificate(d, r, factor, ScaledOrder<V>(d.table()));
}

/// r(x) = the index-least element of St(x), with a verified τ²-Lipschitz
/// certificate. Throws DomainError on τ <= 1, an empty subset or a
/// non-ultrametric table, and DefectError if the certificate fails.
template <TableValue V>
Retraction compute_retraction(const MetricTable<V>& d, const Rational& tau) {
  require_ultrametric_with_subset(d);
  require_tau(tau);
  const ScaledOrder<V> order(d.table());
  Retraction r{d.space(), std::vector<std::size_t>(d.size()), tau, std::nullopt};
  for (std::size_t x = 0; x < d.size(); ++x) {
    const auto st = st_set(d, x, tau, order);
    if (st.empty()) throw DefectError("empty St set at " + d.space().label(x));
    r.mapping[x] = st.front();
  }
  auto cert = lipschitz_certificate(d, r, tau * tau, order);
  if (!cert.holds) {
    throw DefectError("tau^2-Lipschitz certificate failed at (" + d.space().label(cert.witness->first) + "," +
                      d.space().label(cert.witness->second) + ")");
  }
  r.certificate = std::move(cert);
  return r;
}

/// r(x) = the index-least nearest point of A.
template <TableValue V>
Retraction nearest_point_retraction(const MetricTable<V>& d) {
  if (d.space().subset().empty()) throw DomainError("retraction needs a nonempty subset A");
  Retraction r{d.space(), std::vector<std::size_t>(d.size()), std::nullopt, std::nullopt};
  for (std::size_t x = 0; x < d.size(); ++x) {
    const V rho = dist_to_set(d.table(), x, d.space().subset());
    for (auto a : d.space().subset()) {
      if (d(x, a) == rho) {
        r.mapping[x] = a;
        break;
      }
    }
  }
  return r;
}

template <TableValue V>
bool is_one_lipschitz(const Table<V>& d, const Retraction& r) {
  for (std::size_t x = 0; x < d.size(); ++x) {
    for (std::size_t y = 0; y < d.size(); ++y) {
      if (d(x, y) < d(r(x), r(y))) return false;
    }
  }
  return true;
}

/// k(x,y) = h(x,y) ∨ h(r(x), r(y)); r is 1-Lipschitz for k. Throws
/// DefectError if that certificate fails.
template <TableValue V>
MetricTable<V> one_lipschitz_remetrize(const MetricTable<V>& h, const Retraction& r) {
  require_retraction(r, h.space());
  Table<V> k(h.space(), h.zero());
  for (std::size_t x = 0; x < h.size(); ++x) {
    for (std::size_t y = 0; y < h.size(); ++y) k.set(x, y, std::max(h(x, y), h(r(x), r(y))));
  }
  auto out = MetricTable<V>::checked(std::move(k), h.flavor());
  if (!is_one_lipschitz(out.table(), r)) throw DefectError("re-metrized table is not 1-Lipschitz for r");
  return out;
}

/// Backtracking search over maps X\A -> A fixing A, trying images in index
/// order, so the first hit is the lexicographically least 1-Lipschitz
/// retraction. Throws DomainError when |X| exceeds `bound` or A is empty.
template <TableValue V>
std::optional<Retraction> find_one_lipschitz_retraction(const MetricTable<V>& d, std::size_t bound = 7) {
  if (d.size() > bound) {
    throw DomainError("brute-force bound exceeded: " + std::to_string(d.size()) + " points > " + std::to_string(bound));
  }
  const auto& A = d.space().subset();
  if (A.empty()) throw DomainError("retraction needs a nonempty subset A");
  const std::size_t n = d.size();
  std::vector<std::size_t> free_points;
  std::vector<std::size_t> map(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (d.space().in_subset(i)) {
      map[i] = i;
    } else {
      free_points.push_back(i);
    }
  }
  // Assigned points are A plus free_points[0..depth).
  auto consistent = [&](std::size_t x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (map[y] == n) continue;
      if (d(x, y) < d(map[x], map[y])) return false;
    }
    return true;
  };
  std::vector<std::size_t> choice(free_points.size(), 0);
  std::size_t depth = 0;
  while (true) {
    if (depth == free_points.size()) {
      return Retraction{d.space(), map, std::nullopt, std::nullopt};
    }
    const std::size_t x = free_points[depth];
    bool placed = false;
    while (choice[depth] < A.size()) {
      map[x] = A[choice[depth]++];
      if (consistent(x)) {
        placed = true;
        break;
      }
    }
    if (placed) {
      ++depth;
      continue;
    }
    map[x] = n;
    choice[depth] = 0;
    if (depth == 0) return std::nullopt;
    --depth;
    map[free_points[depth]] = n;
  }
}

}  // namespace ordmetric
