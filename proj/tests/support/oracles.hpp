#pragma once

// Brute-force re-implementations used as test oracles. None of these call
// the structural code paths they are compared against.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ordmetric/element.hpp"
#include "ordmetric/generate.hpp"
#include "ordmetric/group.hpp"
#include "ordmetric/order.hpp"
#include "ordmetric/table.hpp"

namespace oracle {

using ordmetric::ArchOrder;
using ordmetric::Element;
using ordmetric::Rational;

/// Decides ≪ / ≍ / ≫ by the multiple definition with n = 1..bound.
inline ArchOrder arch_by_multiples(const Element& x, const Element& y, long bound = 64) {
  bool x_small = true;
  bool y_small = true;
  for (long n = 1; n <= bound; ++n) {
    if (!(x.scaled(Rational(n)) < y)) x_small = false;
    if (!(y.scaled(Rational(n)) < x)) y_small = false;
  }
  if (x_small) return ArchOrder::much_less;
  if (y_small) return ArchOrder::much_greater;
  return ArchOrder::equivalent;
}

/// Left-to-right comparison of coordinate vectors: -1, 0 or 1.
inline int lex_compare(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (b[i] < a[i]) return 1;
  }
  return 0;
}

/// Compares two series over a set of exponent positions by dense
/// coefficient vectors, top position first.
inline int hahn_compare(const Element& f, const Element& g, std::size_t positions) {
  std::vector<Rational> df(positions, Rational(0));
  std::vector<Rational> dg(positions, Rational(0));
  for (const auto& t : f.as_series().terms()) df[t.exponent.position()] = t.coefficient;
  for (const auto& t : g.as_series().terms()) dg[t.exponent.position()] = t.coefficient;
  for (std::size_t p = positions; p-- > 0;) {
    if (df[p] < dg[p]) return -1;
    if (dg[p] < df[p]) return 1;
  }
  return 0;
}

/// Every subset of L (as a bitmask) that is a cut by the literal four
/// conditions: nonempty, has an upper bound in L, downward closed, and
/// contains its supremum when the supremum exists in L.
inline std::vector<unsigned> cuts_by_subsets(std::size_t n) {
  std::vector<unsigned> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (mask == 0) continue;
    auto in = [mask](std::size_t i) { return ((mask >> i) & 1u) != 0; };
    bool bounded = false;
    for (std::size_t u = 0; u < n; ++u) {
      bool upper = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (in(i) && i > u) upper = false;
      }
      bounded = bounded || upper;
    }
    bool down = true;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (in(i) && !in(j)) down = false;
      }
    }
    // Least upper bound: least u that bounds the subset.
    bool has_sup = false;
    std::size_t sup = 0;
    for (std::size_t u = 0; u < n && !has_sup; ++u) {
      bool upper = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (in(i) && i > u) upper = false;
      }
      if (upper) {
        has_sup = true;
        sup = u;
      }
    }
    const bool sup_ok = !has_sup || in(sup);
    if (bounded && down && sup_ok) out.push_back(mask);
  }
  return out;
}

/// Names of the violated axioms, found by a plain all-triples scan.
template <class V>
std::set<std::string> violated_axioms(const ordmetric::Table<V>& t, ordmetric::Flavor flavor) {
  const std::string p = flavor == ordmetric::Flavor::metric ? "M" : "U";
  std::set<std::string> out;
  const std::size_t n = t.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (!(t(x, x) == t.zero())) out.insert(p + "1");
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && t(x, y) == t.zero()) out.insert(p + "0");
      if (t(x, y) < t.zero()) out.insert(p + "2");
      if (!(t(x, y) == t(y, x))) out.insert(p + "3");
      for (std::size_t z = 0; z < n; ++z) {
        if (flavor == ordmetric::Flavor::ultrametric) {
          const V& m = t(x, z) < t(z, y) ? t(z, y) : t(x, z);
          if (m < t(x, y)) out.insert(p + "4");
        } else if constexpr (ordmetric::AdditiveValue<V>) {
          if (t(x, z) + t(z, y) < t(x, y)) out.insert(p + "4");
        }
      }
    }
  }
  return out;
}

/// The least ε among {0} ∪ values of d and e with d <= e∨ε and e <= d∨ε.
template <class V>
V ud_by_candidates(const ordmetric::Table<V>& d, const ordmetric::Table<V>& e) {
  std::vector<V> candidates{d.zero()};
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      candidates.push_back(d(i, j));
      candidates.push_back(e(i, j));
    }
  }
  std::sort(candidates.begin(), candidates.end());
  for (const auto& eps : candidates) {
    bool ok = true;
    for (std::size_t i = 0; i < d.size() && ok; ++i) {
      for (std::size_t j = 0; j < d.size(); ++j) {
        const V& em = e(i, j) < eps ? eps : e(i, j);
        const V& dm = d(i, j) < eps ? eps : d(i, j);
        if (em < d(i, j) || dm < e(i, j)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return eps;
  }
  return candidates.back();
}

/// Random elements for property suites.
inline Rational small_rational(ordmetric::Rng& rng, long span = 9, long den = 6) {
  return Rational(rng.between(-span, span), rng.between(1, den));
}

inline Element random_lex(ordmetric::Rng& rng, const ordmetric::Domain& d, long span = 4) {
  const auto& bases = std::get<ordmetric::LexKind>(d->kind).bases;
  std::vector<Rational> c;
  for (auto b : bases) {
    // Sparse coordinates so that leading zeros (and small classes) appear.
    if (rng.below(3) == 0) {
      c.emplace_back(0);
    } else if (b == ordmetric::CoordBase::integer) {
      c.emplace_back(rng.between(-span, span));
    } else {
      c.push_back(small_rational(rng, span));
    }
  }
  return Element::lex(d, std::move(c));
}

inline Element random_hahn(ordmetric::Rng& rng, const ordmetric::Domain& d, std::size_t positions, std::size_t max_terms = 3) {
  std::vector<ordmetric::Term> terms;
  const std::size_t k = rng.below(max_terms + 1);
  for (std::size_t i = 0; i < k; ++i) {
    terms.push_back(ordmetric::Term{ordmetric::Exponent(rng.below(positions)), small_rational(rng, 5, 3)});
  }
  return Element::series(d, ordmetric::HahnSeries::from_terms(std::move(terms)));
}

/// A series of K(Q): exponents are small rationals.
inline Element random_field(ordmetric::Rng& rng, const ordmetric::Domain& field, std::size_t max_terms = 3) {
  std::vector<ordmetric::Term> terms;
  const std::size_t k = rng.below(max_terms + 1);
  for (std::size_t i = 0; i < k; ++i) {
    terms.push_back(ordmetric::Term{ordmetric::Exponent(Element::rational(Rational(rng.between(-3, 3), rng.between(1, 2)))),
                                    small_rational(rng, 5, 3)});
  }
  return Element::series(field, ordmetric::HahnSeries::from_terms(std::move(terms)));
}

}  // namespace oracle
