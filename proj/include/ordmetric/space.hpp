#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ordmetric/errors.hpp"
#include "ordmetric/order.hpp"
#include "ordmetric/table.hpp"

namespace ordmetric {

/// An element of a bottomed ordered set S, by position (0 is ⊚_S).
struct OrderPoint {
  std::size_t pos = 0;
  friend auto operator<=>(const OrderPoint&, const OrderPoint&) = default;
};

template <TableValue V>
void require_same_shape(const Table<V>& d, const Table<V>& e, const char* what) {
  if (!(d.space() == e.space())) throw DomainError(std::string(what) + ": tables live on different spaces");
  if (!(d.zero() == e.zero())) throw DomainError(std::string(what) + ": tables use different value domains");
}

/// (d ∨ e)(x,y) = max(d(x,y), e(x,y)).
template <TableValue V>
MetricTable<V> join(const MetricTable<V>& d, const MetricTable<V>& e) {
  require_same_shape(d.table(), e.table(), "join");
  if (d.flavor() != e.flavor()) throw DomainError("join: flavors differ");
  Table<V> out(d.space(), d.zero());
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) out.set(i, j, std::max(d(i, j), e(i, j)));
  }
  return MetricTable<V>::checked(std::move(out), d.flavor());
}

/// f*d(x,y) = d(f(x), f(y)), where f[i] is the index in d's space of the
/// image of point i of X.
template <TableValue V>
PseudoTable<V> pullback(const PointSpace& X, const std::vector<std::size_t>& f, const MetricTable<V>& d) {
  if (f.size() != X.size()) throw DomainError("pullback: map is not total");
  Table<V> out(X, d.zero());
  for (std::size_t i = 0; i < X.size(); ++i) {
    for (std::size_t j = 0; j < X.size(); ++j) out.set(i, j, d(f.at(i), f.at(j)));
  }
  return PseudoTable<V>{std::move(out), d.flavor()};
}

/// Label form; throws DomainError when f is not total or leaves d's space.
template <TableValue V>
PseudoTable<V> pullback(const PointSpace& X, const std::map<std::string, std::string>& f, const MetricTable<V>& d) {
  std::vector<std::size_t> idx(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) {
    const auto it = f.find(X.label(i));
    if (it == f.end()) throw DomainError("pullback: no image for \"" + X.label(i) + "\"");
    idx[i] = d.space().index(it->second);
  }
  return pullback(X, idx, d);
}

/// ϱ_{d,A}(x) = min over a in A of d(x,a). Throws DomainError on empty A.
template <TableValue V>
V dist_to_set(const Table<V>& d, std::size_t x, const std::vector<std::size_t>& A) {
  if (A.empty()) throw DomainError("distance to an empty set");
  V best = d(x, A.front());
  for (auto a : A) {
    if (d(x, a) < best) best = d(x, a);
  }
  return best;
}

template <TableValue V>
std::vector<std::size_t> closed_ball(const Table<V>& d, std::size_t x, const V& s) {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < d.size(); ++y) {
    if (d(x, y) <= s) out.push_back(y);
  }
  return out;
}

template <TableValue V>
std::vector<std::size_t> open_ball(const Table<V>& d, std::size_t x, const V& s) {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < d.size(); ++y) {
    if (d(x, y) < s) out.push_back(y);
  }
  return out;
}

/// First (x,y,z) with d(x,z) < d(y,z) but d(y,z) != d(x,y), if any.
template <TableValue V>
std::optional<std::array<std::size_t, 3>> isosceles_witness(const Table<V>& d) {
  const std::size_t n = d.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (d(x, z) < d(y, z) && d(y, z) != d(x, y)) return std::array<std::size_t, 3>{x, y, z};
      }
    }
  }
  return std::nullopt;
}

template <TableValue V>
bool check_isosceles(const Table<V>& d) {
  return !isosceles_witness(d).has_value();
}

/// M_S on the given labels of S: max(x,y) off the diagonal, ⊚ on it.
/// Throws DomainError on duplicates or labels outside S.
MetricTable<OrderPoint> m_s_table(const BottomedOrderedSet& S, const std::vector<std::string>& labels);

/// e ∈ 𝒱(d;ε): on every pair either e = d, or both e < d ∨ ε and d < e ∨ ε.
/// Throws DomainError unless ε is above the zero.
template <TableValue V>
bool in_neighborhood(const Table<V>& e, const Table<V>& d, const V& eps) {
  require_same_shape(d, e, "in_neighborhood");
  if (!(d.zero() < eps)) throw DomainError("neighbourhood radius must be positive");
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (e(i, j) == d(i, j)) continue;
      if (!(e(i, j) < std::max(d(i, j), eps)) || !(d(i, j) < std::max(e(i, j), eps))) return false;
    }
  }
  return true;
}

/// UD(d,e): the least ε with d ≤ e ∨ ε and e ≤ d ∨ ε pointwise, i.e. zero when
/// d = e and otherwise the largest max(d,e) over pairs where they differ. The
/// value always lies among the tables' own values, so the infinite case of
/// the general definition never arises.
template <TableValue V>
V ud_distance(const MetricTable<V>& d, const MetricTable<V>& e) {
  require_same_shape(d.table(), e.table(), "ud_distance");
  if (d.flavor() != Flavor::ultrametric || e.flavor() != Flavor::ultrametric) {
    throw DomainError("ud_distance is defined between ultrametrics");
  }
  V out = d.zero();
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (d(i, j) != e(i, j)) out = std::max(out, std::max(d(i, j), e(i, j)));
    }
  }
  return out;
}

/// ψ∘d. ψ must be isotone on the values that occur in d and send only the
/// zero to `zero_out`; otherwise DomainError names the offending values. The
/// result is validated in `out_flavor`.
template <TableValue V, TableValue W>
MetricTable<W> transport(const std::function<W(const V&)>& psi, const MetricTable<V>& d, const W& zero_out,
                         Flavor out_flavor, const std::function<std::string(const V&)>& show = nullptr) {
  std::vector<V> values;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (std::find(values.begin(), values.end(), d(i, j)) == values.end()) values.push_back(d(i, j));
    }
  }
  std::sort(values.begin(), values.end());
  std::vector<W> images;
  images.reserve(values.size());
  for (const auto& v : values) images.push_back(psi(v));
  auto name = [&](const V& v) { return show ? show(v) : std::string("a value"); };
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!(values[k] == d.zero()) && images[k] == zero_out) {
      throw DomainError("transport collapses positive " + name(values[k]) + " to the bottom");
    }
    if (k > 0 && images[k] < images[k - 1]) {
      throw DomainError("transport map is not isotone at " + name(values[k - 1]) + " < " + name(values[k]));
    }
  }
  Table<W> out(d.space(), zero_out);
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      const auto k = static_cast<std::size_t>(std::lower_bound(values.begin(), values.end(), d(i, j)) - values.begin());
      out.set(i, j, images[k]);
    }
  }
  return MetricTable<W>::checked(std::move(out), out_flavor);
}

}  // namespace ordmetric
