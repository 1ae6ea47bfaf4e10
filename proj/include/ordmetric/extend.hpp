#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordmetric/element.hpp"
#include "ordmetric/errors.hpp"
#include "ordmetric/retract.hpp"
#include "ordmetric/space.hpp"

namespace ordmetric {

/// pos[i] is the position of point i inside the subset A, or npos.
std::vector<std::size_t> subset_positions(const PointSpace& space);
inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

/// Θ[h,A](x,y) = h(x,y) ∧ (ϱ_{h,A}(x) ∨ ϱ_{h,A}(y)). Vanishes on A×A.
template <TableValue V>
PseudoTable<V> theta(const MetricTable<V>& h) {
  if (h.flavor() != Flavor::ultrametric) throw DomainError("theta needs an ultrametric h");
  const auto& A = h.space().subset();
  if (A.empty()) throw DomainError("theta needs a nonempty subset A");
  std::vector<V> rho;
  rho.reserve(h.size());
  for (std::size_t x = 0; x < h.size(); ++x) rho.push_back(dist_to_set(h.table(), x, A));
  Table<V> out(h.space(), h.zero());
  for (std::size_t x = 0; x < h.size(); ++x) {
    for (std::size_t y = 0; y < h.size(); ++y) out.set(x, y, std::min(h(x, y), std::max(rho[x], rho[y])));
  }
  return PseudoTable<V>{std::move(out), Flavor::ultrametric};
}

namespace detail {

template <TableValue V>
void require_extension_inputs(const MetricTable<V>& h, const Retraction& r, const MetricTable<V>& on_A) {
  if (h.flavor() != Flavor::ultrametric) throw DomainError("the base table h must be an ultrametric");
  require_retraction(r, h.space());
  if (!(on_A.space().points() == h.space().subset_labels())) {
    throw DomainError("the table on A does not match the subset of the space");
  }
  if (!(on_A.zero() == h.zero())) throw DomainError("the table on A and h use different value domains");
}

template <TableValue V>
MetricTable<V> checked_or_defect(Table<V> t, Flavor flavor, const char* what) {
  try {
    return MetricTable<V>::checked(std::move(t), flavor);
  } catch (const DomainError& e) {
    throw DefectError(std::string(what) + ": " + e.what());
  }
}

}  // namespace detail

/// Ψ[h,r,A,d] = r*d ∨ Θ[h,A], a table on X of d's flavor restricting to d.
template <TableValue V>
MetricTable<V> psi(const MetricTable<V>& h, const Retraction& r, const MetricTable<V>& d) {
  detail::require_extension_inputs(h, r, d);
  const auto th = theta(h);
  const auto pos = subset_positions(h.space());
  Table<V> out(h.space(), h.zero());
  for (std::size_t x = 0; x < h.size(); ++x) {
    for (std::size_t y = 0; y < h.size(); ++y) out.set(x, y, std::max(d(pos[r(x)], pos[r(y)]), th(x, y)));
  }
  return detail::checked_or_defect(std::move(out), d.flavor(), "psi output");
}

/// Σ[h,r,k] = r*k ∨ h, an ultrametric on X above h.
template <TableValue V>
MetricTable<V> sigma(const MetricTable<V>& h, const Retraction& r, const MetricTable<V>& k) {
  detail::require_extension_inputs(h, r, k);
  if (k.flavor() != Flavor::ultrametric) throw DomainError("sigma needs an ultrametric k");
  const auto pos = subset_positions(h.space());
  Table<V> out(h.space(), h.zero());
  for (std::size_t x = 0; x < h.size(); ++x) {
    for (std::size_t y = 0; y < h.size(); ++y) out.set(x, y, std::max(k(pos[r(x)], pos[r(y)]), h(x, y)));
  }
  return detail::checked_or_defect(std::move(out), Flavor::ultrametric, "sigma output");
}

/// A strictly descending chain l(0) > ... > l(m) > 0. Over the rationals the
/// rounding compares values; over any other domain it compares Archimedean
/// classes, which must then be strictly descending as well.
class GaugeChain {
 public:
  /// Throws DomainError on an empty, non-positive or non-descending chain.
  explicit GaugeChain(std::vector<Element> descending);

  const std::vector<Element>& values() const { return values_; }
  const Domain& domain() const { return values_.front().domain(); }
  bool class_level() const { return class_level_; }
  const Element& top() const { return values_.front(); }
  bool contains(const Element& v) const;

  /// 0 for v = 0; l(0) if v is above l(0); l(α+1) if l(α+1) < v <= l(α).
  /// Throws DomainError when no entry lies strictly below a positive v.
  Element round_down(const Element& v) const;

 private:
  std::vector<Element> values_;
  bool class_level_ = false;
};

/// Chain built from the distinct positive values (one per class off the
/// rationals) of the given tables, extended by one entry below them: half
/// the least value over the rationals, a lower class elsewhere.
GaugeChain auto_chain(const std::vector<const Table<Element>*>& tables);

/// h(x,y) = l(0) for x != y.
MetricTable<Element> constant_base(const PointSpace& space, const GaugeChain& chain);

struct ExtensionReport {
  MetricTable<Element> d;
  MetricTable<Element> h;
  Retraction r;
  GaugeChain chain;
  MetricTable<Element> k;
  MetricTable<Element> u;
  PseudoTable<Element> theta;
  MetricTable<Element> output;
  /// output|A² = d.
  bool restriction_holds = false;
  /// output validates in d's flavor.
  bool flavor_holds = false;
};

/// k[d] = round_down∘d, u[d] = r*k[d] ∨ h, Φ(d) = r*d ∨ Θ[u[d], A].
/// Over the rationals d must be an ultrametric (value-level rounding only
/// matches the class-level construction there). Throws DomainError on
/// invalid or mismatched inputs and DefectError if a certificate fails.
ExtensionReport extensor_phi(const MetricTable<Element>& d, const MetricTable<Element>& h, const Retraction& r,
                             const GaugeChain& chain);

/// The rational value set S the ultrametric extensor works in.
struct ValueSet {
  enum class Kind { nonnegative, dyadic, explicit_list };
  Kind kind = Kind::nonnegative;
  std::vector<Rational> members;

  bool contains(const Rational& v) const;
  std::string describe() const;
};

bool is_dyadic(const Rational& v);

/// Υ(d) = Φ(d) on rational ultrametrics with every value in S. Throws
/// DomainError on a value outside S or a non-ultrametric d.
ExtensionReport extensor_upsilon(const MetricTable<Element>& d, const MetricTable<Element>& h, const Retraction& r,
                                 const GaugeChain& chain, const ValueSet& S = {});

/// Laws relating two extensions with shared h, r and chain.
struct PairCertificate {
  /// Φ(d ∨ e) = Φ(d) ∨ Φ(e).
  bool join_law = false;
  /// d <= e pointwise implies Φ(d) <= Φ(e) pointwise (vacuous otherwise).
  bool monotone = false;
  /// UD(Φ(d), Φ(e)) = UD(d, e); only meaningful for ultrametric inputs.
  std::optional<bool> ud_isometry;
};

PairCertificate compare_extensions(const MetricTable<Element>& d, const MetricTable<Element>& e,
                                   const MetricTable<Element>& h, const Retraction& r, const GaugeChain& chain);

struct CrosscheckResult {
  bool equal = false;
  /// First pair where the two pipelines disagree.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  /// The embedded output also validates as a metric over 𝒫(S).
  bool embedded_metric = false;
  ExtensionReport direct;
};

/// Runs Υ directly and again through 𝒫(S) with S = {0} ∪ every value of d, h
/// and the chain, mapping the embedded output back through I⁻¹.
CrosscheckResult crosscheck_embed(const MetricTable<Element>& d, const MetricTable<Element>& h, const Retraction& r,
                                  const GaugeChain& chain);

}  // namespace ordmetric
