#include "ordmetric/extend.hpp"

#include <algorithm>

#include "ordmetric/group.hpp"
#include "ordmetric/hahn.hpp"

namespace ordmetric {

namespace {

bool is_rational_domain(const Domain& d) { return std::holds_alternative<RationalKind>(d->kind); }

Element positive_unit(const Domain& domain) {
  if (is_rational_domain(domain)) return Element::rational(1);
  if (const auto* lex = std::get_if<LexKind>(&domain->kind)) {
    std::vector<Rational> c(lex->bases.size(), Rational(0));
    c.back() = Rational(1);
    return Element::lex(domain, std::move(c));
  }
  const auto& exps = std::get<HahnKind>(domain->kind).exponents;
  if (const auto* set = std::get_if<FiniteOrderedSet>(&exps)) {
    if (set->empty()) throw DomainError("the Hahn group over an empty set has no positive element");
    return embed_E(domain, set->label(0));
  }
  return Element::field_constant(domain, Rational(1));
}

// An element whose class lies strictly below the class of v (v > 0).
Element below_class(const Element& v) {
  const Domain& domain = v.domain();
  if (is_rational_domain(domain)) return v.scaled(Rational(1, 2));
  if (const auto* lex = std::get_if<LexKind>(&domain->kind)) {
    const std::size_t i = ArchClass::of(v).lex_index();
    if (i + 1 >= lex->bases.size()) throw DomainError("no Archimedean class below " + v.str() + " in " + describe(domain));
    std::vector<Rational> c(lex->bases.size(), Rational(0));
    c[i + 1] = Rational(1);
    return Element::lex(domain, std::move(c));
  }
  const auto& exps = std::get<HahnKind>(domain->kind).exponents;
  const Exponent& lead = v.as_series().leading_exponent();
  if (const auto* set = std::get_if<FiniteOrderedSet>(&exps)) {
    if (lead.position() == 0) throw DomainError("no Archimedean class below " + v.str() + " in " + describe(domain));
    return embed_E(domain, set->label(lead.position() - 1));
  }
  const Element lower = lead.element() - positive_unit(std::get<Domain>(exps));
  return Element::series(domain, HahnSeries::from_terms({Term{Exponent(lower), Rational(1)}}));
}

std::vector<Element> cells(const Table<Element>& t) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) out.push_back(t(i, j));
  }
  return out;
}

bool pointwise_le(const Table<Element>& a, const Table<Element>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (b(i, j) < a(i, j)) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::size_t> subset_positions(const PointSpace& space) {
  std::vector<std::size_t> pos(space.size(), npos);
  for (std::size_t k = 0; k < space.subset().size(); ++k) pos[space.subset()[k]] = k;
  return pos;
}

GaugeChain::GaugeChain(std::vector<Element> descending) : values_(std::move(descending)) {
  if (values_.empty()) throw DomainError("a gauge chain needs at least one entry");
  const Domain& dom = values_.front().domain();
  class_level_ = !is_rational_domain(dom);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].sign() <= 0) throw DomainError("gauge chain entry " + values_[i].str() + " is not positive");
    if (i == 0) continue;
    if (!(values_[i] < values_[i - 1])) throw DomainError("gauge chain is not strictly descending at " + values_[i].str());
    if (class_level_ && !(ArchClass::of(values_[i]) < ArchClass::of(values_[i - 1]))) {
      throw DomainError("gauge chain classes are not strictly descending at " + values_[i].str());
    }
  }
}

bool GaugeChain::contains(const Element& v) const {
  return std::find(values_.begin(), values_.end(), v) != values_.end();
}

Element GaugeChain::round_down(const Element& v) const {
  if (v.is_zero()) return Element::zero(domain());
  if (v.sign() < 0) throw DomainError("round_down of a negative value " + v.str());
  if (!class_level_) {
    if (values_.front() < v) return values_.front();
    for (std::size_t i = 1; i < values_.size(); ++i) {
      if (values_[i] < v) return values_[i];
    }
  } else {
    const ArchClass c = ArchClass::of(v);
    if (ArchClass::of(values_.front()) < c) return values_.front();
    for (std::size_t i = 1; i < values_.size(); ++i) {
      if (ArchClass::of(values_[i]) < c) return values_[i];
    }
  }
  throw DomainError("gauge chain is not characteristic: nothing below " + v.str());
}

GaugeChain auto_chain(const std::vector<const Table<Element>*>& tables) {
  if (tables.empty()) throw DomainError("auto chain needs at least one table");
  const Domain domain = tables.front()->zero().domain();
  std::vector<Element> positive;
  for (const auto* t : tables) {
    for (auto& v : cells(*t)) {
      if (v.sign() > 0) positive.push_back(std::move(v));
    }
  }
  if (positive.empty()) return GaugeChain({positive_unit(domain)});
  std::sort(positive.begin(), positive.end(), [](const Element& a, const Element& b) { return b < a; });
  std::vector<Element> chain;
  for (auto& v : positive) {
    if (chain.empty()) {
      chain.push_back(std::move(v));
    } else if (is_rational_domain(domain) ? v < chain.back() : ArchClass::of(v) < ArchClass::of(chain.back())) {
      chain.push_back(std::move(v));
    }
  }
  chain.push_back(below_class(chain.back()));
  return GaugeChain(std::move(chain));
}

MetricTable<Element> constant_base(const PointSpace& space, const GaugeChain& chain) {
  Table<Element> t(space, Element::zero(chain.domain()));
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = 0; j < space.size(); ++j) {
      if (i != j) t.set(i, j, chain.top());
    }
  }
  return MetricTable<Element>::checked(std::move(t), Flavor::ultrametric);
}

ExtensionReport extensor_phi(const MetricTable<Element>& d, const MetricTable<Element>& h, const Retraction& r,
                             const GaugeChain& chain) {
  detail::require_extension_inputs(h, r, d);
  if (h.space().subset().empty()) throw DomainError("the subset A must be nonempty");
  if (!same_domain(chain.domain(), d.zero().domain())) throw DomainError("gauge chain and d use different domains");
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = 0; j < h.size(); ++j) {
      if (!h(i, j).is_zero() && !chain.contains(h(i, j))) {
        throw DomainError("h(" + h.space().label(i) + "," + h.space().label(j) + ") = " + h(i, j).str() +
                          " is not a gauge chain value");
      }
    }
  }
  if (!chain.class_level() && d.flavor() == Flavor::metric && !validate(d.table(), Flavor::ultrametric).ok()) {
    throw DomainError("value-level rounding over the rationals needs an ultrametric d; use a non-Archimedean domain");
  }

  Table<Element> kt(d.space(), d.zero());
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) kt.set(i, j, chain.round_down(d(i, j)));
  }
  auto k = detail::checked_or_defect(std::move(kt), Flavor::ultrametric, "k[d]");
  auto u = sigma(h, r, k);
  auto th = theta(u);
  auto output = psi(u, r, d);

  bool restriction = true;
  const auto& A = h.space().subset();
  for (std::size_t p = 0; p < A.size() && restriction; ++p) {
    for (std::size_t q = 0; q < A.size(); ++q) {
      if (output(A[p], A[q]) != d(p, q)) {
        restriction = false;
        break;
      }
    }
  }
  if (!restriction) throw DefectError("extension does not restrict to d on A");
  return ExtensionReport{d, h, r, chain, std::move(k), std::move(u), std::move(th), std::move(output), true, true};
}

bool is_dyadic(const Rational& v) { return mpz_popcount(v.raw().get_den().get_mpz_t()) == 1; }

bool ValueSet::contains(const Rational& v) const {
  if (v.sign() < 0) return false;
  switch (kind) {
    case Kind::nonnegative:
      return true;
    case Kind::dyadic:
      return is_dyadic(v);
    case Kind::explicit_list:
      return v.is_zero() || std::find(members.begin(), members.end(), v) != members.end();
  }
  return false;
}

std::string ValueSet::describe() const {
  switch (kind) {
    case Kind::nonnegative:
      return "nonnegative rationals";
    case Kind::dyadic:
      return "nonnegative dyadic rationals";
    case Kind::explicit_list:
      break;
  }
  std::string out = "{0";
  for (const auto& m : members) out += "," + m.str();
  return out + "}";
}

ExtensionReport extensor_upsilon(const MetricTable<Element>& d, const MetricTable<Element>& h, const Retraction& r,
                                 const GaugeChain& chain, const ValueSet& S) {
  if (!is_rational_domain(d.zero().domain())) throw DomainError("the ultrametric extensor works over the rationals");
  if (d.flavor() != Flavor::ultrametric && !validate(d.table(), Flavor::ultrametric).ok()) {
    throw DomainError("the ultrametric extensor needs an ultrametric d");
  }
  auto require_in_s = [&S](const Element& v, const std::string& where) {
    if (!S.contains(v.as_rational())) throw DomainError(where + " value " + v.str() + " is outside S = " + S.describe());
  };
  for (const auto& v : cells(d.table())) require_in_s(v, "d");
  for (const auto& v : cells(h.table())) require_in_s(v, "h");
  for (const auto& v : chain.values()) require_in_s(v, "chain");
  auto report = extensor_phi(d, h, r, chain);
  for (const auto& v : cells(report.output.table())) {
    if (!S.contains(v.as_rational())) throw DefectError("extension left S at value " + v.str());
  }
  if (!validate(report.output.table(), Flavor::ultrametric).ok()) throw DefectError("extension is not an ultrametric");
  return report;
}

PairCertificate compare_extensions(const MetricTable<Element>& d, const MetricTable<Element>& e,
                                   const MetricTable<Element>& h, const Retraction& r, const GaugeChain& chain) {
  const auto pd = extensor_phi(d, h, r, chain);
  const auto pe = extensor_phi(e, h, r, chain);
  const auto pj = extensor_phi(join(d, e), h, r, chain);
  PairCertificate cert;
  cert.join_law = pj.output.table() == join(pd.output, pe.output).table();
  const bool d_le_e = pointwise_le(d.table(), e.table());
  const bool e_le_d = pointwise_le(e.table(), d.table());
  cert.monotone = (!d_le_e || pointwise_le(pd.output.table(), pe.output.table())) &&
                  (!e_le_d || pointwise_le(pe.output.table(), pd.output.table()));
  if (d.flavor() == Flavor::ultrametric && e.flavor() == Flavor::ultrametric) {
    cert.ud_isometry = ud_distance(pd.output, pe.output) == ud_distance(d, e);
  }
  return cert;
}

CrosscheckResult crosscheck_embed(const MetricTable<Element>& d, const MetricTable<Element>& h, const Retraction& r,
                                  const GaugeChain& chain) {
  auto direct = extensor_upsilon(d, h, r, chain);

  std::vector<Element> values = cells(d.table());
  for (auto& v : cells(h.table())) values.push_back(std::move(v));
  values.insert(values.end(), chain.values().begin(), chain.values().end());
  values.push_back(Element::rational(0));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < values.size(); ++i) labels.push_back("s" + std::to_string(i));
  const BottomedOrderedSet S{FiniteOrderedSet(labels)};
  const Domain field = powerset_field(S);
  std::vector<Element> images;
  images.reserve(values.size());
  for (const auto& l : labels) images.push_back(embed_I(S, field, l));

  auto index_of = [&values](const Element& v) {
    return static_cast<std::size_t>(std::lower_bound(values.begin(), values.end(), v) - values.begin());
  };
  auto embed_table = [&](const MetricTable<Element>& t) {
    Table<Element> out(t.space(), Element::zero(field));
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = 0; j < t.size(); ++j) out.set(i, j, images[index_of(t(i, j))]);
    }
    return MetricTable<Element>::checked(std::move(out), Flavor::ultrametric);
  };
  std::vector<Element> chain_images;
  for (const auto& v : chain.values()) chain_images.push_back(images[index_of(v)]);

  const auto embedded = extensor_phi(embed_table(d), embed_table(h), r, GaugeChain(std::move(chain_images)));

  CrosscheckResult result{false, std::nullopt, false, std::move(direct)};
  const auto& out = embedded.output;
  for (std::size_t i = 0; i < out.size() && !result.witness; ++i) {
    for (std::size_t j = 0; j < out.size(); ++j) {
      const auto it = std::lower_bound(images.begin(), images.end(), out(i, j));
      const bool realized = it != images.end() && *it == out(i, j);
      if (!realized || values[static_cast<std::size_t>(it - images.begin())] != result.direct.output(i, j)) {
        result.witness = std::make_pair(i, j);
        break;
      }
    }
  }
  result.equal = !result.witness.has_value();
  result.embedded_metric = validate(out.table(), Flavor::metric).ok();
  return result;
}

}  // namespace ordmetric
