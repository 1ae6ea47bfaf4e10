#include "ordmetric/element.hpp"

#include <algorithm>

#include "ordmetric/errors.hpp"

namespace ordmetric {

namespace {

std::strong_ordering to_ordering(int c) {
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

const HahnKind* hahn_kind(const Domain& d) { return std::get_if<HahnKind>(&d->kind); }

void require_same(const Domain& a, const Domain& b, const char* what) {
  if (!same_domain(a, b)) {
    throw DomainError(std::string(what) + ": domain mismatch (" + describe(a) + " vs " + describe(b) + ")");
  }
}

bool is_group_domain(const Domain& d) {
  // Every domain kind here is a group; the field flag only adds a product.
  return d != nullptr;
}

}  // namespace

Domain rational_domain() {
  static const Domain instance = std::make_shared<const DomainSpec>(DomainSpec{RationalKind{}});
  return instance;
}

Domain lex_domain(std::vector<CoordBase> bases) {
  if (bases.empty()) throw DomainError("lex domain needs rank >= 1");
  return std::make_shared<const DomainSpec>(DomainSpec{LexKind{std::move(bases)}});
}

Domain hahn_group(FiniteOrderedSet exponents) {
  return std::make_shared<const DomainSpec>(DomainSpec{HahnKind{std::move(exponents)}});
}

Domain hahn_field(Domain exponents) {
  if (!is_group_domain(exponents)) throw DomainError("field exponents must form a group");
  return std::make_shared<const DomainSpec>(DomainSpec{HahnKind{std::move(exponents)}});
}

bool same_domain(const Domain& a, const Domain& b) {
  if (a == b) return true;
  if (!a || !b || a->kind.index() != b->kind.index()) return false;
  if (std::holds_alternative<RationalKind>(a->kind)) return true;
  if (const auto* la = std::get_if<LexKind>(&a->kind)) return la->bases == std::get<LexKind>(b->kind).bases;
  const auto& ha = std::get<HahnKind>(a->kind).exponents;
  const auto& hb = std::get<HahnKind>(b->kind).exponents;
  if (ha.index() != hb.index()) return false;
  if (const auto* sa = std::get_if<FiniteOrderedSet>(&ha)) return *sa == std::get<FiniteOrderedSet>(hb);
  return same_domain(std::get<Domain>(ha), std::get<Domain>(hb));
}

bool is_field(const Domain& d) {
  if (std::holds_alternative<RationalKind>(d->kind)) return true;
  const auto* h = hahn_kind(d);
  return h != nullptr && std::holds_alternative<Domain>(h->exponents);
}

std::string describe(const Domain& d) {
  if (std::holds_alternative<RationalKind>(d->kind)) return "rational";
  if (const auto* l = std::get_if<LexKind>(&d->kind)) {
    std::string out = "lex[";
    for (std::size_t i = 0; i < l->bases.size(); ++i) {
      out += (i ? "," : "") + std::string(l->bases[i] == CoordBase::integer ? "Z" : "Q");
    }
    return out + "]";
  }
  const auto& e = std::get<HahnKind>(d->kind).exponents;
  if (const auto* s = std::get_if<FiniteOrderedSet>(&e)) {
    std::string out = "H(";
    for (std::size_t i = 0; i < s->size(); ++i) out += (i ? "<" : "") + s->label(i);
    return out + ")";
  }
  return "K(" + describe(std::get<Domain>(e)) + ")";
}

Exponent::Exponent(const Element& e) : value_(std::make_shared<const Element>(e)) {}

std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
  if (a.is_position() && b.is_position()) return a.position() <=> b.position();
  if (!a.is_position() && !b.is_position()) return a.element() <=> b.element();
  throw DomainError("comparing a set exponent with a group exponent");
}

HahnSeries HahnSeries::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.exponent > y.exponent; });
  HahnSeries out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().exponent == t.exponent) {
      out.terms_.back().coefficient += t.coefficient;
    } else {
      if (!out.terms_.empty() && out.terms_.back().coefficient.is_zero()) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().coefficient.is_zero()) out.terms_.pop_back();
  return out;
}

Rational HahnSeries::coefficient(const Exponent& e) const {
  for (const auto& t : terms_) {
    if (t.exponent == e) return t.coefficient;
  }
  return Rational(0);
}

HahnSeries HahnSeries::operator-() const {
  HahnSeries out = *this;
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

HahnSeries HahnSeries::scaled(const Rational& c) const {
  if (c.is_zero()) return {};
  HahnSeries out = *this;
  for (auto& t : out.terms_) t.coefficient *= c;
  return out;
}

HahnSeries operator+(const HahnSeries& f, const HahnSeries& g) {
  HahnSeries out;
  out.terms_.reserve(f.terms_.size() + g.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < f.terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      out.terms_.push_back(f.terms_[i++]);
    } else if (i == f.terms_.size()) {
      out.terms_.push_back(g.terms_[j++]);
    } else {
      const auto c = f.terms_[i].exponent <=> g.terms_[j].exponent;
      if (c > 0) {
        out.terms_.push_back(f.terms_[i++]);
      } else if (c < 0) {
        out.terms_.push_back(g.terms_[j++]);
      } else {
        Rational sum = f.terms_[i].coefficient + g.terms_[j].coefficient;
        if (!sum.is_zero()) out.terms_.push_back(Term{f.terms_[i].exponent, std::move(sum)});
        ++i;
        ++j;
      }
    }
  }
  return out;
}

HahnSeries operator*(const HahnSeries& f, const HahnSeries& g) {
  std::vector<Term> products;
  products.reserve(f.terms_.size() * g.terms_.size());
  for (const auto& a : f.terms_) {
    if (a.exponent.is_position()) throw DomainError("product of series over a non-group exponent set");
    for (const auto& b : g.terms_) {
      if (b.exponent.is_position()) throw DomainError("product of series over a non-group exponent set");
      products.push_back(Term{Exponent(a.exponent.element() + b.exponent.element()), a.coefficient * b.coefficient});
    }
  }
  return HahnSeries::from_terms(std::move(products));
}

std::strong_ordering operator<=>(const HahnSeries& f, const HahnSeries& g) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < f.terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) return to_ordering(f.terms_[i].coefficient.sign());
    if (i == f.terms_.size()) return to_ordering(-g.terms_[j].coefficient.sign());
    const auto c = f.terms_[i].exponent <=> g.terms_[j].exponent;
    if (c > 0) return to_ordering(f.terms_[i].coefficient.sign());
    if (c < 0) return to_ordering(-g.terms_[j].coefficient.sign());
    const auto cc = f.terms_[i].coefficient <=> g.terms_[j].coefficient;
    if (cc != 0) return cc;
    ++i;
    ++j;
  }
  return std::strong_ordering::equal;
}

Element Element::zero(const Domain& domain) {
  if (std::holds_alternative<RationalKind>(domain->kind)) return Element(domain, Rational(0));
  if (const auto* l = std::get_if<LexKind>(&domain->kind)) {
    return Element(domain, std::vector<Rational>(l->bases.size(), Rational(0)));
  }
  return Element(domain, HahnSeries{});
}

Element Element::rational(Rational value) { return Element(rational_domain(), std::move(value)); }

Element Element::lex(const Domain& domain, std::vector<Rational> coords) {
  const auto* l = std::get_if<LexKind>(&domain->kind);
  if (l == nullptr) throw DomainError("lex value in non-lex domain " + describe(domain));
  if (coords.size() != l->bases.size()) throw DomainError("lex value has wrong rank for " + describe(domain));
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (l->bases[i] == CoordBase::integer && !coords[i].is_integer()) {
      throw DomainError("non-integer coordinate " + coords[i].str() + " in " + describe(domain));
    }
  }
  return Element(domain, std::move(coords));
}

Element Element::series(const Domain& domain, HahnSeries value) {
  const auto* h = hahn_kind(domain);
  if (h == nullptr) throw DomainError("series value in non-Hahn domain " + describe(domain));
  for (const auto& t : value.terms()) {
    if (const auto* set = std::get_if<FiniteOrderedSet>(&h->exponents)) {
      if (!t.exponent.is_position() || t.exponent.position() >= set->size()) {
        throw DomainError("exponent outside the exponent set of " + describe(domain));
      }
    } else if (t.exponent.is_position() || !same_domain(t.exponent.element().domain(), std::get<Domain>(h->exponents))) {
      throw DomainError("exponent outside the exponent group of " + describe(domain));
    }
  }
  return Element(domain, std::move(value));
}

Element Element::field_constant(const Domain& field, const Rational& c) {
  if (std::holds_alternative<RationalKind>(field->kind)) return Element(field, c);
  if (!is_field(field)) throw DomainError("field constant in non-field domain " + describe(field));
  const auto& exps = std::get<Domain>(std::get<HahnKind>(field->kind).exponents);
  return Element(field, HahnSeries::from_terms({Term{Exponent(Element::zero(exps)), c}}));
}

int Element::sign() const {
  if (const auto* r = std::get_if<Rational>(&payload_)) return r->sign();
  if (const auto* v = std::get_if<std::vector<Rational>>(&payload_)) {
    for (const auto& c : *v) {
      if (!c.is_zero()) return c.sign();
    }
    return 0;
  }
  return std::get<HahnSeries>(payload_).sign();
}

const Rational& Element::as_rational() const {
  if (const auto* r = std::get_if<Rational>(&payload_)) return *r;
  throw DomainError("expected a rational value, got " + describe(domain_));
}

const std::vector<Rational>& Element::coords() const {
  if (const auto* v = std::get_if<std::vector<Rational>>(&payload_)) return *v;
  throw DomainError("expected a lex value, got " + describe(domain_));
}

const HahnSeries& Element::as_series() const {
  if (const auto* s = std::get_if<HahnSeries>(&payload_)) return *s;
  throw DomainError("expected a Hahn value, got " + describe(domain_));
}

Element Element::operator-() const {
  if (const auto* r = std::get_if<Rational>(&payload_)) return Element(domain_, -*r);
  if (const auto* v = std::get_if<std::vector<Rational>>(&payload_)) {
    std::vector<Rational> out;
    out.reserve(v->size());
    for (const auto& c : *v) out.push_back(-c);
    return Element(domain_, std::move(out));
  }
  return Element(domain_, -std::get<HahnSeries>(payload_));
}

Element Element::scaled(const Rational& c) const {
  if (const auto* r = std::get_if<Rational>(&payload_)) return Element(domain_, *r * c);
  if (const auto* v = std::get_if<std::vector<Rational>>(&payload_)) {
    std::vector<Rational> out;
    out.reserve(v->size());
    for (const auto& x : *v) out.push_back(x * c);
    return Element::lex(domain_, std::move(out));
  }
  return Element(domain_, std::get<HahnSeries>(payload_).scaled(c));
}

Element operator+(const Element& a, const Element& b) {
  require_same(a.domain_, b.domain_, "add");
  if (const auto* r = std::get_if<Rational>(&a.payload_)) return Element(a.domain_, *r + std::get<Rational>(b.payload_));
  if (const auto* v = std::get_if<std::vector<Rational>>(&a.payload_)) {
    const auto& w = std::get<std::vector<Rational>>(b.payload_);
    std::vector<Rational> out;
    out.reserve(v->size());
    for (std::size_t i = 0; i < v->size(); ++i) out.push_back((*v)[i] + w[i]);
    return Element(a.domain_, std::move(out));
  }
  return Element(a.domain_, std::get<HahnSeries>(a.payload_) + std::get<HahnSeries>(b.payload_));
}

Element operator*(const Element& a, const Element& b) {
  require_same(a.domain_, b.domain_, "multiply");
  if (!is_field(a.domain_)) throw DomainError("multiplication outside a field: " + describe(a.domain_));
  if (const auto* r = std::get_if<Rational>(&a.payload_)) return Element(a.domain_, *r * std::get<Rational>(b.payload_));
  return Element(a.domain_, std::get<HahnSeries>(a.payload_) * std::get<HahnSeries>(b.payload_));
}

std::strong_ordering operator<=>(const Element& a, const Element& b) {
  require_same(a.domain_, b.domain_, "compare");
  if (const auto* r = std::get_if<Rational>(&a.payload_)) return *r <=> std::get<Rational>(b.payload_);
  if (const auto* v = std::get_if<std::vector<Rational>>(&a.payload_)) {
    const auto& w = std::get<std::vector<Rational>>(b.payload_);
    for (std::size_t i = 0; i < v->size(); ++i) {
      const auto c = (*v)[i] <=> w[i];
      if (c != 0) return c;
    }
    return std::strong_ordering::equal;
  }
  return std::get<HahnSeries>(a.payload_) <=> std::get<HahnSeries>(b.payload_);
}

std::string Element::str() const {
  if (const auto* r = std::get_if<Rational>(&payload_)) return r->str();
  if (const auto* v = std::get_if<std::vector<Rational>>(&payload_)) {
    std::string out = "(";
    for (std::size_t i = 0; i < v->size(); ++i) out += (i ? "," : "") + (*v)[i].str();
    return out + ")";
  }
  const auto& s = std::get<HahnSeries>(payload_);
  if (s.is_zero()) return "0";
  const auto& exps = std::get<HahnKind>(domain_->kind).exponents;
  std::string out;
  for (std::size_t i = 0; i < s.terms().size(); ++i) {
    const auto& t = s.terms()[i];
    const std::string e = t.exponent.is_position() ? std::get<FiniteOrderedSet>(exps).label(t.exponent.position())
                                                   : t.exponent.element().str();
    out += (i ? " + " : "") + t.coefficient.str() + "*t^[" + e + "]";
  }
  return out;
}

}  // namespace ordmetric
