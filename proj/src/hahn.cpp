#include "ordmetric/hahn.hpp"

#include "ordmetric/errors.hpp"

namespace ordmetric {

Element embed_E(const Domain& hahn_group_domain, const std::string& s) {
  const auto* kind = std::get_if<HahnKind>(&hahn_group_domain->kind);
  const auto* set = kind ? std::get_if<FiniteOrderedSet>(&kind->exponents) : nullptr;
  if (set == nullptr) throw DomainError("embed_E needs a Hahn group over an ordered set");
  return Element::series(hahn_group_domain, HahnSeries::from_terms({Term{Exponent(set->require(s)), Rational(1)}}));
}

Element embed_E(const FiniteOrderedSet& L, const std::string& s) { return embed_E(hahn_group(L), s); }

Domain w_domain(const BottomedOrderedSet& S) { return hahn_group(dual(S.stars())); }

Element embed_W(const BottomedOrderedSet& S, const Domain& w_dom, const std::string& s) {
  if (s == S.bottom()) throw DomainError("W_S is undefined at the bottom");
  S.base().require(s);
  return -embed_E(w_dom, s);
}

Element embed_W(const BottomedOrderedSet& S, const std::string& s) { return embed_W(S, w_domain(S), s); }

Domain powerset_field(const BottomedOrderedSet& S) { return hahn_field(w_domain(S)); }

Element embed_I(const BottomedOrderedSet& S, const Domain& field, const std::string& s) {
  if (s == S.bottom()) return Element::zero(field);
  const auto& w_dom = std::get<Domain>(std::get<HahnKind>(field->kind).exponents);
  return Element::series(field, HahnSeries::from_terms({Term{Exponent(embed_W(S, w_dom, s)), Rational(1)}}));
}

Element embed_I(const BottomedOrderedSet& S, const std::string& s) { return embed_I(S, powerset_field(S), s); }

}  // namespace ordmetric
