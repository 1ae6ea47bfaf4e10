#pragma once

#include <string>

#include "ordmetric/element.hpp"
#include "ordmetric/order.hpp"

namespace ordmetric {

/// E_L(s): the indicator series with coefficient 1 at s, in H(L).
/// Throws DomainError if s is not in L.
Element embed_E(const FiniteOrderedSet& L, const std::string& s);
Element embed_E(const Domain& hahn_group_domain, const std::string& s);

/// H((S*)^op), the codomain of W_S.
Domain w_domain(const BottomedOrderedSet& S);
/// W_S(s) = -E_{(S*)^op}(s). Strictly isotone on S*; throws DomainError on
/// the bottom.
Element embed_W(const BottomedOrderedSet& S, const std::string& s);
Element embed_W(const BottomedOrderedSet& S, const Domain& w_dom, const std::string& s);

/// 𝒫(S) = K(H((S*)^op)).
Domain powerset_field(const BottomedOrderedSet& S);
/// I(⊚) = 0 and I(s) = t^{W_S(s)} otherwise. Distinct labels land in
/// distinct Archimedean classes.
Element embed_I(const BottomedOrderedSet& S, const std::string& s);
Element embed_I(const BottomedOrderedSet& S, const Domain& field, const std::string& s);

}  // namespace ordmetric
