#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ordmetric/element.hpp"
#include "ordmetric/table.hpp"

namespace ordmetric {

Element abs(const Element& x);

/// Archimedean class of a nonzero element. Rationals form a single class; a
/// lex value is classed by its leading nonzero coordinate (index 0 is the
/// largest class); a Hahn value by its leading exponent.
class ArchClass {
 public:
  /// Throws DomainError on zero.
  static ArchClass of(const Element& x);

  const Domain& domain() const { return domain_; }
  bool is_rational() const { return std::holds_alternative<std::monostate>(rep_); }
  std::size_t lex_index() const { return std::get<std::size_t>(rep_); }
  const Exponent& exponent() const { return std::get<Exponent>(rep_); }
  std::string str() const;

  friend std::strong_ordering operator<=>(const ArchClass& a, const ArchClass& b);
  friend bool operator==(const ArchClass& a, const ArchClass& b) { return (a <=> b) == 0; }

 private:
  ArchClass(Domain domain, std::variant<std::monostate, std::size_t, Exponent> rep)
      : domain_(std::move(domain)), rep_(std::move(rep)) {}

  Domain domain_;
  std::variant<std::monostate, std::size_t, Exponent> rep_;
};

/// An element of A(G)°: an Archimedean class or the bottom (the class of 0).
class ClassValue {
 public:
  ClassValue() = default;
  explicit ClassValue(ArchClass c) : value_(std::move(c)) {}

  bool is_bottom() const { return !value_.has_value(); }
  const ArchClass& cls() const { return *value_; }
  std::string str() const { return value_ ? value_->str() : "bottom"; }

  friend std::strong_ordering operator<=>(const ClassValue& a, const ClassValue& b) {
    if (!a.value_ || !b.value_) return a.value_.has_value() <=> b.value_.has_value();
    return *a.value_ <=> *b.value_;
  }
  friend bool operator==(const ClassValue& a, const ClassValue& b) { return (a <=> b) == 0; }

 private:
  std::optional<ArchClass> value_;
};

enum class ArchOrder { much_less, equivalent, much_greater };

/// Throws DomainError unless both inputs are positive and share a domain.
ArchOrder arch_cmp(const Element& x, const Element& y);

/// λ_G: bottom for 0, otherwise the class of abs(x).
ClassValue lambda(const Element& x);

/// D[abs](x,y) = abs(x - y). Points are labelled p0, p1, ...; duplicates are
/// rejected with DomainError.
MetricTable<Element> metric_abs(const std::vector<Element>& points);
/// D[λ](x,y) = λ(x - y), an A(G)°-ultrametric.
MetricTable<ClassValue> metric_lambda(const std::vector<Element>& points);

/// The exponent set c{n-1} < ... < c1 < c0 used as the target of lex_to_hahn.
FiniteOrderedSet lex_exponents(std::size_t rank);
/// Sends coordinate i to the term (c_i, x_i); an order- and group-embedding
/// of the lex domain into H(c{n-1} < ... < c0). Throws DomainError on
/// non-lex input.
Element lex_to_hahn(const Element& x);

}  // namespace ordmetric
