#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ordmetric/order.hpp"
#include "ordmetric/rational.hpp"

namespace ordmetric {

enum class CoordBase { integer, rational };

struct DomainSpec;
using Domain = std::shared_ptr<const DomainSpec>;

struct RationalKind {};

/// Z^n or Q^n (mixed per coordinate) under the lexicographic order, with
/// coordinate 0 the most significant.
struct LexKind {
  std::vector<CoordBase> bases;
};

/// Finite-support Hahn series. With a FiniteOrderedSet of exponents this is
/// the group H(L); with a group Domain of exponents it is the field K(G).
struct HahnKind {
  std::variant<FiniteOrderedSet, Domain> exponents;
};

struct DomainSpec {
  std::variant<RationalKind, LexKind, HahnKind> kind;
};

Domain rational_domain();
/// Throws DomainError on rank 0.
Domain lex_domain(std::vector<CoordBase> bases);
Domain hahn_group(FiniteOrderedSet exponents);
/// Throws DomainError unless `exponents` is a group domain.
Domain hahn_field(Domain exponents);

bool same_domain(const Domain& a, const Domain& b);
bool is_field(const Domain& d);
std::string describe(const Domain& d);

class Element;

/// A Hahn exponent: a position in the exponent set (group case) or an
/// element of the exponent group (field case).
class Exponent {
 public:
  explicit Exponent(std::size_t position) : value_(position) {}
  explicit Exponent(const Element& e);

  bool is_position() const { return std::holds_alternative<std::size_t>(value_); }
  std::size_t position() const { return std::get<std::size_t>(value_); }
  const Element& element() const { return *std::get<std::shared_ptr<const Element>>(value_); }

  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b);
  friend bool operator==(const Exponent& a, const Exponent& b) { return (a <=> b) == 0; }

 private:
  std::variant<std::size_t, std::shared_ptr<const Element>> value_;
};

struct Term {
  Exponent exponent;
  Rational coefficient;
};

/// Terms in strictly descending exponent order with nonzero coefficients.
/// The empty series is zero.
class HahnSeries {
 public:
  HahnSeries() = default;
  /// Sorts, merges equal exponents and drops zero coefficients.
  static HahnSeries from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Sign of the leading coefficient.
  int sign() const { return terms_.empty() ? 0 : terms_.front().coefficient.sign(); }
  const Exponent& leading_exponent() const { return terms_.front().exponent; }
  Rational coefficient(const Exponent& e) const;

  HahnSeries operator-() const;
  HahnSeries scaled(const Rational& c) const;
  friend HahnSeries operator+(const HahnSeries& f, const HahnSeries& g);
  friend HahnSeries operator-(const HahnSeries& f, const HahnSeries& g) { return f + (-g); }
  /// Convolution product; exponents must be group elements.
  friend HahnSeries operator*(const HahnSeries& f, const HahnSeries& g);

  /// Decided by the coefficient difference at the largest differing exponent.
  friend std::strong_ordering operator<=>(const HahnSeries& f, const HahnSeries& g);
  friend bool operator==(const HahnSeries& f, const HahnSeries& g) { return (f <=> g) == 0; }

 private:
  std::vector<Term> terms_;
};

/// A value of a linearly ordered Abelian group (or of an ordered field when
/// the domain is a field). Operations on mismatched domains throw DomainError.
class Element {
 public:
  static Element zero(const Domain& domain);
  static Element rational(Rational value);
  /// Throws DomainError on rank mismatch or a non-integer integer coordinate.
  static Element lex(const Domain& domain, std::vector<Rational> coords);
  /// Throws DomainError when an exponent does not belong to the domain.
  static Element series(const Domain& domain, HahnSeries value);
  /// The constant c in a field domain: c itself, or c·t^0 for K(G).
  static Element field_constant(const Domain& field, const Rational& c);

  const Domain& domain() const { return domain_; }
  bool is_zero() const { return sign() == 0; }
  int sign() const;

  /// Payload accessors; throw DomainError on the wrong kind.
  const Rational& as_rational() const;
  const std::vector<Rational>& coords() const;
  const HahnSeries& as_series() const;

  Element operator-() const;
  /// Multiplies by a rational scalar. Stays inside integer lex domains only
  /// when the scalar is an integer.
  Element scaled(const Rational& c) const;
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b) { return a + (-b); }
  /// Field multiplication; throws DomainError outside field domains.
  friend Element operator*(const Element& a, const Element& b);

  friend std::strong_ordering operator<=>(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b) { return (a <=> b) == 0; }

  std::string str() const;

 private:
  using Payload = std::variant<Rational, std::vector<Rational>, HahnSeries>;
  Element(Domain domain, Payload payload) : domain_(std::move(domain)), payload_(std::move(payload)) {}

  Domain domain_;
  Payload payload_;
};

}  // namespace ordmetric
