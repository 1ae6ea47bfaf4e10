#include "ordmetric/group.hpp"

#include "ordmetric/errors.hpp"

namespace ordmetric {

namespace {

std::vector<std::string> point_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return labels;
}

PointSpace points_space(const std::vector<Element>& points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) throw DomainError("duplicate point " + points[i].str());
    }
  }
  const auto labels = point_labels(points.size());
  return PointSpace(labels, labels);
}

}  // namespace

Element abs(const Element& x) { return x.sign() < 0 ? -x : x; }

ArchClass ArchClass::of(const Element& x) {
  if (x.is_zero()) throw DomainError("zero has no Archimedean class");
  const auto& kind = x.domain()->kind;
  if (std::holds_alternative<RationalKind>(kind)) return ArchClass(x.domain(), std::monostate{});
  if (std::holds_alternative<LexKind>(kind)) {
    const auto& c = x.coords();
    std::size_t i = 0;
    while (c[i].is_zero()) ++i;
    return ArchClass(x.domain(), i);
  }
  return ArchClass(x.domain(), x.as_series().leading_exponent());
}

std::string ArchClass::str() const {
  if (is_rational()) return "Q";
  if (std::holds_alternative<std::size_t>(rep_)) return "coord" + std::to_string(lex_index());
  const auto& exps = std::get<HahnKind>(domain_->kind).exponents;
  if (exponent().is_position()) return "e_" + std::get<FiniteOrderedSet>(exps).label(exponent().position());
  return "e_[" + exponent().element().str() + "]";
}

std::strong_ordering operator<=>(const ArchClass& a, const ArchClass& b) {
  if (!same_domain(a.domain_, b.domain_)) throw DomainError("comparing classes of different domains");
  if (a.is_rational()) return std::strong_ordering::equal;
  if (std::holds_alternative<std::size_t>(a.rep_)) return b.lex_index() <=> a.lex_index();
  return a.exponent() <=> b.exponent();
}

ArchOrder arch_cmp(const Element& x, const Element& y) {
  if (x.sign() <= 0 || y.sign() <= 0) throw DomainError("arch_cmp needs positive inputs");
  const auto c = ArchClass::of(x) <=> ArchClass::of(y);
  if (c < 0) return ArchOrder::much_less;
  if (c > 0) return ArchOrder::much_greater;
  return ArchOrder::equivalent;
}

ClassValue lambda(const Element& x) {
  if (x.is_zero()) return ClassValue();
  return ClassValue(ArchClass::of(abs(x)));
}

MetricTable<Element> metric_abs(const std::vector<Element>& points) {
  auto space = points_space(points);
  const Element zero = points.empty() ? Element::rational(0) : Element::zero(points.front().domain());
  Table<Element> t(std::move(space), zero);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) t.set(i, j, abs(points[i] - points[j]));
  }
  return MetricTable<Element>::checked(std::move(t), Flavor::metric);
}

MetricTable<ClassValue> metric_lambda(const std::vector<Element>& points) {
  auto space = points_space(points);
  Table<ClassValue> t(std::move(space), ClassValue());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) t.set(i, j, lambda(points[i] - points[j]));
  }
  return MetricTable<ClassValue>::checked(std::move(t), Flavor::ultrametric);
}

FiniteOrderedSet lex_exponents(std::size_t rank) {
  std::vector<std::string> labels;
  labels.reserve(rank);
  for (std::size_t i = rank; i-- > 0;) labels.push_back("c" + std::to_string(i));
  return FiniteOrderedSet(std::move(labels));
}

Element lex_to_hahn(const Element& x) {
  const auto* lex = std::get_if<LexKind>(&x.domain()->kind);
  if (lex == nullptr) throw DomainError("lex_to_hahn needs a lex value, got " + describe(x.domain()));
  const std::size_t n = lex->bases.size();
  std::vector<Term> terms;
  for (std::size_t i = 0; i < n; ++i) {
    if (!x.coords()[i].is_zero()) terms.push_back(Term{Exponent(n - 1 - i), x.coords()[i]});
  }
  return Element::series(hahn_group(lex_exponents(n)), HahnSeries::from_terms(std::move(terms)));
}

}  // namespace ordmetric
