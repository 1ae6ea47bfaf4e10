#pragma once

#include <string>
#include <vector>

#include "ordmetric/element.hpp"
#include "ordmetric/table.hpp"

namespace fixture {

using ordmetric::Element;
using ordmetric::Rational;

inline Element q(long p, long d = 1) { return Element::rational(Rational(p, d)); }

/// Raw rational table; cells given as Rationals.
inline ordmetric::Table<Element> raw(const std::vector<std::string>& points, const std::vector<std::string>& subset,
                                     const std::vector<std::vector<Rational>>& rows) {
  std::vector<std::vector<Element>> cells;
  for (const auto& r : rows) {
    std::vector<Element> row;
    for (const auto& v : r) row.push_back(Element::rational(v));
    cells.push_back(std::move(row));
  }
  return ordmetric::Table<Element>(ordmetric::PointSpace(points, subset), q(0), std::move(cells));
}

inline ordmetric::MetricTable<Element> table(const std::vector<std::string>& points,
                                             const std::vector<std::string>& subset,
                                             const std::vector<std::vector<Rational>>& rows,
                                             ordmetric::Flavor flavor = ordmetric::Flavor::ultrametric) {
  return ordmetric::MetricTable<Element>::checked(raw(points, subset, rows), flavor);
}

}  // namespace fixture
