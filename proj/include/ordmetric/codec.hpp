#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ordmetric/element.hpp"
#include "ordmetric/extend.hpp"
#include "ordmetric/order.hpp"
#include "ordmetric/retract.hpp"
#include "ordmetric/space.hpp"
#include "ordmetric/table.hpp"

namespace ordmetric::codec {

using Json = nlohmann::json;

// All decoders throw ParseError on malformed input. Decoding is strict:
// Hahn terms must be in strictly descending exponent order with nonzero
// coefficients, tables must be fully populated.

Json encode(const Rational& r);
Rational decode_rational(const Json& j);

Json encode(const FiniteOrderedSet& s);
FiniteOrderedSet decode_ordered_set(const Json& j);

Json encode(const Domain& d);
Domain decode_domain(const Json& j);

Json encode(const Element& e);
Element decode_element(const Json& j, const Domain& d);

Json encode(const Table<Element>& t);
Table<Element> decode_table(const Json& j, const PointSpace& space, const Domain& d);

Json encode(const Table<OrderPoint>& t, const BottomedOrderedSet& S);
Table<OrderPoint> decode_order_table(const Json& j, const PointSpace& space, const BottomedOrderedSet& S);

Flavor decode_flavor(const Json& j);

/// A space file: points, subset, domain, flavor and a raw table. The table
/// holds group values, or labels of a bottomed ordered set when the domain
/// kind is "ordered_set".
struct SpaceFile {
  PointSpace space;
  Flavor flavor = Flavor::metric;
  std::variant<Table<Element>, std::pair<BottomedOrderedSet, Table<OrderPoint>>> table;

  bool is_group_valued() const { return table.index() == 0; }
  const Table<Element>& group_table() const { return std::get<0>(table); }
};

SpaceFile decode_space_file(const Json& j);
Json encode_space_file(const MetricTable<Element>& t);

Json encode(const ValidationReport& r, const PointSpace& space);
Json encode(const Retraction& r);

/// An extension request: {"space": {"points", "subset", "domain"}, "d_on_A",
/// optional "h", optional "retraction" ({"tau"}, {"map"} or {"nearest"}),
/// optional "chain" (array or "auto")}.
struct ExtensionRequest {
  PointSpace space;
  Domain domain;
  Table<Element> d_on_A;
  std::optional<Table<Element>> h;
  enum class RetractionKind { tau, map, nearest } retraction_kind = RetractionKind::tau;
  Rational tau{2};
  std::map<std::string, std::string> map;
  std::optional<std::vector<Element>> chain;
};

ExtensionRequest decode_extension_request(const Json& j);
Json encode(const ExtensionReport& r);

/// Parses a JSON document, turning syntax errors into ParseError.
Json parse_json(const std::string& text);

}  // namespace ordmetric::codec
