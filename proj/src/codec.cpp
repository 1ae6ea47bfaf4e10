#include "ordmetric/codec.hpp"

#include "ordmetric/errors.hpp"

namespace ordmetric::codec {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding \"") + key + "\"");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"");
  return *it;
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw ParseError(std::string(what) + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

const Json& rows_of(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw ParseError("table must have one row per point");
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != n) throw ParseError("table rows must have one entry per point");
  }
  return j;
}

Json encode_points(const PointSpace& space) {
  return Json{{"points", space.points()}, {"subset", space.subset_labels()}};
}

}  // namespace

Json encode(const Rational& r) { return r.str(); }

Rational decode_rational(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational, got " + j.dump());
}

Json encode(const FiniteOrderedSet& s) { return s.labels(); }

FiniteOrderedSet decode_ordered_set(const Json& j) {
  try {
    return FiniteOrderedSet(string_list(j, "ordered set"));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Json encode(const Domain& d) {
  if (std::holds_alternative<RationalKind>(d->kind)) return Json{{"kind", "rational"}};
  if (const auto* lex = std::get_if<LexKind>(&d->kind)) {
    Json bases = Json::array();
    for (auto b : lex->bases) bases.push_back(b == CoordBase::integer ? "Z" : "Q");
    return Json{{"kind", "lex"}, {"bases", bases}};
  }
  const auto& exps = std::get<HahnKind>(d->kind).exponents;
  if (const auto* set = std::get_if<FiniteOrderedSet>(&exps)) return Json{{"kind", "hahn"}, {"exponents", encode(*set)}};
  return Json{{"kind", "hahn"}, {"field", encode(std::get<Domain>(exps))}};
}

Domain decode_domain(const Json& j) {
  const auto& kind = field(j, "kind");
  if (kind == "rational") return rational_domain();
  if (kind == "lex") {
    std::vector<CoordBase> bases;
    for (const auto& b : string_list(field(j, "bases"), "lex bases")) {
      if (b == "Z") {
        bases.push_back(CoordBase::integer);
      } else if (b == "Q") {
        bases.push_back(CoordBase::rational);
      } else {
        throw ParseError("lex base must be \"Z\" or \"Q\", got \"" + b + "\"");
      }
    }
    if (bases.empty()) throw ParseError("lex domain needs rank >= 1");
    return lex_domain(std::move(bases));
  }
  if (kind == "hahn") {
    if (j.contains("exponents")) return hahn_group(decode_ordered_set(j["exponents"]));
    if (j.contains("field")) return hahn_field(decode_domain(j["field"]));
    throw ParseError("hahn domain needs \"exponents\" or \"field\"");
  }
  throw ParseError("unknown domain kind " + kind.dump());
}

Json encode(const Element& e) {
  const auto& kind = e.domain()->kind;
  if (std::holds_alternative<RationalKind>(kind)) return encode(e.as_rational());
  if (std::holds_alternative<LexKind>(kind)) {
    Json out = Json::array();
    for (const auto& c : e.coords()) out.push_back(encode(c));
    return out;
  }
  const auto& exps = std::get<HahnKind>(kind).exponents;
  Json out = Json::array();
  for (const auto& t : e.as_series().terms()) {
    Json exp = t.exponent.is_position() ? Json(std::get<FiniteOrderedSet>(exps).label(t.exponent.position()))
                                        : encode(t.exponent.element());
    out.push_back(Json::array({exp, encode(t.coefficient)}));
  }
  return out;
}

Element decode_element(const Json& j, const Domain& d) {
  try {
    if (std::holds_alternative<RationalKind>(d->kind)) return Element::rational(decode_rational(j));
    if (std::holds_alternative<LexKind>(d->kind)) {
      if (!j.is_array()) throw ParseError("lex value must be an array");
      std::vector<Rational> coords;
      for (const auto& c : j) coords.push_back(decode_rational(c));
      return Element::lex(d, std::move(coords));
    }
    if (!j.is_array()) throw ParseError("Hahn value must be an array of [exponent, coefficient] pairs");
    const auto& exps = std::get<HahnKind>(d->kind).exponents;
    std::vector<Term> terms;
    for (const auto& pair : j) {
      if (!pair.is_array() || pair.size() != 2) throw ParseError("Hahn term must be [exponent, coefficient]");
      Rational coef = decode_rational(pair[1]);
      if (coef.is_zero()) throw ParseError("Hahn term with zero coefficient");
      if (const auto* set = std::get_if<FiniteOrderedSet>(&exps)) {
        if (!pair[0].is_string()) throw ParseError("Hahn exponent must be a label");
        const auto p = set->position(pair[0].get<std::string>());
        if (!p) throw ParseError("Hahn exponent " + pair[0].dump() + " is not in the exponent set");
        terms.push_back(Term{Exponent(*p), std::move(coef)});
      } else {
        terms.push_back(Term{Exponent(decode_element(pair[0], std::get<Domain>(exps))), std::move(coef)});
      }
      if (terms.size() > 1 && !(terms[terms.size() - 1].exponent < terms[terms.size() - 2].exponent)) {
        throw ParseError("Hahn exponents must be strictly descending");
      }
    }
    return Element::series(d, HahnSeries::from_terms(std::move(terms)));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Json encode(const Table<Element>& t) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < t.size(); ++j) row.push_back(encode(t(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Table<Element> decode_table(const Json& j, const PointSpace& space, const Domain& d) {
  const auto& rows = rows_of(j, space.size());
  Table<Element> t(space, Element::zero(d));
  for (std::size_t x = 0; x < space.size(); ++x) {
    for (std::size_t y = 0; y < space.size(); ++y) t.set(x, y, decode_element(rows[x][y], d));
  }
  return t;
}

Json encode(const Table<OrderPoint>& t, const BottomedOrderedSet& S) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < t.size(); ++j) row.push_back(S.base().label(t(i, j).pos));
    rows.push_back(std::move(row));
  }
  return rows;
}

Table<OrderPoint> decode_order_table(const Json& j, const PointSpace& space, const BottomedOrderedSet& S) {
  const auto& rows = rows_of(j, space.size());
  Table<OrderPoint> t(space, OrderPoint{0});
  for (std::size_t x = 0; x < space.size(); ++x) {
    for (std::size_t y = 0; y < space.size(); ++y) {
      if (!rows[x][y].is_string()) throw ParseError("ordered-set values must be labels");
      const auto p = S.base().position(rows[x][y].get<std::string>());
      if (!p) throw ParseError("value " + rows[x][y].dump() + " is not in the ordered set");
      t.set(x, y, OrderPoint{*p});
    }
  }
  return t;
}

Flavor decode_flavor(const Json& j) {
  if (j == "metric") return Flavor::metric;
  if (j == "ultrametric") return Flavor::ultrametric;
  throw ParseError("flavor must be \"metric\" or \"ultrametric\", got " + j.dump());
}

SpaceFile decode_space_file(const Json& j) {
  PointSpace space(string_list(field(j, "points"), "points"), string_list(field(j, "subset"), "subset"));
  const Flavor flavor = decode_flavor(field(j, "flavor"));
  const auto& dom = field(j, "domain");
  const auto& table = field(j, "table");
  if (field(dom, "kind") == "ordered_set") {
    BottomedOrderedSet S(decode_ordered_set(field(dom, "elements")));
    auto t = decode_order_table(table, space, S);
    return SpaceFile{space, flavor, std::make_pair(std::move(S), std::move(t))};
  }
  const Domain d = decode_domain(dom);
  return SpaceFile{space, flavor, decode_table(table, space, d)};
}

Json encode_space_file(const MetricTable<Element>& t) {
  Json out = encode_points(t.space());
  out["domain"] = encode(t.zero().domain());
  out["flavor"] = flavor_name(t.flavor());
  out["table"] = encode(t.table());
  return out;
}

Json encode(const ValidationReport& r, const PointSpace& space) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json witness = Json::array();
    for (auto i : v.witness) witness.push_back(space.label(i));
    violations.push_back(Json{{"axiom", v.axiom}, {"witness", witness}, {"count", v.count}});
  }
  return Json{{"flavor", flavor_name(r.flavor)}, {"valid", r.ok()}, {"violations", violations}};
}

Json encode(const Retraction& r) {
  Json mapping = Json::object();
  for (std::size_t i = 0; i < r.mapping.size(); ++i) mapping[r.space.label(i)] = r.space.label(r.mapping[i]);
  Json out{{"mapping", mapping}};
  if (r.tau) out["tau"] = encode(*r.tau);
  if (r.certificate) {
    const auto& c = *r.certificate;
    Json cert{{"holds", c.holds}, {"factor", encode(c.factor)}};
    if (c.witness) cert["witness"] = Json::array({r.space.label(c.witness->first), r.space.label(c.witness->second)});
    if (c.max_ratio) cert["max_ratio"] = encode(*c.max_ratio);
    out["certificate"] = cert;
  }
  return out;
}

ExtensionRequest decode_extension_request(const Json& j) {
  const auto& sp = field(j, "space");
  PointSpace space(string_list(field(sp, "points"), "points"), string_list(field(sp, "subset"), "subset"));
  const Domain domain = decode_domain(field(sp, "domain"));
  ExtensionRequest req{space, domain, decode_table(field(j, "d_on_A"), space.subset_space(), domain), std::nullopt,
                       ExtensionRequest::RetractionKind::tau, Rational(2), {}, std::nullopt};
  if (j.contains("h")) req.h = decode_table(j["h"], space, domain);
  if (j.contains("retraction")) {
    const auto& r = j["retraction"];
    if (r.contains("tau")) {
      req.retraction_kind = ExtensionRequest::RetractionKind::tau;
      req.tau = decode_rational(r["tau"]);
    } else if (r.contains("map")) {
      req.retraction_kind = ExtensionRequest::RetractionKind::map;
      if (!r["map"].is_object()) throw ParseError("retraction map must be an object");
      for (const auto& [k, v] : r["map"].items()) {
        if (!v.is_string()) throw ParseError("retraction map values must be labels");
        req.map[k] = v.get<std::string>();
      }
    } else if (r.contains("nearest")) {
      req.retraction_kind = ExtensionRequest::RetractionKind::nearest;
    } else {
      throw ParseError("retraction must hold \"tau\", \"map\" or \"nearest\"");
    }
  }
  if (j.contains("chain") && j["chain"] != "auto") {
    if (!j["chain"].is_array()) throw ParseError("chain must be an array or \"auto\"");
    std::vector<Element> chain;
    for (const auto& v : j["chain"]) chain.push_back(decode_element(v, domain));
    req.chain = std::move(chain);
  }
  return req;
}

Json encode(const ExtensionReport& r) {
  Json out = encode_points(r.h.space());
  out["domain"] = encode(r.h.zero().domain());
  out["d_flavor"] = flavor_name(r.d.flavor());
  out["d_on_A"] = encode(r.d.table());
  out["h"] = encode(r.h.table());
  out["retraction"] = encode(r.r);
  Json chain = Json::array();
  for (const auto& v : r.chain.values()) chain.push_back(encode(v));
  out["chain"] = chain;
  out["k"] = encode(r.k.table());
  out["u"] = encode(r.u.table());
  out["theta"] = encode(r.theta.table);
  out["output"] = encode(r.output.table());
  out["certificates"] = Json{{"restriction", r.restriction_holds}, {"flavor", r.flavor_holds}};
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace ordmetric::codec
