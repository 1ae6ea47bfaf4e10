#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ordmetric/codec.hpp"
#include "ordmetric/errors.hpp"
#include "ordmetric/generate.hpp"
#include "ordmetric/hahn.hpp"
#include "oracles.hpp"

using namespace ordmetric;
using codec::Json;
using fixture::q;

TEST(Codec, Rationals) {
  EXPECT_EQ(codec::encode(Rational(-3, 4)), Json("-3/4"));
  EXPECT_EQ(codec::encode(Rational(6, 3)), Json("2"));
  EXPECT_EQ(codec::decode_rational(Json("2/4")), Rational(1, 2));
  EXPECT_THROW(codec::decode_rational(Json("3/0")), ParseError);
  EXPECT_THROW(codec::decode_rational(Json("abc")), ParseError);
  EXPECT_EQ(codec::decode_rational(Json(3)), Rational(3));
  EXPECT_THROW(codec::decode_rational(Json(0.5)), ParseError);
  EXPECT_THROW(Rational::parse("1/"), ParseError);
  EXPECT_THROW(Rational::parse(""), ParseError);
}

TEST(Codec, Domains) {
  const std::vector<Domain> domains{rational_domain(), lex_domain({CoordBase::integer, CoordBase::rational}),
                                    hahn_group(FiniteOrderedSet({"u", "v"})), hahn_field(rational_domain()),
                                    powerset_field(one_point_extension(FiniteOrderedSet({"a", "b"}), "bot"))};
  for (const auto& d : domains) EXPECT_TRUE(same_domain(codec::decode_domain(codec::encode(d)), d)) << describe(d);
  EXPECT_THROW(codec::decode_domain(Json{{"kind", "lex"}, {"bases", Json::array({"R"})}}), ParseError);
  EXPECT_THROW(codec::decode_domain(Json{{"kind", "ordered_set"}, {"elements", Json::array({"a"})}}), ParseError);
  EXPECT_THROW(codec::decode_domain(Json{{"kind", "complex"}}), ParseError);
}

TEST(Codec, ElementsRoundTrip) {
  Rng rng(5);
  const Domain lex = lex_domain({CoordBase::integer, CoordBase::rational, CoordBase::integer});
  const Domain H = hahn_group(FiniteOrderedSet({"a", "b", "c"}));
  const Domain K = hahn_field(rational_domain());
  const auto S = one_point_extension(FiniteOrderedSet({"a", "b", "c"}), "bot");
  const Domain P = powerset_field(S);
  for (int i = 0; i < 200; ++i) {
    const std::vector<std::pair<Domain, Element>> samples{
        {rational_domain(), Element::rational(oracle::small_rational(rng))},
        {lex, oracle::random_lex(rng, lex)},
        {H, oracle::random_hahn(rng, H, 3)},
        {K, oracle::random_field(rng, K)},
        {P, embed_I(S, P, S.base().label(rng.below(S.size())))},
    };
    for (const auto& [d, e] : samples) EXPECT_EQ(codec::decode_element(codec::encode(e), d), e) << e.str();
  }
}

TEST(Codec, HahnTermsAreStrict) {
  const Domain H = hahn_group(FiniteOrderedSet({"u", "v"}));
  const Json ok = Json::array({Json::array({"v", "2"}), Json::array({"u", "-1"})});
  const auto e = codec::decode_element(ok, H);
  EXPECT_EQ(codec::encode(e), ok);
  EXPECT_THROW(codec::decode_element(Json::array({Json::array({"u", "1"}), Json::array({"v", "1"})}), H), ParseError);
  EXPECT_THROW(codec::decode_element(Json::array({Json::array({"u", "0"})}), H), ParseError);
  EXPECT_THROW(codec::decode_element(Json::array({Json::array({"w", "1"})}), H), ParseError);
  EXPECT_TRUE(codec::decode_element(Json::array(), H).is_zero());
}

TEST(Codec, SpaceFilesRoundTripByteForByte) {
  Rng rng(19);
  for (int i = 0; i < 50; ++i) {
    const auto t = random_ultrametric(rng, 1 + rng.below(6), 3);
    const Json j = codec::encode_space_file(t);
    const auto back = codec::decode_space_file(codec::parse_json(j.dump()));
    ASSERT_TRUE(back.is_group_valued());
    EXPECT_EQ(back.group_table(), t.table());
    EXPECT_EQ(back.flavor, Flavor::ultrametric);
    EXPECT_EQ(codec::encode_space_file(MetricTable<Element>::checked(back.group_table(), back.flavor)).dump(), j.dump());
  }
}

TEST(Codec, OrderValuedSpaceFile) {
  const Json j = codec::parse_json(R"({
    "points": ["a", "b"], "subset": ["a"], "flavor": "ultrametric",
    "domain": {"kind": "ordered_set", "elements": ["bot", "lo", "hi"]},
    "table": [["bot", "hi"], ["hi", "bot"]]})");
  const auto f = codec::decode_space_file(j);
  ASSERT_FALSE(f.is_group_valued());
  const auto& [S, t] = std::get<1>(f.table);
  EXPECT_EQ(S.bottom(), "bot");
  EXPECT_EQ(t(0, 1).pos, 2u);
  EXPECT_EQ(codec::encode(t, S), j["table"]);
}

TEST(Codec, Malformed) {
  EXPECT_THROW(codec::parse_json("{"), ParseError);
  const auto base = codec::parse_json(R"({"points": ["a", "b"], "subset": [], "flavor": "metric",
    "domain": {"kind": "rational"}, "table": [["0", "1"], ["1", "0"]]})");
  EXPECT_NO_THROW(codec::decode_space_file(base));
  auto short_row = base;
  short_row["table"][1] = Json::array({"1"});
  EXPECT_THROW(codec::decode_space_file(short_row), ParseError);
  auto bad_flavor = base;
  bad_flavor["flavor"] = "pseudo";
  EXPECT_THROW(codec::decode_space_file(bad_flavor), ParseError);
  auto no_table = base;
  no_table.erase("table");
  EXPECT_THROW(codec::decode_space_file(no_table), ParseError);
  auto dup = base;
  dup["points"] = Json::array({"a", "a"});
  EXPECT_THROW(codec::decode_space_file(dup), DomainError);
}

TEST(Codec, ExtensionRequest) {
  const auto j = codec::parse_json(R"({
    "space": {"points": ["a", "b", "x"], "subset": ["a", "b"], "domain": {"kind": "rational"}},
    "d_on_A": [["0", "2"], ["2", "0"]],
    "retraction": {"map": {"x": "b"}},
    "chain": ["8", "4", "1/2"]})");
  const auto req = codec::decode_extension_request(j);
  EXPECT_EQ(req.retraction_kind, codec::ExtensionRequest::RetractionKind::map);
  EXPECT_EQ(req.map.at("x"), "b");
  ASSERT_TRUE(req.chain.has_value());
  EXPECT_EQ(req.chain->back(), q(1, 2));
  EXPECT_FALSE(req.h.has_value());
  EXPECT_EQ(req.d_on_A(0, 1), q(2));

  auto bad = j;
  bad["retraction"] = Json{{"spin", 1}};
  EXPECT_THROW(codec::decode_extension_request(bad), ParseError);
}

TEST(Codec, ReportsRoundTripAsJson) {
  const auto d = fixture::table({"a", "b", "x"}, {"a", "b"}, {{0, 4, 1}, {4, 0, 4}, {1, 4, 0}});
  const auto r = compute_retraction(d, Rational(2));
  const Json jr = codec::encode(r);
  EXPECT_EQ(jr["mapping"]["x"], "a");
  EXPECT_EQ(jr["tau"], "2");
  EXPECT_EQ(codec::parse_json(jr.dump()), jr);

  const auto report = validate(fixture::raw({"p0", "p1", "p2"}, {}, {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}), Flavor::ultrametric);
  const Json jv = codec::encode(report, PointSpace({"p0", "p1", "p2"}, {}));
  EXPECT_EQ(jv["valid"], false);
  EXPECT_EQ(jv["violations"][0]["axiom"], "U4");
  EXPECT_EQ(jv["violations"][0]["witness"], Json::array({"p0", "p2", "p1"}));
}
