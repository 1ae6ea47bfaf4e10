#include <gtest/gtest.h>

#include "ordmetric/errors.hpp"
#include "ordmetric/group.hpp"
#include "ordmetric/hahn.hpp"
#include "oracles.hpp"

using namespace ordmetric;

namespace {

const FiniteOrderedSet& uv() {
  static const FiniteOrderedSet L({"u", "v"});
  return L;
}

Element mono(const Domain& H, std::size_t pos, long c) {
  return Element::series(H, HahnSeries::from_terms({Term{Exponent(pos), Rational(c)}}));
}

// K(Q): exponents are rationals.
const Domain& kq() {
  static const Domain d = hahn_field(rational_domain());
  return d;
}

Element t_pow(long e, Rational c) {
  return Element::series(kq(), HahnSeries::from_terms({Term{Exponent(Element::rational(Rational(e))), std::move(c)}}));
}

}  // namespace

TEST(Hahn, CompareByLeadingDifference) {
  const Domain H = hahn_group(uv());
  const auto f = mono(H, 1, 1);
  const auto g = mono(H, 0, 5);
  EXPECT_GT(f, g);
  EXPECT_EQ(oracle::hahn_compare(f, g, 2), 1);
  EXPECT_TRUE((f + -f).is_zero());
  const auto sum = g + f;
  ASSERT_EQ(sum.as_series().terms().size(), 2u);
  EXPECT_EQ(sum.as_series().terms()[0].exponent.position(), 1u);
  EXPECT_EQ(sum.as_series().terms()[1].coefficient, Rational(5));
}

TEST(Hahn, ExponentStructureMismatchRejected) {
  const Domain H1 = hahn_group(uv());
  const Domain H2 = hahn_group(FiniteOrderedSet({"u", "v", "w"}));
  EXPECT_THROW(mono(H1, 0, 1) + mono(H2, 0, 1), DomainError);
  EXPECT_THROW(mono(H1, 0, 1) * mono(H1, 0, 1), DomainError);
  EXPECT_THROW(mono(H1, 5, 1), DomainError);
}

TEST(Hahn, OrderMatchesDenseOracle) {
  const FiniteOrderedSet L({"a", "b", "c", "d", "e"});
  const Domain H = hahn_group(L);
  Rng rng(17);
  for (int i = 0; i < 1000; ++i) {
    const auto f = oracle::random_hahn(rng, H, 5);
    const auto g = oracle::random_hahn(rng, H, 5);
    const int expected = oracle::hahn_compare(f, g, 5);
    const auto c = f <=> g;
    ASSERT_EQ(expected < 0, c < 0);
    ASSERT_EQ(expected > 0, c > 0);
  }
}

TEST(Hahn, FieldProduct) {
  const auto one = Element::field_constant(kq(), Rational(1));
  const auto a = t_pow(1, Rational(1)) + t_pow(0, Rational(2));
  const auto b = t_pow(1, Rational(1)) + t_pow(0, Rational(-2));
  EXPECT_EQ(a * b, t_pow(2, Rational(1)) + t_pow(0, Rational(-4)));
  EXPECT_EQ(a * one, a);
  EXPECT_EQ(t_pow(0, Rational(2)) * t_pow(0, Rational(1, 2)), one);
}

TEST(Hahn, EmbedE) {
  const auto e = embed_E(uv(), "u");
  ASSERT_EQ(e.as_series().terms().size(), 1u);
  EXPECT_EQ(e.as_series().terms()[0].exponent.position(), 0u);
  EXPECT_EQ(e.as_series().terms()[0].coefficient, Rational(1));
  EXPECT_THROW(embed_E(uv(), "zz"), DomainError);

  const FiniteOrderedSet five({"a", "b", "c", "d", "e"});
  for (const auto& s : five.labels()) EXPECT_GT(embed_E(five, s).sign(), 0);
  EXPECT_EQ(arch_cmp(embed_E(uv(), "u"), embed_E(uv(), "v")), ArchOrder::much_less);
}

TEST(Hahn, ClassMapIsOrderIsomorphism) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("l" + std::to_string(i));
    const FiniteOrderedSet L(labels);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto c = lambda(embed_E(L, labels[i])) <=> lambda(embed_E(L, labels[j]));
        EXPECT_EQ(i < j, c < 0);
        EXPECT_EQ(i == j, c == 0);
      }
    }
  }
}

TEST(Hahn, EmbedW) {
  const auto S = one_point_extension(FiniteOrderedSet({"a", "b"}), "bot");
  const auto wa = embed_W(S, "a");
  const auto wb = embed_W(S, "b");
  EXPECT_LT(wa, wb);
  EXPECT_LT(wa.sign(), 0);
  EXPECT_LT(wb.sign(), 0);
  EXPECT_THROW(embed_W(S, "bot"), DomainError);

  const auto S5 = one_point_extension(FiniteOrderedSet({"a", "b", "c", "d", "e"}), "bot");
  const auto wmin = embed_W(S5, "a");
  const auto stars = S5.stars();
  for (const auto& s : stars.labels()) {
    if (s != "a") EXPECT_LT(wmin, embed_W(S5, s));
  }
}

TEST(Hahn, EmbedI) {
  const auto S = one_point_extension(FiniteOrderedSet({"a", "b", "c", "d"}), "bot");
  const Domain F = powerset_field(S);
  EXPECT_TRUE(embed_I(S, F, "bot").is_zero());
  const auto stars = S.stars().labels();
  for (std::size_t i = 0; i < stars.size(); ++i) {
    const auto Ii = embed_I(S, F, stars[i]);
    EXPECT_GT(Ii.sign(), 0);
    for (std::size_t j = i + 1; j < stars.size(); ++j) {
      const auto Ij = embed_I(S, F, stars[j]);
      EXPECT_LT(Ii, Ij);
      EXPECT_EQ(arch_cmp(Ii, Ij), ArchOrder::much_less);
    }
  }
}

TEST(Hahn, EmbedIIsCharacteristicOnWitnesses) {
  // For positive v whose class dominates some I-class, an s with 0 < I(s) <= v exists.
  const auto S = one_point_extension(FiniteOrderedSet({"a", "b", "c"}), "bot");
  const Domain F = powerset_field(S);
  std::vector<Element> images;
  const auto stars = S.stars();
  for (const auto& s : stars.labels()) images.push_back(embed_I(S, F, s));
  const Domain W = std::get<Domain>(std::get<HahnKind>(F->kind).exponents);
  Rng rng(8);
  int witnesses = 0;
  for (int i = 0; i < 300; ++i) {
    std::vector<Term> terms;
    for (int k = 0; k < 2; ++k) {
      terms.push_back(Term{Exponent(oracle::random_hahn(rng, W, 3, 2)), Rational(rng.between(1, 5), rng.between(1, 3))});
    }
    const auto v = Element::series(F, HahnSeries::from_terms(std::move(terms)));
    if (v.sign() <= 0) continue;
    const bool dominates = std::any_of(images.begin(), images.end(), [&](const Element& im) {
      return !(lambda(v) < lambda(im));
    });
    if (!dominates) continue;
    ++witnesses;
    EXPECT_TRUE(std::any_of(images.begin(), images.end(), [&](const Element& im) { return im <= v; })) << v.str();
  }
  EXPECT_GT(witnesses, 20);
}

TEST(Hahn, LambdaIsClassOfLeadingIndicator) {
  const FiniteOrderedSet L({"a", "b", "c", "d"});
  const Domain H = hahn_group(L);
  Rng rng(2);
  for (int i = 0; i < 300; ++i) {
    const auto f = oracle::random_hahn(rng, H, 4);
    if (f.is_zero()) continue;
    const auto top = L.label(f.as_series().leading_exponent().position());
    EXPECT_EQ(arch_cmp(abs(f), embed_E(L, top)), ArchOrder::equivalent);
  }
}
