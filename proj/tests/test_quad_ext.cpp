// Arithmetic in Poly[z]/(z^2 - D), the constrained-denominator fractions, and
// the published identities for Q(u), the building blocks, and the brackets.

#include <catch2/catch_amalgamated.hpp>

#include "apoly/a_polynomial.hpp"
#include "apoly/quad_ext.hpp"
#include "apoly/reference_data.hpp"
#include "apoly/riley_mednykh.hpp"
#include "test_support.hpp"

using namespace apoly;
using apoly::testing::Rng;

namespace {

const QuadElem kZ = QuadElem::radical(Poly::constant(1));

FactoredFraction substituted_ff(const Poly& p) {
  const XSubstitution& xs = x_substitution();
  const int d = p.degree_in(Var::x);
  return ff_of(substitute_quad(p, Var::x, xs.num, xs.den), d, 4 * d, d);
}

}  // namespace

TEST_CASE("qmul: defining relation and conjugate product") {
  REQUIRE(qmul(kZ, kZ) == QuadElem::rational(discriminant()));
  Rng rng(101);
  for (int it = 0; it < 50; ++it) {
    const QuadElem e = testing::random_quad(rng);
    const QuadElem p = qmul(e, conj(e));
    REQUIRE(p.b.is_zero());
    REQUIRE(p.a == e.a * e.a - (e.b * e.b) * discriminant());
  }
}

TEST_CASE("conj: examples and involution") {
  REQUIRE(conj(QuadElem::rational(rm_p2())) == QuadElem::rational(rm_p2()));
  REQUIRE(conj(kZ) == QuadElem::radical(Poly::constant(-1)));
  Rng rng(102);
  for (int it = 0; it < 50; ++it) {
    const QuadElem e = testing::random_quad(rng);
    REQUIRE(conj(conj(e)) == e);
  }
}

TEST_CASE("norm: rational elements square") {
  REQUIRE(norm(QuadElem::rational(rm_p2())) == rm_p2() * rm_p2());
  REQUIRE(norm(kZ) == -discriminant());
}

TEST_CASE("Q(u) fraction: published prefactored forms") {
  const FactoredFraction qu = substituted_ff(q_poly());
  const Poly lb = Poly::variable(Var::L) * refdata::appendix_a_b();

  // Q(u) = 2^-1 M^4 (LM^2+1)^-4 (a + L b z)
  REQUIRE(qu == ff_of(QuadElem{refdata::appendix_a_a(), lb}, 1, -4, 4));
  // Q(-u) is the conjugate
  REQUIRE(ff_conj(qu) == ff_of(QuadElem{refdata::appendix_a_a(), -lb}, 1, -4, 4));
  // Q(u) Q(-u) = M^8 (LM^2+1)^-4 f
  REQUIRE(ff_norm(qu) == ff_of(QuadElem::rational(refdata::appendix_a_f()), 0, -8, 4));
  // Q(u)^2 = 2^-1 M^8 (LM^2+1)^-8 (g + h z), and the conjugate square
  const FactoredFraction qsq =
      ff_of(QuadElem{refdata::appendix_a_g(), refdata::appendix_a_h()}, 1, -8, 8);
  REQUIRE(ff_mul(qu, qu) == qsq);
  REQUIRE(ff_mul(ff_conj(qu), ff_conj(qu)) == ff_conj(qsq));
}

TEST_CASE("Appendix factorizations: h, b, and f at M = 0") {
  const Poly L = Poly::variable(Var::L);
  const Poly M = Poly::variable(Var::M);
  const Poly one = Poly::constant(1);
  const Poly m2 = M * M;
  REQUIRE(refdata::appendix_a_h() ==
          L * (L - one) * pow(m2 - one, 3) * pow(m2 + one, 2) * refdata::appendix_a_h1());
  REQUIRE(refdata::appendix_a_b() ==
          (L - one) * pow(M - one, 3) * pow(M + one, 3) * pow(m2 + one, 2));
  const Poly f_at_m0 = substitute(refdata::appendix_a_f(), Var::M, Poly{});
  REQUIRE(f_at_m0 == Poly::from_terms({{{{3, 0, 0}}, -1},
                                       {{{2, 0, 0}}, 3},
                                       {{{1, 0, 0}}, -3},
                                       {{{0, 0, 0}}, 1}}));
}

TEST_CASE("building blocks: the four substitution identities") {
  const QuadElem blk_x{Poly::from_terms({{{{1, 6, 0}}, -2},
                                         {{{1, 4, 0}}, 1},
                                         {{{1, 2, 0}}, -1},
                                         {{{0, 4, 0}}, -1},
                                         {{{0, 2, 0}}, 1},
                                         {{{0, 0, 0}}, -2}}),
                       Poly::monomial(Monomial{{0, 2, 0}}, 1)};
  const QuadElem blk_b{Poly::from_terms({{{{1, 2, 0}}, 1},
                                         {{{1, 0, 0}}, 1},
                                         {{{0, 2, 0}}, 1},
                                         {{{0, 0, 0}}, 1}}),
                       Poly::constant(1)};
  const QuadElem blk_c{Poly::from_terms({{{{1, 2, 0}}, -3},
                                         {{{1, 0, 0}}, 1},
                                         {{{0, 2, 0}}, 1},
                                         {{{0, 0, 0}}, -3}}),
                       Poly::constant(1)};
  const QuadElem blk_cm2{Poly::from_terms({{{{1, 2, 0}}, -1},
                                           {{{1, 0, 0}}, 1},
                                           {{{0, 2, 0}}, 1},
                                           {{{0, 0, 0}}, -1}}),
                         Poly::constant(1)};

  const Poly x = Poly::variable(Var::x);
  const Poly b_poly =
      Poly::from_terms({{{{0, 4, 0}}, 1}, {{{0, 2, 1}}, 1}, {{{0, 0, 0}}, 1}});
  const Poly c_poly = Poly::from_terms(
      {{{{0, 4, 0}}, 1}, {{{0, 2, 1}}, 1}, {{{0, 2, 0}}, -2}, {{{0, 0, 0}}, 1}});
  const Poly cm2_poly = c_poly + Poly::monomial(Monomial{{0, 2, 0}}, 1);

  // x = (blk_x) / (2 M^2 (LM^2+1)); the other three are M^2 (blk) / (2 (LM^2+1)).
  REQUIRE(substituted_ff(x) == ff_of(blk_x, 1, 2, 1));
  REQUIRE(substituted_ff(b_poly) == ff_of(blk_b, 1, -2, 1));
  REQUIRE(substituted_ff(c_poly) == ff_of(blk_c, 1, -2, 1));
  REQUIRE(substituted_ff(cm2_poly) == ff_of(blk_cm2, 1, -2, 1));

  // Product route vs direct substitution for the i = 1 summand at n = 1:
  // S_1 = M^2 x (M^4+M^2x+1) (M^4+M^2x-M^2+1).
  const Poly s1 = Poly::monomial(Monomial{{0, 2, 0}}, 1) * x * b_poly * cm2_poly;
  const FactoredFraction via_blocks = ff_scale_factors(
      ff_mul(ff_of(blk_x, 1, 2, 1), ff_mul(ff_of(blk_b, 1, -2, 1), ff_of(blk_cm2, 1, -2, 1))),
      0, 2, 0);
  REQUIRE(via_blocks == substituted_ff(s1));
}

TEST_CASE("ff_mul / ff_add: unit, cancellation, normal form") {
  Rng rng(103);
  const FactoredFraction one = ff_rational(Poly::constant(1));
  for (int it = 0; it < 50; ++it) {
    const FactoredFraction f = testing::random_ff(rng);
    REQUIRE(ff_mul(f, one) == f);
    REQUIRE(ff_add(f, ff_rational(Poly{})) == f);
    REQUIRE(ff_add(f, ff_neg(f)).is_zero());
    REQUIRE(ff_add(f, ff_neg(f)) == ff_rational(Poly{}));
  }
  // A pure M^2 numerator over denominator M^2 collapses to 1.
  REQUIRE(ff_of(QuadElem::rational(Poly::monomial(Monomial{{0, 2, 0}}, 1)), 0, 2, 0) == one);
}

TEST_CASE("bracket forms: norm ties each bracket to its A-polynomial") {
  // p_2n in content form is bracket / (2 (LM^2+1)^(k/2))^..., and in every
  // case norm(bracket) = 4 (LM^2+1)^k A_2n.
  const struct {
    int n;
    BracketForm bf;
    Poly a;
  } cases[] = {
      {1, refdata::appendix_c_p2(), refdata::appendix_b_a2()},
      {-1, refdata::appendix_c_pm2(), a_polynomial(-1, Route::RecursiveSubst).a},
      {-2, refdata::appendix_c_pm4(), a_polynomial(-2, Route::RecursiveSubst).a},
  };
  for (const auto& c : cases) {
    REQUIRE(substitution_bracket(c.n) == c.bf);
    REQUIRE(norm(c.bf.bracket) ==
            Poly::constant(4) * pow(lm2p1(), c.bf.half_exponent) * c.a);
  }
  REQUIRE(refdata::appendix_c_p2().half_exponent == 4);
  REQUIRE(refdata::appendix_c_pm2().half_exponent == 3);
  REQUIRE(refdata::appendix_c_pm4().half_exponent == 7);
}

TEST_CASE("lemma-2 consistency: x-substitution kills the longitude relation") {
  // R = L M^2 (M^4 - M^2 + (M^-2 + 2M^2 - 1)x + x^2)
  //       + (M^-4 - M^-2 + (2M^-2 + M^2 - 1)x + x^2), cleared by M^4.
  const Poly n1 = Poly::from_terms({{{{0, -4, 0}}, 1},
                                    {{{0, -2, 0}}, -1},
                                    {{{0, -2, 1}}, 2},
                                    {{{0, 2, 1}}, 1},
                                    {{{0, 0, 1}}, -1},
                                    {{{0, 0, 2}}, 1}});
  const Poly n2 = Poly::from_terms({{{{0, 4, 0}}, 1},
                                    {{{0, 2, 0}}, -1},
                                    {{{0, -2, 1}}, 1},
                                    {{{0, 2, 1}}, 2},
                                    {{{0, 0, 1}}, -1},
                                    {{{0, 0, 2}}, 1}});
  const Poly relation =
      Poly::variable(Var::L) * Poly::monomial(Monomial{{0, 2, 0}}, 1) * n2 + n1;
  const Poly cleared = mul_monomial(relation, Monomial{{0, 4, 0}}, 1);
  REQUIRE(cleared.is_polynomial());
  const XSubstitution& xs = x_substitution();
  REQUIRE(substitute_quad(cleared, Var::x, xs.num, xs.den).is_zero());
}

TEST_CASE("property: norm multiplicativity (500 cases)") {
  Rng rng(314159);
  for (int it = 0; it < 500; ++it) {
    const QuadElem e1 = testing::random_quad(rng);
    const QuadElem e2 = testing::random_quad(rng);
    REQUIRE(norm(qmul(e1, e2)) == norm(e1) * norm(e2));
  }
}

TEST_CASE("property: conj is a ring automorphism (500 cases)") {
  Rng rng(271828);
  for (int it = 0; it < 500; ++it) {
    const QuadElem e1 = testing::random_quad(rng);
    const QuadElem e2 = testing::random_quad(rng);
    REQUIRE(conj(qmul(e1, e2)) == qmul(conj(e1), conj(e2)));
    REQUIRE(conj(e1 + e2) == conj(e1) + conj(e2));
    REQUIRE(qmul(e1, conj(e1)).b.is_zero());
  }
}

TEST_CASE("property: fraction round-trip after denominator clearing (500 cases)") {
  Rng rng(161803);
  for (int it = 0; it < 500; ++it) {
    const FactoredFraction f = testing::random_ff(rng);
    const int j = testing::rand_int(rng, 0, 3);
    const int k = testing::rand_int(rng, 0, 4);
    const int l = testing::rand_int(rng, 0, 2);
    const Poly junk =
        Poly::monomial(Monomial{{0, k, 0}}, Int(1) << static_cast<unsigned>(j)) *
        pow(lm2p1(), l);
    const QuadElem scaled{f.num.a * junk, f.num.b * junk};
    REQUIRE(ff_of(scaled, f.two + j, f.m + k, f.lm + l) == f);
  }
}

TEST_CASE("property: fraction arithmetic agrees with rational evaluation (500 cases)") {
  Rng rng(141421);
  const auto ffe = [](const FactoredFraction& f, const RationalPoint& pt) {
    const Rational den = rational_pow(Rational(2), f.two) * rational_pow(pt.v[1], f.m) *
                         rational_pow(eval(lm2p1(), pt), f.lm);
    return std::pair<Rational, Rational>{eval(f.num.a, pt) / den, eval(f.num.b, pt) / den};
  };
  int done = 0;
  while (done < 500) {
    const RationalPoint pt = testing::random_point(rng);
    if (eval(lm2p1(), pt) == 0) continue;
    const FactoredFraction f = testing::random_ff(rng);
    const FactoredFraction g = testing::random_ff(rng);
    const Rational dv = eval(discriminant(), pt);
    const auto [fa, fb] = ffe(f, pt);
    const auto [ga, gb] = ffe(g, pt);
    const auto [pa, pb] = ffe(ff_mul(f, g), pt);
    REQUIRE(pa == fa * ga + fb * gb * dv);
    REQUIRE(pb == fa * gb + fb * ga);
    const auto [sa, sb] = ffe(ff_add(f, g), pt);
    REQUIRE(sa == fa + ga);
    REQUIRE(sb == fb + gb);
    ++done;
  }
}

TEST_CASE("guard rails: qpow and denominator extraction") {
  REQUIRE_THROWS_AS(qpow(kZ, -1), NegativeExponent);
  REQUIRE(qpow(kZ, 2) == QuadElem::rational(discriminant()));
  const FactoredFraction half = ff_of(QuadElem::rational(Poly::constant(1)), 1, 0, 0);
  REQUIRE_THROWS_AS(ff_as_quad(half), DenominatorShape);
  REQUIRE_THROWS_AS(ff_as_poly(ff_of(kZ)), DenominatorShape);
  const FactoredFraction whole = ff_of(QuadElem::rational(Poly::constant(3)), -1, 2, -1);
  REQUIRE(ff_as_poly(whole) ==
          Poly::constant(6) * Poly::monomial(Monomial{{0, -2, 0}}, 1) * lm2p1());
}
