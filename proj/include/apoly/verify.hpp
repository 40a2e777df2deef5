#pragma once

// The verification battery behind `verify`: every identity the construction
// rests on, checked exactly.  Each check produces a named CheckResult; the
// first failing name is the diagnosis.  Golden data comes from the checked-in
// JSON files (integrity-locked by hash); everything else is recomputed from
// scratch on every run.

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "apoly/a_polynomial.hpp"
#include "apoly/json_io.hpp"
#include "apoly/poly.hpp"
#include "apoly/quad_ext.hpp"
#include "apoly/render.hpp"
#include "apoly/rep_oracle.hpp"
#include "apoly/riley_mednykh.hpp"

namespace apoly {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace vdetail {

inline void add(std::vector<CheckResult>& out, std::string name, bool pass,
                std::string detail = "") {
  out.push_back(CheckResult{std::move(name), pass, std::move(detail)});
}

inline std::string short_poly(const Poly& p) {
  if (p.term_count() <= 8) return render_text(p);
  return "(" + std::to_string(p.term_count()) + " terms, lead " +
         render_text(Poly::monomial(p.leading_term().m, p.leading_term().c)) + ")";
}

// (1 - 3L + 3L^2 - L^3)
inline Poly cube_factor() {
  return Poly::from_terms(
      {{{{3, 0, 0}}, -1}, {{{2, 0, 0}}, 3}, {{{1, 0, 0}}, -3}, {{{0, 0, 0}}, 1}});
}

// Q(u) as a FactoredFraction in the quadratic extension.
inline const FactoredFraction& q_of_u() {
  static const FactoredFraction qu = [] {
    const XSubstitution& xs = x_substitution();
    const QuadElem raw = substitute_quad(q_poly(), Var::x, xs.num, xs.den);
    return ff_of(raw, 4, 16, 4);  // den^4 = 2^4 M^16 (LM^2+1)^4
  }();
  return qu;
}

}  // namespace vdetail

// Appendix-A battery: the five Q(u) display identities, the factored forms of
// b and h, and the four substitution building-block identities.
inline std::vector<CheckResult> q_identity_suite(const std::filesystem::path& goldens) {
  using vdetail::add;
  std::vector<CheckResult> out;
  const auto file = goldens / "appendix_a.json";
  const Poly a = load_golden_poly(file, "a");
  const Poly b = load_golden_poly(file, "b");
  const Poly f = load_golden_poly(file, "f");
  const Poly g = load_golden_poly(file, "g");
  const Poly h = load_golden_poly(file, "h");
  const Poly h1 = load_golden_poly(file, "h1");

  const FactoredFraction& qu = vdetail::q_of_u();
  const Poly L = Poly::variable(Var::L);
  add(out, "q-identity/Q(u)=2^-1 M^4 (LM^2+1)^-4 (a+Lbz)",
      qu == ff_of(QuadElem{a, L * b}, 1, -4, 4));
  add(out, "q-identity/Q(-u) conjugate",
      ff_conj(qu) == ff_of(QuadElem{a, -(L * b)}, 1, -4, 4));
  add(out, "q-identity/Q(u)Q(-u)=M^8 (LM^2+1)^-4 f",
      ff_norm(qu) == ff_of(QuadElem::rational(f), 0, -8, 4));
  add(out, "q-identity/Q(u)^2=2^-1 M^8 (LM^2+1)^-8 (g+hz)",
      ff_mul(qu, qu) == ff_of(QuadElem{g, h}, 1, -8, 8));
  add(out, "q-identity/Q(-u)^2 conjugate",
      ff_mul(ff_conj(qu), ff_conj(qu)) == ff_of(QuadElem{g, -h}, 1, -8, 8));

  const Poly m2m1 = Poly::from_terms({{{{0, 2, 0}}, 1}, {{{0, 0, 0}}, -1}});   // M^2-1
  const Poly m2p1 = Poly::from_terms({{{{0, 2, 0}}, 1}, {{{0, 0, 0}}, 1}});    // M^2+1
  const Poly mm1 = Poly::from_terms({{{{0, 1, 0}}, 1}, {{{0, 0, 0}}, -1}});    // M-1
  const Poly mp1 = Poly::from_terms({{{{0, 1, 0}}, 1}, {{{0, 0, 0}}, 1}});     // M+1
  const Poly lm1 = Poly::from_terms({{{{1, 0, 0}}, 1}, {{{0, 0, 0}}, -1}});    // L-1
  add(out, "q-identity/h=L(L-1)(M^2-1)^3(M^2+1)^2 h1",
      h == L * lm1 * pow(m2m1, 3) * pow(m2p1, 2) * h1);
  add(out, "q-identity/b=(L-1)(M-1)^3(M+1)^3(M^2+1)^2",
      b == lm1 * pow(mm1, 3) * pow(mp1, 3) * pow(m2p1, 2));
  add(out, "q-identity/f(L,0)=1-3L+3L^2-L^3",
      coefficient_in(f, Var::M, 0) == vdetail::cube_factor());

  // The four building-block identities behind the substitution: each
  // M-and-x expression equals M^6 (bracket) / (2 M^4 (LM^2+1)).
  const XSubstitution& xs = x_substitution();
  const FactoredFraction x_ff = ff_of(xs.num, 1, 4, 1);
  const Poly m2 = Poly::monomial(Monomial{{0, 2, 0}}, 1);
  const Poly m4m2m2p1 = Poly::from_terms(
      {{{{0, 4, 0}}, 1}, {{{0, 2, 0}}, -2}, {{{0, 0, 0}}, 1}});  // M^4-2M^2+1
  const Poly m4p1 = Poly::from_terms({{{{0, 4, 0}}, 1}, {{{0, 0, 0}}, 1}});  // M^4+1
  const QuadElem blk1{Poly::from_terms({{{{1, 6, 0}}, -2},
                                        {{{1, 4, 0}}, 1},
                                        {{{1, 2, 0}}, -1},
                                        {{{0, 4, 0}}, -1},
                                        {{{0, 2, 0}}, 1},
                                        {{{0, 0, 0}}, -2}}),
                      m2};
  const QuadElem blk2{Poly::from_terms({{{{1, 2, 0}}, -3},
                                        {{{1, 0, 0}}, 1},
                                        {{{0, 2, 0}}, 1},
                                        {{{0, 0, 0}}, -3}}),
                      Poly::constant(1)};
  const QuadElem blk3{Poly::from_terms({{{{1, 2, 0}}, 1},
                                        {{{1, 0, 0}}, 1},
                                        {{{0, 2, 0}}, 1},
                                        {{{0, 0, 0}}, 1}}),
                      Poly::constant(1)};
  const QuadElem blk4{Poly::from_terms({{{{1, 2, 0}}, -1},
                                        {{{1, 0, 0}}, 1},
                                        {{{0, 2, 0}}, 1},
                                        {{{0, 0, 0}}, -1}}),
                      Poly::constant(1)};
  const FactoredFraction m2x = ff_mul(ff_rational(m2), x_ff);
  add(out, "q-identity/block1 x-substitution bracket",
      x_ff == ff_of(blk1, 1, 2, 1));
  add(out, "q-identity/block2 M^4+M^2 x-2M^2+1",
      ff_add(ff_rational(m4m2m2p1), m2x) == ff_of(blk2, 1, -2, 1));
  add(out, "q-identity/block3 M^4+M^2 x+1",
      ff_add(ff_rational(m4p1), m2x) == ff_of(blk3, 1, -2, 1));
  add(out, "q-identity/block4 odd-parity trailing factor",
      ff_add(ff_rational(m4m2m2p1 + m2), m2x) == ff_of(blk4, 1, -2, 1));
  return out;
}

// Golden A_2 / A_4 and the three bracket presentations.
inline std::vector<CheckResult> golden_suite(const std::filesystem::path& goldens) {
  using vdetail::add;
  std::vector<CheckResult> out;
  const auto file_b = goldens / "appendix_b.json";
  const Poly a2 = load_golden_poly(file_b, "A2");
  const Poly a4 = load_golden_poly(file_b, "A4");
  add(out, "golden/A_2", a_polynomial(1, Route::Closed).a == a2);
  add(out, "golden/A_4", a_polynomial(2, Route::Closed).a == a4);

  const auto file_c = goldens / "appendix_c.json";
  const BracketForm p2 = load_golden_bracket(file_c, "p2");
  const BracketForm pm2 = load_golden_bracket(file_c, "pm2");
  const BracketForm pm4 = load_golden_bracket(file_c, "pm4");
  const auto same = [](const BracketForm& x, const BracketForm& y) {
    return x.bracket.a == y.bracket.a && x.bracket.b == y.bracket.b &&
           x.half_exponent == y.half_exponent;
  };
  add(out, "golden/p_2 bracket", same(substitution_bracket(1), p2));
  add(out, "golden/p_-2 bracket", same(substitution_bracket(-1), pm2));
  add(out, "golden/p_-4 bracket", same(substitution_bracket(-2), pm4));

  // p_of_z(1) must equal both the rescaled substitution fraction and the
  // bracket-encoded fraction (numerator = bracket, exponents (1, 0, 2)).
  const FactoredFraction p1 = p_of_z(1);
  add(out, "golden/p_of_z(1) = M^-4 (LM^2+1)^2 q_of_z(1)",
      p1 == ff_scale_factors(q_of_z(1), 0, -4, 2));
  add(out, "golden/p_of_z(1) bracket fraction", p1 == ff_of(p2.bracket, 1, 0, 2));
  return out;
}

// Specializations and the three-term decomposition, 1 <= n <= n_max.
inline std::vector<CheckResult> specialization_suite(int n_max) {
  using vdetail::add;
  std::vector<CheckResult> out;
  const Poly cube = vdetail::cube_factor();
  const Poly l2ml3 =
      Poly::from_terms({{{{2, 0, 0}}, 1}, {{{3, 0, 0}}, -1}});  // L^2 - L^3
  for (int n = 1; n <= n_max; ++n) {
    const std::string tag = "/n=" + std::to_string(n);
    const Poly a = a_polynomial(n, Route::Closed).a;
    const Poly m0 = coefficient_in(a, Var::M, 0);
    const Poly expect_m0 = pow(cube, n - 1) * l2ml3;
    add(out, "specialization/A(L,0)=(1-3L+3L^2-L^3)^(n-1)(L^2-L^3)" + tag, m0 == expect_m0,
        m0 == expect_m0 ? "" : "got " + vdetail::short_poly(m0));
    const bool l0 = coefficient_in(a, Var::L, 0) == Poly::monomial(Monomial{{0, 8 * n, 0}}, 1);
    add(out, "specialization/A(0,M)=M^8n" + tag, l0);
    add(out, "specialization/[L^3n M^0] nonzero" + tag,
        a.coefficient(Monomial{{3 * n, 0, 0}}) != 0);
    add(out, "specialization/[L^(3n+1) M^2] zero" + tag,
        a.coefficient(Monomial{{3 * n + 1, 2, 0}}) == 0);
    if (n >= 2) {
      // Three-term decomposition:
      //   A_2n = M^-8 (LM^2+1)^4 Q(u)Q(-u) p_{2(n-1)}(u) p_{2(n-1)}(-u)
      //        - (LM^2+1)^6 (Q(u) p_{2(n-1)}(u) p_{2(n-2)}(-u) + conj)
      //        + M^8 (LM^2+1)^8 p_{2(n-2)}(u) p_{2(n-2)}(-u)
      const FactoredFraction& qu = vdetail::q_of_u();
      const FactoredFraction p1 = p_of_z(n - 1);
      const FactoredFraction p2 = p_of_z(n - 2);
      const FactoredFraction t1 =
          ff_scale_factors(ff_mul(ff_norm(qu), ff_norm(p1)), 0, -8, 4);
      FactoredFraction cross = ff_mul(qu, ff_mul(p1, ff_conj(p2)));
      cross = ff_add(cross, ff_conj(cross));
      const FactoredFraction t2 = ff_neg(ff_scale_factors(cross, 0, 0, 6));
      const FactoredFraction t3 = ff_scale_factors(ff_norm(p2), 0, 8, 8);
      const FactoredFraction sum = ff_add(ff_add(t1, t2), t3);
      add(out, "specialization/three-term decomposition" + tag,
          sum == ff_rational(a));
    }
  }
  return out;
}

// Riley–Mednykh route equality and degree/x=0 laws, plus the A-route triangle.
inline std::vector<CheckResult> route_equality_suite(int n_max) {
  using vdetail::add;
  std::vector<CheckResult> out;
  const int rm_max = std::max(6, n_max);
  for (int n = -rm_max; n <= rm_max; ++n) {
    const std::string tag = "/n=" + std::to_string(n);
    const Poly rec = rm_recursive(n).poly;
    add(out, "rm/closed=recursive" + tag, rm_closed(n).poly == rec);
    if (n != 0) {
      const int want = n > 0 ? 4 * n : -4 * n - 1;
      add(out, "rm/deg_x law" + tag, rec.degree_in(Var::x) == want);
      const Poly at0 = coefficient_in(rec, Var::x, 0);
      const bool mono = at0.is_monomial() &&
                        (at0.leading_term().c == 1 || at0.leading_term().c == -1);
      add(out, "rm/P(x=0) unit monomial" + tag, mono,
          mono ? render_text(at0) : vdetail::short_poly(at0));
    }
  }
  for (int n = 1; n <= n_max; ++n) {
    const std::string tag = "/n=" + std::to_string(n);
    const Poly c = a_polynomial(n, Route::Closed).a;
    const Poly r = a_polynomial(n, Route::RecursiveSubst).a;
    const Poly s = a_polynomial(n, Route::ClosedSubst).a;
    add(out, "route/A_" + std::to_string(2 * n) + " triangle", c == r && r == s);
    const Poly rn = a_polynomial(-n, Route::RecursiveSubst).a;
    const Poly sn = a_polynomial(-n, Route::ClosedSubst).a;
    add(out, "route/A_" + std::to_string(-2 * n) + " substitution pair", rn == sn);
  }
  return out;
}

// Empirical reciprocal symmetry A(L, M) = ± L^a M^b A(1/L, 1/M), reported per
// n; an observation about the computed output, not an input assumption.
inline std::vector<CheckResult> symmetry_suite() {
  using vdetail::add;
  std::vector<CheckResult> out;
  for (int n = -3; n <= 3; ++n) {
    if (n == 0) continue;
    const Poly a = a_polynomial(n, n > 0 ? Route::Closed : Route::RecursiveSubst).a;
    const int alpha = a.degree_in(Var::L) + a.min_exponent_in(Var::L);
    const int beta = a.degree_in(Var::M) + a.min_exponent_in(Var::M);
    const Term& lead = a.leading_term();
    const Int mirror_lead =
        a.coefficient(Monomial{{alpha - lead.m[Var::L], beta - lead.m[Var::M], 0}});
    int sign = 0;
    if (mirror_lead == lead.c) sign = 1;
    else if (mirror_lead == -lead.c) sign = -1;
    bool ok = sign != 0;
    for (const Term& t : a.terms()) {
      if (!ok) break;
      ok = a.coefficient(Monomial{{alpha - t.m[Var::L], beta - t.m[Var::M], 0}}) ==
           sign * t.c;
    }
    add(out, "symmetry/A_" + std::to_string(2 * n), ok,
        ok ? "A(L,M) = " + std::string(sign < 0 ? "-" : "") + "L^" + std::to_string(alpha) +
                 " M^" + std::to_string(beta) + " A(1/L,1/M)"
           : "no (a, b, sign) matches");
  }
  return out;
}

// Representation oracle: relator divisibility and the longitude relation.
inline std::vector<CheckResult> oracle_suite() {
  using vdetail::add;
  std::vector<CheckResult> out;
  for (int n : {-2, -1, 1, 2}) {
    const RelatorReport rep = relator_report(n);
    std::string detail;
    for (const auto& e : rep.entries) {
      detail += "(M^" + std::to_string(e.m_cleared) + ",lc^" +
                std::to_string(e.lead_power) + ")";
      if (!e.pass) detail += " residual " + vdetail::short_poly(e.residual);
    }
    add(out, "oracle/relator divisibility by P_" + std::to_string(2 * n), rep.pass, detail);
  }
  for (int n : {-1, 1}) {
    const LongitudeReport rep = longitude_report(n);
    add(out, "oracle/longitude relation mod P_" + std::to_string(2 * n), rep.pass,
        rep.det_ok ? "det=1, lc^" + std::to_string(rep.reduction.lead_power)
                   : "det(rho(l)) != 1");
  }
  return out;
}

// The whole battery.  Golden-file integrity failures become named failing
// checks instead of hard aborts, so the report always says what broke.
inline std::vector<CheckResult> run_verify(const std::filesystem::path& goldens, int max_n,
                                           bool oracle) {
  std::vector<CheckResult> out;
  const auto run = [&out](const char* suite, auto&& fn) {
    try {
      auto results = fn();
      out.insert(out.end(), results.begin(), results.end());
    } catch (const std::exception& e) {
      out.push_back(CheckResult{std::string(suite) + "/exception", false, e.what()});
    }
  };
  run("golden", [&] { return golden_suite(goldens); });
  run("q-identity", [&] { return q_identity_suite(goldens); });
  run("specialization", [&] { return specialization_suite(max_n); });
  run("route", [&] { return route_equality_suite(max_n); });
  run("symmetry", [&] { return symmetry_suite(); });
  if (oracle) run("oracle", [&] { return oracle_suite(); });
  return out;
}

}  // namespace apoly
