// Acceptance gate: the ten exit criteria, each timed against its budget and
// reported as a single PASS/FAIL line.  Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "apoly/a_polynomial.hpp"
#include "apoly/json_io.hpp"
#include "apoly/reference_data.hpp"
#include "apoly/rep_oracle.hpp"
#include "apoly/riley_mednykh.hpp"
#include "apoly/verify.hpp"
#include "test_support.hpp"

using namespace apoly;

namespace {

const std::filesystem::path kGoldens = APOLY_GOLDENS_DIR;

int g_failures = 0;

// Runs one criterion, timing it and folding exceptions into a failure.
void criterion(int number, const std::string& label, double budget_seconds,
               bool (*body)()) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    ok = false;
    note = std::string(" [exception: ") + e.what() + "]";
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_seconds > 0 && secs > budget_seconds) {
    ok = false;
    note += " [over budget]";
  }
  std::printf("%s  criterion %2d: %s (%.2f s%s)%s\n", ok ? "PASS" : "FAIL", number,
              label.c_str(), secs,
              budget_seconds > 0 ? (", limit " + std::to_string(static_cast<int>(budget_seconds)) + " s").c_str()
                                 : "",
              note.c_str());
  if (!ok) ++g_failures;
}

const Poly& a_of(int n) {
  static std::map<int, Poly> memo;
  auto it = memo.find(n);
  if (it == memo.end()) {
    it = memo.emplace(n, a_polynomial(n, Route::RecursiveSubst).a).first;
  }
  return it->second;
}

bool all_pass(const std::vector<CheckResult>& checks) {
  bool ok = !checks.empty();
  for (const CheckResult& c : checks) {
    if (!c.pass) {
      std::printf("      failed check: %s%s%s\n", c.name.c_str(),
                  c.detail.empty() ? "" : " — ", c.detail.c_str());
      ok = false;
    }
  }
  return ok;
}

bool golden_a2() {
  return a_of(1) == load_golden_poly(kGoldens / "appendix_b.json", "A2") &&
         a_polynomial(1, Route::Closed).a == a_of(1) &&
         a_polynomial(1, Route::ClosedSubst).a == a_of(1);
}

bool golden_a4() {
  return a_of(2) == load_golden_poly(kGoldens / "appendix_b.json", "A4") &&
         a_polynomial(2, Route::Closed).a == a_of(2);
}

bool golden_appendix_c() {
  const BracketForm p2 = load_golden_bracket(kGoldens / "appendix_c.json", "p2");
  const BracketForm pm2 = load_golden_bracket(kGoldens / "appendix_c.json", "pm2");
  const BracketForm pm4 = load_golden_bracket(kGoldens / "appendix_c.json", "pm4");
  // p_2(z) carries (2(LM^2+1))^-2, i.e. half-exponent 4; the fraction itself
  // is bracket over 2 (LM^2+1)^2.
  return p_of_z(1) == ff_of(p2.bracket, 1, 0, 2) && p2.half_exponent == 4 &&
         substitution_bracket(1) == p2 && substitution_bracket(-1) == pm2 &&
         pm2.half_exponent == 3 && substitution_bracket(-2) == pm4 &&
         pm4.half_exponent == 7;
}

bool rm_routes_agree() {
  for (int n = -6; n <= 6; ++n) {
    if (rm_closed(n).poly != rm_recursive(n).poly) return false;
  }
  return true;
}

bool route_triangle() {
  for (int n = 1; n <= 6; ++n) {
    const Poly& a = a_of(n);
    if (a_polynomial(n, Route::Closed).a != a) return false;
    if (a_polynomial(n, Route::ClosedSubst).a != a) return false;
  }
  for (int n = -6; n <= -1; ++n) {
    if (a_polynomial(n, Route::ClosedSubst).a != a_of(n)) return false;
  }
  // |n| = 8 performance anchor, all available routes
  const Poly& a8 = a_of(8);
  if (a_polynomial(8, Route::Closed).a != a8) return false;
  if (a_polynomial(8, Route::ClosedSubst).a != a8) return false;
  if (a_polynomial(-8, Route::ClosedSubst).a != a_of(-8)) return false;
  return true;
}

bool appendix_a_battery() { return all_pass(q_identity_suite(kGoldens)); }

bool specializations() {
  const Poly L = Poly::variable(Var::L);
  const Poly l2ml3 = L * L - L * L * L;
  const Poly cube = Poly::from_terms(
      {{{{0, 0, 0}}, 1}, {{{1, 0, 0}}, -3}, {{{2, 0, 0}}, 3}, {{{3, 0, 0}}, -1}});
  for (int n = 1; n <= 5; ++n) {
    const Poly& a = a_of(n);
    if (substitute(a, Var::L, Poly{}) != Poly::monomial(Monomial{{0, 8 * n, 0}}, 1)) {
      return false;
    }
    if (substitute(a, Var::M, Poly{}) != pow(cube, n - 1) * l2ml3) return false;
    if (a.coefficient(Monomial{{3 * n + 1, 2, 0}}) != 0) return false;
    if (a.coefficient(Monomial{{3 * n, 0, 0}}) == 0) return false;
  }
  return true;
}

bool no_redundant_factors() {
  for (int n : {1, 2, 3, 4, 5, 6, 8, -1, -2, -3, -4, -5, -6, -8}) {
    const Poly& a = a_of(n);  // construction already asserts, re-check here
    if (divisible_in_poly_ring(a, Poly::variable(Var::L))) return false;
    if (divisible_in_poly_ring(a, Poly::variable(Var::M))) return false;
    if (divisible_in_poly_ring(a, lm2p1())) return false;
  }
  return true;
}

bool representation_oracle() {
  for (int n : {-2, -1, 1, 2}) {
    if (!check_relator(n).pass) return false;
  }
  for (int n : {-1, 1}) {
    if (!check_longitude(n).pass) return false;
  }
  return true;
}

bool property_suites() {
  using apoly::testing::Rng;
  Rng rng(20260814);
  for (int it = 0; it < 500; ++it) {  // norm multiplicativity
    const QuadElem e1 = testing::random_quad(rng);
    const QuadElem e2 = testing::random_quad(rng);
    if (norm(qmul(e1, e2)) != norm(e1) * norm(e2)) return false;
  }
  for (int it = 0; it < 500; ++it) {  // conj automorphism
    const QuadElem e1 = testing::random_quad(rng);
    const QuadElem e2 = testing::random_quad(rng);
    if (conj(qmul(e1, e2)) != qmul(conj(e1), conj(e2))) return false;
    if (!qmul(e1, conj(e1)).b.is_zero()) return false;
  }
  for (int it = 0; it < 500; ++it) {  // exact_div round-trip
    const Poly p = testing::random_nonzero_poly(rng);
    const Poly q = testing::random_nonzero_poly(rng);
    if (exact_div(p * q, q) != p) return false;
  }
  for (int it = 0; it < 500; ++it) {  // evaluation homomorphism
    const Poly p = testing::random_poly(rng);
    const Poly q = testing::random_poly(rng);
    const RationalPoint pt = testing::random_point(rng);
    if (eval(p * q, pt) != eval(p, pt) * eval(q, pt)) return false;
    if (eval(p + q, pt) != eval(p, pt) + eval(q, pt)) return false;
  }
  return true;
}

}  // namespace

int main() {
  std::printf("acceptance: goldens at %s\n", kGoldens.string().c_str());
  criterion(1, "golden A_2 exact", 1, &golden_a2);
  criterion(2, "golden A_4 exact", 5, &golden_a4);
  criterion(3, "golden substitution brackets (p_2, p_-2, p_-4)", 0, &golden_appendix_c);
  criterion(4, "closed form equals recursion for n in [-6, 6]", 30, &rm_routes_agree);
  criterion(5, "route triangle for |n| <= 6 plus |n| = 8", 600, &route_triangle);
  criterion(6, "Q(u) identity battery against goldens", 0, &appendix_a_battery);
  criterion(7, "specializations A(0,M), A(L,0), corner coefficients, n in [1,5]", 0,
            &specializations);
  criterion(8, "no redundant L / M / (LM^2+1) factors", 0, &no_redundant_factors);
  criterion(9, "representation oracle: relator and longitude", 120,
            &representation_oracle);
  criterion(10, "randomized property suites, 500 cases each", 0, &property_suites);
  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  return 1;
}
