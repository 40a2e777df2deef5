#pragma once

// The Riley-Mednykh polynomial family P_{2n}(x, M), built two independent
// ways: by the two-sided recursion
//     P_{2n} = Q P_{2(n-1)} - M^12 P_{2(n-2)}   (n > 1)
//     P_{2n} = Q P_{2(n+1)} - M^12 P_{2(n+2)}   (n < -1)
// from literal initial polynomials, and by the explicit finite-sum closed
// form.  The two routes agreeing exactly is one of the project's core checks.

#include <string>
#include <vector>

#include "apoly/errors.hpp"
#include "apoly/poly.hpp"

namespace apoly {

namespace rmdetail {

// helper: polynomial in M and x from (coeff, eM, ex) triples
inline Poly mx(std::initializer_list<std::array<long long, 3>> ts) {
  std::vector<Term> out;
  for (const auto& t : ts) {
    out.push_back({Monomial{{0, static_cast<std::int32_t>(t[1]), static_cast<std::int32_t>(t[2])}},
                   Int(t[0])});
  }
  return Poly::from_terms(std::move(out));
}

}  // namespace rmdetail

// P_2 = M^6 x^4 + (3M^8 - M^6 + 3M^4) x^3 + (3M^10 - 2M^8 + 5M^6 - 2M^4 + 3M^2) x^2
//     + (M^12 - M^10 + 2M^8 - 2M^6 + 2M^4 - M^2 + 1) x + M^6
inline const Poly& rm_p2() {
  static const Poly p = rmdetail::mx({
      {1, 6, 4},
      {3, 8, 3}, {-1, 6, 3}, {3, 4, 3},
      {3, 10, 2}, {-2, 8, 2}, {5, 6, 2}, {-2, 4, 2}, {3, 2, 2},
      {1, 12, 1}, {-1, 10, 1}, {2, 8, 1}, {-2, 6, 1}, {2, 4, 1}, {-1, 2, 1}, {1, 0, 1},
      {1, 6, 0},
  });
  return p;
}

// P_-2 = -M^4 x^3 - (2M^6 - M^4 + 2M^2) x^2 - (M^8 - M^6 + 2M^4 - M^2 + 1) x + M^4
inline const Poly& rm_pm2() {
  static const Poly p = rmdetail::mx({
      {-1, 4, 3},
      {-2, 6, 2}, {1, 4, 2}, {-2, 2, 2},
      {-1, 8, 1}, {1, 6, 1}, {-2, 4, 1}, {1, 2, 1}, {-1, 0, 1},
      {1, 4, 0},
  });
  return p;
}

// Q = M^6 x^4 + (3M^8 - 2M^6 + 3M^4) x^3 + (3M^10 - 4M^8 + 6M^6 - 4M^4 + 3M^2) x^2
//   + (M^12 - 2M^10 + 3M^8 - 4M^6 + 3M^4 - 2M^2 + 1) x + 2M^6,
// which also factors as x (M^4 + M^2 x + 1)^2 (M^4 + M^2 x - 2M^2 + 1) + 2M^6;
// the identity is asserted once on first use.
inline const Poly& q_poly() {
  static const Poly q = [] {
    const Poly lit = rmdetail::mx({
        {1, 6, 4},
        {3, 8, 3}, {-2, 6, 3}, {3, 4, 3},
        {3, 10, 2}, {-4, 8, 2}, {6, 6, 2}, {-4, 4, 2}, {3, 2, 2},
        {1, 12, 1}, {-2, 10, 1}, {3, 8, 1}, {-4, 6, 1}, {3, 4, 1}, {-2, 2, 1}, {1, 0, 1},
        {2, 6, 0},
    });
    const Poly c = rmdetail::mx({{1, 4, 0}, {1, 2, 1}, {-2, 2, 0}, {1, 0, 0}});  // M^4+M^2x-2M^2+1
    const Poly b = rmdetail::mx({{1, 4, 0}, {1, 2, 1}, {1, 0, 0}});              // M^4+M^2x+1
    const Poly x = Poly::variable(Var::x);
    const Poly m6 = Poly::monomial(Monomial{{0, 6, 0}}, 2);
    if (x * b * b * c + m6 != lit) {
      throw ReductionFailure("q_poly: factored form does not re-expand to the literal Q");
    }
    return lit;
  }();
  return q;
}

struct RMPolynomial {
  int n = 0;
  Poly poly;
};

// Recursion route.  n = 0 takes the n >= 0 convention P_0 = 1; the n < 0
// family starts internally from P_0 = M^-2.
inline RMPolynomial rm_recursive(int n) {
  if (n == 0) return {0, Poly::constant(1)};
  const Poly& q = q_poly();
  const Poly m12 = Poly::monomial(Monomial{{0, 12, 0}}, 1);
  if (n > 0) {
    Poly prev = Poly::constant(1);  // P_0
    Poly cur = rm_p2();
    for (int k = 1; k < n; ++k) {
      Poly next = q * cur - m12 * prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return {n, std::move(cur)};
  }
  Poly prev = Poly::monomial(Monomial{{0, -2, 0}}, 1);  // P_0 for the negative family
  Poly cur = rm_pm2();
  for (int k = -1; k > n; --k) {
    Poly next = q * cur - m12 * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {n, std::move(cur)};
}

// Closed-form route.  For n >= 0:
//   P_2n = sum_{i=0}^{2n} C(floor(i/2)+n, i) (M^2)^{-floor(i/2)-2floor((i+1)/2)+3n}
//          x^{floor((i+1)/2)} C^{floor((i-1)/2)} B^i (((-1)^{i+1}+1)M^2/2 + C)
// with C = M^4+M^2x-2M^2+1 and B = M^4+M^2x+1.  The trailing factor is C for
// even i and C+M^2 for odd i, so pairing it with the C^{floor((i-1)/2)} power
// gives integral exponents throughout: even i contributes C^{i/2}, odd i
// contributes C^{(i-1)/2} (C+M^2).  In particular the i=0 term's C^{-1}
// cancels exactly, as the sum's structure demands.  For n < 0 the mirrored
// sum uses C(floor((i-1)/2)-n, i), M-exponent -floor(i/2)-2floor((i+1)/2)-3n-1,
// and trailing factor C for even i, -(C+M^2) for odd i.
inline RMPolynomial rm_closed(int n) {
  const Poly c = rmdetail::mx({{1, 4, 0}, {1, 2, 1}, {-2, 2, 0}, {1, 0, 0}});
  const Poly b = rmdetail::mx({{1, 4, 0}, {1, 2, 1}, {1, 0, 0}});
  const Poly cm2 = c + Poly::monomial(Monomial{{0, 2, 0}}, 1);  // C + M^2

  const auto floordiv2 = [](int v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); };

  Poly sum;
  const int top = n >= 0 ? 2 * n : -2 * n;
  // incremental powers: bpow = B^i, and C-powers stepped every other i
  Poly bpow = Poly::constant(1);
  std::vector<Poly> cpow;  // cpow[k] = C^k, filled as needed
  cpow.push_back(Poly::constant(1));
  for (int i = 0; i <= top; ++i, bpow *= b) {
    const Int bin = n >= 0 ? binom_or_zero(i / 2 + n, i)
                           : binom_or_zero(floordiv2(i - 1) - n, i);
    if (bin == 0) continue;
    const int mexp = n >= 0 ? 2 * (-(i / 2) - 2 * ((i + 1) / 2) + 3 * n)
                            : 2 * (-(i / 2) - 2 * ((i + 1) / 2) - 3 * n - 1);
    const int xexp = (i + 1) / 2;
    const int cexp = i / 2;  // paired exponent: C^{i/2} (even) or C^{(i-1)/2}*(C+M^2) (odd)
    while (static_cast<int>(cpow.size()) <= cexp) cpow.push_back(cpow.back() * c);
    Poly term = mul_monomial(cpow[static_cast<std::size_t>(cexp)],
                             Monomial{{0, mexp, xexp}}, bin);
    term = term * bpow;
    if (i % 2 == 1) {
      term = term * cm2;
      if (n < 0) term = -term;
    }
    sum += term;
  }
  return {n, std::move(sum)};
}

}  // namespace apoly
