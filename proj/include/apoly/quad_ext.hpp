#pragma once

// Arithmetic in Poly[z]/(z^2 - D) for the fixed discriminant D below, plus
// fractions whose denominators are constrained to the shape
// 2^two * M^m * (L*M^2+1)^lm.  Keeping denominators in factored exponent form
// (exponents may be negative, i.e. net numerator factors) lets every
// normalization step stay exact: numerator content in 2, M and (L*M^2+1) is
// pulled into the exponents, never approximated.

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "apoly/errors.hpp"
#include "apoly/poly.hpp"

namespace apoly {

// D = 5L^2M^4 - 2L^2M^2 + L^2 - 2LM^4 + 12LM^2 - 2L + M^4 - 2M^2 + 5
inline const Poly& discriminant() {
  static const Poly d = Poly::from_terms({
      {{{2, 4, 0}}, 5},  {{{2, 2, 0}}, -2}, {{{2, 0, 0}}, 1},
      {{{1, 4, 0}}, -2}, {{{1, 2, 0}}, 12}, {{{1, 0, 0}}, -2},
      {{{0, 4, 0}}, 1},  {{{0, 2, 0}}, -2}, {{{0, 0, 0}}, 5},
  });
  return d;
}

// L*M^2 + 1, the distinguished denominator factor.
inline const Poly& lm2p1() {
  static const Poly p = Poly::from_terms({{{{1, 2, 0}}, 1}, {{{0, 0, 0}}, 1}});
  return p;
}

struct QuadElem {
  Poly a;  // rational part
  Poly b;  // coefficient of z

  static QuadElem rational(Poly p) { return QuadElem{std::move(p), Poly{}}; }
  static QuadElem radical(Poly p) { return QuadElem{Poly{}, std::move(p)}; }

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  bool is_rational() const { return b.is_zero(); }

  friend bool operator==(const QuadElem& u, const QuadElem& v) {
    return u.a == v.a && u.b == v.b;
  }
  friend bool operator!=(const QuadElem& u, const QuadElem& v) { return !(u == v); }

  friend QuadElem operator+(const QuadElem& u, const QuadElem& v) {
    return QuadElem{u.a + v.a, u.b + v.b};
  }
  friend QuadElem operator-(const QuadElem& u, const QuadElem& v) {
    return QuadElem{u.a - v.a, u.b - v.b};
  }
  QuadElem operator-() const { return QuadElem{-a, -b}; }
};

inline QuadElem qmul(const QuadElem& u, const QuadElem& v) {
  return QuadElem{u.a * v.a + (u.b * v.b) * discriminant(), u.a * v.b + u.b * v.a};
}
inline QuadElem operator*(const QuadElem& u, const QuadElem& v) { return qmul(u, v); }
inline QuadElem operator*(const QuadElem& u, const Poly& p) { return QuadElem{u.a * p, u.b * p}; }
inline QuadElem operator*(const Poly& p, const QuadElem& u) { return u * p; }

inline QuadElem conj(const QuadElem& u) { return QuadElem{u.a, -u.b}; }

// norm(a + b z) = a^2 - b^2 D, always rational.
inline Poly norm(const QuadElem& u) {
  return u.a * u.a - (u.b * u.b) * discriminant();
}

inline QuadElem qpow(const QuadElem& u, int k) {
  if (k < 0) throw NegativeExponent("qpow: negative exponent");
  QuadElem r = QuadElem::rational(Poly::constant(1));
  for (int i = 0; i < k; ++i) r = qmul(r, u);
  return r;
}

// value = num / (2^two * M^m * (LM^2+1)^lm); exponents are signed.
// Normal form: num != 0 implies the joint coefficient content of (a, b) is
// odd, the minimal M-exponent across both parts is 0, and (LM^2+1) divides
// neither part jointly.  num == 0 forces all exponents to 0.
struct FactoredFraction {
  QuadElem num;
  int two = 0;
  int m = 0;
  int lm = 0;

  bool is_zero() const { return num.is_zero(); }

  friend bool operator==(const FactoredFraction& f, const FactoredFraction& g) {
    return f.num == g.num && f.two == g.two && f.m == g.m && f.lm == g.lm;
  }
  friend bool operator!=(const FactoredFraction& f, const FactoredFraction& g) {
    return !(f == g);
  }
};

namespace detail {

inline long long two_valuation(const Poly& p) {
  long long v = -1;  // -1: unset
  for (const Term& t : p.terms()) {
    const long long tv = static_cast<long long>(boost::multiprecision::lsb(
        t.c < 0 ? Int(-t.c) : t.c));
    if (v < 0 || tv < v) v = tv;
    if (v == 0) break;
  }
  return v;
}

inline Poly divide_coeffs_by_pow2(const Poly& p, long long k) {
  if (k == 0) return p;
  const Int d = Int(1) << static_cast<unsigned>(k);
  std::vector<Term> ts;
  ts.reserve(p.term_count());
  for (const Term& t : p.terms()) ts.push_back({t.m, t.c / d});
  return Poly::from_terms(std::move(ts));
}

}  // namespace detail

inline FactoredFraction ff_normalize(QuadElem num, int two, int m, int lm) {
  if (num.is_zero()) return FactoredFraction{QuadElem{}, 0, 0, 0};

  // 2-content of both parts jointly
  long long v2 = -1;
  if (!num.a.is_zero()) v2 = detail::two_valuation(num.a);
  if (!num.b.is_zero()) {
    const long long vb = detail::two_valuation(num.b);
    if (v2 < 0 || vb < v2) v2 = vb;
  }
  if (v2 > 0) {
    num.a = detail::divide_coeffs_by_pow2(num.a, v2);
    num.b = detail::divide_coeffs_by_pow2(num.b, v2);
    two -= static_cast<int>(v2);
  }

  // M-content: minimal exponent over both parts
  int vm = std::numeric_limits<int>::max();
  if (!num.a.is_zero()) vm = std::min(vm, num.a.min_exponent_in(Var::M));
  if (!num.b.is_zero()) vm = std::min(vm, num.b.min_exponent_in(Var::M));
  if (vm != 0) {
    Monomial shift;
    shift.e[static_cast<int>(Var::M)] = -vm;
    num.a = mul_monomial(num.a, shift, 1);
    num.b = mul_monomial(num.b, shift, 1);
    m -= vm;
  }

  // (LM^2+1)-content
  for (;;) {
    std::optional<Poly> qa, qb;
    if (num.a.is_zero()) {
      qa = Poly{};
    } else {
      qa = try_exact_div(num.a, lm2p1());
      if (!qa) break;
    }
    if (num.b.is_zero()) {
      qb = Poly{};
    } else {
      qb = try_exact_div(num.b, lm2p1());
      if (!qb) break;
    }
    num.a = std::move(*qa);
    num.b = std::move(*qb);
    --lm;
  }

  return FactoredFraction{std::move(num), two, m, lm};
}

inline FactoredFraction ff_of(QuadElem num, int two = 0, int m = 0, int lm = 0) {
  return ff_normalize(std::move(num), two, m, lm);
}
inline FactoredFraction ff_rational(Poly p) { return ff_of(QuadElem::rational(std::move(p))); }

inline FactoredFraction ff_mul(const FactoredFraction& f, const FactoredFraction& g) {
  return ff_normalize(qmul(f.num, g.num), f.two + g.two, f.m + g.m, f.lm + g.lm);
}

inline FactoredFraction ff_add(const FactoredFraction& f, const FactoredFraction& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  const int two = std::max(f.two, g.two);
  const int m = std::max(f.m, g.m);
  const int lm = std::max(f.lm, g.lm);
  auto lift = [&](const FactoredFraction& h) -> QuadElem {
    QuadElem n = h.num;
    const Int c2 = Int(1) << static_cast<unsigned>(two - h.two);
    Monomial shift;
    shift.e[static_cast<int>(Var::M)] = m - h.m;
    n.a = mul_monomial(n.a, shift, c2);
    n.b = mul_monomial(n.b, shift, c2);
    if (lm > h.lm) {
      const Poly f2 = pow(lm2p1(), lm - h.lm);
      n.a = n.a * f2;
      n.b = n.b * f2;
    }
    return n;
  };
  return ff_normalize(lift(f) + lift(g), two, m, lm);
}

inline FactoredFraction ff_neg(const FactoredFraction& f) {
  return FactoredFraction{-f.num, f.two, f.m, f.lm};
}
inline FactoredFraction ff_sub(const FactoredFraction& f, const FactoredFraction& g) {
  return ff_add(f, ff_neg(g));
}
inline FactoredFraction ff_conj(const FactoredFraction& f) {
  return FactoredFraction{conj(f.num), f.two, f.m, f.lm};
}

// f * conj(f): the z-part drops, the denominator exponents double.
inline FactoredFraction ff_norm(const FactoredFraction& f) {
  return ff_normalize(QuadElem::rational(norm(f.num)), 2 * f.two, 2 * f.m, 2 * f.lm);
}

// Multiply the VALUE by 2^a * M^b * (LM^2+1)^c.  The numerator is untouched,
// so normal form is preserved.
inline FactoredFraction ff_scale_factors(const FactoredFraction& f, int a, int b, int c) {
  if (f.is_zero()) return f;
  return FactoredFraction{f.num, f.two - a, f.m - b, f.lm - c};
}

// The fraction as an exact QuadElem; requires the denominator to be trivial
// (nonpositive two/lm exponents are units times polynomials, any m is fine in
// the Laurent ring).
inline QuadElem ff_as_quad(const FactoredFraction& f) {
  if (f.is_zero()) return QuadElem{};
  if (f.two > 0 || f.lm > 0) {
    throw DenominatorShape("ff_as_quad: residual denominator 2^" + std::to_string(f.two) +
                           "*(LM^2+1)^" + std::to_string(f.lm));
  }
  QuadElem n = f.num;
  const Int c2 = Int(1) << static_cast<unsigned>(-f.two);
  Monomial shift;
  shift.e[static_cast<int>(Var::M)] = -f.m;
  n.a = mul_monomial(n.a, shift, c2);
  n.b = mul_monomial(n.b, shift, c2);
  if (f.lm < 0) {
    const Poly fac = pow(lm2p1(), -f.lm);
    n.a = n.a * fac;
    n.b = n.b * fac;
  }
  return n;
}

inline Poly ff_as_poly(const FactoredFraction& f) {
  if (!f.num.is_rational()) throw DenominatorShape("ff_as_poly: nonzero z-part");
  return ff_as_quad(f).a;
}

// Presentation form for the published substitution fractions: a bracket in
// the quadratic extension times the symbolic prefactor (2(LM^2+1))^(-k/2).
// Half-integer exponents are never materialized as ring elements; k is just
// carried alongside, and all polynomial-valued results go through norms where
// the half-powers pair up to integers.
struct BracketForm {
  QuadElem bracket;
  int half_exponent = 0;  // value = bracket * (2(LM^2+1))^(-half_exponent/2)

  friend bool operator==(const BracketForm& f, const BracketForm& g) {
    return f.bracket == g.bracket && f.half_exponent == g.half_exponent;
  }
  friend bool operator!=(const BracketForm& f, const BracketForm& g) { return !(f == g); }
};

// Horner substitution of v := num/den into p where num lives in the quadratic
// extension and den is rational: returns N with p(v := num/den) = N / den^d,
// d = deg_v(p).  Same preconditions as substitute_rational.
inline QuadElem substitute_quad(const Poly& p, Var v, const QuadElem& num, const Poly& den) {
  if (den.is_zero()) throw ZeroDenominator("substitute_quad: zero denominator");
  if (!p.is_zero() && p.min_exponent_in(v) < 0) {
    throw NegativeExponent(std::string("substitute_quad: negative exponent of ") +
                           kVarNames[static_cast<int>(v)]);
  }
  if (p.is_zero() || !p.depends_on(v)) return QuadElem::rational(p);
  const int d = p.degree_in(v);
  std::vector<Poly> denpow(static_cast<std::size_t>(d) + 1);
  denpow[0] = Poly::constant(1);
  for (int k = 1; k <= d; ++k) {
    denpow[static_cast<std::size_t>(k)] = denpow[static_cast<std::size_t>(k - 1)] * den;
  }
  QuadElem acc = QuadElem::rational(coefficient_in(p, v, d));
  for (int k = d - 1; k >= 0; --k) {
    acc = qmul(acc, num);
    acc.a += coefficient_in(p, v, k) * denpow[static_cast<std::size_t>(d - k)];
  }
  return acc;
}

}  // namespace apoly
