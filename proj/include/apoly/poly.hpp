#pragma once

// Sparse Laurent polynomials in the fixed variables L, M, x over arbitrary
// precision integers.  Monomials are ordered graded-lexicographically
// (total degree first, ties broken lexicographically on L, M, x); a Poly is
// always kept in canonical form: terms strictly descending in that order and
// no zero coefficients.  Negative exponents are first-class citizens, so M^-1
// and friends need no special casing anywhere above this layer.

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "apoly/errors.hpp"

namespace apoly {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Var : int { L = 0, M = 1, x = 2 };

inline constexpr int kVarCount = 3;
inline constexpr const char* kVarNames[kVarCount] = {"L", "M", "x"};

struct Monomial {
  std::array<std::int32_t, kVarCount> e{0, 0, 0};

  int degree() const { return e[0] + e[1] + e[2]; }
  bool is_unit() const { return e[0] == 0 && e[1] == 0 && e[2] == 0; }
  bool is_laurent_only() const { return e[0] < 0 || e[1] < 0 || e[2] < 0; }

  int operator[](Var v) const { return e[static_cast<int>(v)]; }

  Monomial operator*(const Monomial& o) const {
    return Monomial{{e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2]}};
  }
  Monomial operator/(const Monomial& o) const {
    return Monomial{{e[0] - o.e[0], e[1] - o.e[1], e[2] - o.e[2]}};
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
};

// Graded-lex comparison: returns <0, 0, >0 as a is below, equal to, above b.
inline int mon_cmp(const Monomial& a, const Monomial& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (int i = 0; i < kVarCount; ++i) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  }
  return 0;
}

inline bool mon_greater(const Monomial& a, const Monomial& b) { return mon_cmp(a, b) > 0; }

struct Term {
  Monomial m;
  Int c;
};

namespace detail {

// Packed monomial key for hash-accumulated products.  21 bits per exponent,
// biased; plenty for everything this library ever produces, and guarded.
inline std::uint64_t pack(const Monomial& m) {
  constexpr std::int64_t kBias = 1 << 20;
  for (int i = 0; i < kVarCount; ++i) {
    if (m.e[i] <= -kBias || m.e[i] >= kBias) {
      throw std::overflow_error("monomial exponent out of packable range");
    }
  }
  return (static_cast<std::uint64_t>(m.e[0] + kBias) << 42) |
         (static_cast<std::uint64_t>(m.e[1] + kBias) << 21) |
         static_cast<std::uint64_t>(m.e[2] + kBias);
}

inline Monomial unpack(std::uint64_t k) {
  constexpr std::int32_t kBias = 1 << 20;
  Monomial m;
  m.e[0] = static_cast<std::int32_t>((k >> 42) & 0x1FFFFF) - kBias;
  m.e[1] = static_cast<std::int32_t>((k >> 21) & 0x1FFFFF) - kBias;
  m.e[2] = static_cast<std::int32_t>(k & 0x1FFFFF) - kBias;
  return m;
}

struct MonDesc {
  bool operator()(const Monomial& a, const Monomial& b) const { return mon_cmp(a, b) > 0; }
};

}  // namespace detail

class Poly {
 public:
  Poly() = default;  // the zero polynomial

  static Poly constant(Int v) {
    Poly p;
    if (v != 0) p.terms_.push_back({Monomial{}, std::move(v)});
    return p;
  }
  static Poly variable(Var v) {
    Monomial m;
    m.e[static_cast<int>(v)] = 1;
    return monomial(m, 1);
  }
  static Poly monomial(Monomial m, Int c) {
    Poly p;
    if (c != 0) p.terms_.push_back({m, std::move(c)});
    return p;
  }
  static Poly from_terms(std::vector<Term> ts) {
    Poly p;
    p.terms_ = std::move(ts);
    p.canonicalize();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].m.is_unit() && terms_[0].c == 1;
  }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_unit()); }
  bool is_monomial() const { return terms_.size() == 1; }

  // True when no term carries a negative exponent (an honest polynomial).
  bool is_polynomial() const {
    for (const Term& t : terms_) {
      if (t.m.is_laurent_only()) return false;
    }
    return true;
  }

  const Term& leading_term() const {
    if (terms_.empty()) throw BadInput("leading_term of zero polynomial");
    return terms_.front();
  }

  Int coefficient(const Monomial& m) const {
    // terms_ descending; binary search
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) {
                                 return mon_cmp(t.m, key) > 0;
                               });
    if (it != terms_.end() && it->m == m) return it->c;
    return 0;
  }

  // Max exponent of v over all terms; INT_MIN for the zero polynomial.
  int degree_in(Var v) const {
    if (terms_.empty()) return std::numeric_limits<int>::min();
    int d = std::numeric_limits<int>::min();
    for (const Term& t : terms_) d = std::max(d, t.m[v]);
    return d;
  }
  // Min exponent of v over all terms; INT_MAX for the zero polynomial.
  int min_exponent_in(Var v) const {
    if (terms_.empty()) return std::numeric_limits<int>::max();
    int d = std::numeric_limits<int>::max();
    for (const Term& t : terms_) d = std::min(d, t.m[v]);
    return d;
  }

  bool depends_on(Var v) const {
    for (const Term& t : terms_) {
      if (t.m[v] != 0) return true;
    }
    return false;
  }

  Poly operator-() const {
    Poly r = *this;
    for (Term& t : r.terms_) t.c = -t.c;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    // linear merge of two canonically sorted term lists
    Poly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      const int c = mon_cmp(a.terms_[i].m, b.terms_[j].m);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back(b.terms_[j++]);
      } else {
        Int s = a.terms_[i].c + b.terms_[j].c;
        if (s != 0) r.terms_.push_back({a.terms_[i].m, std::move(s)});
        ++i;
        ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
    return r;
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    if (a.is_monomial()) return mul_monomial(b, a.terms_[0].m, a.terms_[0].c);
    if (b.is_monomial()) return mul_monomial(a, b.terms_[0].m, b.terms_[0].c);

    std::unordered_map<std::uint64_t, Int> acc;
    acc.reserve(a.terms_.size() + b.terms_.size());
    if (&a == &b) {
      // squaring: exploit symmetry, roughly halves the coefficient products
      const auto& ts = a.terms_;
      for (std::size_t i = 0; i < ts.size(); ++i) {
        acc[detail::pack(ts[i].m * ts[i].m)] += ts[i].c * ts[i].c;
        for (std::size_t j = i + 1; j < ts.size(); ++j) {
          Int p = ts[i].c * ts[j].c;
          acc[detail::pack(ts[i].m * ts[j].m)] += (p << 1);
        }
      }
    } else {
      for (const Term& ta : a.terms_) {
        for (const Term& tb : b.terms_) {
          acc[detail::pack(ta.m * tb.m)] += ta.c * tb.c;
        }
      }
    }
    Poly r;
    r.terms_.reserve(acc.size());
    for (auto& [key, c] : acc) {
      if (c != 0) r.terms_.push_back({detail::unpack(key), std::move(c)});
    }
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& s, const Term& t) { return mon_greater(s.m, t.m); });
    return r;
  }

  friend Poly mul_monomial(const Poly& p, const Monomial& m, const Int& c) {
    if (c == 0) return Poly{};
    Poly r;
    r.terms_.reserve(p.terms_.size());
    for (const Term& t : p.terms_) r.terms_.push_back({t.m * m, t.c * c});
    return r;  // shift preserves canonical order
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].m == b.terms_[i].m) || a.terms_[i].c != b.terms_[i].c) return false;
    }
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  std::vector<Term> terms_;

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& s, const Term& t) { return mon_greater(s.m, t.m); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (Term& t : terms_) {
      if (!out.empty() && out.back().m == t.m) {
        out.back().c += t.c;
      } else {
        out.push_back(std::move(t));
      }
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Term& t) { return t.c == 0; }),
              out.end());
    terms_ = std::move(out);
  }
};

inline Poly operator*(const Poly& p, const Int& c) { return p * Poly::constant(c); }
inline Poly operator*(const Int& c, const Poly& p) { return p * Poly::constant(c); }

// k >= 0 only: Laurent shifts go through Poly::monomial, not pow.
inline Poly pow(const Poly& p, int k) {
  if (k < 0) throw NegativeExponent("pow: negative exponent " + std::to_string(k));
  Poly r = Poly::constant(1);
  Poly base = p;
  int e = k;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return r;
}

// Exact division in the Laurent ring.  Term-reduction against the leading
// term of q under the canonical order.  Termination without a remainder
// concept: every legitimate quotient term must land in the per-variable
// exponent box [min(p)-min(q), max(p)-max(q)] (lowest/highest slices of a
// product never cancel over an integral domain), and the candidate terms the
// loop produces are strictly descending, so they either stay in the finite
// box or step outside it, which proves indivisibility.
inline std::optional<Poly> try_exact_div(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw ZeroDenominator("exact_div: division by zero polynomial");
  if (p.is_zero()) return Poly{};

  std::array<int, kVarCount> lo{}, hi{};
  for (int i = 0; i < kVarCount; ++i) {
    const Var v = static_cast<Var>(i);
    lo[i] = p.min_exponent_in(v) - q.min_exponent_in(v);
    hi[i] = p.degree_in(v) - q.degree_in(v);
    if (lo[i] > hi[i]) return std::nullopt;
  }

  std::map<Monomial, Int, detail::MonDesc> rest;
  for (const Term& t : p.terms()) rest.emplace(t.m, t.c);

  const Term& qlead = q.leading_term();
  std::vector<Term> quotient;
  while (!rest.empty()) {
    const auto& [rm, rc] = *rest.begin();
    const Monomial t = rm / qlead.m;
    for (int i = 0; i < kVarCount; ++i) {
      if (t.e[i] < lo[i] || t.e[i] > hi[i]) return std::nullopt;
    }
    Int qc, remc;
    boost::multiprecision::divide_qr(rc, qlead.c, qc, remc);
    if (remc != 0) return std::nullopt;
    quotient.push_back({t, qc});
    for (const Term& qt : q.terms()) {
      const Monomial m = t * qt.m;
      auto it = rest.find(m);
      if (it == rest.end()) {
        rest.emplace(m, -qc * qt.c);
      } else {
        it->second -= qc * qt.c;
        if (it->second == 0) rest.erase(it);
      }
    }
  }
  return Poly::from_terms(std::move(quotient));
}

inline Poly exact_div(const Poly& p, const Poly& q) {
  std::optional<Poly> r = try_exact_div(p, q);
  if (!r) throw NotDivisible("exact_div: not divisible");
  return std::move(*r);
}

// Divisibility in the honest polynomial ring Z[L,M,x] (no Laurent units): in
// the Laurent ring every monomial divides everything, so "p has a factor M"
// must be asked here instead.  For a monomial divisor this is a componentwise
// exponent/coefficient test; otherwise it is exact division with a
// polynomial quotient.
inline bool divisible_in_poly_ring(const Poly& p, const Poly& f) {
  if (f.is_zero()) throw ZeroDenominator("divisible_in_poly_ring: zero divisor");
  if (p.is_zero()) return true;
  if (f.is_monomial()) {
    const Term& ft = f.leading_term();
    for (const Term& t : p.terms()) {
      for (int i = 0; i < kVarCount; ++i) {
        if (t.m.e[i] < ft.m.e[i]) return false;
      }
      if (t.c % ft.c != 0) return false;
    }
    return true;
  }
  const std::optional<Poly> q = try_exact_div(p, f);
  return q && q->is_polynomial();
}

// The coefficient of v^k in p, as a polynomial in the remaining variables.
inline Poly coefficient_in(const Poly& p, Var v, int k) {
  std::vector<Term> out;
  for (const Term& t : p.terms()) {
    if (t.m[v] == k) {
      Monomial m = t.m;
      m.e[static_cast<int>(v)] = 0;
      out.push_back({m, t.c});
    }
  }
  return Poly::from_terms(std::move(out));
}

// Plain substitution v := value; requires all exponents of v to be >= 0.
inline Poly substitute(const Poly& p, Var v, const Poly& value) {
  const int dmin = p.min_exponent_in(v);
  if (!p.is_zero() && dmin < 0) {
    throw NegativeExponent(std::string("substitute: negative exponent of ") +
                           kVarNames[static_cast<int>(v)]);
  }
  if (p.is_zero() || !p.depends_on(v)) return p;
  const int d = p.degree_in(v);
  // Horner
  Poly acc = coefficient_in(p, v, d);
  for (int k = d - 1; k >= 0; --k) {
    acc = acc * value + coefficient_in(p, v, k);
  }
  return acc;
}

// Substitution v := num/den without leaving the integers: returns (N, den^d)
// with p(v := num/den) = N / den^d, where d = deg_v(p).  Requires den != 0
// and all exponents of v nonnegative.
inline std::pair<Poly, Poly> substitute_rational(const Poly& p, Var v, const Poly& num,
                                                 const Poly& den) {
  if (den.is_zero()) throw ZeroDenominator("substitute_rational: zero denominator");
  if (!p.is_zero() && p.min_exponent_in(v) < 0) {
    throw NegativeExponent(std::string("substitute_rational: negative exponent of ") +
                           kVarNames[static_cast<int>(v)]);
  }
  if (p.is_zero() || !p.depends_on(v)) return {p, Poly::constant(1)};
  const int d = p.degree_in(v);
  std::vector<Poly> denpow(static_cast<std::size_t>(d) + 1);
  denpow[0] = Poly::constant(1);
  for (int k = 1; k <= d; ++k) denpow[static_cast<std::size_t>(k)] = denpow[static_cast<std::size_t>(k - 1)] * den;
  Poly acc = coefficient_in(p, v, d);
  for (int k = d - 1; k >= 0; --k) {
    acc = acc * num + coefficient_in(p, v, k) * denpow[static_cast<std::size_t>(d - k)];
  }
  return {acc, denpow[static_cast<std::size_t>(d)]};
}

struct RationalPoint {
  std::array<Rational, kVarCount> v{Rational(0), Rational(0), Rational(0)};
  static RationalPoint of(Rational L, Rational M, Rational x) {
    return RationalPoint{{std::move(L), std::move(M), std::move(x)}};
  }
};

inline Rational rational_pow(const Rational& base, int e) {
  if (e == 0) return Rational(1);
  const bool inv = e < 0;
  if (inv && base == 0) throw ZeroDenominator("eval: zero raised to a negative power");
  unsigned k = static_cast<unsigned>(inv ? -static_cast<long long>(e) : e);
  Int num = boost::multiprecision::numerator(base);
  Int den = boost::multiprecision::denominator(base);
  Int np = boost::multiprecision::pow(num, k);
  Int dp = boost::multiprecision::pow(den, k);
  if (inv) std::swap(np, dp);
  // The backend rejects negative denominators instead of normalizing them.
  if (dp < 0) {
    np = -np;
    dp = -dp;
  }
  return Rational(np, dp);
}

inline Rational eval(const Poly& p, const RationalPoint& pt) {
  Rational sum(0);
  for (const Term& t : p.terms()) {
    Rational val(t.c);
    for (int i = 0; i < kVarCount; ++i) {
      if (t.m.e[i] != 0) val *= rational_pow(pt.v[static_cast<std::size_t>(i)], t.m.e[i]);
    }
    sum += val;
  }
  return sum;
}

// Binomial coefficient with the out-of-range-is-zero convention used by the
// closed-form sums: C(a, b) = 0 whenever b < 0, a < 0, or b > a.
inline Int binom_or_zero(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  Int r = 1;
  for (long long i = 1; i <= b; ++i) {
    r *= Int(a - b + i);
    r /= Int(i);
  }
  return r;
}

// Univariate pseudo-division in v: repeatedly kills the top v-coefficient of
// p with the leading v-coefficient c of d.  Returns quotient, remainder and
// the premultiplication count, with c^lead_power * p = quotient*d + remainder.
struct PseudoDivision {
  Poly quotient;
  Poly remainder;
  int lead_power = 0;
};

inline PseudoDivision pseudo_divide(const Poly& p, const Poly& d, Var v) {
  if (d.is_zero()) throw ZeroDenominator("pseudo_divide: zero divisor");
  if (!d.depends_on(v)) throw BadInput("pseudo_divide: divisor free of the division variable");
  const int dd = d.degree_in(v);
  const Poly lc = coefficient_in(d, v, dd);
  Poly q;
  Poly r = p;
  int power = 0;
  while (!r.is_zero() && r.degree_in(v) >= dd) {
    const int k = r.degree_in(v);
    Monomial shift;
    shift.e[static_cast<int>(v)] = k - dd;
    const Poly top = mul_monomial(coefficient_in(r, v, k), shift, 1);
    q = q * lc + top;
    r = r * lc - top * d;
    ++power;
  }
  return {std::move(q), std::move(r), power};
}

}  // namespace apoly
