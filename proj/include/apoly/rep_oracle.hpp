#pragma once

// Independent brute-force oracle tying P_2n to the knot group representation.
// The group is <s, t | s w t^-1 w^-1 = 1> with w = (t s^-1 t s^-1 t^-1 s t^-1 s)^n,
// represented by
//   rho(s) = [[M, 1], [0, M^-1]],
//   rho(t) = [[M, 0], [2 - M^2 - M^-2 - x, M^-1]],
// so rho is a representation exactly when rho(s)rho(w) = rho(w)rho(t).  Each
// entry of the defect rho(s)rho(w) - rho(w)rho(t), after clearing Laurent
// M-powers, must be divisible by P_2n(x, M): divisibility is certified by a
// zero pseudo-remainder in x, with the pseudo-division multiplier (a power of
// P_2n's leading x-coefficient) recorded, never assumed.  The longitude
// l = w w* (w* is w reversed, not inverted) must satisfy the eigenvalue
// relation Lambda = -M^-2 N1/N2 with Lambda = rho(l)_11, checked the same way
// as the cross-multiplied residual Lambda M^2 N2 + N1 reducing to zero mod
// P_2n.  Everything here recomputes the group side from scratch; the only
// shared ingredient with the main pipeline is P_2n itself.

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "apoly/errors.hpp"
#include "apoly/poly.hpp"
#include "apoly/riley_mednykh.hpp"

namespace apoly {

struct Mat2 {
  Poly a, b, c, d;  // row-major [[a, b], [c, d]]

  bool operator==(const Mat2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
};

inline Mat2 mat_identity() { return Mat2{Poly::constant(1), Poly{}, Poly{}, Poly::constant(1)}; }

inline Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
              x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

inline Poly mat_det(const Mat2& m) { return m.a * m.d - m.b * m.c; }

inline Poly mat_trace(const Mat2& m) { return m.a + m.d; }

// Adjugate = inverse for det-1 matrices; exact, no division.
inline Mat2 mat_adjugate(const Mat2& m) { return Mat2{m.d, -m.b, -m.c, m.a}; }

enum class Letter { s, s_inv, t, t_inv };

using GroupWord = std::vector<Letter>;

inline Letter letter_inverse(Letter g) {
  switch (g) {
    case Letter::s: return Letter::s_inv;
    case Letter::s_inv: return Letter::s;
    case Letter::t: return Letter::t_inv;
    case Letter::t_inv: return Letter::t;
  }
  throw BadInput("letter_inverse: unknown letter");
}

// w* — the word read right to left, letters NOT inverted.
inline GroupWord word_reversed(GroupWord w) {
  std::reverse(w.begin(), w.end());
  return w;
}

// w^-1 — reversed and letterwise inverted.
inline GroupWord word_inverse(const GroupWord& w) {
  GroupWord inv;
  inv.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) inv.push_back(letter_inverse(*it));
  return inv;
}

inline GroupWord word_pow(const GroupWord& base, int n) {
  const GroupWord& unit = n >= 0 ? base : word_inverse(base);
  GroupWord out;
  const int k = n >= 0 ? n : -n;
  out.reserve(base.size() * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) out.insert(out.end(), unit.begin(), unit.end());
  return out;
}

// w = (t s^-1 t s^-1 t^-1 s t^-1 s)^n; length 8|n|.
inline GroupWord word_w(int n) {
  static const GroupWord base{Letter::t,     Letter::s_inv, Letter::t, Letter::s_inv,
                              Letter::t_inv, Letter::s,     Letter::t_inv, Letter::s};
  return word_pow(base, n);
}

inline const Mat2& rho(Letter g) {
  static const Mat2 s{Poly::variable(Var::M), Poly::constant(1), Poly{},
                      Poly::monomial(Monomial{{0, -1, 0}}, 1)};
  static const Mat2 t{Poly::variable(Var::M), Poly{},
                      Poly::from_terms({{{{0, 0, 0}}, 2},
                                        {{{0, 2, 0}}, -1},
                                        {{{0, -2, 0}}, -1},
                                        {{{0, 0, 1}}, -1}}),
                      Poly::monomial(Monomial{{0, -1, 0}}, 1)};
  static const Mat2 s_inv = mat_adjugate(s);
  static const Mat2 t_inv = mat_adjugate(t);
  switch (g) {
    case Letter::s: return s;
    case Letter::s_inv: return s_inv;
    case Letter::t: return t;
    case Letter::t_inv: return t_inv;
  }
  throw BadInput("rho: unknown letter");
}

inline Mat2 eval_word(const GroupWord& w) {
  Mat2 acc = mat_identity();
  for (Letter g : w) acc = mat_mul(acc, rho(g));
  return acc;
}

inline Mat2 relator_defect(int n) {
  if (n == 0) throw BadInput("relator_defect: n must be nonzero");
  const Mat2 w = eval_word(word_w(n));
  const Mat2 lhs = mat_mul(rho(Letter::s), w);
  const Mat2 rhs = mat_mul(w, rho(Letter::t));
  return Mat2{lhs.a - rhs.a, lhs.b - rhs.b, lhs.c - rhs.c, lhs.d - rhs.d};
}

// Certificate of one entry's divisibility by P_2n: the entry times M^m_cleared
// times lc(P_2n)^lead_power equals quotient * P_2n + residual with residual
// zero on success.
struct EntryDivisibility {
  int m_cleared = 0;
  int lead_power = 0;
  bool pass = false;
  Poly quotient;
  Poly residual;
  Poly cleared;  // the M-cleared entry that was divided
};

inline EntryDivisibility divide_by_p2n(const Poly& entry, const Poly& p2n) {
  EntryDivisibility r;
  if (entry.is_zero()) {
    r.pass = true;
    return r;
  }
  const int min_m = entry.min_exponent_in(Var::M);
  r.m_cleared = min_m < 0 ? -min_m : 0;
  r.cleared = mul_monomial(entry, Monomial{{0, r.m_cleared, 0}}, 1);
  PseudoDivision pd = pseudo_divide(r.cleared, p2n, Var::x);
  r.lead_power = pd.lead_power;
  r.quotient = std::move(pd.quotient);
  r.residual = std::move(pd.remainder);
  r.pass = r.residual.is_zero();
  return r;
}

struct RelatorReport {
  int n = 0;
  bool pass = false;
  std::array<EntryDivisibility, 4> entries;  // row-major over the defect matrix
};

inline RelatorReport relator_report(int n) {
  const Poly p2n = rm_recursive(n).poly;
  const Mat2 defect = relator_defect(n);
  RelatorReport rep;
  rep.n = n;
  rep.pass = true;
  const Poly* es[4] = {&defect.a, &defect.b, &defect.c, &defect.d};
  for (int i = 0; i < 4; ++i) {
    rep.entries[static_cast<std::size_t>(i)] = divide_by_p2n(*es[i], p2n);
    rep.pass = rep.pass && rep.entries[static_cast<std::size_t>(i)].pass;
  }
  return rep;
}

inline RelatorReport check_relator(int n) {
  RelatorReport rep = relator_report(n);
  if (!rep.pass) {
    throw DivisibilityFailure("relator defect entry not divisible by P_" +
                              std::to_string(2 * n));
  }
  return rep;
}

struct LongitudeReport {
  int n = 0;
  bool pass = false;
  bool det_ok = false;
  EntryDivisibility reduction;
  Poly lambda;  // rho(w w*)_11
};

inline LongitudeReport longitude_report(int n) {
  if (n == 0) throw BadInput("longitude_report: n must be nonzero");
  const GroupWord w = word_w(n);
  GroupWord l = w;
  const GroupWord wr = word_reversed(w);
  l.insert(l.end(), wr.begin(), wr.end());
  const Mat2 rl = eval_word(l);

  // N1 = M^-4 - M^-2 + (2M^-2 + M^2 - 1)x + x^2
  const Poly n1 = Poly::from_terms({{{{0, -4, 0}}, 1},
                                    {{{0, -2, 0}}, -1},
                                    {{{0, -2, 1}}, 2},
                                    {{{0, 2, 1}}, 1},
                                    {{{0, 0, 1}}, -1},
                                    {{{0, 0, 2}}, 1}});
  // N2 = M^4 - M^2 + (M^-2 + 2M^2 - 1)x + x^2
  const Poly n2 = Poly::from_terms({{{{0, 4, 0}}, 1},
                                    {{{0, 2, 0}}, -1},
                                    {{{0, -2, 1}}, 1},
                                    {{{0, 2, 1}}, 2},
                                    {{{0, 0, 1}}, -1},
                                    {{{0, 0, 2}}, 1}});
  const Poly relation =
      rl.a * Poly::monomial(Monomial{{0, 2, 0}}, 1) * n2 + n1;

  LongitudeReport rep;
  rep.n = n;
  rep.lambda = rl.a;
  rep.det_ok = mat_det(rl) == Poly::constant(1);
  rep.reduction = divide_by_p2n(relation, rm_recursive(n).poly);
  rep.pass = rep.det_ok && rep.reduction.pass;
  return rep;
}

inline LongitudeReport check_longitude(int n) {
  LongitudeReport rep = longitude_report(n);
  if (!rep.pass) {
    throw ReductionFailure("longitude relation does not reduce to zero mod P_" +
                           std::to_string(2 * n));
  }
  return rep;
}

}  // namespace apoly
