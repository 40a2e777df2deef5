#pragma once

// Hand-transcribed reference polynomials: the Appendix A identity data
// (a, b, f, g, h, h1), the Appendix B A-polynomials A_2 and A_4, and the
// Appendix C substitution fractions.  Each display is entered bracket by
// bracket exactly as published; any multiplications shown in the source
// (prefactors like 2L^4(...) or factored forms like (L-1)(M^2-1)^3...) are
// performed by Poly arithmetic here rather than expanded by hand, so the
// transcription surface stays minimal and auditable.  The golden JSON files
// under goldens/ are generated from these builders and locked by hash.

#include <vector>

#include "apoly/poly.hpp"
#include "apoly/quad_ext.hpp"

namespace apoly::refdata {

namespace build {

// polynomial in M alone: (coeff, eM) pairs
inline Poly m(std::initializer_list<std::array<long long, 2>> ts) {
  std::vector<Term> out;
  for (const auto& t : ts) {
    out.push_back({Monomial{{0, static_cast<std::int32_t>(t[1]), 0}}, Int(t[0])});
  }
  return Poly::from_terms(std::move(out));
}

// multiply a block by c * L^eL * M^eM
inline Poly scaled(long long c, int eL, int eM, const Poly& block) {
  return mul_monomial(block, Monomial{{eL, eM, 0}}, Int(c));
}

}  // namespace build

// ---- Appendix A ----

// a = 2L^4(M^12+M^8) + L^3(-3M^12+10M^10+5M^8+4M^6-M^4+2M^2-1) + 2(M^4+1)
//   + 2L^2(M^12-4M^10+5M^8+8M^6+5M^4-4M^2+1) - L(M^12-2M^10+M^8-4M^6-5M^4-10M^2+3)
inline const Poly& appendix_a_a() {
  using namespace build;
  static const Poly p =
      scaled(2, 4, 0, m({{1, 12}, {1, 8}})) +
      scaled(1, 3, 0, m({{-3, 12}, {10, 10}, {5, 8}, {4, 6}, {-1, 4}, {2, 2}, {-1, 0}})) +
      scaled(2, 0, 0, m({{1, 4}, {1, 0}})) +
      scaled(2, 2, 0, m({{1, 12}, {-4, 10}, {5, 8}, {8, 6}, {5, 4}, {-4, 2}, {1, 0}})) +
      scaled(-1, 1, 0, m({{1, 12}, {-2, 10}, {1, 8}, {-4, 6}, {-5, 4}, {-10, 2}, {3, 0}}));
  return p;
}

// b = (L-1)(M-1)^3(M+1)^3(M^2+1)^2
inline const Poly& appendix_a_b() {
  static const Poly p = [] {
    const Poly lm1 = Poly::variable(Var::L) - Poly::constant(1);
    const Poly mm1 = Poly::variable(Var::M) - Poly::constant(1);
    const Poly mp1 = Poly::variable(Var::M) + Poly::constant(1);
    const Poly m2p1 = build::m({{1, 2}, {1, 0}});
    return lm1 * pow(mm1, 3) * pow(mp1, 3) * pow(m2p1, 2);
  }();
  return p;
}

// f, by M-power blocks:
// f = -L^3+3L^2-3L+1 + (6L^3-8L^2+2L)M^14 + (6L^3+8L^2+2L)M^10 + (2L^3+8L^2+6L)M^6
//   + (-2L^3+2L^2+2L+2)M^4 + (2L^3-8L^2+6L)M^2 + (L^4-3L^3+3L^2-L)M^16
//   + (2L^4+2L^3+2L^2-2L)M^12 + (L^4+4L^3+14L^2+4L+1)M^8
inline const Poly& appendix_a_f() {
  static const Poly p = [] {
    auto l = [](std::initializer_list<std::array<long long, 2>> ts) {
      std::vector<Term> out;
      for (const auto& t : ts) {
        out.push_back({Monomial{{static_cast<std::int32_t>(t[1]), 0, 0}}, Int(t[0])});
      }
      return Poly::from_terms(std::move(out));
    };
    auto mshift = [](const Poly& q, int eM) {
      return mul_monomial(q, Monomial{{0, eM, 0}}, 1);
    };
    return l({{-1, 3}, {3, 2}, {-3, 1}, {1, 0}}) +
           mshift(l({{6, 3}, {-8, 2}, {2, 1}}), 14) +
           mshift(l({{6, 3}, {8, 2}, {2, 1}}), 10) +
           mshift(l({{2, 3}, {8, 2}, {6, 1}}), 6) +
           mshift(l({{-2, 3}, {2, 2}, {2, 1}, {2, 0}}), 4) +
           mshift(l({{2, 3}, {-8, 2}, {6, 1}}), 2) +
           mshift(l({{1, 4}, {-3, 3}, {3, 2}, {-1, 1}}), 16) +
           mshift(l({{2, 4}, {2, 3}, {2, 2}, {-2, 1}}), 12) +
           mshift(l({{1, 4}, {4, 3}, {14, 2}, {4, 1}, {1, 0}}), 8);
  }();
  return p;
}

// g, by L-power blocks (prefactors applied by arithmetic):
inline const Poly& appendix_a_g() {
  using namespace build;
  static const Poly p =
      scaled(2, 8, 16, m({{1, 8}, {2, 4}, {1, 0}})) +  // 2 L^8 (M^4+1)^2 M^16
      scaled(2, 7, 8, m({{-3, 16}, {10, 14}, {2, 12}, {14, 10}, {4, 8}, {6, 6},
                         {-2, 4}, {2, 2}, {-1, 0}})) +
      scaled(1, 6, 0, m({{11, 24}, {-52, 22}, {54, 20}, {76, 18}, {91, 16}, {-8, 14},
                         {68, 12}, {-8, 10}, {-7, 8}, {-4, 6}, {6, 4}, {-4, 2}, {1, 0}})) +
      scaled(-2, 5, 0, m({{7, 24}, {-34, 22}, {52, 20}, {18, 18}, {-106, 16}, {-178, 14},
                          {54, 12}, {-22, 10}, {-31, 8}, {4, 6}, {22, 4}, {-12, 2}, {2, 0}})) +
      scaled(2, 4, 0, m({{5, 24}, {-28, 22}, {44, 20}, {4, 18}, {-71, 16}, {24, 14},
                         {324, 12}, {24, 10}, {-71, 8}, {4, 6}, {44, 4}, {-28, 2}, {5, 0}})) +
      scaled(-2, 3, 0, m({{2, 24}, {-12, 22}, {22, 20}, {4, 18}, {-31, 16}, {-22, 14},
                          {54, 12}, {-178, 10}, {-106, 8}, {18, 6}, {52, 4}, {-34, 2}, {7, 0}})) +
      scaled(1, 2, 0, m({{1, 24}, {-4, 22}, {6, 20}, {-4, 18}, {-7, 16}, {-8, 14},
                         {68, 12}, {-8, 10}, {91, 8}, {76, 6}, {54, 4}, {-52, 2}, {11, 0}})) +
      scaled(1, 1, 0, m({{-2, 16}, {4, 14}, {-4, 12}, {12, 10}, {8, 8}, {28, 6},
                         {4, 4}, {20, 2}, {-6, 0}})) +
      scaled(2, 0, 0, m({{1, 8}, {2, 4}, {1, 0}}));  // 2 (M^4+1)^2
  return p;
}

// h1, by L-power blocks:
inline const Poly& appendix_a_h1() {
  using namespace build;
  static const Poly p =
      scaled(1, 4, 0, m({{2, 12}, {2, 8}})) +
      scaled(1, 3, 0, m({{-3, 12}, {10, 10}, {5, 8}, {4, 6}, {-1, 4}, {2, 2}, {-1, 0}})) +
      scaled(1, 2, 0, m({{2, 12}, {-8, 10}, {10, 8}, {16, 6}, {10, 4}, {-8, 2}, {2, 0}})) +
      scaled(1, 1, 0, m({{-1, 12}, {2, 10}, {-1, 8}, {4, 6}, {5, 4}, {10, 2}, {-3, 0}})) +
      build::m({{2, 4}, {2, 0}});
  return p;
}

// h = L (L-1) (M^2-1)^3 (M^2+1)^2 h1
inline const Poly& appendix_a_h() {
  static const Poly p = [] {
    const Poly lm1 = Poly::variable(Var::L) - Poly::constant(1);
    const Poly m2m1 = build::m({{1, 2}, {-1, 0}});
    const Poly m2p1 = build::m({{1, 2}, {1, 0}});
    return Poly::variable(Var::L) * lm1 * pow(m2m1, 3) * pow(m2p1, 2) * appendix_a_h1();
  }();
  return p;
}

// ---- Appendix B ----

inline const Poly& appendix_b_a2() {
  using namespace build;
  static const Poly p =
      scaled(1, 4, 8, m({{1, 0}})) +
      scaled(1, 3, 0, m({{-2, 12}, {3, 10}, {3, 8}, {1, 2}, {-1, 0}})) +
      scaled(1, 2, 0, m({{1, 16}, {-3, 14}, {-1, 12}, {3, 10}, {6, 8}, {3, 6},
                         {-1, 4}, {-3, 2}, {1, 0}})) +
      scaled(1, 1, 0, m({{-1, 16}, {1, 14}, {3, 8}, {3, 6}, {-2, 4}})) +
      m({{1, 8}});
  return p;
}

inline const Poly& appendix_b_a4() {
  using namespace build;
  static const Poly p = [] {
    // A_4 is palindromic in L: the L^7/L, L^6/L^2 and L^5/L^3 blocks coincide.
    const Poly c7 = m({{-2, 24}, {3, 22}, {-2, 20}, {1, 18}, {8, 16}, {1, 14},
                       {-2, 12}, {3, 10}, {-2, 8}});
    const Poly c6 = m({{1, 32}, {-3, 30}, {3, 28}, {-1, 26}, {-4, 24}, {-9, 22},
                       {15, 20}, {13, 18}, {-2, 16}, {13, 14}, {15, 12}, {-9, 10},
                       {-4, 8}, {-1, 6}, {3, 4}, {-3, 2}, {1, 0}});
    const Poly c5 = m({{-4, 32}, {16, 30}, {-14, 28}, {-21, 26}, {24, 24}, {16, 22},
                       {-56, 20}, {17, 18}, {100, 16}, {17, 14}, {-56, 12}, {16, 10},
                       {24, 8}, {-21, 6}, {-14, 4}, {16, 2}, {-4, 0}});
    const Poly c4 = m({{6, 32}, {-26, 30}, {22, 28}, {40, 26}, {-59, 24}, {-64, 22},
                       {82, 20}, {50, 18}, {-32, 16}, {50, 14}, {82, 12}, {-64, 10},
                       {-59, 8}, {40, 6}, {22, 4}, {-26, 2}, {6, 0}});
    return scaled(1, 8, 16, m({{1, 0}})) + scaled(1, 7, 0, c7) + scaled(1, 6, 0, c6) +
           scaled(1, 5, 0, c5) + scaled(1, 4, 0, c4) + scaled(1, 3, 0, c5) +
           scaled(1, 2, 0, c6) + scaled(1, 1, 0, c7) + m({{1, 16}});
  }();
  return p;
}

// ---- Appendix C ----
// Each fraction is published as (2(LM^2+1))^(-k/2) * [bracket], where the
// bracket is a QuadElem (z-part printed with the upper sign of the +u row).
// k = 4 for p_2 (an integer power), k = 3 for p_-2, k = 7 for p_-4.

inline const BracketForm& appendix_c_p2() {
  using namespace build;
  static const BracketForm v = [] {
    // z-part: -L (M^4-1)^2 (L+M^2)
    const Poly zpart = scaled(-1, 1, 0, Poly::constant(1)) *
                       pow(m({{1, 4}, {-1, 0}}), 2) *
                       (Poly::variable(Var::L) + m({{1, 2}}));
    const Poly apart =
        scaled(2, 4, 8, m({{1, 0}})) +
        scaled(1, 3, 0, m({{-2, 12}, {3, 10}, {3, 8}, {4, 6}, {1, 2}, {-1, 0}})) +
        scaled(1, 2, 0, m({{1, 12}, {-6, 10}, {5, 8}, {12, 6}, {5, 4}, {-6, 2}, {1, 0}})) +
        scaled(1, 1, 0, m({{-1, 12}, {1, 10}, {4, 6}, {3, 4}, {3, 2}, {-2, 0}})) +
        m({{2, 4}});
    return BracketForm{QuadElem{apart, zpart}, 4};
  }();
  return v;
}

inline const BracketForm& appendix_c_pm2() {
  using namespace build;
  static const BracketForm v = [] {
    // z-part: +L (M^4-1)^2
    const Poly zpart = scaled(1, 1, 0, pow(m({{1, 4}, {-1, 0}}), 2));
    const Poly apart =
        scaled(2, 3, 10, m({{1, 0}})) +
        scaled(-1, 2, 0, m({{1, 10}, {-5, 8}, {-2, 6}, {1, 2}, {-1, 0}})) +
        scaled(1, 1, 0, m({{1, 10}, {-1, 8}, {2, 4}, {5, 2}, {-1, 0}})) +
        Poly::constant(2);
    return BracketForm{QuadElem{apart, zpart}, 3};
  }();
  return v;
}

inline const BracketForm& appendix_c_pm4() {
  using namespace build;
  static const BracketForm v = [] {
    // z-part: +L (M^4-1)^2 * (inner 5-block bracket)
    const Poly inner =
        scaled(1, 4, 8, m({{2, 4}, {-1, 2}, {1, 0}})) +
        scaled(1, 3, 0, m({{-3, 12}, {9, 10}, {1, 8}, {1, 6}, {-1, 4}, {2, 2}, {-1, 0}})) +
        scaled(1, 2, 0, m({{2, 12}, {-8, 10}, {7, 8}, {10, 6}, {7, 4}, {-8, 2}, {2, 0}})) +
        scaled(1, 1, 0, m({{-1, 12}, {2, 10}, {-1, 8}, {1, 6}, {1, 4}, {9, 2}, {-3, 0}})) +
        m({{1, 4}, {-1, 2}, {2, 0}});
    const Poly zpart = scaled(1, 1, 0, pow(m({{1, 4}, {-1, 0}}), 2)) * inner;
    const Poly apart =
        scaled(2, 7, 22, m({{1, 0}})) +
        scaled(1, 6, 8, m({{-4, 14}, {15, 12}, {6, 10}, {-5, 8}, {3, 4}, {-2, 2}, {1, 0}})) +
        scaled(1, 5, 0, m({{7, 22}, {-25, 20}, {22, 18}, {51, 16}, {-1, 14}, {-32, 12},
                           {13, 10}, {10, 8}, {-2, 6}, {-3, 4}, {3, 2}, {-1, 0}})) +
        scaled(1, 4, 0, m({{-7, 22}, {28, 20}, {-21, 18}, {-31, 16}, {62, 14}, {82, 12},
                           {-50, 10}, {-30, 8}, {33, 6}, {18, 4}, {-17, 2}, {3, 0}})) +
        scaled(1, 3, 0, m({{3, 22}, {-17, 20}, {18, 18}, {33, 16}, {-30, 14}, {-50, 12},
                           {82, 10}, {62, 8}, {-31, 6}, {-21, 4}, {28, 2}, {-7, 0}})) +
        scaled(-1, 2, 0, m({{1, 22}, {-3, 20}, {3, 18}, {2, 16}, {-10, 14}, {-13, 12},
                            {32, 10}, {1, 8}, {-51, 6}, {-22, 4}, {25, 2}, {-7, 0}})) +
        scaled(1, 1, 0, m({{1, 14}, {-2, 12}, {3, 10}, {-5, 6}, {6, 4}, {15, 2}, {-4, 0}})) +
        Poly::constant(2);
    return BracketForm{QuadElem{apart, zpart}, 7};
  }();
  return v;
}

}  // namespace apoly::refdata
