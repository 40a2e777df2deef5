#pragma once

// Human-facing renderings of polynomials.  Terms are ordered by descending
// L-degree, then descending M-degree, then descending x-degree — the order the
// A-polynomial tables are written in, which makes text output diffable by eye.
// JSON remains the canonical machine format (json_io.hpp); text and LaTeX are
// derived, one-way renderings.

#include <algorithm>
#include <string>
#include <vector>

#include "apoly/poly.hpp"

namespace apoly {

inline std::vector<Term> render_order(const Poly& p) {
  std::vector<Term> ts(p.terms().begin(), p.terms().end());
  std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) {
    for (int i = 0; i < kVarCount; ++i) {
      if (a.m.e[i] != b.m.e[i]) return a.m.e[i] > b.m.e[i];
    }
    return false;
  });
  return ts;
}

namespace rdetail {

// One term with the sign stripped; `braces` selects LaTeX-style exponents.
inline std::string term_string(const Term& t, bool braces) {
  const Int mag = t.c < 0 ? Int(-t.c) : t.c;
  std::vector<std::string> factors;
  if (mag != 1 || t.m.is_unit()) factors.push_back(mag.str());
  for (int i = 0; i < kVarCount; ++i) {
    const int e = t.m.e[i];
    if (e == 0) continue;
    std::string f = kVarNames[i];
    if (e != 1) {
      f += '^';
      if (braces) {
        f += '{';
        f += std::to_string(e);
        f += '}';
      } else {
        f += std::to_string(e);
      }
    }
    factors.push_back(std::move(f));
  }
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += ' ';
    out += factors[i];
  }
  return out;
}

inline std::string render(const Poly& p, bool braces) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : render_order(p)) {
    if (first) {
      if (t.c < 0) out += '-';
      first = false;
    } else {
      out += t.c < 0 ? " - " : " + ";
    }
    out += term_string(t, braces);
  }
  return out;
}

}  // namespace rdetail

inline std::string render_text(const Poly& p) { return rdetail::render(p, false); }
inline std::string render_latex(const Poly& p) { return rdetail::render(p, true); }

}  // namespace apoly
