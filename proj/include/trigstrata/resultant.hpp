#pragma once

#include <utility>
#include <vector>

#include "trigstrata/bipoly.hpp"
#include "trigstrata/unipoly.hpp"

namespace trigstrata {

namespace detail {

// Polynomials in y with UniPoly (in x) coefficients, dense, index = y-degree.
using YPoly = std::vector<UniPoly>;

inline void ytrim(YPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}
inline int ydeg(const YPoly& a) { return static_cast<int>(a.size()) - 1; }

inline YPoly yp_from(const BiPoly& f) {
  YPoly a = f.y_coeffs();
  ytrim(a);
  return a;
}

inline YPoly yp_scale(const YPoly& a, const UniPoly& c) {
  YPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  ytrim(r);
  return r;
}

inline YPoly yp_exact_div(const YPoly& a, const UniPoly& c) {
  YPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i].exact_div(c);
  ytrim(r);
  return r;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + rem.
inline YPoly yp_prem(YPoly a, const YPoly& b) {
  const int db = ydeg(b);
  const UniPoly lb = b.back();
  int reps = ydeg(a) - db + 1;
  while (ydeg(a) >= db && !a.empty()) {
    const UniPoly la = a.back();
    const int shift = ydeg(a) - db;
    YPoly next(a.size() - 1);
    for (int i = 0; i < ydeg(a); ++i) {
      UniPoly t = lb * a[static_cast<size_t>(i)];
      if (i - shift >= 0 && i - shift <= db) t = t - la * b[static_cast<size_t>(i - shift)];
      next[static_cast<size_t>(i)] = std::move(t);
    }
    a = std::move(next);
    ytrim(a);
    --reps;
  }
  // The loop may terminate early on degree drops; pad the factor.
  for (; reps > 0; --reps) a = yp_scale(a, lb);
  return a;
}

}  // namespace detail

// Resultant of f and g with respect to y, an element of Q[x].  Computed by
// the subresultant pseudo-remainder sequence; the sign matches the Sylvester
// determinant with the f-coefficient rows on top.
inline UniPoly resultant_y(const BiPoly& f, const BiPoly& g) {
  using namespace detail;
  YPoly a = yp_from(f), b = yp_from(g);
  if (ydeg(a) < 1 || ydeg(b) < 1) throw domain_error("resultant_y: input constant in y");
  int sign = 1;
  if (ydeg(a) < ydeg(b)) {
    if ((ydeg(a) & 1) && (ydeg(b) & 1)) sign = -sign;
    std::swap(a, b);
  }
  UniPoly gg = UniPoly::one(), hh = UniPoly::one();
  while (true) {
    const int da = ydeg(a), db = ydeg(b);
    const int delta = da - db;
    if ((da & 1) && (db & 1)) sign = -sign;
    YPoly r = yp_prem(a, b);
    a = std::move(b);
    b = yp_exact_div(r, gg * hh.pow(static_cast<unsigned>(delta)));
    gg = a.back();
    if (delta > 0) hh = gg.pow(static_cast<unsigned>(delta)).exact_div(hh.pow(static_cast<unsigned>(delta - 1)));
    if (b.empty()) return UniPoly();  // common factor of positive y-degree
    if (ydeg(b) == 0) break;
  }
  const int da = ydeg(a);
  UniPoly res = b[0].pow(static_cast<unsigned>(da)).exact_div(hh.pow(static_cast<unsigned>(da - 1)));
  if (sign < 0) res = -res;
  return res;
}

}  // namespace trigstrata
