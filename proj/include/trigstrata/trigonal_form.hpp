#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trigstrata/bipoly.hpp"
#include "trigstrata/groebner.hpp"
#include "trigstrata/rational.hpp"
#include "trigstrata/unipoly.hpp"

namespace trigstrata {

// Coefficient vector of f = s y^3 + r(x) y^2 + p(x) y + q(x), the space of
// curves in |3 sigma_0| on the Hirzebruch surface F_{k+1}.  Every monomial
// x^i y^j satisfies i + (k+1) j <= 3k+3, which pins the lengths of r, p, q
// to k+2, 2k+3 and 3k+4.
struct TrigonalForm {
  int k = 1;
  Rat s;
  std::vector<Rat> r, p, q;

  friend bool operator==(const TrigonalForm& a, const TrigonalForm& b) {
    return a.k == b.k && a.s == b.s && a.r == b.r && a.p == b.p && a.q == b.q;
  }
  friend bool operator!=(const TrigonalForm& a, const TrigonalForm& b) { return !(a == b); }

  UniPoly r_poly() const { return UniPoly(r); }
  UniPoly p_poly() const { return UniPoly(p); }
  UniPoly q_poly() const { return UniPoly(q); }
};

inline TrigonalForm make_form(int k, Rat s, std::vector<Rat> r, std::vector<Rat> p,
                              std::vector<Rat> q) {
  if (k < 1) throw input_error("degree bound violation: k must be positive");
  if (static_cast<int>(r.size()) != k + 2 || static_cast<int>(p.size()) != 2 * k + 3 ||
      static_cast<int>(q.size()) != 3 * k + 4)
    throw input_error("degree bound violation");
  return TrigonalForm{k, std::move(s), std::move(r), std::move(p), std::move(q)};
}

inline TrigonalForm zero_form(int k) {
  return make_form(k, Rat(0), std::vector<Rat>(static_cast<size_t>(k) + 2, Rat(0)),
                   std::vector<Rat>(static_cast<size_t>(2 * k) + 3, Rat(0)),
                   std::vector<Rat>(static_cast<size_t>(3 * k) + 4, Rat(0)));
}

inline BiPoly to_bipoly(const TrigonalForm& f) {
  BiPoly b;
  b.add_term(0, 3, f.s);
  for (size_t i = 0; i < f.r.size(); ++i) b.add_term(static_cast<int>(i), 2, f.r[i]);
  for (size_t i = 0; i < f.p.size(); ++i) b.add_term(static_cast<int>(i), 1, f.p[i]);
  for (size_t i = 0; i < f.q.size(); ++i) b.add_term(static_cast<int>(i), 0, f.q[i]);
  return b;
}

// Reads a bivariate polynomial back into V^k; rejects any monomial outside
// the weighted-degree bound.
inline TrigonalForm form_from_bipoly(int k, const BiPoly& b) {
  TrigonalForm f = zero_form(k);
  for (const auto& [key, v] : b.terms()) {
    const auto [i, j] = key;
    if (i < 0 || j < 0 || j > 3 || i + (k + 1) * j > 3 * k + 3)
      throw domain_error("polynomial leaves the weighted-degree bound");
    if (j == 3) f.s = v;
    else if (j == 2) f.r[static_cast<size_t>(i)] = v;
    else if (j == 1) f.p[static_cast<size_t>(i)] = v;
    else f.q[static_cast<size_t>(i)] = v;
  }
  return f;
}

// F(u,v) = u^{3k+3} f(1/u, v/u^{k+1}): the equation of the curve in the
// chart containing the fiber at infinity L0 = {u = 0}.  The coefficient
// polynomials are degree-reversed: F = s v^3 + rr(u) v^2 + pp(u) v + qq(u)
// with rr(u) = sum r_i u^{k+1-i}, and so on.
inline BiPoly chart_at_infinity(const TrigonalForm& f) {
  const int k = f.k;
  BiPoly b;
  b.add_term(0, 3, f.s);
  for (size_t i = 0; i < f.r.size(); ++i)
    b.add_term(k + 1 - static_cast<int>(i), 2, f.r[i]);
  for (size_t i = 0; i < f.p.size(); ++i)
    b.add_term(2 * k + 2 - static_cast<int>(i), 1, f.p[i]);
  for (size_t i = 0; i < f.q.size(); ++i)
    b.add_term(3 * k + 3 - static_cast<int>(i), 0, f.q[i]);
  return b;
}

// Restriction of the curve to L0: c(v) = s v^3 + r_{k+1} v^2 + p_{2k+2} v
// + q_{3k+3}, equal to chart_at_infinity(f)(0, v).
inline UniPoly l0_restriction(const TrigonalForm& f) {
  return UniPoly(std::vector<Rat>{f.q.back(), f.p.back(), f.r.back(), f.s});
}

// d/du of the chart equation at u = 0, as a polynomial in v.
inline UniPoly l0_u_derivative(const TrigonalForm& f) {
  const int k = f.k;
  return UniPoly(std::vector<Rat>{f.q[static_cast<size_t>(3 * k + 2)],
                                  f.p[static_cast<size_t>(2 * k + 1)],
                                  f.r[static_cast<size_t>(k)]});
}

struct L0Profile {
  UniPoly restriction;
  int distinct_points = 0;        // in {1, 2, 3}
  std::vector<int> multiplicities;  // descending, summing to 3
};

inline L0Profile l0_profile(const TrigonalForm& f) {
  if (f.s == 0) throw domain_error("form degenerates on L0");
  const UniPoly c = l0_restriction(f);
  const int distinct = squarefree_part(c).degree();
  std::vector<int> mult;
  switch (distinct) {
    case 1: mult = {3}; break;
    case 2: mult = {2, 1}; break;
    case 3: mult = {1, 1, 1}; break;
    default: throw internal_error("cubic restriction with impossible root count");
  }
  return L0Profile{c, distinct, std::move(mult)};
}

enum class StratumKind { OnePoint, TwoPoint, ThreePoint };
enum class SpinParity { Even, Odd };

inline SpinParity spin_parity(int k) { return (k + 1) % 2 == 0 ? SpinParity::Even : SpinParity::Odd; }

// Classification target: the three strata of abelian differentials met by
// the strictly trigonal locus in genus 3k+1.
struct Stratum {
  StratumKind kind;
  int k;

  int genus() const { return 3 * k + 1; }
  std::vector<int> signature() const {
    switch (kind) {
      case StratumKind::OnePoint: return {6 * k};
      case StratumKind::TwoPoint: return {4 * k, 2 * k};
      case StratumKind::ThreePoint: return {2 * k, 2 * k, 2 * k};
    }
    return {};
  }
  SpinParity spin() const { return spin_parity(k); }

  friend bool operator==(const Stratum& a, const Stratum& b) {
    return a.kind == b.kind && a.k == b.k;
  }
};

// Smoothness of the curve on F_{k+1}: s != 0, the gradient never vanishes on
// the curve in the affine chart (a unit-ideal test), and no singular point
// lies on L0 (a univariate gcd test in the chart at infinity).  The curve
// misses the negative section whenever s != 0, so these two charts suffice.
inline bool is_regular(const TrigonalForm& f) {
  if (f.s == 0) return false;
  const UniPoly c = l0_restriction(f);
  UniPoly g = UniPoly::gcd(c, c.derivative());
  if (!g.is_constant()) {
    g = UniPoly::gcd(g, l0_u_derivative(f));
    if (!g.is_constant()) return false;
  }
  const BiPoly b = to_bipoly(f);
  return unit_ideal_2var({b, b.dx(), b.dy()});
}

inline Stratum classify(const TrigonalForm& f) {
  if (!is_regular(f)) throw domain_error("not in discriminant complement");
  const L0Profile prof = l0_profile(f);
  StratumKind kind;
  switch (prof.distinct_points) {
    case 1: kind = StratumKind::OnePoint; break;
    case 2: kind = StratumKind::TwoPoint; break;
    default: kind = StratumKind::ThreePoint; break;
  }
  return Stratum{kind, f.k};
}

// Affine parametrization of the scroll S_{2k,k-1}: coordinates
// (1, x, ..., x^{2k}, y, x y, ..., x^{k-1} y); 3k+1 entries.
inline std::vector<Rat> scroll_point(int k, const Rat& x, const Rat& y) {
  if (k < 1) throw input_error("k must be positive");
  std::vector<Rat> z;
  z.reserve(static_cast<size_t>(3 * k) + 1);
  Rat xp(1);
  for (int i = 0; i <= 2 * k; ++i) {
    z.push_back(xp);
    xp *= x;
  }
  Rat yp = y;
  for (int i = 0; i < k; ++i) {
    z.push_back(yp);
    yp *= x;
  }
  return z;
}

// Checks the rank-<2 condition cutting out the scroll: all 2x2 minors of
// the two-row coordinate matrix vanish.
inline bool scroll_rank_ok(const std::vector<Rat>& z) {
  const int len = static_cast<int>(z.size());
  if (len < 4 || (len - 1) % 3 != 0) throw input_error("coordinate vector has no scroll shape");
  const int k = (len - 1) / 3;
  const int n = 2 * k, m = k - 1;
  std::vector<Rat> top, bot;
  for (int i = 0; i <= n - 1; ++i) top.push_back(z[static_cast<size_t>(i)]);
  for (int i = n + 1; i <= n + m; ++i) top.push_back(z[static_cast<size_t>(i)]);
  for (int i = 1; i <= n; ++i) bot.push_back(z[static_cast<size_t>(i)]);
  for (int i = n + 2; i <= n + m + 1; ++i) bot.push_back(z[static_cast<size_t>(i)]);
  const size_t c = top.size();
  for (size_t a = 0; a < c; ++a)
    for (size_t b = a + 1; b < c; ++b)
      if (top[a] * bot[b] != top[b] * bot[a]) return false;
  return true;
}

struct Dims {
  int stratum_dim;       // dim H(2g-2) = 2g-1 = 6k+1
  int maroni_locus_dim;  // trigonal curves of maximal Maroni invariant
  int divisor_dim;       // those with a total ramification point
};

inline Dims dims(int k) {
  if (k < 1) throw domain_error("dims requires k >= 1");
  return Dims{6 * k + 1, 5 * k + 3, 5 * k + 2};
}

}  // namespace trigstrata
