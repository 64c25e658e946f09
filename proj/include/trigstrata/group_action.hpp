#pragma once

#include <utility>
#include <vector>

#include "trigstrata/bipoly.hpp"
#include "trigstrata/intmatrix.hpp"
#include "trigstrata/rational.hpp"
#include "trigstrata/trigonal_form.hpp"

namespace trigstrata {

// Coordinate change x -> a x + a0, y -> b y + b_{k+1} x^{k+1} + ... + b_0,
// the group G acting on V^k.
struct GElement {
  int k = 1;
  Rat a, a0, b;
  std::vector<Rat> bcoef;  // b_0 .. b_{k+1}

  UniPoly shift_poly() const { return UniPoly(bcoef); }

  friend bool operator==(const GElement& x, const GElement& y) {
    return x.k == y.k && x.a == y.a && x.a0 == y.a0 && x.b == y.b && x.bcoef == y.bcoef;
  }
};

inline GElement make_gelement(int k, Rat a, Rat a0, Rat b, std::vector<Rat> bcoef) {
  if (k < 1) throw input_error("k must be positive");
  if (a == 0 || b == 0) throw input_error("group element requires a != 0 and b != 0");
  if (static_cast<int>(bcoef.size()) != k + 2)
    throw input_error("shift coefficient list must have length k+2");
  return GElement{k, std::move(a), std::move(a0), std::move(b), std::move(bcoef)};
}

inline GElement identity_element(int k) {
  return make_gelement(k, Rat(1), Rat(0), Rat(1),
                       std::vector<Rat>(static_cast<size_t>(k) + 2, Rat(0)));
}

// Substitute the coordinate change into f and re-read the coefficients.
// The weighted-degree bound is preserved by every element of G.
inline TrigonalForm act(const GElement& g, const TrigonalForm& f) {
  if (g.k != f.k) throw input_error("group element and form disagree on k");
  BiPoly xs;
  xs.add_term(1, 0, g.a);
  xs.add_term(0, 0, g.a0);
  BiPoly ys;
  ys.add_term(0, 1, g.b);
  for (size_t i = 0; i < g.bcoef.size(); ++i) ys.add_term(static_cast<int>(i), 0, g.bcoef[i]);
  const BiPoly out = to_bipoly(f).substitute(xs, ys);
  try {
    return form_from_bipoly(f.k, out);
  } catch (const domain_error&) {
    throw internal_error("group action left V^k");
  }
}

// Composition law fixed by act(compose(g1,g2), f) == act(g1, act(g2, f)).
inline GElement compose(const GElement& g1, const GElement& g2) {
  if (g1.k != g2.k) throw input_error("composing group elements with different k");
  const UniPoly b1 = g1.shift_poly();
  const UniPoly b2 = g2.shift_poly();
  const UniPoly shifted = g2.b * b1 + b2.compose_linear(g1.a, g1.a0);
  std::vector<Rat> bc(static_cast<size_t>(g1.k) + 2, Rat(0));
  for (int i = 0; i <= shifted.degree(); ++i) bc[static_cast<size_t>(i)] = shifted.coeff(i);
  return make_gelement(g1.k, g1.a * g2.a, g2.a * g1.a0 + g2.a0, g1.b * g2.b, std::move(bc));
}

// A point of the three-torus; the fields read (lambda, mu, rho) in the
// weight convention and (a, b, c) in the monomial convention.
struct TorusElement {
  Rat lambda, mu, rho;
};

inline TorusElement make_torus(Rat lambda, Rat mu, Rat rho) {
  if (lambda == 0 || mu == 0 || rho == 0) throw input_error("torus coordinates must be nonzero");
  return TorusElement{std::move(lambda), std::move(mu), std::move(rho)};
}

enum class TorusConvention {
  ABC,  // x^i y^j -> a^i b^j c x^i y^j
  LMR,  // x^i y^j -> l^(6k+4-2i-2kj-j) m^(3k+3-i-kj-j) r^(9k+6-3i-3kj-2j) x^i y^j
};

inline TrigonalForm act_torus(const TorusElement& t, const TrigonalForm& f,
                              TorusConvention conv) {
  const int k = f.k;
  auto factor = [&](int i, int j) -> Rat {
    if (conv == TorusConvention::ABC)
      return rat_pow(t.lambda, static_cast<long long>(i)) *
             rat_pow(t.mu, static_cast<long long>(j)) * t.rho;
    const long long el = 6LL * k + 4 - 2 * i - 2LL * k * j - j;
    const long long em = 3LL * k + 3 - i - 1LL * k * j - j;
    const long long er = 9LL * k + 6 - 3 * i - 3LL * k * j - 2 * j;
    return rat_pow(t.lambda, el) * rat_pow(t.mu, em) * rat_pow(t.rho, er);
  };
  TrigonalForm out = f;
  out.s *= factor(0, 3);
  for (size_t i = 0; i < out.r.size(); ++i) out.r[i] *= factor(static_cast<int>(i), 2);
  for (size_t i = 0; i < out.p.size(); ++i) out.p[i] *= factor(static_cast<int>(i), 1);
  for (size_t i = 0; i < out.q.size(); ++i) out.q[i] *= factor(static_cast<int>(i), 0);
  return out;
}

// Exponent matrix translating (lambda, mu, rho) powers into (a, b, c)
// powers; unimodular for every k, which makes the two conventions two
// coordinate systems on the same torus.
inline IntMatrix torus_translate(int k) {
  if (k < 1) throw input_error("k must be positive");
  IntMatrix m(3, 3);
  m.at(0, 0) = -2;            m.at(0, 1) = -1;          m.at(0, 2) = -3;
  m.at(1, 0) = -(2 * k + 1);  m.at(1, 1) = -(k + 1);    m.at(1, 2) = -(3 * k + 2);
  m.at(2, 0) = 6 * k + 4;     m.at(2, 1) = 3 * k + 3;   m.at(2, 2) = 9 * k + 6;
  const Int d = det(m);
  if (d != 1 && d != -1) throw internal_error("torus exponent matrix is not unimodular");
  return m;
}

inline TorusElement abc_from_lmr(int k, const TorusElement& t) {
  const IntMatrix m = torus_translate(k);
  auto row = [&](int i) {
    return rat_pow(t.lambda, m.at(i, 0)) * rat_pow(t.mu, m.at(i, 1)) * rat_pow(t.rho, m.at(i, 2));
  };
  return TorusElement{row(0), row(1), row(2)};
}

// The (lambda, mu, rho) coordinates of plain scalar multiplication by c,
// i.e. the torus element mapping to (a, b, c) = (1, 1, c).  Exists with
// integer exponents because the translation matrix is unimodular.
inline TorusElement lmr_for_scalar(int k, const Rat& c) {
  if (c == 0) throw input_error("scalar must be nonzero");
  const IntMatrix m = torus_translate(k);
  const Int d = det(m);
  Int expo[3];
  for (int i = 0; i < 3; ++i) {
    IntMatrix mi = m;
    for (int r = 0; r < 3; ++r) mi.at(r, i) = r == 2 ? 1 : 0;
    expo[i] = det(mi) / d;  // Cramer; exact since |d| = 1
  }
  return TorusElement{rat_pow(c, expo[0]), rat_pow(c, expo[1]), rat_pow(c, expo[2])};
}

}  // namespace trigstrata
