#pragma once

#include <algorithm>
#include <iostream>
#include <set>
#include <utility>
#include <vector>

#include "trigstrata/bipoly.hpp"
#include "trigstrata/rational.hpp"

namespace trigstrata {
namespace gb {

// Monomial x^i y^j under graded lexicographic order with y > x.
struct Mono {
  int i = 0, j = 0;
};
inline bool operator==(Mono a, Mono b) { return a.i == b.i && a.j == b.j; }
inline bool mono_less(Mono a, Mono b) {
  const int da = a.i + a.j, db = b.i + b.j;
  if (da != db) return da < db;
  return a.j < b.j;
}
inline bool mono_divides(Mono a, Mono b) { return a.i <= b.i && a.j <= b.j; }
inline Mono mono_lcm(Mono a, Mono b) { return {std::max(a.i, b.i), std::max(a.j, b.j)}; }
inline Mono mono_sub(Mono a, Mono b) { return {a.i - b.i, a.j - b.j}; }
inline Mono mono_add(Mono a, Mono b) { return {a.i + b.i, a.j + b.j}; }
inline bool mono_coprime(Mono a, Mono b) {
  return std::min(a.i, b.i) == 0 && std::min(a.j, b.j) == 0;
}

struct Term {
  Mono m;
  Int c;
};

// Terms sorted descending in the monomial order; integer content 1 and
// positive leading coefficient after normalize().
using Poly = std::vector<Term>;

inline void normalize(Poly& p) {
  if (p.empty()) return;
  Int g(0);
  for (const auto& t : p) {
    g = boost::multiprecision::gcd(g, t.c);
    if (g == 1) break;
  }
  const bool flip = p.front().c < 0;
  if (g == 1 && !flip) return;
  if (flip) g = -g;
  for (auto& t : p) t.c /= g;
}

inline Poly from_bipoly(const BiPoly& f) {
  Int den(1);
  for (const auto& [k, v] : f.terms())
    den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(v));
  Poly p;
  p.reserve(f.term_count());
  for (const auto& [k, v] : f.terms())
    p.push_back({Mono{k.first, k.second},
                 boost::multiprecision::numerator(v) * (den / boost::multiprecision::denominator(v))});
  std::sort(p.begin(), p.end(), [](const Term& a, const Term& b) { return mono_less(b.m, a.m); });
  normalize(p);
  return p;
}

// ca * x^sa * a  -  cb * x^sb * b, merged in order.
inline Poly lin_comb(const Int& ca, Mono sa, const Poly& a, const Int& cb, Mono sb, const Poly& b) {
  Poly out;
  out.reserve(a.size() + b.size());
  size_t ia = 0, ib = 0;
  while (ia < a.size() || ib < b.size()) {
    if (ib == b.size() ||
        (ia < a.size() && mono_less(mono_add(b[ib].m, sb), mono_add(a[ia].m, sa)))) {
      out.push_back({mono_add(a[ia].m, sa), ca * a[ia].c});
      ++ia;
    } else if (ia == a.size() || mono_less(mono_add(a[ia].m, sa), mono_add(b[ib].m, sb))) {
      out.push_back({mono_add(b[ib].m, sb), -cb * b[ib].c});
      ++ib;
    } else {
      Int c = ca * a[ia].c - cb * b[ib].c;
      if (c != 0) out.push_back({mono_add(a[ia].m, sa), std::move(c)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

// Fraction-free top-reduction until the leading monomial is irreducible
// modulo the basis (or the polynomial vanishes).
inline Poly top_reduce(Poly p, const std::vector<Poly>& basis) {
  using boost::multiprecision::gcd;
  bool again = true;
  while (again && !p.empty()) {
    again = false;
    for (const auto& g : basis) {
      if (g.empty() || !mono_divides(g.front().m, p.front().m)) continue;
      const Int d = gcd(p.front().c, g.front().c);
      p = lin_comb(g.front().c / d, Mono{0, 0}, p, p.front().c / d,
                   mono_sub(p.front().m, g.front().m), g);
      normalize(p);
      again = true;
      break;
    }
  }
  return p;
}

struct BuchbergerOptions {
  bool product_criterion = true;
  bool chain_criterion = true;
};

// Buchberger restricted to the unit-ideal question; stops as soon as a
// nonzero constant enters the basis.
inline bool buchberger_unit(std::vector<Poly> basis, BuchbergerOptions opts = {}) {
  using boost::multiprecision::gcd;
  for (const auto& g : basis)
    if (!g.empty() && g.front().m == Mono{0, 0}) return true;

  struct Pair {
    Mono lcm;
    int a, b;
  };
  auto pair_less = [](const Pair& x, const Pair& y) {
    if (!(x.lcm == y.lcm)) return mono_less(x.lcm, y.lcm);
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  };
  std::multiset<Pair, decltype(pair_less)> pending(pair_less);
  std::set<std::pair<int, int>> in_pending;

  auto push_pairs_for = [&](int n) {
    for (int t = 0; t < n; ++t) {
      pending.insert({mono_lcm(basis[t].front().m, basis[n].front().m), t, n});
      in_pending.insert({t, n});
    }
  };
  for (int n = 1; n < static_cast<int>(basis.size()); ++n) push_pairs_for(n);

  while (!pending.empty()) {
    const Pair pr = *pending.begin();
    pending.erase(pending.begin());
    in_pending.erase({pr.a, pr.b});

    const Mono& la = basis[pr.a].front().m;
    const Mono& lb = basis[pr.b].front().m;
    if (opts.product_criterion && mono_coprime(la, lb)) continue;
    if (opts.chain_criterion) {
      bool chained = false;
      for (int l = 0; l < static_cast<int>(basis.size()) && !chained; ++l) {
        if (l == pr.a || l == pr.b) continue;
        if (!mono_divides(basis[l].front().m, pr.lcm)) continue;
        const auto key1 = std::minmax(pr.a, l);
        const auto key2 = std::minmax(pr.b, l);
        if (!in_pending.count({key1.first, key1.second}) &&
            !in_pending.count({key2.first, key2.second}))
          chained = true;
      }
      if (chained) continue;
    }

    const Int d = gcd(basis[pr.a].front().c, basis[pr.b].front().c);
    Poly s = lin_comb(basis[pr.b].front().c / d, mono_sub(pr.lcm, la), basis[pr.a],
                      basis[pr.a].front().c / d, mono_sub(pr.lcm, lb), basis[pr.b]);
    normalize(s);
    s = top_reduce(std::move(s), basis);
    if (s.empty()) continue;
    if (s.front().m == Mono{0, 0}) return true;
    basis.push_back(std::move(s));
    push_pairs_for(static_cast<int>(basis.size()) - 1);
  }
  return false;
}

}  // namespace gb

// True iff 1 lies in the ideal generated by gens over Q, i.e. the generators
// have no common zero in C^2.  All-zero input yields false with a warning.
inline bool unit_ideal_2var(const std::vector<BiPoly>& gens) {
  if (gens.empty()) throw domain_error("unit_ideal_2var: no generators");
  std::vector<gb::Poly> basis;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    basis.push_back(gb::from_bipoly(g));
  }
  if (basis.empty()) {
    std::cerr << "unit_ideal_2var: all generators zero\n";
    return false;
  }
  return gb::buchberger_unit(std::move(basis));
}

}  // namespace trigstrata
