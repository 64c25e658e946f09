#pragma once

#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "trigstrata/intmatrix.hpp"
#include "trigstrata/rational.hpp"
#include "trigstrata/trigonal_form.hpp"

namespace trigstrata {

// Word in the generators: positive entry i is t_i, negative is its inverse.
struct Word {
  std::vector<int> letters;

  friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
};

enum class PresentationFamily { PiK, Conjecture4k2k };
enum class RelationKind { Braid, Commutation, Triangle };

// Finitely presented group data for the discriminant knot groups
// pi^K(y^3 + x^n) and the conjectured secondary braid groups.  Relations are
// stored as (left, right) word pairs meaning left = right.
struct Presentation {
  int n_generators = 0;
  PresentationFamily family = PresentationFamily::PiK;
  int parameter = 0;   // n for PiK, k for Conjecture4k2k
  bool conjectural = false;
  bool extrapolated = false;  // PiK pattern outside n = 3k+2
  std::vector<std::pair<Word, Word>> relations;
  std::vector<RelationKind> kinds;  // aligned with relations

  std::string family_name() const {
    switch (family) {
      case PresentationFamily::PiK:
        return (extrapolated ? std::string("piK_y3xn_extrapolated(n=") : std::string("piK_y3xn(n=")) +
               std::to_string(parameter) + ")";
      case PresentationFamily::Conjecture4k2k:
        return "conjecture_4k2k(k=" + std::to_string(parameter) + ")";
    }
    return "?";
  }
};

namespace detail {

// The three relation families shared by both presentations:
//   braid        t_i t_j t_i = t_j t_i t_j   for 1 <= |i-j| <= 2,
//   commutation  t_i t_j = t_j t_i           for |i-j| > 2,
//   triangle     t_i t_{i+1} t_{i+2} t_i = t_{i+1} t_{i+2} t_i t_{i+1}.
inline void emit_relations(Presentation& pres) {
  const int n = pres.n_generators;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n && j <= i + 2; ++j) {
      pres.relations.push_back({Word{{i, j, i}}, Word{{j, i, j}}});
      pres.kinds.push_back(RelationKind::Braid);
    }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 3; j <= n; ++j) {
      pres.relations.push_back({Word{{i, j}}, Word{{j, i}}});
      pres.kinds.push_back(RelationKind::Commutation);
    }
  for (int i = 1; i + 2 <= n; ++i) {
    pres.relations.push_back({Word{{i, i + 1, i + 2, i}}, Word{{i + 1, i + 2, i, i + 1}}});
    pres.kinds.push_back(RelationKind::Triangle);
  }
}

}  // namespace detail

// Presentation on 2(n-1) generators attached to y^3 + x^n.  For n = 3k+2 it
// is the known discriminant knot group presentation (n = 2 gives Br_3); for
// other n the same combinatorial pattern is emitted, marked extrapolated.
inline Presentation build_piK(int n) {
  if (n < 2) throw domain_error("build_piK requires n >= 2");
  Presentation pres;
  pres.n_generators = 2 * (n - 1);
  pres.family = PresentationFamily::PiK;
  pres.parameter = n;
  pres.extrapolated = (n % 3) != 2;
  pres.conjectural = pres.extrapolated;
  detail::emit_relations(pres);
  return pres;
}

// Conjectured presentation of the secondary braid group for the (4k,2k)
// stratum: 6k+3 generators with the same three relation families.
inline Presentation build_conjecture_4k2k(int k) {
  if (k < 1) throw domain_error("build_conjecture_4k2k requires k >= 1");
  Presentation pres;
  pres.n_generators = 6 * k + 3;
  pres.family = PresentationFamily::Conjecture4k2k;
  pres.parameter = k;
  pres.conjectural = true;
  detail::emit_relations(pres);
  return pres;
}

// The central word (t_1 ... t_{6k+2})^{9k+6} of length (6k+2)(9k+6).
inline Word central_word(int k) {
  if (k < 1) throw domain_error("central_word requires k >= 1");
  Word w;
  const int gens = 6 * k + 2, reps = 9 * k + 6;
  w.letters.reserve(static_cast<size_t>(gens) * static_cast<size_t>(reps));
  for (int r = 0; r < reps; ++r)
    for (int i = 1; i <= gens; ++i) w.letters.push_back(i);
  return w;
}

inline std::vector<Int> word_exponents(const Word& w, int n_generators) {
  std::vector<Int> e(static_cast<size_t>(n_generators), Int(0));
  for (int l : w.letters) {
    const int idx = std::abs(l);
    if (idx < 1 || idx > n_generators) throw input_error("word letter out of range");
    e[static_cast<size_t>(idx - 1)] += l > 0 ? 1 : -1;
  }
  return e;
}

// Abelianized relation rows: exponent vector of left minus right.
inline IntMatrix relation_matrix(const Presentation& pres) {
  if (pres.relations.empty()) throw input_error("presentation has no relations");
  IntMatrix m(static_cast<int>(pres.relations.size()), pres.n_generators);
  for (size_t r = 0; r < pres.relations.size(); ++r) {
    const auto el = word_exponents(pres.relations[r].first, pres.n_generators);
    const auto er = word_exponents(pres.relations[r].second, pres.n_generators);
    for (int c = 0; c < pres.n_generators; ++c)
      m.at(static_cast<int>(r), c) = el[static_cast<size_t>(c)] - er[static_cast<size_t>(c)];
  }
  return m;
}

struct Abelianization {
  int free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1
};

inline Abelianization abelianization(const Presentation& pres) {
  Abelianization ab;
  if (pres.relations.empty()) {
    ab.free_rank = pres.n_generators;
    return ab;
  }
  const SmithResult snf = smith_normal_form(relation_matrix(pres));
  int rank = 0;
  for (const auto& d : snf.diagonal)
    if (d != 0) {
      ++rank;
      if (d > 1) ab.torsion.push_back(d);
    }
  ab.free_rank = pres.n_generators - rank;
  return ab;
}

// The section of the three-point family over the base of depressed cubics:
// (p, q) -> y^3 + p x^{2k+2} y + q x^{3k+3} + 1, a member of the V3 slice.
inline TrigonalForm section_embedding(int k, const Rat& p, const Rat& q) {
  if (k < 1) throw input_error("k must be positive");
  TrigonalForm f = zero_form(k);
  f.s = 1;
  f.p[static_cast<size_t>(2 * k + 2)] = p;
  f.q[static_cast<size_t>(3 * k + 3)] = q;
  f.q[0] = 1;
  return f;
}

// 4p^3 + 27q^2 != 0: the base cubic Y^3 + pY + q has three distinct roots.
inline bool cusp_discriminant_ok(const Rat& p, const Rat& q) {
  return Rat(4) * p * p * p + Rat(27) * q * q != 0;
}

}  // namespace trigstrata
