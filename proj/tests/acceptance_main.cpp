// Acceptance suite: one line per criterion, PASS/FAIL, exact arithmetic
// throughout.  A fixed seed keeps runs reproducible; override with --seed N.

#include <chrono>
#include <cstdint>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "trigstrata/json_io.hpp"
#include "trigstrata/normal_forms.hpp"
#include "trigstrata/presentations.hpp"

#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace trigstrata;

namespace {

std::uint64_t g_seed = 20250809;

struct Failure {
  std::string detail;
};

void require(bool cond, const std::string& detail) {
  if (!cond) throw Failure{detail};
}

// --- criterion 1: E8 specialization at k = 1 -------------------------------

void criterion_e8() {
  const auto basis = slice_free_monomials(SliceTag::V1, 1);
  require(basis.size() == 8, "V1 slice at k=1 must have 8 free coefficients");
  const std::vector<std::pair<int, int>> expect = {
      {0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}};
  require(basis == expect, "V1 monomial basis must be {1,x,x^2,x^3,y,xy,x^2y,x^3y}");

  const Presentation p = build_piK(5);
  require(p.n_generators == 8, "piK(5) must have 8 generators");
  int braid = 0, comm = 0, tri = 0;
  for (auto k : p.kinds) {
    if (k == RelationKind::Braid) ++braid;
    if (k == RelationKind::Commutation) ++comm;
    if (k == RelationKind::Triangle) ++tri;
  }
  require(braid == 13 && comm == 15 && tri == 6 && p.relations.size() == 34,
          "piK(5) must have 13+15+6 = 34 relations, got " + std::to_string(braid) + "+" +
              std::to_string(comm) + "+" + std::to_string(tri));
  const Abelianization ab = abelianization(p);
  require(ab.free_rank == 1 && ab.torsion.empty(),
          "piK(5) abelianization must be free of rank 1");
  require(central_word(1).letters.size() == 120, "central word at k=1 must have length 120");
}

// --- criterion 2: orbit invariance of regularity and stratum ---------------

void criterion_orbit_invariance() {
  tsgen::Rng rng(g_seed + 2);
  for (int k = 1; k <= 3; ++k) {
    TrigonalForm seeds[3] = {tsgen::seed_one_point(k), tsgen::seed_two_point(k),
                             tsgen::seed_three_point(k)};
    for (int d = 0; d < 3; ++d)
      require(is_regular(seeds[d]) && l0_profile(seeds[d]).distinct_points == d + 1,
              "stratum seed invalid at k=" + std::to_string(k));
    for (int trial = 0; trial < 200; ++trial) {
      const GElement g = tsgen::random_gelement(k, rng);
      for (int d = 0; d < 3; ++d) {
        const TrigonalForm moved = act(g, seeds[d]);
        require(is_regular(moved), "regularity lost at k=" + std::to_string(k) + " stratum " +
                                       std::to_string(d + 1) + " trial " + std::to_string(trial));
        require(l0_profile(moved).distinct_points == d + 1,
                "stratum changed at k=" + std::to_string(k) + " trial " + std::to_string(trial));
      }
    }
  }
}

// --- criterion 3: uniqueness of the two-point normal form ------------------

void criterion_two_point_uniqueness() {
  tsgen::Rng rng(g_seed + 3);
  for (int k = 1; k <= 3; ++k) {
    const TrigonalForm seed = tsgen::seed_two_point(k);
    for (int trial = 0; trial < 50; ++trial) {
      const TrigonalForm f = act(tsgen::random_gelement(k, rng), seed);
      const GElement g = tsgen::random_gelement(k, rng);
      const TrigonalForm n1 = normalize_two_point(f).form;
      const TrigonalForm n2 = normalize_two_point(act(g, f)).form;
      require(n1 == n2, "two-point normal form not unique at k=" + std::to_string(k) +
                            " trial " + std::to_string(trial));
    }
  }
}

// --- criterion 4: one-point residual soundness ------------------------------

void criterion_one_point_residual() {
  tsgen::Rng rng(g_seed + 4);
  for (int k = 1; k <= 3; ++k) {
    const TrigonalForm seed = tsgen::seed_one_point(k);
    for (int trial = 0; trial < 50; ++trial) {
      const TrigonalForm f = act(tsgen::random_gelement(k, rng), seed);
      const GElement g = tsgen::random_gelement(k, rng);
      const TrigonalForm n1 = normalize_one_point(f).form;
      const TrigonalForm n2 = normalize_one_point(act(g, f)).form;
      require(residual_equiv_one_point(n1, n2),
              "one-point normal forms not residual-equivalent at k=" + std::to_string(k));
      const Rat t = tsgen::small_nonzero_rat(rng);
      const TrigonalForm scaled = v1_residual_scale(n1, t);
      require(in_slice(SliceTag::V1, scaled), "residual scaling left the V1 slice");
      require(residual_equiv_one_point(n1, scaled),
              "residual scaling broke equivalence at k=" + std::to_string(k));
    }
  }
}

// --- criterion 5: the section of the three-point family --------------------

void criterion_section() {
  tsgen::Rng rng(g_seed + 5);
  for (int k = 1; k <= 2; ++k) {
    int done = 0;
    while (done < 100) {
      const Rat p = tsgen::small_rat(rng, 6, 3), q = tsgen::small_rat(rng, 6, 3);
      if (!cusp_discriminant_ok(p, q)) continue;
      const TrigonalForm f = section_embedding(k, p, q);
      require(is_regular(f), "section image not regular at k=" + std::to_string(k) + " (p=" +
                                 rat_to_string(p) + ", q=" + rat_to_string(q) + ")");
      require(l0_profile(f).distinct_points == 3, "section image missed the three-point locus");
      ++done;
    }
    for (int m = 1; m <= 10; ++m) {
      const Rat p = Rat(-3) * m * m, q = Rat(2) * m * m * m;
      require(!cusp_discriminant_ok(p, q), "cusp sample not on the discriminant");
      require(l0_profile(section_embedding(k, p, q)).distinct_points < 3,
              "cusp sample kept three points");
    }
  }
}

// --- criterion 6: torus coordinate change -----------------------------------

void criterion_torus_translate() {
  for (int k = 1; k <= 10; ++k) {
    const Int d = det(torus_translate(k));
    require(d == 1 || d == -1, "exponent matrix not unimodular at k=" + std::to_string(k));
  }
  tsgen::Rng rng(g_seed + 6);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + trial % 3;
    const TorusElement t = make_torus(tsgen::small_nonzero_rat(rng), tsgen::small_nonzero_rat(rng),
                                      tsgen::small_nonzero_rat(rng));
    const TrigonalForm f = tsgen::random_form(k, rng);
    require(act_torus(t, f, TorusConvention::LMR) ==
                act_torus(abc_from_lmr(k, t), f, TorusConvention::ABC),
            "torus conventions disagree at trial " + std::to_string(trial));
  }
}

// --- criterion 7: transformation lemma oracle suite ------------------------

void criterion_lemma_oracles() {
  tsgen::Rng rng(g_seed + 7);

  // y^2 elimination, general inputs
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + trial % 3;
    TrigonalForm f = tsgen::random_form(k, rng);
    f.s = tsgen::small_nonzero_rat(rng);
    const Rat r_circ = tsgen::small_rat(rng);
    const TrigonalForm out = tschirnhaus_y_r(f, r_circ);
    const UniPoly w =
        (Rat(-1) / (Rat(3) * f.s)) * (f.r_poly() - UniPoly::monomial(r_circ, k + 1));
    require(out == tsoracle::apply_y_shift_oracle(f, w), "y^2 elimination oracle mismatch");
    require(out.r_poly() == UniPoly::monomial(r_circ, k + 1), "y^2 elimination postcondition");
  }
  // y^2 elimination, protected-coefficient clause
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + trial % 3;
    TrigonalForm f = tsgen::random_form(k, rng);
    f.s = tsgen::small_nonzero_rat(rng);
    f.r[static_cast<size_t>(k)] = 0;
    const Rat r_circ = f.r[static_cast<size_t>(k + 1)];
    const TrigonalForm out = tschirnhaus_y_r(f, r_circ);
    require(out.p[static_cast<size_t>(2 * k + 1)] == f.p[static_cast<size_t>(2 * k + 1)] &&
                out.p[static_cast<size_t>(2 * k + 2)] == f.p[static_cast<size_t>(2 * k + 2)] &&
                out.q[static_cast<size_t>(3 * k + 2)] == f.q[static_cast<size_t>(3 * k + 2)] &&
                out.q[static_cast<size_t>(3 * k + 3)] == f.q[static_cast<size_t>(3 * k + 3)],
            "protected coefficients disturbed by low-degree y^2 elimination");
  }

  // p_{2k+1} elimination
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + trial % 3;
    TrigonalForm f = tsgen::random_form(k, rng);
    f.s = tsgen::small_nonzero_rat(rng);
    f.r[static_cast<size_t>(k + 1)] = tsgen::small_nonzero_rat(rng);
    f.q[static_cast<size_t>(3 * k + 2)] = tsgen::small_nonzero_rat(rng);
    f.q[static_cast<size_t>(3 * k + 3)] = 0;
    f.p[static_cast<size_t>(2 * k + 2)] = 0;
    const TrigonalForm out = tschirnhaus_y_p(f);
    const UniPoly w = UniPoly::monomial(
        Rat(-1, 2) * f.p[static_cast<size_t>(2 * k + 1)] / f.r[static_cast<size_t>(k + 1)], k);
    require(out == tsoracle::apply_y_shift_oracle(f, w), "p-elimination oracle mismatch");
    require(out.p[static_cast<size_t>(2 * k + 1)] == 0 &&
                out.q[static_cast<size_t>(3 * k + 3)] == 0 &&
                out.p[static_cast<size_t>(2 * k + 2)] == 0 &&
                out.r[static_cast<size_t>(k + 1)] != 0 &&
                out.q[static_cast<size_t>(3 * k + 2)] != 0,
            "p-elimination postcondition");
  }

  // r_k elimination, with the printed-factor discrepancy documented
  int printed_factor_misses = 0, printed_factor_cases = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + trial % 3;
    TrigonalForm f = tsgen::random_form(k, rng);
    f.s = tsgen::small_nonzero_rat(rng);
    f.r[static_cast<size_t>(k + 1)] = tsgen::small_nonzero_rat(rng);
    f.q[static_cast<size_t>(3 * k + 2)] = tsgen::small_nonzero_rat(rng);
    f.q[static_cast<size_t>(3 * k + 3)] = 0;
    f.p[static_cast<size_t>(2 * k + 2)] = 0;
    f.p[static_cast<size_t>(2 * k + 1)] = 0;
    const TrigonalForm out = shift_x_r(f);
    const Rat d =
        -f.r[static_cast<size_t>(k)] / (Rat(k + 1) * f.r[static_cast<size_t>(k + 1)]);
    require(out == tsoracle::apply_x_shift_oracle(f, d), "r_k elimination oracle mismatch");
    require(out.r[static_cast<size_t>(k)] == 0, "r_k elimination postcondition");
    if (f.r[static_cast<size_t>(k)] != 0) {
      ++printed_factor_cases;
      const Rat d_printed =
          -f.r[static_cast<size_t>(k)] / (Rat(k) * f.r[static_cast<size_t>(k + 1)]);
      if (tsoracle::apply_x_shift_oracle(f, d_printed).r[static_cast<size_t>(k)] != 0)
        ++printed_factor_misses;
    }
  }
  require(printed_factor_cases > 0 && printed_factor_misses == printed_factor_cases,
          "the 1/k shift factor should fail to clear r_k whenever r_k != 0");

  // q_{3k+1} elimination with the preserved-coefficient clause
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + trial % 3;
    TrigonalForm f = tsgen::random_form(k, rng);
    f.s = tsgen::small_nonzero_rat(rng);
    f.q[static_cast<size_t>(3 * k + 2)] = tsgen::small_nonzero_rat(rng);
    f.q[static_cast<size_t>(3 * k + 3)] = 0;
    f.p[static_cast<size_t>(2 * k + 2)] = 0;
    const TrigonalForm out = shift_x_q(f);
    const Rat d = -f.q[static_cast<size_t>(3 * k + 1)] /
                  (Rat(3 * k + 2) * f.q[static_cast<size_t>(3 * k + 2)]);
    require(out == tsoracle::apply_x_shift_oracle(f, d), "q-elimination oracle mismatch");
    require(out.q[static_cast<size_t>(3 * k + 1)] == 0, "q-elimination postcondition");
    require(out.p[static_cast<size_t>(2 * k + 1)] == f.p[static_cast<size_t>(2 * k + 1)],
            "q-elimination must preserve p_{2k+1}");
  }

  // double-root split with the sign of r'_{k+1} documented
  int done = 0;
  while (done < 100) {
    const int k = 1 + done % 3;
    const TrigonalForm f = tsgen::random_planted_two_point(k, rng);
    if (!is_regular(f)) continue;
    const Rat p = f.p[static_cast<size_t>(2 * k + 2)];
    const Rat q = f.q[static_cast<size_t>(3 * k + 3)];
    const TrigonalForm out = split_double_root(f);
    require(out == tsoracle::apply_y_shift_oracle(
                       f, UniPoly::monomial(Rat(-3) * q / (Rat(2) * p), k + 1)),
            "double-root split oracle mismatch");
    require(out.p[static_cast<size_t>(2 * k + 2)] == 0 &&
                out.q[static_cast<size_t>(3 * k + 3)] == 0,
            "double-root split postcondition");
    const UniPoly nr = out.r_poly();
    require(nr == UniPoly::monomial(nr.coeff(k + 1), k + 1) && nr.coeff(k + 1) != 0,
            "double-root split must leave a single nonzero r coefficient");
    const Rat expansion_value = Rat(-9) * f.s * q / (Rat(2) * p);
    require(nr.coeff(k + 1) == expansion_value && nr.coeff(k + 1) != -expansion_value,
            "r'_{k+1} must match the expansion value -9sq/(2p)");
    ++done;
  }
}

// --- criterion 8: smoothness cross-validation ------------------------------

void criterion_smoothness_cross_validation() {
  tsgen::Rng rng(g_seed + 8);
  int regular = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const TrigonalForm f = tsgen::random_form(1, rng);
    const bool lib = is_regular(f);
    const bool oracle = tsoracle::oracle_is_regular(f);
    require(lib == oracle, "regularity mismatch at trial " + std::to_string(trial) +
                               " (library=" + std::to_string(lib) + ")");
    if (lib) ++regular;
  }
  require(regular > 0, "sample contained no regular forms");
}

// --- criterion 9: dimension and parity data ---------------------------------

void criterion_dims_parity() {
  for (int k = 1; k <= 10; ++k) {
    const Dims d = dims(k);
    require(d.stratum_dim == 6 * k + 1 && d.maroni_locus_dim == 5 * k + 3 &&
                d.divisor_dim == 5 * k + 2,
            "dimension formulas wrong at k=" + std::to_string(k));
    const SpinParity expect = (k + 1) % 2 == 0 ? SpinParity::Even : SpinParity::Odd;
    require(spin_parity(k) == expect, "spin parity wrong at k=" + std::to_string(k));
    require(classify(tsgen::seed_one_point(k)).spin() == expect,
            "classified spin parity wrong at k=" + std::to_string(k));
  }
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
      g_seed = std::stoull(argv[i + 1]);
  }

  struct Entry {
    const char* name;
    const char* what;
    std::function<void()> fn;
    double budget_secs;  // 0 = unbounded
  };
  const std::vector<Entry> entries = {
      {"criterion-1", "E8 specialization at k=1", criterion_e8, 1.0},
      {"criterion-2", "orbit invariance of regularity and stratum", criterion_orbit_invariance,
       120.0},
      {"criterion-3", "two-point normal form uniqueness", criterion_two_point_uniqueness, 120.0},
      {"criterion-4", "one-point residual soundness", criterion_one_point_residual, 0},
      {"criterion-5", "three-point section off the cusp locus", criterion_section, 0},
      {"criterion-6", "torus convention translation", criterion_torus_translate, 0},
      {"criterion-7", "transformation lemma oracle suite", criterion_lemma_oracles, 0},
      {"criterion-8", "smoothness cross-validation", criterion_smoothness_cross_validation,
       300.0},
      {"criterion-9", "dimension and parity data", criterion_dims_parity, 0},
  };

  int failures = 0;
  for (const auto& e : entries) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      e.fn();
    } catch (const Failure& f) {
      ok = false;
      detail = f.detail;
    } catch (const std::exception& ex) {
      ok = false;
      detail = std::string("exception: ") + ex.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && e.budget_secs > 0 && secs > e.budget_secs) {
      ok = false;
      detail = "exceeded the " + std::to_string(e.budget_secs) + " s budget";
    }
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << "  " << e.name << "  (" << std::fixed;
    line.precision(2);
    line << secs << " s)  " << e.what;
    if (!ok) line << "  -- " << detail;
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
  }
  return failures;
}
