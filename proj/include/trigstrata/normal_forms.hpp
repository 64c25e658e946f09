#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trigstrata/group_action.hpp"
#include "trigstrata/lattice.hpp"
#include "trigstrata/rational.hpp"
#include "trigstrata/trigonal_form.hpp"
#include "trigstrata/unipoly.hpp"

namespace trigstrata {

namespace detail {

// y -> y + w(x) with deg w <= k+1; the induced coefficient change.
inline TrigonalForm y_shift(const TrigonalForm& f, const UniPoly& w) {
  if (w.degree() > f.k + 1) throw internal_error("y-shift of excessive degree");
  const UniPoly r = f.r_poly(), p = f.p_poly(), q = f.q_poly();
  const UniPoly w2 = w * w;
  const UniPoly nr = Rat(3) * (f.s * w) + r;
  const UniPoly np = Rat(3) * (f.s * w2) + Rat(2) * (r * w) + p;
  const UniPoly nq = f.s * (w2 * w) + r * w2 + p * w + q;
  TrigonalForm out = zero_form(f.k);
  out.s = f.s;
  for (int i = 0; i <= nr.degree(); ++i) out.r[static_cast<size_t>(i)] = nr.coeff(i);
  for (int i = 0; i <= np.degree(); ++i) out.p[static_cast<size_t>(i)] = np.coeff(i);
  for (int i = 0; i <= nq.degree(); ++i) out.q[static_cast<size_t>(i)] = nq.coeff(i);
  return out;
}

// x -> x + d.
inline TrigonalForm x_shift(const TrigonalForm& f, const Rat& d) {
  const UniPoly nr = f.r_poly().taylor_shift(d);
  const UniPoly np = f.p_poly().taylor_shift(d);
  const UniPoly nq = f.q_poly().taylor_shift(d);
  TrigonalForm out = zero_form(f.k);
  out.s = f.s;
  for (int i = 0; i <= nr.degree(); ++i) out.r[static_cast<size_t>(i)] = nr.coeff(i);
  for (int i = 0; i <= np.degree(); ++i) out.p[static_cast<size_t>(i)] = np.coeff(i);
  for (int i = 0; i <= nq.degree(); ++i) out.q[static_cast<size_t>(i)] = nq.coeff(i);
  return out;
}

}  // namespace detail

// Kills the y^2 coefficient down to r_o x^{k+1} (y-Tschirnhaus by
// -(r(x) - r_o x^{k+1}) / 3s).  When deg(r - r_o x^{k+1}) < k the top two
// coefficients of p and of q are untouched.
inline TrigonalForm tschirnhaus_y_r(const TrigonalForm& f, const Rat& r_circ) {
  if (f.s == 0) throw domain_error("tschirnhaus_y_r requires s != 0");
  const int k = f.k;
  const UniPoly target = UniPoly::monomial(r_circ, k + 1);
  const UniPoly delta = f.r_poly() - target;
  const UniPoly w = (Rat(-1) / (Rat(3) * f.s)) * delta;
  const TrigonalForm out = detail::y_shift(f, w);
  if (out.r_poly() != target) throw internal_error("tschirnhaus_y_r failed to set r");
  if (delta.degree() < k) {
    if (out.p[static_cast<size_t>(2 * k + 1)] != f.p[static_cast<size_t>(2 * k + 1)] ||
        out.p[static_cast<size_t>(2 * k + 2)] != f.p[static_cast<size_t>(2 * k + 2)] ||
        out.q[static_cast<size_t>(3 * k + 2)] != f.q[static_cast<size_t>(3 * k + 2)] ||
        out.q[static_cast<size_t>(3 * k + 3)] != f.q[static_cast<size_t>(3 * k + 3)])
      throw internal_error("tschirnhaus_y_r disturbed protected coefficients");
  }
  return out;
}

// Kills p_{2k+1} by a y-shift proportional to x^k; needs q_{3k+3} =
// p_{2k+2} = 0 and s, r_{k+1}, q_{3k+2} all nonzero, and preserves those.
inline TrigonalForm tschirnhaus_y_p(const TrigonalForm& f) {
  const int k = f.k;
  const size_t i_p1 = static_cast<size_t>(2 * k + 1), i_p2 = static_cast<size_t>(2 * k + 2);
  const size_t i_q2 = static_cast<size_t>(3 * k + 2), i_q3 = static_cast<size_t>(3 * k + 3);
  const Rat& rtop = f.r[static_cast<size_t>(k + 1)];
  if (f.q[i_q3] != 0 || f.p[i_p2] != 0 || f.s == 0 || rtop == 0 || f.q[i_q2] == 0)
    throw domain_error("tschirnhaus_y_p hypotheses violated");
  const UniPoly w = UniPoly::monomial(Rat(-1) / Rat(2) * (f.p[i_p1] / rtop), k);
  const TrigonalForm out = detail::y_shift(f, w);
  if (out.p[i_p1] != 0 || out.p[i_p2] != 0 || out.q[i_q3] != 0 ||
      out.r[static_cast<size_t>(k + 1)] == 0 || out.q[i_q2] == 0)
    throw internal_error("tschirnhaus_y_p postcondition failed");
  return out;
}

// Kills r_k by an x-shift.  The shift solving "x^k coefficient of r(x+d)
// is zero" is d = -r_k / ((k+1) r_{k+1}).
inline TrigonalForm shift_x_r(const TrigonalForm& f) {
  const int k = f.k;
  const size_t i_p1 = static_cast<size_t>(2 * k + 1), i_p2 = static_cast<size_t>(2 * k + 2);
  const size_t i_q2 = static_cast<size_t>(3 * k + 2), i_q3 = static_cast<size_t>(3 * k + 3);
  const Rat& rtop = f.r[static_cast<size_t>(k + 1)];
  if (f.q[i_q3] != 0 || f.p[i_p2] != 0 || f.p[i_p1] != 0 || f.s == 0 || rtop == 0 ||
      f.q[i_q2] == 0)
    throw domain_error("shift_x_r hypotheses violated");
  const Rat d = -f.r[static_cast<size_t>(k)] / (Rat(k + 1) * rtop);
  const TrigonalForm out = detail::x_shift(f, d);
  if (out.r[static_cast<size_t>(k)] != 0 || out.q[i_q3] != 0 || out.p[i_p2] != 0 ||
      out.p[i_p1] != 0 || out.r[static_cast<size_t>(k + 1)] == 0 || out.q[i_q2] == 0)
    throw internal_error("shift_x_r postcondition failed");
  return out;
}

// Kills q_{3k+1} by an x-shift, leaving p_{2k+1} untouched; needs
// q_{3k+3} = p_{2k+2} = 0 and s q_{3k+2} != 0.
inline TrigonalForm shift_x_q(const TrigonalForm& f) {
  const int k = f.k;
  const size_t i_p2 = static_cast<size_t>(2 * k + 2);
  const size_t i_q1 = static_cast<size_t>(3 * k + 1), i_q2 = static_cast<size_t>(3 * k + 2),
               i_q3 = static_cast<size_t>(3 * k + 3);
  if (f.q[i_q3] != 0 || f.p[i_p2] != 0 || f.s == 0 || f.q[i_q2] == 0)
    throw domain_error("shift_x_q hypotheses violated");
  const Rat d = -f.q[i_q1] / (Rat(3 * k + 2) * f.q[i_q2]);
  const TrigonalForm out = detail::x_shift(f, d);
  if (out.q[i_q1] != 0 || out.p[static_cast<size_t>(2 * k + 1)] != f.p[static_cast<size_t>(2 * k + 1)] ||
      out.q[i_q3] != 0 || out.p[i_p2] != 0 || out.q[i_q2] == 0)
    throw internal_error("shift_x_q postcondition failed");
  return out;
}

// For r = 0 and a two-point intersection with L0, the restriction has a
// double root at -3 q_{3k+3} / (2 p_{2k+2}); the y-shift by that multiple of
// x^{k+1} moves it to v = 0, trading (p_{2k+2}, q_{3k+3}) for a nonzero
// r_{k+1} x^{k+1}.
inline TrigonalForm split_double_root(const TrigonalForm& f) {
  const int k = f.k;
  if (!f.r_poly().is_zero()) throw domain_error("split_double_root requires r = 0");
  if (f.s == 0) throw domain_error("split_double_root requires s != 0");
  if (l0_profile(f).distinct_points != 2)
    throw domain_error("split_double_root requires a two-point intersection with L0");
  const Rat& ptop = f.p[static_cast<size_t>(2 * k + 2)];
  const Rat& qtop = f.q[static_cast<size_t>(3 * k + 3)];
  if (ptop == 0) throw internal_error("two-point restriction with vanishing p_{2k+2}");
  if (Rat(27) * qtop * qtop * f.s != Rat(-4) * ptop * ptop * ptop)
    throw internal_error("two-point restriction with nonzero discriminant");
  const UniPoly w = UniPoly::monomial(Rat(-3) * qtop / (Rat(2) * ptop), k + 1);
  const TrigonalForm out = detail::y_shift(f, w);
  const UniPoly nr = out.r_poly();
  if (out.q[static_cast<size_t>(3 * k + 3)] != 0 || out.p[static_cast<size_t>(2 * k + 2)] != 0 ||
      nr.degree() != k + 1 || nr != UniPoly::monomial(nr.coeff(k + 1), k + 1))
    throw internal_error("split_double_root postcondition failed");
  return out;
}

// Reports whether q_{3k+2} != 0 and asserts the guarantee that this holds
// whenever the restriction has a multiple zero at v = 0 on a regular form.
inline bool q_nonvanish_check(const TrigonalForm& f) {
  const int k = f.k;
  const bool nonzero = f.q[static_cast<size_t>(3 * k + 2)] != 0;
  const bool mult_at_zero =
      f.q[static_cast<size_t>(3 * k + 3)] == 0 && f.p[static_cast<size_t>(2 * k + 2)] == 0;
  if (mult_at_zero && !nonzero && f.s != 0 && is_regular(f))
    throw internal_error("regular form with multiple zero at v=0 but q_{3k+2} = 0");
  return nonzero;
}

// ---------------------------------------------------------------------------
// Transformation logs

enum class StepTag { YR, YP, XR, XQ, L0, Torus, GShift };

inline std::string step_tag_name(StepTag t) {
  switch (t) {
    case StepTag::YR: return "YR";
    case StepTag::YP: return "YP";
    case StepTag::XR: return "XR";
    case StepTag::XQ: return "XQ";
    case StepTag::L0: return "L0";
    case StepTag::Torus: return "TORUS";
    case StepTag::GShift: return "GSHIFT";
  }
  return "?";
}

inline StepTag step_tag_from_name(const std::string& s) {
  if (s == "YR") return StepTag::YR;
  if (s == "YP") return StepTag::YP;
  if (s == "XR") return StepTag::XR;
  if (s == "XQ") return StepTag::XQ;
  if (s == "L0") return StepTag::L0;
  if (s == "TORUS") return StepTag::Torus;
  if (s == "GSHIFT") return StepTag::GShift;
  throw input_error("unknown transform step tag: " + s);
}

// One transformation applied along a normalization pipeline.  Parameters:
// YR carries r_o, TORUS carries (lambda, mu, rho), GSHIFT carries a full
// group element (a, a0, b, b_0..b_{k+1}); YP, XR, XQ and L0 recompute their
// shift from the current form, which makes replay deterministic.
struct TransformStep {
  StepTag tag;
  std::vector<Rat> params;
};

struct TransformLog {
  std::vector<TransformStep> steps;
  bool empty() const { return steps.empty(); }
};

inline TrigonalForm apply_step(const TransformStep& st, const TrigonalForm& f) {
  switch (st.tag) {
    case StepTag::YR:
      if (st.params.size() != 1) throw input_error("YR step needs one parameter");
      return tschirnhaus_y_r(f, st.params[0]);
    case StepTag::YP:
      return tschirnhaus_y_p(f);
    case StepTag::XR:
      return shift_x_r(f);
    case StepTag::XQ:
      return shift_x_q(f);
    case StepTag::L0:
      return split_double_root(f);
    case StepTag::Torus: {
      if (st.params.size() != 3) throw input_error("TORUS step needs three parameters");
      return act_torus(make_torus(st.params[0], st.params[1], st.params[2]), f,
                       TorusConvention::LMR);
    }
    case StepTag::GShift: {
      if (st.params.size() != static_cast<size_t>(f.k) + 5)
        throw input_error("GSHIFT step needs k+5 parameters");
      std::vector<Rat> bc(st.params.begin() + 3, st.params.end());
      return act(make_gelement(f.k, st.params[0], st.params[1], st.params[2], std::move(bc)), f);
    }
  }
  throw internal_error("unhandled step tag");
}

inline TrigonalForm replay(const TransformLog& log, TrigonalForm f) {
  for (const auto& st : log.steps) f = apply_step(st, f);
  return f;
}

// ---------------------------------------------------------------------------
// Slices and normal-form pipelines

enum class SliceTag { V1, V2, V3 };

inline std::string slice_name(SliceTag t) {
  switch (t) {
    case SliceTag::V1: return "V1";
    case SliceTag::V2: return "V2";
    case SliceTag::V3: return "V3";
  }
  return "?";
}

inline bool in_slice(SliceTag tag, const TrigonalForm& f) {
  const int k = f.k;
  const auto rz = [&](int lo, int hi) {
    for (int i = lo; i <= hi; ++i)
      if (f.r[static_cast<size_t>(i)] != 0) return false;
    return true;
  };
  switch (tag) {
    case SliceTag::V1:
      return f.s == 1 && f.q[static_cast<size_t>(3 * k + 2)] == 1 && rz(0, k + 1) &&
             f.p[static_cast<size_t>(2 * k + 2)] == 0 &&
             f.q[static_cast<size_t>(3 * k + 1)] == 0 && f.q[static_cast<size_t>(3 * k + 3)] == 0;
    case SliceTag::V2:
      return f.s == 1 && f.r[static_cast<size_t>(k + 1)] == 1 &&
             f.q[static_cast<size_t>(3 * k + 2)] == 1 && rz(0, k) &&
             f.p[static_cast<size_t>(2 * k + 1)] == 0 &&
             f.p[static_cast<size_t>(2 * k + 2)] == 0 && f.q[static_cast<size_t>(3 * k + 3)] == 0;
    case SliceTag::V3:
      return f.s == 1 && rz(0, k + 1);
  }
  return false;
}

// Monomials x^i y^j spanning the free coefficients of a slice, constants
// first.  For V1 at k = 1 this is the 8-dimensional unfolding basis
// {1, x, x^2, x^3, y, xy, x^2 y, x^3 y}.
inline std::vector<std::pair<int, int>> slice_free_monomials(SliceTag tag, int k) {
  int pmax = 0, qmax = 0;
  switch (tag) {
    case SliceTag::V1: pmax = 2 * k + 1; qmax = 3 * k; break;
    case SliceTag::V2: pmax = 2 * k; qmax = 3 * k + 1; break;
    case SliceTag::V3: pmax = 2 * k + 2; qmax = 3 * k + 3; break;
  }
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i <= qmax; ++i) out.emplace_back(i, 0);
  for (int i = 0; i <= pmax; ++i) out.emplace_back(i, 1);
  return out;
}

struct NormalizeResult {
  TrigonalForm form;
  TransformLog log;
};

namespace detail {

inline void require_stratum(const TrigonalForm& f, int expected) {
  if (!is_regular(f)) throw domain_error("not in discriminant complement");
  if (l0_profile(f).distinct_points != expected)
    throw domain_error("form meets L0 in " + std::to_string(l0_profile(f).distinct_points) +
                       " points, expected " + std::to_string(expected));
}

// Pipeline bodies assume regularity and the stated L0 profile; the public
// wrappers check.  Identity steps are skipped so already-normal input gets
// an empty log.
inline NormalizeResult normalize_one_point_pipeline(const TrigonalForm& f) {
  const int k = f.k;
  TransformLog log;
  TrigonalForm cur = f;
  if (!cur.r_poly().is_zero()) {
    cur = tschirnhaus_y_r(cur, Rat(0));
    log.steps.push_back({StepTag::YR, {Rat(0)}});
  }
  // One point and r = 0 force the triple root to v = 0.
  if (cur.p[static_cast<size_t>(2 * k + 2)] != 0 || cur.q[static_cast<size_t>(3 * k + 3)] != 0)
    throw internal_error("one-point form without triple root at v = 0");
  if (cur.q[static_cast<size_t>(3 * k + 2)] == 0)
    throw internal_error("q_{3k+2} vanishes on a regular one-point form");
  if (cur.q[static_cast<size_t>(3 * k + 1)] != 0) {
    cur = shift_x_q(cur);
    log.steps.push_back({StepTag::XQ, {}});
  }
  const Rat lambda = Rat(1) / cur.s;
  const Rat mu = Rat(1) / cur.q[static_cast<size_t>(3 * k + 2)];
  if (lambda != 1 || mu != 1) {
    cur = act_torus(make_torus(lambda, mu, Rat(1)), cur, TorusConvention::LMR);
    log.steps.push_back({StepTag::Torus, {lambda, mu, Rat(1)}});
  }
  if (!in_slice(SliceTag::V1, cur)) throw internal_error("one-point pipeline missed V1");
  return {cur, std::move(log)};
}

inline NormalizeResult normalize_two_point_pipeline(const TrigonalForm& f) {
  const int k = f.k;
  if (in_slice(SliceTag::V2, f)) return {f, {}};
  TransformLog log;
  TrigonalForm cur = f;
  if (!cur.r_poly().is_zero()) {
    cur = tschirnhaus_y_r(cur, Rat(0));
    log.steps.push_back({StepTag::YR, {Rat(0)}});
  }
  cur = split_double_root(cur);
  log.steps.push_back({StepTag::L0, {}});
  if (cur.q[static_cast<size_t>(3 * k + 2)] == 0)
    throw internal_error("q_{3k+2} vanishes after moving the double root to v = 0");
  if (cur.p[static_cast<size_t>(2 * k + 1)] != 0) {
    cur = tschirnhaus_y_p(cur);
    log.steps.push_back({StepTag::YP, {}});
  }
  if (cur.r[static_cast<size_t>(k)] != 0) {
    cur = shift_x_r(cur);
    log.steps.push_back({StepTag::XR, {}});
  }
  const Rat rtop = cur.r[static_cast<size_t>(k + 1)];
  if (cur.r_poly() != UniPoly::monomial(rtop, k + 1)) {
    cur = tschirnhaus_y_r(cur, rtop);
    log.steps.push_back({StepTag::YR, {rtop}});
  }
  const Rat lambda = Rat(1) / cur.s;
  const Rat mu = Rat(1) / cur.q[static_cast<size_t>(3 * k + 2)];
  const Rat rho = cur.r[static_cast<size_t>(k + 1)];
  if (lambda != 1 || mu != 1 || rho != 1) {
    cur = act_torus(make_torus(lambda, mu, rho), cur, TorusConvention::LMR);
    log.steps.push_back({StepTag::Torus, {lambda, mu, rho}});
  }
  if (!in_slice(SliceTag::V2, cur)) throw internal_error("two-point pipeline missed V2");
  return {cur, std::move(log)};
}

inline NormalizeResult normalize_three_point_pipeline(const TrigonalForm& f) {
  TransformLog log;
  TrigonalForm cur = f;
  if (!cur.r_poly().is_zero()) {
    cur = tschirnhaus_y_r(cur, Rat(0));
    log.steps.push_back({StepTag::YR, {Rat(0)}});
  }
  if (cur.s != 1) {
    const TorusElement t = lmr_for_scalar(f.k, Rat(1) / cur.s);
    cur = act_torus(t, cur, TorusConvention::LMR);
    log.steps.push_back({StepTag::Torus, {t.lambda, t.mu, t.rho}});
  }
  if (!in_slice(SliceTag::V3, cur)) throw internal_error("three-point pipeline missed V3");
  return {cur, std::move(log)};
}

}  // namespace detail

inline NormalizeResult normalize_one_point(const TrigonalForm& f) {
  detail::require_stratum(f, 1);
  return detail::normalize_one_point_pipeline(f);
}

inline NormalizeResult normalize_two_point(const TrigonalForm& f) {
  detail::require_stratum(f, 2);
  return detail::normalize_two_point_pipeline(f);
}

inline NormalizeResult normalize_three_point(const TrigonalForm& f) {
  detail::require_stratum(f, 3);
  return detail::normalize_three_point_pipeline(f);
}

inline NormalizeResult normalize(const TrigonalForm& f) {
  if (!is_regular(f)) throw domain_error("not in discriminant complement");
  switch (l0_profile(f).distinct_points) {
    case 1: return detail::normalize_one_point_pipeline(f);
    case 2: return detail::normalize_two_point_pipeline(f);
    default: return detail::normalize_three_point_pipeline(f);
  }
}

// The residual C* action on the V1 slice: p_i -> t^{6k+4-3i} p_i,
// q_i -> t^{9k+6-3i} q_i.
inline TrigonalForm v1_residual_scale(const TrigonalForm& f, const Rat& t) {
  if (t == 0) throw input_error("torus parameter must be nonzero");
  if (!in_slice(SliceTag::V1, f)) throw domain_error("slice violation");
  const int k = f.k;
  TrigonalForm out = f;
  for (size_t i = 0; i < out.p.size(); ++i)
    out.p[i] *= rat_pow(t, 6LL * k + 4 - 3 * static_cast<long long>(i));
  for (size_t i = 0; i < out.q.size(); ++i)
    out.q[i] *= rat_pow(t, 9LL * k + 6 - 3 * static_cast<long long>(i));
  return out;
}

// Two V1 members lie in the same orbit iff a complex t matches every
// nonzero coordinate under the residual weights; coordinates vanishing on
// exactly one side rule it out, the rest feed the kernel-lattice test.
inline bool residual_equiv_one_point(const TrigonalForm& f1, const TrigonalForm& f2) {
  if (f1.k != f2.k) throw input_error("comparing forms with different k");
  if (!in_slice(SliceTag::V1, f1) || !in_slice(SliceTag::V1, f2))
    throw domain_error("slice violation");
  const int k = f1.k;
  std::vector<std::vector<Int>> weights;
  std::vector<Rat> ratios;
  auto feed = [&](const Rat& a, const Rat& b, long long w) {
    if (a == 0 && b == 0) return true;
    if (a == 0 || b == 0) return false;
    weights.push_back({Int(w)});
    ratios.push_back(b / a);
    return true;
  };
  for (size_t i = 0; i < f1.p.size(); ++i)
    if (!feed(f1.p[i], f2.p[i], 6LL * k + 4 - 3 * static_cast<long long>(i))) return false;
  for (size_t i = 0; i < f1.q.size(); ++i)
    if (!feed(f1.q[i], f2.q[i], 9LL * k + 6 - 3 * static_cast<long long>(i))) return false;
  return multiplicative_consistency(weights, ratios);
}

// Orbit equality on the V3 slice under (a, a0, t) acting by
// p(x) -> t^2 p(ax + a0), q(x) -> t^3 q(ax + a0).  The translation part is
// removed by a canonical centering (kill q_{3k+2} when q_{3k+3} != 0, else
// kill p_{2k+1}), after which the remaining 2-torus is decided by the
// kernel-lattice test with weight vectors (i, 2) and (i, 3).
inline bool residual_equiv_three_point(const TrigonalForm& f1, const TrigonalForm& f2) {
  if (f1.k != f2.k) throw input_error("comparing forms with different k");
  if (!in_slice(SliceTag::V3, f1) || !in_slice(SliceTag::V3, f2))
    throw domain_error("slice violation");
  if (l0_profile(f1).distinct_points != 3 || l0_profile(f2).distinct_points != 3)
    throw domain_error("residual_equiv_three_point requires three-point forms");
  const int k = f1.k;
  const size_t i_q3 = static_cast<size_t>(3 * k + 3), i_q2 = static_cast<size_t>(3 * k + 2);
  const size_t i_p2 = static_cast<size_t>(2 * k + 2), i_p1 = static_cast<size_t>(2 * k + 1);
  const bool qz1 = f1.q[i_q3] == 0, qz2 = f2.q[i_q3] == 0;
  if (qz1 != qz2) return false;  // the vanishing of q_{3k+3} is orbit-invariant

  auto center = [&](const TrigonalForm& f) {
    if (!qz1) return detail::x_shift(f, -f.q[i_q2] / (Rat(3 * k + 3) * f.q[i_q3]));
    if (f.p[i_p2] == 0) throw internal_error("three points with q_{3k+3} = p_{2k+2} = 0");
    return detail::x_shift(f, -f.p[i_p1] / (Rat(2 * k + 2) * f.p[i_p2]));
  };
  const TrigonalForm c1 = center(f1), c2 = center(f2);

  std::vector<std::vector<Int>> weights;
  std::vector<Rat> ratios;
  auto feed = [&](const Rat& a, const Rat& b, long long i, long long t_weight) {
    if (a == 0 && b == 0) return true;
    if (a == 0 || b == 0) return false;
    weights.push_back({Int(i), Int(t_weight)});
    ratios.push_back(b / a);
    return true;
  };
  for (size_t i = 0; i < c1.p.size(); ++i)
    if (!feed(c1.p[i], c2.p[i], static_cast<long long>(i), 2)) return false;
  for (size_t i = 0; i < c1.q.size(); ++i)
    if (!feed(c1.q[i], c2.q[i], static_cast<long long>(i), 3)) return false;
  return multiplicative_consistency(weights, ratios);
}

// Full orbit-equality decision: stratum must match; one- and three-point
// strata are compared up to their residual actions, the two-point normal
// form is unique so equality there is literal.
inline bool orbit_equal(const TrigonalForm& f1, const TrigonalForm& f2) {
  if (f1.k != f2.k) throw input_error("comparing forms with different k");
  if (!is_regular(f1) || !is_regular(f2)) throw domain_error("not in discriminant complement");
  const int d1 = l0_profile(f1).distinct_points;
  const int d2 = l0_profile(f2).distinct_points;
  if (d1 != d2) return false;
  switch (d1) {
    case 1:
      return residual_equiv_one_point(detail::normalize_one_point_pipeline(f1).form,
                                      detail::normalize_one_point_pipeline(f2).form);
    case 2:
      return detail::normalize_two_point_pipeline(f1).form ==
             detail::normalize_two_point_pipeline(f2).form;
    default:
      return residual_equiv_three_point(detail::normalize_three_point_pipeline(f1).form,
                                        detail::normalize_three_point_pipeline(f2).form);
  }
}

}  // namespace trigstrata
