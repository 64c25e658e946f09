#pragma once

#include <vector>

#include "trigstrata/intmatrix.hpp"
#include "trigstrata/rational.hpp"

namespace trigstrata {

// Decides whether a point t of the complex torus (C*)^d exists with
// t^{w_j} = ratio_j for every j, where t^{w} denotes prod_c t_c^{w_c}.
//
// Since C* is divisible, such t exists iff every integer relation among the
// weight vectors is matched by the ratios: for each c in the kernel lattice
// { c : sum_j c_j w_j = 0 }, prod_j ratio_j^{c_j} must equal 1.  The kernel
// basis comes out of the Smith normal form of the weight matrix.
inline bool multiplicative_consistency(const std::vector<std::vector<Int>>& weights,
                                       const std::vector<Rat>& ratios) {
  if (weights.size() != ratios.size())
    throw input_error("multiplicative_consistency: weights/ratios length mismatch");
  for (const auto& r : ratios)
    if (r == 0) throw input_error("multiplicative_consistency: zero ratio");
  const int m = static_cast<int>(weights.size());
  if (m == 0) return true;
  const size_t d = weights[0].size();
  for (const auto& w : weights)
    if (w.size() != d) throw input_error("multiplicative_consistency: ragged weights");
  if (d == 0) {  // trivial torus: every exponent map is the constant 1
    for (const auto& r : ratios)
      if (r != 1) return false;
    return true;
  }

  IntMatrix a(static_cast<int>(d), m);  // columns are the weight vectors
  for (int j = 0; j < m; ++j)
    for (size_t c = 0; c < d; ++c) a.at(static_cast<int>(c), j) = weights[static_cast<size_t>(j)][c];

  const SmithResult snf = smith_normal_form(a);
  int rank = 0;
  for (const auto& v : snf.diagonal)
    if (v != 0) ++rank;

  // Kernel basis: columns of `right` past the rank.
  for (int col = rank; col < m; ++col) {
    Rat prod(1);
    for (int j = 0; j < m; ++j) {
      const Int& e = snf.right.at(j, col);
      if (e != 0) prod *= rat_pow(ratios[static_cast<size_t>(j)], e);
    }
    if (prod != 1) return false;
  }
  return true;
}

}  // namespace trigstrata
