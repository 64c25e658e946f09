#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "trigstrata/rational.hpp"
#include "trigstrata/unipoly.hpp"

namespace trigstrata {

// Sparse bivariate polynomial, monomial (i,j) -> coefficient of x^i y^j.
// Invariant: no explicit zero coefficients stored.
class BiPoly {
public:
  using Key = std::pair<int, int>;

  BiPoly() = default;

  static BiPoly constant(const Rat& v) {
    BiPoly b;
    b.add_term(0, 0, v);
    return b;
  }
  static BiPoly var_x() { return monomial(1, 0, Rat(1)); }
  static BiPoly var_y() { return monomial(0, 1, Rat(1)); }
  static BiPoly monomial(int i, int j, const Rat& c) {
    BiPoly b;
    b.add_term(i, j, c);
    return b;
  }
  // p(x) embedded as a polynomial in x (j = 0) or in y (i = 0).
  static BiPoly from_unipoly_x(const UniPoly& p) {
    BiPoly b;
    for (int i = 0; i <= p.degree(); ++i) b.add_term(i, 0, p.coeff(i));
    return b;
  }
  static BiPoly from_unipoly_y(const UniPoly& p) {
    BiPoly b;
    for (int j = 0; j <= p.degree(); ++j) b.add_term(0, j, p.coeff(j));
    return b;
  }

  void add_term(int i, int j, const Rat& c) {
    if (c == 0) return;
    auto key = Key{i, j};
    auto it = t_.find(key);
    if (it == t_.end()) {
      t_.emplace(key, c);
    } else {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }

  Rat coeff(int i, int j) const {
    auto it = t_.find(Key{i, j});
    return it == t_.end() ? Rat(0) : it->second;
  }

  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }
  const std::map<Key, Rat>& terms() const { return t_; }

  int deg_x() const {
    int d = -1;
    for (const auto& [k, v] : t_) d = std::max(d, k.first);
    return d;
  }
  int deg_y() const {
    int d = -1;
    for (const auto& [k, v] : t_) d = std::max(d, k.second);
    return d;
  }

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [k, v] : b.t_) r.add_term(k.first, k.second, v);
    return r;
  }
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [k, v] : b.t_) r.add_term(k.first, k.second, -v);
    return r;
  }
  BiPoly operator-() const {
    BiPoly r;
    for (const auto& [k, v] : t_) r.t_.emplace(k, -v);
    return r;
  }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ka, va] : a.t_)
      for (const auto& [kb, vb] : b.t_)
        r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
    return r;
  }
  friend BiPoly operator*(const Rat& s, const BiPoly& a) {
    BiPoly r;
    if (s == 0) return r;
    for (const auto& [k, v] : a.t_) r.t_.emplace(k, s * v);
    return r;
  }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  BiPoly pow(unsigned e) const {
    BiPoly acc = constant(Rat(1)), b = *this;
    while (e > 0) {
      if (e & 1u) acc = acc * b;
      b = b * b;
      e >>= 1u;
    }
    return acc;
  }

  BiPoly dx() const {
    BiPoly r;
    for (const auto& [k, v] : t_)
      if (k.first > 0) r.add_term(k.first - 1, k.second, Rat(k.first) * v);
    return r;
  }
  BiPoly dy() const {
    BiPoly r;
    for (const auto& [k, v] : t_)
      if (k.second > 0) r.add_term(k.first, k.second - 1, Rat(k.second) * v);
    return r;
  }

  Rat eval(const Rat& x, const Rat& y) const {
    Rat acc(0);
    for (const auto& [k, v] : t_) acc += v * rat_pow(x, k.first) * rat_pow(y, k.second);
    return acc;
  }

  // Coefficients with respect to y, as polynomials in x (index = y-degree).
  std::vector<UniPoly> y_coeffs() const {
    const int dy = deg_y();
    std::vector<std::vector<Rat>> raw(static_cast<size_t>(std::max(dy + 1, 0)));
    for (const auto& [k, v] : t_) {
      auto& row = raw[static_cast<size_t>(k.second)];
      if (static_cast<int>(row.size()) <= k.first) row.resize(static_cast<size_t>(k.first) + 1, Rat(0));
      row[static_cast<size_t>(k.first)] = v;
    }
    std::vector<UniPoly> out;
    out.reserve(raw.size());
    for (auto& row : raw) out.emplace_back(std::move(row));
    return out;
  }

  static BiPoly from_y_coeffs(const std::vector<UniPoly>& cs) {
    BiPoly r;
    for (size_t j = 0; j < cs.size(); ++j)
      for (int i = 0; i <= cs[j].degree(); ++i) r.add_term(i, static_cast<int>(j), cs[j].coeff(i));
    return r;
  }

  // f(xs, ys): full expansion of the substitution x -> xs, y -> ys.
  BiPoly substitute(const BiPoly& xs, const BiPoly& ys) const {
    const int dx = deg_x(), dy = deg_y();
    std::vector<BiPoly> xp(static_cast<size_t>(std::max(dx + 1, 1)));
    std::vector<BiPoly> yp(static_cast<size_t>(std::max(dy + 1, 1)));
    xp[0] = constant(Rat(1));
    for (int i = 1; i <= dx; ++i) xp[static_cast<size_t>(i)] = xp[static_cast<size_t>(i - 1)] * xs;
    yp[0] = constant(Rat(1));
    for (int j = 1; j <= dy; ++j) yp[static_cast<size_t>(j)] = yp[static_cast<size_t>(j - 1)] * ys;
    BiPoly r;
    for (const auto& [k, v] : t_)
      r = r + v * (xp[static_cast<size_t>(k.first)] * yp[static_cast<size_t>(k.second)]);
    return r;
  }

  std::string to_string(const std::string& xv = "x", const std::string& yv = "y") const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      const auto& [k, v] = *it;
      if (!out.empty()) out += v > 0 ? " + " : " - ";
      else if (v < 0) out += "-";
      const Rat av = v < 0 ? Rat(-v) : v;
      std::string factors;
      if (k.first > 0) factors = xv + (k.first > 1 ? "^" + std::to_string(k.first) : "");
      if (k.second > 0) {
        if (!factors.empty()) factors += "*";
        factors += yv + (k.second > 1 ? "^" + std::to_string(k.second) : "");
      }
      if (factors.empty()) out += rat_to_string(av);
      else if (av == 1) out += factors;
      else out += rat_to_string(av) + "*" + factors;
    }
    return out;
  }

private:
  std::map<Key, Rat> t_;
};

}  // namespace trigstrata
