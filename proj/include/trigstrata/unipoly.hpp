#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "trigstrata/rational.hpp"

namespace trigstrata {

// Dense univariate polynomial over Rat, index = degree.
// Invariant: empty coefficient list encodes zero; otherwise the leading
// coefficient is nonzero.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(const Rat& v) {
    return v == 0 ? UniPoly() : UniPoly(std::vector<Rat>{v});
  }
  static UniPoly one() { return constant(Rat(1)); }
  static UniPoly monomial(const Rat& coeff, int deg) {
    if (coeff == 0) return UniPoly();
    std::vector<Rat> c(static_cast<size_t>(deg) + 1, Rat(0));
    c.back() = coeff;
    return UniPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_constant() const { return c_.size() <= 1; }

  Rat coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
    return c_[static_cast<size_t>(i)];
  }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UniPoly(std::move(c));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return UniPoly(std::move(c));
  }
  UniPoly operator-() const {
    std::vector<Rat> c(c_);
    for (auto& v : c) v = -v;
    UniPoly r;
    r.c_ = std::move(c);
    return r;
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(c));
  }
  friend UniPoly operator*(const Rat& s, const UniPoly& a) {
    if (s == 0) return UniPoly();
    std::vector<Rat> c(a.c_);
    for (auto& v : c) v *= s;
    UniPoly r;
    r.c_ = std::move(c);
    return r;
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  UniPoly pow(unsigned e) const {
    UniPoly acc = one(), b = *this;
    while (e > 0) {
      if (e & 1u) acc = acc * b;
      b = b * b;
      e >>= 1u;
    }
    return acc;
  }

  Rat eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rat> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = Rat(static_cast<long>(i)) * c_[i];
    return UniPoly(std::move(c));
  }

  // Euclidean division over the field of rationals.
  static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& quo, UniPoly& rem) {
    if (b.is_zero()) throw domain_error("division by zero polynomial");
    std::vector<Rat> r(a.c_);
    const int db = b.degree();
    const Rat lb = b.leading();
    std::vector<Rat> q;
    if (a.degree() >= db) q.assign(static_cast<size_t>(a.degree() - db) + 1, Rat(0));
    int dr = a.degree();
    while (dr >= db) {
      if (r[static_cast<size_t>(dr)] != 0) {
        const Rat f = r[static_cast<size_t>(dr)] / lb;
        q[static_cast<size_t>(dr - db)] = f;
        for (int i = 0; i <= db; ++i)
          r[static_cast<size_t>(dr - db + i)] -= f * b.c_[static_cast<size_t>(i)];
      }
      --dr;
    }
    quo = UniPoly(std::move(q));
    rem = UniPoly(std::move(r));
  }

  UniPoly exact_div(const UniPoly& b) const {
    UniPoly q, r;
    divmod(*this, b, q, r);
    if (!r.is_zero()) throw internal_error("inexact polynomial division");
    return q;
  }

  UniPoly monic() const {
    if (is_zero()) return UniPoly();
    return (Rat(1) / leading()) * *this;
  }

  // Monic gcd via the Euclidean algorithm.
  static UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
      UniPoly q, r;
      divmod(a, b, q, r);
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  // p(x + d) by Horner expansion.
  UniPoly taylor_shift(const Rat& d) const {
    UniPoly acc;
    const UniPoly lin(std::vector<Rat>{d, Rat(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
    return acc;
  }

  // p(a x + d).
  UniPoly compose_linear(const Rat& a, const Rat& d) const {
    UniPoly acc;
    const UniPoly lin(std::vector<Rat>{d, a});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
    return acc;
  }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Rat& v = c_[static_cast<size_t>(i)];
      if (v == 0) continue;
      if (!out.empty()) out += v > 0 ? " + " : " - ";
      else if (v < 0) out += "-";
      const Rat av = v < 0 ? Rat(-v) : v;
      if (av != 1 || i == 0) out += rat_to_string(av);
      if (i > 0) {
        if (av != 1) out += "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

// c / gcd(c, c'), monic; the degree equals the number of distinct complex
// roots of c.
inline UniPoly squarefree_part(const UniPoly& c) {
  if (c.is_zero()) throw domain_error("zero polynomial");
  const UniPoly g = UniPoly::gcd(c, c.derivative());
  return c.exact_div(g).monic();
}

}  // namespace trigstrata
