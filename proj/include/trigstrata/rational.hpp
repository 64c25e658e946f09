#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace trigstrata {

// All coefficient arithmetic is exact. Int/Rat are arbitrary precision;
// Rat is kept in lowest terms with positive denominator by the backend.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Malformed structural input (bad strings, wrong vector lengths, ...).
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Precondition violations on mathematically valid data (non-regular form
// where regularity is required, zero polynomial, slice violation, ...).
class domain_error : public std::runtime_error {
public:
  explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A property the theory guarantees failed to hold; indicates a bug.
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

inline Rat make_rat(long long num, long long den = 1) {
  if (den == 0) throw input_error("zero denominator");
  return Rat(Int(num), Int(den));
}

// Serializes as "n", "-n" or "n/d" with d > 0 in lowest terms.
inline std::string rat_to_string(const Rat& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline std::string int_to_string(const Int& n) { return n.str(); }

namespace detail {
inline bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}
}  // namespace detail

// Accepts "n", "-n", "n/d" (d > 0); unreduced input is normalized.
inline Rat rat_from_string(const std::string& s) {
  std::string t = s;
  bool neg = false;
  if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
    neg = t[0] == '-';
    t = t.substr(1);
  }
  const auto slash = t.find('/');
  std::string num = t.substr(0, slash == std::string::npos ? t.size() : slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!detail::all_digits(num) || !detail::all_digits(den))
    throw input_error("malformed rational: \"" + s + "\"");
  Int d(den);
  if (d == 0) throw input_error("malformed rational: zero denominator in \"" + s + "\"");
  Rat r(Int(num), d);
  return neg ? Rat(-r) : r;
}

// base^exp for possibly negative or large exponents; 0^negative is an error.
inline Rat rat_pow(const Rat& base, const Int& exp) {
  if (exp == 0) return Rat(1);
  Int e = exp;
  Rat b = base;
  if (e < 0) {
    if (base == 0) throw domain_error("zero base with negative exponent");
    b = Rat(1) / base;
    e = -e;
  }
  Rat acc(1);
  while (e > 0) {
    if ((e & 1) != 0) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

inline Rat rat_pow(const Rat& base, long long exp) { return rat_pow(base, Int(exp)); }

inline Int int_pow(const Int& base, unsigned long exp) {
  Int acc(1), b = base;
  while (exp > 0) {
    if (exp & 1) acc *= b;
    b *= b;
    exp >>= 1;
  }
  return acc;
}

}  // namespace trigstrata
