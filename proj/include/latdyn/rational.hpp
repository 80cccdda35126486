#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace latdyn {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int num(const Rat& q) { return numerator(q); }
inline Int den(const Rat& q) { return denominator(q); }

inline bool is_integer(const Rat& q) { return den(q) == 1; }

inline Int to_int(const Rat& q) {
  if (!is_integer(q)) throw std::invalid_argument("to_int: not an integer: " + q.str());
  return num(q);
}

inline int sign(const Int& x) { return x.sign(); }
inline int sign(const Rat& x) { return x.sign(); }

inline Int ipow(Int base, unsigned e) {
  Int r = 1;
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

inline Rat rpow(const Rat& base, unsigned e) {
  return Rat(ipow(num(base), e), ipow(den(base), e));
}

// floor(sqrt(n)) for n >= 0
inline Int isqrt(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative");
  return sqrt(n);
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
  if (n < 0) return false;
  Int s = isqrt(n);
  if (s * s == n) {
    if (root) *root = s;
    return true;
  }
  return false;
}

// exact rational square root, if it exists
inline bool rational_sqrt(const Rat& q, Rat* out) {
  if (q < 0) return false;
  Int a, b;
  if (!is_perfect_square(num(q), &a) || !is_perfect_square(den(q), &b)) return false;
  if (out) *out = Rat(a, b);
  return true;
}

inline Rat parse_rational(const std::string& s) {
  try {
    return Rat(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse rational: '" + s + "'");
  }
}

inline double to_double(const Rat& q) { return q.convert_to<double>(); }

// approximate log2 of a positive integer, good to ~1e-9 relative
inline double log2_approx(const Int& n) {
  if (n <= 0) throw std::invalid_argument("log2_approx: nonpositive");
  unsigned long bits = msb(n);  // position of most significant bit
  if (bits <= 52) return std::log2(n.convert_to<double>());
  Int top = n >> (bits - 52);
  return std::log2(top.convert_to<double>()) + double(bits - 52);
}

}  // namespace latdyn
