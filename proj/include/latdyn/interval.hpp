#pragma once

#include <algorithm>
#include <ostream>

#include "latdyn/rational.hpp"

namespace latdyn {

// Closed interval with exact rational endpoints.
struct QInterval {
  Rat lo, hi;

  QInterval() : lo(0), hi(0) {}
  QInterval(Rat v) : lo(v), hi(v) {}
  QInterval(Rat a, Rat b) : lo(std::move(a)), hi(std::move(b)) {
    if (lo > hi) throw std::invalid_argument("QInterval: lo > hi");
  }

  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  bool contains(const QInterval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool is_point() const { return lo == hi; }

  // sign is decided only when the interval avoids 0
  bool positive() const { return lo > 0; }
  bool negative() const { return hi < 0; }
  bool straddles_zero() const { return lo <= 0 && 0 <= hi; }

  friend QInterval operator+(const QInterval& a, const QInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
  }
  friend QInterval operator-(const QInterval& a, const QInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
  }
  friend QInterval operator-(const QInterval& a) { return {-a.hi, -a.lo}; }
  friend QInterval operator*(const QInterval& a, const QInterval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
  }
  friend QInterval operator*(const Rat& s, const QInterval& a) {
    return s >= 0 ? QInterval{s * a.lo, s * a.hi} : QInterval{s * a.hi, s * a.lo};
  }
  friend QInterval operator/(const QInterval& a, const QInterval& b) {
    if (b.straddles_zero()) throw std::domain_error("QInterval division by interval containing 0");
    Rat p1 = a.lo / b.lo, p2 = a.lo / b.hi, p3 = a.hi / b.lo, p4 = a.hi / b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
  }
  friend bool operator==(const QInterval& a, const QInterval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }

  friend std::ostream& operator<<(std::ostream& os, const QInterval& iv) {
    return os << "[" << iv.lo << ", " << iv.hi << "]";
  }
};

// Enclosure of sqrt(q) for q >= 0, width <= `width` (exact point interval when q is a square).
inline QInterval sqrt_enclosure(const Rat& q, const Rat& width) {
  if (q < 0) throw std::domain_error("sqrt_enclosure: negative radicand");
  Rat exact;
  if (rational_sqrt(q, &exact)) return QInterval(exact);
  // sqrt(p/s) = sqrt(p*s)/s; scale by 4^k so the integer sqrt has enough precision
  Int p = num(q) * den(q);
  Int s = den(q);
  unsigned k = 0;
  while (true) {
    Int scaled = p << (2 * k);
    Int r = isqrt(scaled);
    Rat lo = Rat(r, s << k);
    Rat hi = Rat(r + 1, s << k);
    if (hi - lo <= width) return {lo, hi};
    k += 16;
  }
}

inline QInterval sqrt_enclosure(const QInterval& iv, const Rat& width) {
  QInterval a = sqrt_enclosure(iv.lo, width);
  QInterval b = sqrt_enclosure(iv.hi, width);
  return {a.lo, b.hi};
}

}  // namespace latdyn
