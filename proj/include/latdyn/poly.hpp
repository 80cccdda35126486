#pragma once

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "latdyn/rational.hpp"

namespace latdyn {

// Dense univariate polynomial, coefficients lowest degree first.
// T is an exact commutative ring; division-based operations require T to be a field.
template <class T>
struct Poly {
  std::vector<T> c;

  Poly() = default;
  explicit Poly(T constant) : c{std::move(constant)} { trim(); }
  explicit Poly(std::vector<T> coeffs) : c(std::move(coeffs)) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(T(1)); }
  static Poly x() { return monomial(1, T(1)); }
  static Poly monomial(int k, T coeff) {
    Poly p;
    p.c.assign(k + 1, T(0));
    p.c[k] = std::move(coeff);
    p.trim();
    return p;
  }

  void trim() {
    while (!c.empty() && c.back() == T(0)) c.pop_back();
  }

  bool is_zero() const { return c.empty(); }
  int degree() const { return int(c.size()) - 1; }  // -1 for the zero polynomial
  const T& lead() const {
    if (is_zero()) throw std::domain_error("lead of zero polynomial");
    return c.back();
  }
  T coeff(int k) const { return (k >= 0 && k < int(c.size())) ? c[k] : T(0); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), T(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), T(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& x : r.c) x = T(0) - x;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, T(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i] == T(0)) continue;
      for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
    r.trim();
    return r;
  }
  friend Poly operator*(const T& s, const Poly& a) {
    Poly r = a;
    for (auto& x : r.c) x = s * x;
    r.trim();
    return r;
  }

  template <class U>
  U eval(const U& x) const {
    U r(0);
    for (int i = degree(); i >= 0; --i) r = r * x + U(c[i]);
    return r;
  }

  Poly derivative() const {
    Poly r;
    if (degree() < 1) return r;
    r.c.resize(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) r.c[i - 1] = T(int(i)) * c[i];
    r.trim();
    return r;
  }

  // x^deg * p(1/x)
  Poly reversed() const {
    Poly r = *this;
    std::reverse(r.c.begin(), r.c.end());
    r.trim();
    return r;
  }

  bool is_palindromic() const {
    if (is_zero()) return false;
    int n = degree();
    for (int i = 0; 2 * i <= n; ++i)
      if (c[i] != c[n - i]) return false;
    return true;
  }
};

// ---- field-coefficient operations ----

template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly<K> q, r = a;
  if (r.degree() >= b.degree()) q.c.assign(r.degree() - b.degree() + 1, K(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    K f = r.lead() / b.lead();
    int k = r.degree() - b.degree();
    q.c[k] = f;
    for (int i = 0; i <= b.degree(); ++i) r.c[i + k] = r.c[i + k] - f * b.c[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

template <class K>
Poly<K> operator/(const Poly<K>& a, const Poly<K>& b) {
  return divmod(a, b).first;
}
template <class K>
Poly<K> operator%(const Poly<K>& a, const Poly<K>& b) {
  return divmod(a, b).second;
}

template <class K>
Poly<K> exact_div(const Poly<K>& a, const Poly<K>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("exact_div: remainder nonzero");
  return q;
}

template <class K>
Poly<K> make_monic(const Poly<K>& a) {
  if (a.is_zero()) return a;
  Poly<K> r = a;
  K inv = K(1) / a.lead();
  for (auto& x : r.c) x = inv * x;
  return r;
}

template <class K>
Poly<K> gcd_poly(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    Poly<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

template <class K>
Poly<K> squarefree_part(const Poly<K>& p) {
  if (p.degree() <= 0) return p;
  Poly<K> g = gcd_poly(p, p.derivative());
  return exact_div(p, g);
}

// Yun's squarefree decomposition: p = prod factors[i].first ^ factors[i].second
template <class K>
std::vector<std::pair<Poly<K>, int>> squarefree_decomposition(const Poly<K>& p) {
  std::vector<std::pair<Poly<K>, int>> out;
  if (p.degree() <= 0) return out;
  Poly<K> a = make_monic(p);
  Poly<K> g = gcd_poly(a, a.derivative());
  if (g.degree() == 0) {
    out.push_back({a, 1});
    return out;
  }
  Poly<K> w = exact_div(a, g);
  Poly<K> y = exact_div(a.derivative(), g);
  Poly<K> z = y - w.derivative();
  int i = 1;
  while (!z.is_zero()) {
    Poly<K> f = gcd_poly(w, z);
    if (f.degree() > 0) out.push_back({f, i});
    w = exact_div(w, f);
    y = exact_div(z, f);
    z = y - w.derivative();
    ++i;
  }
  if (w.degree() > 0) out.push_back({w, i});
  return out;
}

// pseudo-remainder: lead(b)^(deg a - deg b + 1) * a = q*b + r
template <class T>
Poly<T> pseudo_rem(Poly<T> a, const Poly<T>& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_rem by zero");
  int d = a.degree() - b.degree();
  if (d < 0) return a;
  const T lb = b.lead();
  for (int k = d; k >= 0; --k) {
    if (a.degree() == b.degree() + k) {
      T la = a.lead();
      for (auto& x : a.c) x = lb * x;
      for (int i = 0; i <= b.degree(); ++i) a.c[i + k] = a.c[i + k] - la * b.c[i];
      a.trim();
    } else if (!a.is_zero()) {
      // keep scaling uniform so the exponent matches
      for (auto& x : a.c) x = lb * x;
    }
  }
  return a;
}

// ---- rational-coefficient helpers ----

using QPoly = Poly<Rat>;

inline bool has_integer_coeffs(const QPoly& p) {
  for (const auto& x : p.c)
    if (!is_integer(x)) return false;
  return true;
}

inline bool is_monic(const QPoly& p) { return !p.is_zero() && p.lead() == 1; }

// primitive integer form: integer coefficients, content 1, positive leading coefficient
inline QPoly primitive_integer(const QPoly& p) {
  if (p.is_zero()) return p;
  Int l = 1;
  for (const auto& x : p.c) l = lcm(l, den(x));
  Int g = 0;
  for (const auto& x : p.c) g = gcd(g, num(x) * (l / den(x)));
  if (g == 0) g = 1;
  QPoly r = p;
  Rat scale = Rat(l, g);
  if (p.lead() < 0) scale = -scale;
  for (auto& x : r.c) x *= scale;
  return r;
}

inline QPoly poly_from_ints(std::initializer_list<long> coeffs) {
  std::vector<Rat> v;
  for (long x : coeffs) v.emplace_back(x);
  return QPoly(std::move(v));
}

// pretty printer, highest degree first, e.g. "x^3 - 17x^2 - 17x + 1"
inline std::string poly_to_string(const QPoly& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rat a = p.coeff(k);
    if (a == 0) continue;
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    Rat mag = abs(a);
    if (mag != 1 || k == 0) os << mag.str();
    if (k >= 1) {
      os << var;
      if (k >= 2) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

}  // namespace latdyn
