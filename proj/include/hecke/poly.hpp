#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over Q.
 *
 * Enough algebra to read off root multiplicities exactly: arithmetic,
 * division, a gcd that runs its remainder sequence on primitive integer
 * polynomials, and Yun's squarefree decomposition.
 */

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace hecke {

/// Coefficients lowest degree first. The zero polynomial has no
/// coefficients; otherwise the last one is nonzero.
class Poly {
public:
  Poly() = default;
  Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); } // NOLINT(google-explicit-constructor)
  Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(Rat v) { return Poly(std::vector<Rat>{std::move(v)}); }
  /// The indeterminate t.
  static Poly t() { return Poly({0, 1}); }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int k) const { return k >= 0 && k <= degree() ? c_[static_cast<std::size_t>(k)] : Rat(0); }
  Rat leading() const { return is_zero() ? Rat(0) : c_.back(); }

  Rat eval(const Rat& x) const {
    Rat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    std::vector<Rat> out;
    for (std::size_t k = 1; k < c_.size(); ++k) out.push_back(c_[k] * Rat(static_cast<long long>(k)));
    return Poly(std::move(out));
  }

  Poly monic() const {
    if (is_zero()) return {};
    return *this * (Rat(1) / leading());
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    return Poly(std::move(out));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<Rat> out;
    for (const Rat& x : a.c_) out.push_back(-x);
    return Poly(std::move(out));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(out));
  }
  friend Poly operator*(const Poly& a, const Rat& k) {
    std::vector<Rat> out;
    for (const Rat& x : a.c_) out.push_back(x * k);
    return Poly(std::move(out));
  }
  friend Poly operator*(const Rat& k, const Poly& a) { return a * k; }

  Poly pow(int e) const {
    if (e < 0) throw std::invalid_argument("Poly::pow: negative exponent");
    Poly r = constant(1), base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  /// Quotient and remainder over Q.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly::divmod: division by zero polynomial");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rat> rem = a.c_;
    std::vector<Rat> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const Rat lead = b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      const Rat f = rem[static_cast<std::size_t>(k + b.degree())] / lead;
      q[static_cast<std::size_t>(k)] = f;
      if (f.is_zero()) continue;
      for (int j = 0; j <= b.degree(); ++j) rem[static_cast<std::size_t>(k + j)] -= f * b.c_[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(b.degree()));
    return {Poly(std::move(q)), Poly(std::move(rem))};
  }

  /// Exact quotient; throws if b does not divide a.
  friend Poly operator/(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InternalInconsistency("Poly: inexact division");
    return q;
  }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  /// Integer polynomial with coprime coefficients and positive leading
  /// coefficient, proportional to *this.
  Poly primitive_part() const {
    if (is_zero()) return {};
    BigInt l = 1;
    for (const Rat& x : c_) l = lcm(l, x.den());
    BigInt g = 0;
    for (const Rat& x : c_) g = boost::multiprecision::gcd(g, x.num() * (l / x.den()));
    Rat scale(l, g);
    if (leading().sign() < 0) scale = -scale;
    return *this * scale;
  }

  /// Whether every coefficient is an integer.
  bool is_integral() const {
    for (const Rat& x : c_)
      if (!x.is_integer()) return false;
    return true;
  }

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Human-readable form in t, highest degree first: "t^2 + 3*t - 1/2".
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const Rat& x = c_[static_cast<std::size_t>(k)];
      if (x.is_zero()) continue;
      Rat mag = x.sign() < 0 ? -x : x;
      if (out.empty()) {
        if (x.sign() < 0) out += "-";
      } else {
        out += x.sign() < 0 ? " - " : " + ";
      }
      const bool unit = mag == Rat(1);
      if (k == 0 || !unit) out += mag.short_str();
      if (k > 0) {
        if (!unit) out += "*";
        out += "t";
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rat> c_;
};

namespace detail {

// Pseudo-remainder of integer polynomials: lc(b)^(deg a - deg b + 1) * a mod b,
// computed without leaving Z[t].
inline Poly pseudo_remainder(const Poly& a, const Poly& b) {
  std::vector<Rat> r = a.coeffs();
  const int db = b.degree();
  const Rat lead = b.leading();
  int dr = a.degree();
  int steps = a.degree() - db + 1;
  while (dr >= db && dr >= 0) {
    const Rat top = r[static_cast<std::size_t>(dr)];
    for (auto& x : r) x *= lead;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(dr - db + j)] -= top * b.coeffs()[static_cast<std::size_t>(j)];
    --steps;
    while (dr >= 0 && r[static_cast<std::size_t>(dr)].is_zero()) --dr;
    r.resize(static_cast<std::size_t>(dr + 1));
  }
  Rat scale = 1;
  for (; steps > 0; --steps) scale *= lead;
  return Poly(std::move(r)) * scale;
}

} // namespace detail

/// Monic gcd. gcd(f, 0) = monic(f); both zero is an error.
inline Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("poly_gcd: both arguments are zero");
  Poly x = a.primitive_part(), y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Poly r = detail::pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

struct SquarefreeFactor {
  Poly factor; // monic, squarefree
  int multiplicity;

  friend bool operator==(const SquarefreeFactor&, const SquarefreeFactor&) = default;
};

/// Yun's algorithm: f = lc(f) * prod g_i^(m_i) with the g_i monic,
/// squarefree, pairwise coprime and non-constant; ordered by multiplicity.
inline std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (f.degree() == 0) return out;
  const Poly fp = f.derivative();
  const Poly a0 = poly_gcd(f, fp);
  Poly b = f / a0;
  Poly c = fp / a0;
  Poly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    Poly a = poly_gcd(b, d);
    if (a.degree() > 0) out.push_back({a.monic(), i});
    b = b / a;
    c = d / a;
    d = c - b.derivative();
  }
  return out;
}

} // namespace hecke
