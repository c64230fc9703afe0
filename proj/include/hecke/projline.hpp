#pragma once

/**
 * @file projline.hpp
 * @brief The projective line P^1(Z/NZ) as the coset space of Gamma_0(N).
 *
 * A point [c:d] is the class of (c, d) under multiplication by units of
 * Z/NZ. Points are always stored as a canonical representative: over the
 * unit orbit, the smallest d, then the smallest c. For N = 6 this gives
 *
 *   [1:0] [0:1] [1:1] [2:1] [3:1] [4:1] [5:1] [1:2] [3:2] [5:2] [1:3] [2:3]
 *
 * The modular group acts on the right through its generators
 *
 *   [c:d].S = [d : -c]        [c:d].U = [d : -(c+d)]        [c:d].T = [c+d : d]
 *
 * with T = US (U applied first).  Each point also names a projective
 * lattice L_{M,b} at hyperdistance N from L_1.
 */

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace hecke {

class ProjPoint {
public:
  /// Canonical representative of [c:d] mod n. Throws NotAPoint when
  /// gcd(c, d, n) > 1.
  static ProjPoint normalize(std::int64_t c, std::int64_t d, std::int64_t n);

  std::int64_t modulus() const { return n_; }
  std::int64_t c() const { return c_; }
  std::int64_t d() const { return d_; }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

  /// Order used by enumerate(): modulus, then d, then c.
  friend std::strong_ordering operator<=>(const ProjPoint& x, const ProjPoint& y) {
    if (auto o = x.n_ <=> y.n_; o != 0) return o;
    if (auto o = x.d_ <=> y.d_; o != 0) return o;
    return x.c_ <=> y.c_;
  }

  std::string str() const { return "[" + std::to_string(c_) + ":" + std::to_string(d_) + "]"; }
  friend std::ostream& operator<<(std::ostream& os, const ProjPoint& p) { return os << p.str(); }

private:
  ProjPoint(std::int64_t n, std::int64_t c, std::int64_t d) : n_(n), c_(c), d_(d) {}

  std::int64_t n_ = 1;
  std::int64_t c_ = 0;
  std::int64_t d_ = 1;
};

/// Free function form of ProjPoint::normalize.
inline ProjPoint normalize(std::int64_t c, std::int64_t d, std::int64_t n) {
  return ProjPoint::normalize(c, d, n);
}

inline ProjPoint ProjPoint::normalize(std::int64_t c, std::int64_t d, std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("normalize: modulus must be positive");
  if (n == 1) return {1, 0, 1};
  c = mod(c, n);
  d = mod(d, n);
  if (gcd3(c, d, n) != 1)
    throw NotAPoint("[" + std::to_string(c) + ":" + std::to_string(d) + "] is not a point of P^1(Z/" +
                    std::to_string(n) + "Z)");
  // The unit orbit of d consists of the residues sharing gcd(d, n); its
  // least element is that gcd (or 0 when d == 0).
  const std::int64_t g = std::gcd(d, n);
  if (d == 0) return {n, 1, 0}; // c is then a unit
  // Units u with u*d == g (mod n) are u0 + k*(n/g).
  const std::int64_t step = n / g;
  const std::int64_t u0 = inverse_mod(d / g, step);
  std::int64_t best = n;
  for (std::int64_t k = 0; k < g; ++k) {
    const std::int64_t u = u0 + k * step;
    if (std::gcd(u, n) != 1) continue;
    best = std::min(best, mulmod(u, c, n));
  }
  return {n, best, g};
}

/// |P^1(Z/NZ)| = N * prod_{p | N} (1 + 1/p), the index of Gamma_0(N).
inline std::int64_t index(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("index: level must be positive");
  std::int64_t r = 1;
  for (auto [p, e] : factorize(n)) r *= (p + 1) * ipow(p, e - 1);
  return r;
}

/// All points of P^1(Z/NZ), sorted by (d, c).
inline std::vector<ProjPoint> enumerate(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("enumerate: level must be positive");
  if (n == 1) return {ProjPoint::normalize(0, 1, 1)};
  std::vector<ProjPoint> out;
  out.reserve(static_cast<std::size_t>(index(n)));
  out.push_back(ProjPoint::normalize(1, 0, n));
  // Canonical d values are exactly the proper divisors of n.
  for (std::int64_t g : divisors(n)) {
    if (g == n) continue;
    for (std::int64_t c = 0; c < n; ++c) {
      if (std::gcd(c, g) != 1) continue;
      ProjPoint p = ProjPoint::normalize(c, g, n);
      if (p.c() == c) out.push_back(p);
    }
  }
  if (static_cast<std::int64_t>(out.size()) != index(n))
    throw InternalInconsistency("enumerate: point count disagrees with the index formula");
  return out;
}

inline ProjPoint act_S(const ProjPoint& p) {
  return ProjPoint::normalize(p.d(), -p.c(), p.modulus());
}

inline ProjPoint act_U(const ProjPoint& p) {
  return ProjPoint::normalize(p.d(), -(p.c() + p.d()), p.modulus());
}

inline ProjPoint act_T(const ProjPoint& p) {
  return ProjPoint::normalize(p.c() + p.d(), p.d(), p.modulus());
}

/// Reduction P^1(Z/mnZ) -> P^1(Z/mZ) x P^1(Z/nZ) for coprime m, n.
inline std::pair<ProjPoint, ProjPoint> crt_split(const ProjPoint& p, std::int64_t m, std::int64_t n) {
  if (m <= 0 || n <= 0 || std::gcd(m, n) != 1)
    throw std::invalid_argument("crt_split: factors must be positive and coprime");
  if (m * n != p.modulus()) throw std::invalid_argument("crt_split: m*n must equal the modulus");
  return {ProjPoint::normalize(p.c(), p.d(), m), ProjPoint::normalize(p.c(), p.d(), n)};
}

/// Inverse of crt_split.
inline ProjPoint crt_combine(const ProjPoint& p1, const ProjPoint& p2) {
  const std::int64_t m = p1.modulus(), n = p2.modulus();
  if (std::gcd(m, n) != 1) throw std::invalid_argument("crt_combine: moduli not coprime");
  return ProjPoint::normalize(crt_pair(p1.c(), m, p2.c(), n), crt_pair(p1.d(), m, p2.d(), n), m * n);
}

// ---------------------------------------------------------------------------
// Lattice labels
// ---------------------------------------------------------------------------

/// Conway's name L_{M,b} of the projective lattice with coset
/// representative (M b; 0 1), M > 0 and 0 <= b < 1.
struct LatticeLabel {
  Rat M;
  Rat b;

  Mat2 matrix() const { return {M, b, 0, 1}; }

  /// "L_{M,b}", shortened to "L_{M}" when b == 0 ("L_6", "L_{1/6}", "L_{2/3,1/3}").
  std::string str() const {
    std::string m = M.short_str();
    if (b.is_zero()) return m.size() == 1 ? "L_" + m : "L_{" + m + "}";
    return "L_{" + m + "," + b.short_str() + "}";
  }

  /// Parses the output of str(), with or without the "L_" prefix and braces.
  static LatticeLabel parse(std::string s) {
    if (s.rfind("L_", 0) == 0) s = s.substr(2);
    if (!s.empty() && s.front() == '{') {
      if (s.back() != '}') throw std::invalid_argument("LatticeLabel::parse: unbalanced braces");
      s = s.substr(1, s.size() - 2);
    }
    auto comma = s.find(',');
    if (comma == std::string::npos) return {Rat::parse(s), 0};
    return {Rat::parse(s.substr(0, comma)), Rat::parse(s.substr(comma + 1))};
  }

  friend bool operator==(const LatticeLabel&, const LatticeLabel&) = default;
  friend std::ostream& operator<<(std::ostream& os, const LatticeLabel& l) { return os << l.str(); }
};

/// Reduces g in GL2+(Q) to the unique representative (M b; 0 1) of its
/// coset PSL2(Z) . [g].
inline LatticeLabel coset_representative(const Mat2& g) {
  if (g.det().sign() <= 0) throw std::invalid_argument("coset_representative: determinant must be positive");
  // Coprime (s, t) with s*a + t*c == 0.
  BigInt s, t;
  if (g.c.is_zero()) {
    s = 0;
    t = 1;
  } else if (g.a.is_zero()) {
    s = 1;
    t = 0;
  } else {
    Rat ratio = -g.c / g.a; // s / t
    s = ratio.num();
    t = ratio.den();
  }
  // m*t - n*s == 1, from the Bezout pair of (t, -s).
  const Bezout e = ext_gcd(static_cast<std::int64_t>(t), static_cast<std::int64_t>(-s));
  if (e.g != 1) throw InternalInconsistency("coset_representative: s and t not coprime");
  const Rat m(e.x), n(e.y), sr(s), tr(t);
  const Rat top_right = m * g.b + n * g.d;
  const Rat top_left = m * g.a + n * g.c;
  const Rat bottom_right = sr * g.b + tr * g.d;
  const Rat bottom_left = sr * g.a + tr * g.c;
  if (!bottom_left.is_zero() || bottom_right.is_zero())
    throw InternalInconsistency("coset_representative: elimination failed");
  LatticeLabel out{top_left / bottom_right, (top_right / bottom_right).frac()};
  if (out.M.sign() <= 0) throw InternalInconsistency("coset_representative: non-positive M");
  return out;
}

namespace detail {

// A coprime integer pair in the class of p: the canonical pair if already
// coprime, else the first unit multiple with coprime coordinates, else a
// lift c + kN.
inline std::pair<std::int64_t, std::int64_t> coprime_lift(const ProjPoint& p) {
  const std::int64_t n = p.modulus();
  if (n == 1) return {0, 1};
  if (std::gcd(p.c(), p.d()) == 1) return {p.c(), p.d()};
  for (std::int64_t u = 2; u < n; ++u) {
    if (std::gcd(u, n) != 1) continue;
    std::int64_t c = mulmod(u, p.c(), n), d = mulmod(u, p.d(), n);
    if (std::gcd(c, d) == 1) return {c, d};
  }
  for (std::int64_t k = 1;; ++k) {
    std::int64_t c = p.c() + k * n;
    if (std::gcd(c, p.d()) == 1) return {c, p.d()};
  }
}

} // namespace detail

/// The matrix (Na Nb; c d) with ad - bc = 1 whose PSL2(Z)-coset is the
/// lattice attached to p.
inline Mat2 lattice_matrix(const ProjPoint& p) {
  const std::int64_t n = p.modulus();
  auto [c, d] = detail::coprime_lift(p);
  // a*d - b*c == 1
  Bezout e = ext_gcd(d, c);
  if (e.g != 1) throw InternalInconsistency("lattice_matrix: lift is not coprime");
  const std::int64_t a = e.x, b = -e.y;
  return {Rat(n) * Rat(a), Rat(n) * Rat(b), Rat(c), Rat(d)};
}

inline LatticeLabel to_lattice_label(const ProjPoint& p) { return coset_representative(lattice_matrix(p)); }

/// The point whose lattice is L_{M,b}. Throws WrongHyperdistance unless the
/// label lies at hyperdistance n from L_1.
inline ProjPoint from_lattice_label(const LatticeLabel& lab, std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("from_lattice_label: level must be positive");
  if (lab.M.sign() <= 0 || lab.b.sign() < 0 || lab.b >= Rat(1))
    throw std::invalid_argument("from_lattice_label: label out of range");
  const Mat2 g = lab.matrix();
  if (pdet(g) != n)
    throw WrongHyperdistance(lab.str() + " has hyperdistance " + pdet(g).str() + " from L_1, not " +
                             std::to_string(n));
  if (n == 1) return ProjPoint::normalize(0, 1, 1);
  // Integral primitive rows (p q; 0 r), pr == n. The rows span a lattice
  // containing nZ^2 whose image mod n is the line [c:d], so some
  // k (p, q) + j (0, r) generates it.
  const Rat alpha = integral_scale(g);
  const auto p = static_cast<std::int64_t>((alpha * lab.M).num());
  const auto q = static_cast<std::int64_t>((alpha * lab.b).num());
  const auto r = static_cast<std::int64_t>(alpha.num());
  for (std::int64_t k = 0; k < n; ++k) {
    for (std::int64_t j = 0; j < n; ++j) {
      const std::int64_t c = mulmod(p, k, n), d = mod(mulmod(q, k, n) + mulmod(r, j, n), n);
      if (gcd3(c, d, n) != 1) continue;
      ProjPoint pt = ProjPoint::normalize(c, d, n);
      if (to_lattice_label(pt) != lab) throw InternalInconsistency("from_lattice_label: inverse check failed");
      return pt;
    }
  }
  throw InternalInconsistency("from_lattice_label: no generator found");
}

} // namespace hecke
