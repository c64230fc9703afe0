#pragma once

/**
 * @file cusps.hpp
 * @brief Cusps of Gamma_0(N): enumeration, closed-form census, L-series.
 *
 * A cusp is a cycle of T: [c:d] -> [c+d:d] on P^1(Z/NZ); its width is the
 * cycle length. Writing N = prod p^a, each divisor d = prod p^b of N
 * contributes phi(gcd(d, N/d)) cusps of width prod max(1, p^(a - 2b)).
 *
 * The cusp count c(N) is multiplicative, with c(p^(2k+1)) = 2 p^k and
 * c(p^(2k)) = p^(k-1) (p + 1), so its Dirichlet series has Euler factors
 * (1 + p^-s)^2 / (1 - p^(1-2s)) and equals zeta(2s-1) zeta(s)^2 / zeta(2s)^2.
 */

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith.hpp"
#include "dessin.hpp"
#include "projline.hpp"

namespace hecke {

struct Cusp {
  std::vector<ProjPoint> members; // T-orbit, starting at the least point
  std::int64_t width = 0;

  friend bool operator==(const Cusp&, const Cusp&) = default;
};

/// Multiset of cusp widths: width -> number of cusps.
struct WidthSpectrum {
  std::map<std::int64_t, std::int64_t> counts;

  std::int64_t cusp_count() const {
    std::int64_t k = 0;
    for (auto [w, c] : counts) k += c;
    return k;
  }
  /// Sum of all widths, i.e. the index.
  std::int64_t total_width() const {
    std::int64_t k = 0;
    for (auto [w, c] : counts) k += w * c;
    return k;
  }
  void add(std::int64_t width, std::int64_t count = 1) {
    if (count > 0) counts[width] += count;
  }

  /// "16:1 4:1 1:4", widths descending.
  std::string str() const {
    std::string out;
    for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
      if (!out.empty()) out += ' ';
      out += std::to_string(it->first) + ":" + std::to_string(it->second);
    }
    return out;
  }

  friend bool operator==(const WidthSpectrum&, const WidthSpectrum&) = default;
};

inline std::vector<Cusp> enumerate_cusps(const Dessin& d) {
  std::vector<Cusp> out;
  for (const Cycle& cyc : cycles(d.t())) {
    Cusp c;
    c.width = static_cast<std::int64_t>(cyc.size());
    for (std::size_t e : cyc) c.members.push_back(d.edges[e]);
    out.push_back(std::move(c));
  }
  return out;
}

inline WidthSpectrum spectrum_of(const std::vector<Cusp>& cusps) {
  WidthSpectrum s;
  for (const Cusp& c : cusps) s.add(c.width);
  return s;
}

inline std::int64_t cusp_count(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("cusp_count: level must be positive");
  std::int64_t k = 0;
  for (std::int64_t d : divisors(n)) k += euler_phi(std::gcd(d, n / d));
  return k;
}

inline WidthSpectrum width_spectrum(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("width_spectrum: level must be positive");
  const Factorization f = factorize(n);
  WidthSpectrum s;
  for (std::int64_t d : divisors(n)) {
    std::int64_t w = 1;
    for (auto [p, a] : f) {
      int b = 0;
      for (std::int64_t m = d; m % p == 0; m /= p) ++b;
      if (a > 2 * b) w *= ipow(p, a - 2 * b);
    }
    s.add(w, euler_phi(std::gcd(d, n / d)));
  }
  return s;
}

/// Genus of X_0(N) from Riemann-Hurwitz, using only closed forms.
inline std::int64_t genus_rh(std::int64_t n) {
  const std::int64_t e = index(n);
  const std::int64_t nu2 = torsion2_count(n), nu3 = torsion3_count(n);
  std::int64_t ramification = 0;
  for (auto [w, c] : width_spectrum(n).counts) ramification += c * (w - 1);
  // 6 chi = 12E - 3(E - nu2) - 4(E - nu3) - 6 sum c_w (w - 1)
  const std::int64_t six_chi = 12 * e - 3 * (e - nu2) - 4 * (e - nu3) - 6 * ramification;
  if (six_chi % 6 != 0) throw InternalInconsistency("genus_rh: non-integral Euler characteristic for N=" + std::to_string(n));
  const std::int64_t chi = six_chi / 6;
  if (chi % 2 != 0 || chi > 2) throw InternalInconsistency("genus_rh: invalid Euler characteristic for N=" + std::to_string(n));
  return (2 - chi) / 2;
}

/// Whether c(MN) = c(M) c(N) and the width multiset of MN is the product
/// multiset of those of M and N.
inline bool cusp_count_is_multiplicative_check(std::int64_t m, std::int64_t n) {
  if (m <= 0 || n <= 0 || std::gcd(m, n) != 1)
    throw std::invalid_argument("cusp_count_is_multiplicative_check: arguments must be positive and coprime");
  if (cusp_count(m * n) != cusp_count(m) * cusp_count(n)) return false;
  WidthSpectrum product;
  for (auto [w1, c1] : width_spectrum(m).counts)
    for (auto [w2, c2] : width_spectrum(n).counts) product.add(w1 * w2, c1 * c2);
  return product == width_spectrum(m * n);
}

// ---------------------------------------------------------------------------
// L-series of the cusp count
// ---------------------------------------------------------------------------

/// c(1), c(p), ..., c(p^K) from the prime-power formulas.
inline std::vector<BigInt> euler_factor_coeffs(std::int64_t p, int order) {
  if (!is_prime(p)) throw std::invalid_argument("euler_factor_coeffs: " + std::to_string(p) + " is not prime");
  if (order < 0) throw std::invalid_argument("euler_factor_coeffs: negative order");
  std::vector<BigInt> out;
  for (int k = 0; k <= order; ++k) {
    if (k == 0) {
      out.emplace_back(1);
    } else if (k % 2 == 1) {
      out.push_back(2 * boost::multiprecision::pow(BigInt(p), (k - 1) / 2));
    } else {
      out.push_back(boost::multiprecision::pow(BigInt(p), k / 2 - 1) * (p + 1));
    }
  }
  return out;
}

/// Coefficients of (1 + q)^2 / (1 - p q^2) through q^K, by exact power-series
/// division.
inline std::vector<BigInt> euler_factor_closed_form_series(std::int64_t p, int order) {
  if (!is_prime(p)) throw std::invalid_argument("euler_factor_closed_form_series: " + std::to_string(p) + " is not prime");
  if (order < 0) throw std::invalid_argument("euler_factor_closed_form_series: negative order");
  const std::vector<BigInt> numer{1, 2, 1};
  const std::vector<BigInt> denom{1, 0, BigInt(-p)};
  std::vector<BigInt> out;
  for (int k = 0; k <= order; ++k) {
    BigInt v = k < static_cast<int>(numer.size()) ? numer[static_cast<std::size_t>(k)] : BigInt(0);
    for (int j = 1; j <= k && j < static_cast<int>(denom.size()); ++j)
      v -= denom[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(k - j)];
    out.push_back(v); // denom[0] == 1
  }
  return out;
}

/// Partial Dirichlet sum sum_{n <= T} c(n) / n^s (diagnostic only).
inline double dirichlet_partial_sum(double s, std::int64_t terms) {
  long double acc = 0;
  for (std::int64_t n = 1; n <= terms; ++n)
    acc += static_cast<long double>(cusp_count(n)) / std::pow(static_cast<long double>(n), static_cast<long double>(s));
  return static_cast<double>(acc);
}

/// zeta(s) for integer s >= 2: direct summation to M - 1 plus an
/// Euler-Maclaurin tail. With M = 1000 the neglected term is below 1e-20.
inline long double zeta(int s) {
  if (s < 2) throw std::invalid_argument("zeta: s must be at least 2");
  constexpr int M = 1000;
  long double sum = 0;
  for (int n = M - 1; n >= 1; --n) sum += std::pow(static_cast<long double>(n), -s);
  const long double m = M, sl = s;
  // Bernoulli corrections B2/2!, B4/4!, B6/6! applied to f(x) = x^-s.
  long double tail = std::pow(m, 1 - sl) / (sl - 1) + std::pow(m, -sl) / 2;
  tail += sl * std::pow(m, -sl - 1) / 12;
  tail -= sl * (sl + 1) * (sl + 2) * std::pow(m, -sl - 3) / 720;
  tail += sl * (sl + 1) * (sl + 2) * (sl + 3) * (sl + 4) * std::pow(m, -sl - 5) / 30240;
  return sum + tail;
}

/// Euler product of the cusp L-series over primes p <= P, ascending.
inline long double cusp_euler_product(int s, std::int64_t prime_bound) {
  long double prod = 1;
  std::optional<Sieve> local;
  if (prime_bound > default_sieve().bound()) local.emplace(prime_bound);
  const Sieve& sieve = local ? *local : default_sieve();
  for (std::int64_t p : sieve.primes()) {
    if (p > prime_bound) break;
    const long double ps = std::pow(static_cast<long double>(p), -s);
    const long double num = (1 + ps) * (1 + ps);
    const long double den = 1 - std::pow(static_cast<long double>(p), 1 - 2 * s);
    prod *= num / den;
  }
  return prod;
}

/// zeta(2s-1) zeta(s)^2 / zeta(2s)^2.
inline long double cusp_lseries_via_zeta(int s) {
  const long double zs = zeta(s), z2s = zeta(2 * s);
  return zeta(2 * s - 1) * zs * zs / (z2s * z2s);
}

/// |Euler product over p <= P - zeta expression| at integer s >= 2.
inline double zeta_identity_residual(int s, std::int64_t prime_bound) {
  if (s < 2) throw std::invalid_argument("zeta_identity_residual: s must be at least 2");
  if (prime_bound < 2) throw std::invalid_argument("zeta_identity_residual: prime bound must be at least 2");
  return static_cast<double>(std::fabs(cusp_euler_product(s, prime_bound) - cusp_lseries_via_zeta(s)));
}

} // namespace hecke
