#pragma once

/**
 * @file arith.hpp
 * @brief Exact integer and rational arithmetic.
 *
 * Everything the coset machinery needs below the projective line:
 * prime factorization over a fixed sieve, Euler's totient, Bezout
 * coefficients, the Chinese remainder theorem, exact rationals, and 2x2
 * rational matrices with the projective determinant.
 *
 * Levels are std::int64_t. Rationals carry arbitrary-precision numerators
 * and denominators, so matrix products never overflow.
 */

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace hecke {

using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Integers
// ---------------------------------------------------------------------------

/// Non-negative residue of a modulo m (m > 0).
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// (a * b) mod m without intermediate overflow.
inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  __int128 r = static_cast<__int128>(mod(a, m)) * mod(b, m) % m;
  return static_cast<std::int64_t>(r);
}

inline std::int64_t gcd3(std::int64_t a, std::int64_t b, std::int64_t c) {
  return std::gcd(std::gcd(a, b), c);
}

struct Bezout {
  std::int64_t g; // gcd(|a|, |b|), never negative
  std::int64_t x;
  std::int64_t y;

  friend bool operator==(const Bezout&, const Bezout&) = default;
};

/// Classical iterative extended Euclid: a*x + b*y == g == gcd(|a|,|b|).
/// ext_gcd(0, 0) is (0, 0, 0).
inline Bezout ext_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  if (old_r == 0) return {0, 0, 0};
  return {old_r, old_s, old_t};
}

/// Inverse of a modulo m; throws if gcd(a, m) != 1.
inline std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  Bezout e = ext_gcd(mod(a, m), m);
  if (e.g != 1) throw std::invalid_argument("inverse_mod: not a unit");
  return mod(e.x, m);
}

/// The unique residue in [0, m1*m2) congruent to r1 mod m1 and r2 mod m2.
inline std::int64_t crt_pair(std::int64_t r1, std::int64_t m1, std::int64_t r2,
                             std::int64_t m2) {
  if (m1 <= 0 || m2 <= 0) throw std::invalid_argument("crt_pair: moduli must be positive");
  if (std::gcd(m1, m2) != 1) throw std::invalid_argument("crt_pair: moduli not coprime");
  const std::int64_t m = m1 * m2;
  r1 = mod(r1, m1);
  r2 = mod(r2, m2);
  // r1 + m1 * ((r2 - r1) * m1^{-1} mod m2)
  std::int64_t k = mulmod(mod(r2 - r1, m2), inverse_mod(m1, m2), m2);
  return mod(r1 + static_cast<std::int64_t>(static_cast<__int128>(m1) * k % m), m);
}

// ---------------------------------------------------------------------------
// Factorization
// ---------------------------------------------------------------------------

struct PrimePower {
  std::int64_t prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, primes strictly increasing.
using Factorization = std::vector<PrimePower>;

/// Primes up to a fixed bound, for trial division. Inputs above bound^2
/// cannot be certified and are rejected.
class Sieve {
public:
  static constexpr std::int64_t default_bound = 1'000'000;

  explicit Sieve(std::int64_t bound = default_bound) : bound_(std::max<std::int64_t>(bound, 2)) {
    std::vector<bool> composite(static_cast<std::size_t>(bound_) + 1, false);
    for (std::int64_t i = 2; i <= bound_; ++i) {
      if (composite[static_cast<std::size_t>(i)]) continue;
      primes_.push_back(i);
      for (std::int64_t j = i * i; j <= bound_; j += i) composite[static_cast<std::size_t>(j)] = true;
    }
  }

  std::int64_t bound() const { return bound_; }
  const std::vector<std::int64_t>& primes() const { return primes_; }

  /// Largest input this sieve can factor.
  std::int64_t limit() const { return bound_ * bound_; }

  Factorization factorize(std::int64_t n) const {
    if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
    if (n > limit())
      throw std::invalid_argument("factorize: " + std::to_string(n) +
                                  " exceeds the sieve limit " + std::to_string(limit()) +
                                  " (raise HECKE_SIEVE_BOUND)");
    Factorization out;
    for (std::int64_t p : primes_) {
      if (p * p > n) break;
      if (n % p != 0) continue;
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
  }

private:
  std::int64_t bound_;
  std::vector<std::int64_t> primes_;
};

/// Sieve bound from HECKE_SIEVE_BOUND, or the default.
inline std::int64_t sieve_bound_from_env() {
  if (const char* s = std::getenv("HECKE_SIEVE_BOUND")) {
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (end != s && *end == '\0' && v >= 2 && v <= 100'000'000) return v;
  }
  return Sieve::default_bound;
}

/// Process-wide sieve, built once on first use and immutable afterwards.
inline const Sieve& default_sieve() {
  static const Sieve sieve(sieve_bound_from_env());
  return sieve;
}

inline Factorization factorize(std::int64_t n) { return default_sieve().factorize(n); }

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  Factorization f = factorize(n);
  return f.size() == 1 && f[0].exponent == 1;
}

inline std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

inline std::int64_t euler_phi(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("euler_phi: n must be positive");
  std::int64_t r = 1;
  for (auto [p, e] : factorize(n)) r *= (p - 1) * ipow(p, e - 1);
  return r;
}

/// Positive divisors of n in increasing order.
inline std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t k = out.size();
    std::int64_t pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < k; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Rationals
// ---------------------------------------------------------------------------

/// Exact rational, always reduced with a positive denominator, so that
/// equality is structural.
class Rat {
public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {} // NOLINT(google-explicit-constructor)
  Rat(BigInt n) : num_(std::move(n)), den_(1) {} // NOLINT(google-explicit-constructor)
  Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
  Rat(long long n, long long d) : Rat(BigInt(n), BigInt(d)) {}

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

  Rat operator-() const { return Rat(-num_, den_, raw_tag{}); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rat& a, const Rat& b) { return a.num_ * b.den_ < b.num_ * a.den_; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  /// Largest integer not above the value.
  BigInt floor() const {
    BigInt q = num_ / den_; // truncates toward zero
    if (num_ < 0 && q * den_ != num_) q -= 1;
    return q;
  }

  /// Value minus its floor, in [0, 1).
  Rat frac() const { return *this - Rat(floor()); }

  /// "p/q", with the denominator always present.
  std::string str() const { return num_.str() + "/" + den_.str(); }

  /// "p/q", or "p" when the value is an integer.
  std::string short_str() const { return den_ == 1 ? num_.str() : str(); }

  /// Parses "p/q" or "p".
  static Rat parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rat(BigInt(s));
      return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::runtime_error&) {
      throw std::invalid_argument("Rat::parse: malformed rational '" + s + "'");
    }
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.short_str(); }

private:
  struct raw_tag {};
  Rat(BigInt n, BigInt d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}

  void normalize() {
    if (den_ == 0) throw std::domain_error("Rat: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / boost::multiprecision::gcd(a, b) * b);
}

// ---------------------------------------------------------------------------
// 2x2 rational matrices
// ---------------------------------------------------------------------------

/// Row-major 2x2 rational matrix (a b; c d).
struct Mat2 {
  Rat a, b, c, d;

  static Mat2 identity() { return {1, 0, 0, 1}; }
  static Mat2 diag(Rat x, Rat y) { return {std::move(x), 0, 0, std::move(y)}; }

  Rat det() const { return a * d - b * c; }
  bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }

  Mat2 inverse() const {
    Rat dt = det();
    if (dt.is_zero()) throw std::domain_error("Mat2: singular matrix");
    return {d / dt, -b / dt, -c / dt, a / dt};
  }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend Mat2 operator*(const Rat& k, const Mat2& x) {
    return {k * x.a, k * x.b, k * x.c, k * x.d};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Mat2& m) {
    return os << "(" << m.a << " " << m.b << "; " << m.c << " " << m.d << ")";
  }
};

/// The modular-group generators. S has order 2 and U order 3 in PSL2(Z).
inline Mat2 generator_S() { return {0, -1, 1, 0}; }
inline Mat2 generator_U() { return {0, -1, 1, 1}; }

/// Least positive rational alpha such that alpha * m is integral.
inline Rat integral_scale(const Mat2& m) {
  if (m.is_zero()) throw std::invalid_argument("integral_scale: zero matrix");
  BigInt l = 1;
  for (const Rat* e : {&m.a, &m.b, &m.c, &m.d}) l = lcm(l, e->den());
  BigInt content = 0;
  for (const Rat* e : {&m.a, &m.b, &m.c, &m.d})
    content = boost::multiprecision::gcd(content, e->num() * (l / e->den()));
  return Rat(l, boost::multiprecision::abs(content));
}

/// Projective determinant: det(alpha * m) for the least alpha making the
/// entries integral. Invariant under rational scaling and under left or
/// right multiplication by SL2(Z).
inline BigInt pdet(const Mat2& m) {
  if (m.is_zero()) throw std::invalid_argument("pdet: zero matrix");
  Rat dt = m.det();
  if (dt.sign() <= 0) throw std::invalid_argument("pdet: determinant must be positive");
  Rat alpha = integral_scale(m);
  Rat v = alpha * alpha * dt;
  if (!v.is_integer()) throw InternalInconsistency("pdet: non-integral result");
  return v.num();
}

/// Symmetric hyperdistance between the projective lattices of g1 and g2.
inline BigInt hyperdistance(const Mat2& g1, const Mat2& g2) {
  if (g1.det().sign() <= 0 || g2.det().sign() <= 0)
    throw std::invalid_argument("hyperdistance: matrices must have positive determinant");
  return pdet(g1 * g2.inverse());
}

} // namespace hecke
