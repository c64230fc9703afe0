#pragma once

// Seeded property checks shared by the standalone property binary and the
// acceptance runner.

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hecke/hecke.hpp"

namespace props {

using namespace hecke;

inline constexpr std::uint64_t default_seed = 20240611;

struct Result {
  explicit Result(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return cases > 0 && failures == 0; }
  void check(bool good, const std::string& what) {
    ++cases;
    if (good) return;
    if (failures++ == 0) first_failure = what;
  }
};

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline ProjPoint random_point(std::mt19937_64& rng, std::int64_t n) {
  for (;;) {
    const std::int64_t c = uniform(rng, 0, n - 1), d = uniform(rng, 0, n - 1);
    if (gcd3(c, d, n) == 1) return normalize(c, d, n);
  }
}

inline Mat2 random_positive_matrix(std::mt19937_64& rng, std::int64_t bound) {
  for (;;) {
    Mat2 m{uniform(rng, -bound, bound), uniform(rng, -bound, bound), uniform(rng, -bound, bound),
           uniform(rng, -bound, bound)};
    if (m.det().sign() > 0) {
      const std::int64_t den = uniform(rng, 1, 12);
      return Rat(1, den) * m;
    }
  }
}

// Random word in S, U and the translation (1 1; 0 1).
inline Mat2 random_sl2z(std::mt19937_64& rng) {
  const Mat2 gens[] = {generator_S(), generator_U(), {1, 1, 0, 1}, {1, -1, 0, 1}};
  Mat2 g = Mat2::identity();
  const auto len = uniform(rng, 1, 12);
  for (std::int64_t i = 0; i < len; ++i) g = g * gens[uniform(rng, 0, 3)];
  return g;
}

inline std::string show(const ProjPoint& p) {
  return p.str() + " mod " + std::to_string(p.modulus());
}

inline std::vector<Result> run_all(std::uint64_t seed = default_seed, std::size_t random_cases = 2000) {
  std::mt19937_64 rng(seed);
  std::vector<Result> out;

  Result s2{"S^2 = 1"}, u3{"U^3 = 1"}, t_su{"T = S then U composed (U first)"};
  for (std::int64_t n = 1; n <= 100; ++n)
    for (const ProjPoint& p : enumerate(n)) {
      s2.check(act_S(act_S(p)) == p, show(p));
      u3.check(act_U(act_U(act_U(p))) == p, show(p));
      t_su.check(act_T(p) == act_S(act_U(p)), show(p));
    }
  for (std::size_t i = 0; i < random_cases; ++i) {
    const std::int64_t n = uniform(rng, 2, 1'000'000);
    const ProjPoint p = random_point(rng, n);
    s2.check(act_S(act_S(p)) == p, show(p));
    u3.check(act_U(act_U(act_U(p))) == p, show(p));
    t_su.check(act_T(p) == act_S(act_U(p)), show(p));
  }
  const Mat2 minus_one{-1, 0, 0, -1};
  const Mat2 S = generator_S(), U = generator_U();
  s2.check(S * S == minus_one, "matrix S^2");
  u3.check(U * U * U == minus_one, "matrix U^3");
  t_su.check(S * U == Mat2{-1, -1, 0, -1}, "matrix S*U = -T");
  out.push_back(s2);
  out.push_back(u3);
  out.push_back(t_su);

  Result trans{"transitivity of <x, y>"};
  for (std::int64_t n = 1; n <= 300; ++n) {
    const Dessin d = build(n);
    trans.check(is_transitive(d.x, d.y), "N=" + std::to_string(n));
  }
  out.push_back(trans);

  Result crt{"CRT split/combine equivariance (MN <= 210)"};
  for (std::int64_t m = 2; m <= 105; ++m)
    for (std::int64_t n = 2; m * n <= 210; ++n) {
      if (std::gcd(m, n) != 1) continue;
      for (const ProjPoint& p : enumerate(m * n)) {
        const auto [a, b] = crt_split(p, m, n);
        const auto [sa, sb] = crt_split(act_S(p), m, n);
        const auto [ua, ub] = crt_split(act_U(p), m, n);
        crt.check(sa == act_S(a) && sb == act_S(b), "S " + show(p));
        crt.check(ua == act_U(a) && ub == act_U(b), "U " + show(p));
        crt.check(crt_combine(a, b) == p, "round trip " + show(p));
      }
    }
  out.push_back(crt);

  Result labels{"lattice label round trip (N <= 100)"};
  for (std::int64_t n = 1; n <= 100; ++n)
    for (const ProjPoint& p : enumerate(n)) {
      const LatticeLabel lab = to_lattice_label(p);
      labels.check(from_lattice_label(lab, n) == p, show(p) + " -> " + lab.str());
      labels.check(hyperdistance(lab.matrix(), Mat2::identity()) == n, "hyperdistance " + show(p));
    }
  out.push_back(labels);

  Result sym{"hyperdistance symmetry"};
  for (std::size_t i = 0; i < random_cases; ++i) {
    const Mat2 g1 = random_positive_matrix(rng, 30), g2 = random_positive_matrix(rng, 30);
    std::ostringstream os;
    os << g1 << " " << g2;
    sym.check(hyperdistance(g1, g2) == hyperdistance(g2, g1), os.str());
  }
  out.push_back(sym);

  Result inv{"Pdet SL2(Z) and scaling invariance"};
  for (std::size_t i = 0; i < random_cases; ++i) {
    const Mat2 g = random_positive_matrix(rng, 30);
    const Mat2 left = random_sl2z(rng), right = random_sl2z(rng);
    const Rat k(uniform(rng, 1, 50), uniform(rng, 1, 50));
    const BigInt base = pdet(g);
    std::ostringstream os;
    os << g << " by " << left << " and " << right;
    inv.check(pdet(left * g) == base && pdet(g * right) == base && pdet(left * g * right) == base &&
                  pdet(k * g) == base,
              os.str());
  }
  out.push_back(inv);

  return out;
}

} // namespace props
