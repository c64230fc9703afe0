#pragma once

/**
 * @file belyi.hpp
 * @brief Belyi maps J = beta_{0,N}(t) of the fifteen genus-zero X_0(N).
 *
 * Each map is stored in factored form in a Hauptmodul t and checked
 * against the dessin B_{0,N}: zeros of beta are the black vertices (with
 * multiplicity the valency), zeros of beta - 1 the white vertices, and
 * poles the cusps (with multiplicity the width). Everything is exact; the
 * multiplicities come from squarefree decompositions, never from roots.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "arith.hpp"
#include "cusps.hpp"
#include "dessin.hpp"
#include "poly.hpp"
#include "projline.hpp"

namespace hecke {

/// The fifteen levels with X_0(N) of genus zero.
inline constexpr std::array<std::int64_t, 15> genus_zero_levels{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25};

inline bool is_genus_zero_level(std::int64_t n) {
  return std::find(genus_zero_levels.begin(), genus_zero_levels.end(), n) != genus_zero_levels.end();
}

struct FactorPower {
  Poly poly;
  int exponent;
};

/// constant * prod num_i^e_i / prod den_j^f_j.
struct FactoredRationalFunction {
  Rat constant;
  std::vector<FactorPower> numerator;
  std::vector<FactorPower> denominator;

  /// prod num_i^e_i, without the constant.
  Poly numerator_product() const { return product(numerator); }
  Poly denominator_product() const { return product(denominator); }

  /// Expanded numerator P and denominator Q with beta = P / Q; the
  /// constant's numerator goes to P and its denominator to Q.
  Poly expanded_numerator() const { return numerator_product() * Rat(constant.num()); }
  Poly expanded_denominator() const { return denominator_product() * Rat(constant.den()); }

  /// Value at x, evaluated factor by factor.
  Rat eval(const Rat& x) const {
    Rat v = constant;
    for (const auto& [p, e] : numerator) v *= power(p.eval(x), e);
    for (const auto& [p, e] : denominator) v /= power(p.eval(x), e);
    return v;
  }

  std::string str() const {
    auto side = [](const std::vector<FactorPower>& fs) {
      std::string out;
      for (const auto& [p, e] : fs) {
        if (!out.empty()) out += " * ";
        const bool bare = p.degree() == 1 && p.coeff(0).is_zero() && p.leading() == Rat(1);
        out += bare ? "t" : "(" + p.str() + ")";
        if (e > 1) out += "^" + std::to_string(e);
      }
      return out.empty() ? std::string("1") : out;
    };
    std::string num = side(numerator), den = side(denominator);
    if (constant.num() != 1) num = constant.num().str() + " * " + num;
    if (constant.den() != 1) den = constant.den().str() + " * " + den;
    return den == "1" ? num : num + " / (" + den + ")";
  }

private:
  static Rat power(const Rat& x, int e) {
    Rat r = 1;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
  }
  static Poly product(const std::vector<FactorPower>& fs) {
    Poly r = Poly::constant(1);
    for (const auto& [p, e] : fs) r = r * p.pow(e);
    return r;
  }
};

namespace detail {

// Polynomial from integer coefficients listed highest degree first.
inline Poly high_first(std::initializer_list<long long> cs) {
  std::vector<Rat> v;
  for (auto it = std::rbegin(cs); it != std::rend(cs); ++it) v.emplace_back(*it);
  return Poly(std::move(v));
}

struct BelyiEntry {
  std::int64_t level;
  FactoredRationalFunction map;
  Rat value_at_one; // transcription checksum
};

inline std::vector<BelyiEntry> make_belyi_entries() {
  const Poly t = Poly::t();
  auto P = [](std::initializer_list<long long> cs) { return high_first(cs); };
  std::vector<BelyiEntry> e;
  e.push_back({1, {1, {{t, 1}}, {}}, Rat(1)});
  e.push_back({2, {Rat(1, 1728), {{P({1, 256}), 3}}, {{t, 2}}}, Rat(16974593, 1728)});
  e.push_back({3, {Rat(27, 1728), {{P({1, 9}), 3}, {P({1, 1}), 1}}, {{t, 3}}}, Rat(125, 4)});
  e.push_back({4, {Rat(16, 1728), {{P({1, 16, 16}), 3}}, {{P({1, 1}), 1}, {t, 4}}}, Rat(1331, 8)});
  e.push_back({5, {Rat(1, 1728), {{P({1, 250, 3125}), 3}}, {{t, 5}}}, Rat(601211584, 27)});
  e.push_back({6,
               {Rat(1, 1728),
                {{P({2, 3}), 3}, {P({8, 252, 486, 243}), 3}},
                {{t, 6}, {P({8, 9}), 3}, {P({1, 1}), 2}}},
               Rat(BigInt(120920208625LL), BigInt(33958656))});
  e.push_back({7, {Rat(1, 1728), {{P({1, 13, 49}), 1}, {P({1, 245, 2401}), 3}}, {{t, 7}}},
               Rat(BigInt(129825458161LL), BigInt(192))});
  e.push_back({8,
               {Rat(4, 1728), {{P({1, 64, 320, 512, 256}), 3}}, {{t, 8}, {P({1, 2}), 2}, {P({1, 1}), 1}}},
               Rat(1532808577, 7776)});
  e.push_back({9,
               {Rat(3, 1728), {{P({1, 3}), 3}, {P({1, 81, 243, 243}), 3}}, {{t, 9}, {P({1, 3, 3}), 1}}},
               Rat(183250432, 63)});
  e.push_back({10,
               {Rat(1, 1728),
                {{P({1, 260, 6400, 64000, 320000, 800000, 800000}), 3}},
                {{t, 10}, {P({1, 5}), 5}, {P({1, 4}), 2}}},
               Rat(BigInt("7888454487007174781"), BigInt(335923200))});
  e.push_back({12,
               {Rat(1, 1728),
                {{P({3, 252, 1464, 3456, 4032, 2304, 512}), 3}, {P({3, 12, 8}), 3}},
                {{t, 12}, {P({3, 4}), 4}, {P({1, 2}), 3}, {P({1, 1}), 3}, {P({3, 2}), 1}}},
               Rat(BigInt(21145699168383889LL), BigInt(4480842240LL))});
  e.push_back({13,
               {Rat(1, 1728), {{P({1, 247, 3380, 15379, 28561}), 3}, {P({1, 5, 13}), 1}}, {{t, 13}}},
               Rat(BigInt(1183462601536LL))});
  e.push_back({16,
               {Rat(2, 1728),
                {{P({1, 128, 1408, 6656, 17664, 28672, 28672, 16384, 4096}), 3}},
                {{t, 16}, {P({1, 2}), 4}, {P({1, 2, 2}), 1}, {P({1, 1}), 1}}},
               Rat(BigInt(1114544804970241LL), BigInt(699840))});
  // The printed table has (t^2 + 3)^2 here; exponent 1 is the one consistent
  // with the dessin (see tests/test_belyi.cpp).
  e.push_back({18,
               {Rat(1, 1728),
                {{P({1, 9, 270, 1728, 5832, 13122, 21870, 26244, 19683, 6561}), 3}, {P({1, 3, 9, 9}), 3}},
                {{t, 18}, {P({1, 3}), 9}, {P({1, 3, 3}), 2}, {P({1, 0, 3}), 1}, {P({1, 1}), 1}}},
               Rat(BigInt(2251439055699625LL), BigInt(43352064))});
  e.push_back({25,
               {Rat(1, 1728),
                {{P({1, 250, 4375, 35000, 178125, 631250, 1640625, 3125000, 4296875, 3906250, 1953125}), 3}},
                {{t, 25}, {P({1, 5, 15, 25, 25}), 1}}},
               Rat(BigInt("61289697410100480959"), BigInt(1917))});
  return e;
}

// Built once; every entry's checksum is verified against both a factored
// and an expanded evaluation at t = 1.
inline const std::vector<BelyiEntry>& belyi_entries() {
  static const std::vector<BelyiEntry> entries = [] {
    auto es = make_belyi_entries();
    for (const auto& en : es) {
      const Rat factored = en.map.eval(1);
      const Rat expanded = en.map.expanded_numerator().eval(1) / en.map.expanded_denominator().eval(1);
      if (factored != en.value_at_one || expanded != en.value_at_one)
        throw InternalInconsistency("Belyi table: checksum mismatch for N=" + std::to_string(en.level) + " (stored " +
                                    en.value_at_one.str() + ", factored " + factored.str() + ", expanded " +
                                    expanded.str() + ")");
    }
    return es;
  }();
  return entries;
}

} // namespace detail

/// beta_{0,N} in the genus-zero table. Throws NotGenusZero otherwise.
inline const FactoredRationalFunction& belyi_table(std::int64_t n) {
  for (const auto& en : detail::belyi_entries())
    if (en.level == n) return en.map;
  throw NotGenusZero("X_0(" + std::to_string(n) + ") does not have genus zero");
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

struct VerificationCheck {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string got;
};

struct VerificationReport {
  std::int64_t level = 0;
  std::vector<VerificationCheck> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
  }
  const VerificationCheck* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// Multiplicity -> total degree of the factors with that multiplicity.
using MultiplicityProfile = std::map<int, std::int64_t>;

inline MultiplicityProfile multiplicity_profile(const Poly& f) {
  MultiplicityProfile out;
  for (const auto& [g, m] : squarefree_decomposition(f)) out[m] += g.degree();
  return out;
}

/// "3:4 1:2", multiplicities descending, zero entries dropped.
inline std::string profile_str(const MultiplicityProfile& p) {
  std::string out;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    if (it->second == 0) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(it->first) + ":" + std::to_string(it->second);
  }
  return out.empty() ? "-" : out;
}

namespace detail {

inline MultiplicityProfile valency_profile(const std::vector<Cycle>& cs) {
  MultiplicityProfile out;
  for (const auto& c : cs) out[static_cast<int>(c.size())] += 1;
  return out;
}

inline bool same_profile(const MultiplicityProfile& a, const MultiplicityProfile& b) {
  return profile_str(a) == profile_str(b);
}

// First coefficient of f that is not a nonnegative integer, or the leading
// one when it is not positive.
inline std::string first_bad_coefficient(const Poly& f, const std::string& which) {
  for (int k = 0; k <= f.degree(); ++k) {
    const Rat c = f.coeff(k);
    if (!c.is_integer() || c.sign() < 0) return which + "[t^" + std::to_string(k) + "]=" + c.short_str();
  }
  if (f.leading().sign() <= 0) return which + " leading coefficient " + f.leading().short_str();
  return {};
}

} // namespace detail

/// Checks beta = belyi_table(N) against the dessin B_{0,N}:
///   degree             max(deg P, deg Q) = index(N)
///   black_profile      zeros of P: multiplicity 3 for 3-valent blacks, 1 for order-3 torsion
///   white_profile      zeros of P - Q: multiplicity 2 for 2-valent whites, 1 for order-2 torsion
///   cusp_profile       poles (with infinity, order deg P - deg Q) = cusp widths
///   positive_coefficients  constant and expanded factor products have nonnegative integer coefficients
inline VerificationReport verify_belyi_map(std::int64_t n, const FactoredRationalFunction& beta) {
  const Dessin d = build(n);
  const VertexSet v = vertex_sets(d);
  const Poly P = beta.expanded_numerator();
  const Poly Q = beta.expanded_denominator();

  VerificationReport rep;
  rep.level = n;

  {
    const std::int64_t got = std::max(P.degree(), Q.degree());
    rep.checks.push_back({"degree", got == index(n) && got == static_cast<std::int64_t>(d.size()),
                          std::to_string(index(n)), std::to_string(got)});
  }
  {
    MultiplicityProfile expected = detail::valency_profile(v.black);
    expected[1] = torsion3_count(n);
    const MultiplicityProfile got = multiplicity_profile(P);
    rep.checks.push_back({"black_profile", detail::same_profile(expected, got), profile_str(expected), profile_str(got)});
  }
  {
    MultiplicityProfile expected = detail::valency_profile(v.white);
    expected[1] = torsion2_count(n);
    const MultiplicityProfile got = multiplicity_profile(P - Q);
    rep.checks.push_back({"white_profile", detail::same_profile(expected, got), profile_str(expected), profile_str(got)});
  }
  {
    const WidthSpectrum expected = width_spectrum(n);
    WidthSpectrum got;
    for (const auto& [g, m] : squarefree_decomposition(Q)) got.add(m, g.degree());
    if (P.degree() > Q.degree()) got.add(P.degree() - Q.degree());
    rep.checks.push_back({"cusp_profile", got == expected, expected.str(), got.str()});
  }
  {
    std::string bad;
    if (beta.constant.sign() <= 0) bad = "constant=" + beta.constant.short_str();
    if (bad.empty()) bad = detail::first_bad_coefficient(beta.numerator_product(), "P");
    if (bad.empty()) bad = detail::first_bad_coefficient(beta.denominator_product(), "Q");
    rep.checks.push_back({"positive_coefficients", bad.empty(), "all nonnegative integers", bad.empty() ? "ok" : bad});
  }
  return rep;
}

inline VerificationReport verify_belyi(std::int64_t n) { return verify_belyi_map(n, belyi_table(n)); }

} // namespace hecke
