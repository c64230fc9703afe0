#include <gtest/gtest.h>

#include <set>

#include "hecke/belyi.hpp"
#include "hecke/cusps.hpp"

using namespace hecke;

namespace {

// Multiplicity profile implied by a factored form, assuming (and checking)
// squarefree, pairwise coprime factors.
MultiplicityProfile declared_profile(const std::vector<FactorPower>& fs) {
  MultiplicityProfile out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    EXPECT_EQ(poly_gcd(fs[i].poly, fs[i].poly.derivative()), Poly::constant(1)) << fs[i].poly;
    for (std::size_t j = i + 1; j < fs.size(); ++j) EXPECT_EQ(poly_gcd(fs[i].poly, fs[j].poly), Poly::constant(1));
    out[fs[i].exponent] += fs[i].poly.degree();
  }
  return out;
}

std::set<int> multiplicities(const Poly& f) {
  std::set<int> out;
  for (const auto& [g, m] : squarefree_decomposition(f)) out.insert(m);
  return out;
}

// The denominator of the level-18 map exactly as typeset, with (t^2 + 3)^2.
FactoredRationalFunction printed_level18() {
  FactoredRationalFunction f = belyi_table(18);
  for (auto& fp : f.denominator)
    if (fp.poly == Poly({3, 0, 1})) fp.exponent = 2;
  return f;
}

} // namespace

TEST(BelyiTable, Examples) {
  EXPECT_EQ(belyi_table(1).str(), "t");
  EXPECT_EQ(belyi_table(2).str(), "(t + 256)^3 / (1728 * t^2)");
  EXPECT_EQ(belyi_table(5).str(), "(t^2 + 250*t + 3125)^3 / (1728 * t^5)");
  EXPECT_THROW((void)belyi_table(11), NotGenusZero);
  EXPECT_THROW((void)belyi_table(0), NotGenusZero);
}

TEST(BelyiTable, LevelsAreTheGenusZeroOnes) {
  std::set<std::int64_t> from_dessins;
  for (std::int64_t n = 1; n <= 100; ++n)
    if (genus_euler(build(n)) == 0) from_dessins.insert(n);
  EXPECT_EQ(from_dessins, std::set<std::int64_t>(genus_zero_levels.begin(), genus_zero_levels.end()));
  for (std::int64_t n : genus_zero_levels) EXPECT_NO_THROW((void)belyi_table(n));
}

TEST(BelyiTable, FactoredAndExpandedFormsAgree) {
  for (std::int64_t n : genus_zero_levels) {
    const auto& f = belyi_table(n);
    const Poly P = f.expanded_numerator(), Q = f.expanded_denominator();
    for (long long x : {2LL, 3LL, -5LL, 7LL}) {
      const Rat xr(x);
      if (Q.eval(xr).is_zero()) continue;
      EXPECT_EQ(f.eval(xr), P.eval(xr) / Q.eval(xr)) << "N=" << n << " t=" << x;
    }
    EXPECT_EQ(f.eval(Rat(1, 3)), P.eval(Rat(1, 3)) / Q.eval(Rat(1, 3))) << n;
  }
}

TEST(VerifyBelyi, AllTabulatedMapsPass) {
  for (std::int64_t n : genus_zero_levels) {
    const VerificationReport r = verify_belyi(n);
    ASSERT_EQ(r.checks.size(), 5u);
    for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << "N=" << n << " " << c.name << " " << c.expected << " vs " << c.got;
  }
}

TEST(VerifyBelyi, Degrees) {
  for (auto [n, deg] : {std::pair{2, "3"}, std::pair{13, "14"}, std::pair{18, "36"}}) {
    const VerificationReport r = verify_belyi(n);
    EXPECT_EQ(r.find("degree")->got, deg);
  }
}

TEST(VerifyBelyi, PrintedLevel18VariantFailsWhiteAndCuspChecks) {
  const VerificationReport r = verify_belyi_map(18, printed_level18());
  EXPECT_TRUE(r.find("degree")->pass);
  EXPECT_TRUE(r.find("black_profile")->pass);
  EXPECT_FALSE(r.find("white_profile")->pass);
  EXPECT_FALSE(r.find("cusp_profile")->pass);
  EXPECT_EQ(r.find("cusp_profile")->got, "18:1 9:1 2:4 1:1");
  EXPECT_FALSE(r.passed());
}

TEST(VerifyBelyi, WrongMapIsRejected) {
  // The level-2 map offered as a level-3 map.
  EXPECT_FALSE(verify_belyi_map(3, belyi_table(2)).passed());
  // A negative coefficient is reported with its position.
  FactoredRationalFunction f = belyi_table(2);
  f.numerator[0].poly = Poly({-256, 1});
  const VerificationReport r = verify_belyi_map(2, f);
  const auto* c = r.find("positive_coefficients");
  EXPECT_FALSE(c->pass);
  EXPECT_NE(c->got.find("t^0"), std::string::npos);
}

TEST(BelyiProperties, MultiplicitiesAreOneTwoOrThree) {
  for (std::int64_t n : genus_zero_levels) {
    const auto& f = belyi_table(n);
    const Poly P = f.expanded_numerator(), Q = f.expanded_denominator();
    for (int m : multiplicities(P)) EXPECT_TRUE(m == 1 || m == 3) << "N=" << n << " P has " << m;
    for (int m : multiplicities(P - Q)) EXPECT_TRUE(m == 1 || m == 2) << "N=" << n << " P-Q has " << m;
  }
}

TEST(BelyiProperties, PoleAtInfinityDividesLevel) {
  for (std::int64_t n : genus_zero_levels) {
    const auto& f = belyi_table(n);
    const int diff = f.expanded_numerator().degree() - f.expanded_denominator().degree();
    EXPECT_GE(diff, 0) << n;
    EXPECT_LE(diff, n) << n;
    if (diff > 0) EXPECT_EQ(n % diff, 0) << n;
  }
}

TEST(BelyiProperties, RefactorizationMatchesTranscription) {
  for (std::int64_t n : genus_zero_levels) {
    const auto& f = belyi_table(n);
    EXPECT_EQ(multiplicity_profile(f.expanded_numerator()), declared_profile(f.numerator)) << n;
    EXPECT_EQ(multiplicity_profile(f.expanded_denominator()), declared_profile(f.denominator)) << n;
  }
}
