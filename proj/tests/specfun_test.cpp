#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "morsewp/error.hpp"
#include "morsewp/specfun.hpp"
#include "oracles.hpp"

namespace morsewp {
namespace {

TEST(LogGamma, KnownValues) {
  EXPECT_EQ(log_gamma(1.0), 0.0);
  EXPECT_NEAR(log_gamma(2.0), 0.0, 1e-16);
  EXPECT_NEAR(log_gamma(0.5), 0.5 * std::log(std::numbers::pi), 1e-15);
  EXPECT_NEAR(log_gamma(11.0), std::log(3628800.0), 1e-13);
}

TEST(LogGamma, MatchesQuadPrecisionStirlingAt59_2) {
  const double expected = static_cast<double>(oracle::log_gamma(static_cast<oracle::quad>(59.2)));
  EXPECT_NEAR(log_gamma(59.2), expected, 1e-13 * std::abs(expected));
}

TEST(LogGamma, RelativeErrorAcrossRange) {
  // Dense sweep of [0.5, 200], including the zeros at 1 and 2.
  double worst = 0.0;
  for (int i = 0; i <= 4000; ++i) {
    const double z = 0.5 + 199.5 * i / 4000.0;
    const double expected = static_cast<double>(oracle::log_gamma(static_cast<oracle::quad>(z)));
    if (expected == 0.0) continue;
    worst = std::max(worst, std::abs(log_gamma(z) - expected) / std::abs(expected));
  }
  EXPECT_LT(worst, 1e-13);
}

TEST(LogGamma, RelativeErrorNearZerosOfLogGamma) {
  for (double base : {1.0, 2.0}) {
    for (double eps : {1e-9, -1e-9, 1e-5, -1e-5, 3e-3, -3e-3}) {
      const double z = base + eps;
      const double expected = static_cast<double>(oracle::log_gamma(static_cast<oracle::quad>(z)));
      EXPECT_NEAR(log_gamma(z), expected, 1e-13 * std::abs(expected)) << "z = " << z;
    }
  }
}

TEST(LogGamma, FunctionalEquation) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(0.5, 100.0);
  for (int i = 0; i < 2000; ++i) {
    const double z = dist(rng);
    EXPECT_NEAR(log_gamma(z + 1.0), log_gamma(z) + std::log(z), 1e-12 * std::max(1.0, std::abs(log_gamma(z + 1.0))))
        << "z = " << z;
  }
}

TEST(LogGamma, RejectsNonPositive) {
  EXPECT_THROW(log_gamma(0.0), DomainError);
  EXPECT_THROW(log_gamma(-2.5), DomainError);
  EXPECT_THROW(log_gamma(std::nan("")), DomainError);
}

TEST(AssocLaguerre, LowDegrees) {
  EXPECT_EQ(assoc_laguerre(0, 3.7, 12.0), 1.0);
  EXPECT_EQ(assoc_laguerre(0, 0.2, 0.0), 1.0);
  EXPECT_EQ(assoc_laguerre(1, 2.0, 3.0), 0.0);
  // L_2^s(x) = (x^2 - 2(s+2)x + (s+1)(s+2)) / 2
  const double s = 1.5, x = 0.7;
  EXPECT_NEAR(assoc_laguerre(2, s, x), (x * x - 2 * (s + 2) * x + (s + 1) * (s + 2)) / 2, 1e-15);
}

TEST(AssocLaguerre, MatchesBinomialSumAtMorseOrder) {
  const double expected = static_cast<double>(oracle::laguerre_binomial(5, 47.2, 10.0));
  EXPECT_NEAR(assoc_laguerre(5, 47.2, 10.0), expected, 1e-12 * std::abs(expected));
}

TEST(AssocLaguerre, RandomAgreementWithBinomialSum) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> degree(0, 30);
  std::uniform_real_distribution<double> order(0.0, 60.0);
  std::uniform_real_distribution<double> arg(0.0, 120.0);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = degree(rng);
    const double s = order(rng);
    const double xi = arg(rng);
    const oracle::quad exact = oracle::laguerre_binomial(n, s, xi);
    // Relative agreement, with an absolute floor at the size of the terms
    // that cancel so isolated points near a root do not dominate.
    const double scale = static_cast<double>(oracle::laguerre_term_scale(n, s, xi));
    const double tol = 1e-9 * std::max(std::abs(static_cast<double>(exact)), 1e-6 * scale);
    EXPECT_NEAR(assoc_laguerre(n, s, xi), static_cast<double>(exact), tol)
        << "n=" << n << " s=" << s << " xi=" << xi;
  }
}

TEST(AssocLaguerre, RejectsBadOrder) {
  EXPECT_THROW(assoc_laguerre(3, -1.0, 1.0), DomainError);
  EXPECT_THROW(assoc_laguerre(3, -2.5, 1.0), DomainError);
  EXPECT_THROW(assoc_laguerre(-1, 1.0, 1.0), DomainError);
}

TEST(Quadrature, RuleInvariants) {
  for (std::size_t n : {2u, 3u, 4u, 5u, 6u, 101u, 4096u}) {
    const auto rule = composite_simpson(-0.8, 4.0, n);
    ASSERT_EQ(rule.nodes.size(), n);
    ASSERT_EQ(rule.weights.size(), n);
    for (std::size_t i = 1; i < n; ++i) EXPECT_LT(rule.nodes[i - 1], rule.nodes[i]);
    for (double w : rule.weights) EXPECT_GT(w, 0.0);
    std::vector<double> one(n, 1.0);
    EXPECT_NEAR(integrate(std::span<const double>(one), rule), 4.8, 4.8 * 1e-12) << "n=" << n;
  }
}

TEST(Quadrature, Examples) {
  const auto rule = composite_simpson(0.0, 2.0, 11);
  std::vector<std::complex<double>> zero(11), one(11, 1.0);
  EXPECT_EQ(integrate(std::span<const std::complex<double>>(zero), rule), std::complex<double>(0.0));
  EXPECT_NEAR(std::abs(integrate(std::span<const std::complex<double>>(one), rule) - 2.0), 0.0, 1e-14);

  const auto fine = composite_simpson(0.0, 1.0, 1000);
  std::vector<double> sq(1000);
  for (std::size_t i = 0; i < sq.size(); ++i) sq[i] = fine.nodes[i] * fine.nodes[i];
  EXPECT_NEAR(integrate(std::span<const double>(sq), fine), 1.0 / 3.0, 1e-10);
}

TEST(Quadrature, DecayingExponential) {
  for (std::size_t n : {4001u, 4096u}) {
    const auto rule = composite_simpson(0.0, 40.0, n);
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = std::exp(-rule.nodes[i]);
    EXPECT_NEAR(integrate(std::span<const double>(f), rule), 1.0 - std::exp(-40.0), 1e-10);
  }
}

TEST(Quadrature, ExactForCubicsOnBothParities) {
  for (std::size_t n : {7u, 8u}) {
    const auto rule = composite_simpson(-1.0, 2.0, n);
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double x = rule.nodes[i];
      f[i] = 4 * x * x * x - x + 2;
    }
    // antiderivative x^4 - x^2/2 + 2x on [-1, 2]
    const double exact = (16.0 - 2.0 + 4.0) - (1.0 - 0.5 - 2.0);
    EXPECT_NEAR(integrate(std::span<const double>(f), rule), exact, 1e-12);
  }
}

TEST(Quadrature, LengthMismatchIsContractError) {
  const auto rule = composite_simpson(0.0, 1.0, 5);
  std::vector<double> f(4, 1.0);
  EXPECT_THROW(integrate(std::span<const double>(f), rule), ContractError);
  EXPECT_THROW(composite_simpson(1.0, 1.0, 5), ContractError);
  EXPECT_THROW(composite_simpson(0.0, 1.0, 1), ContractError);
}

}  // namespace
}  // namespace morsewp
