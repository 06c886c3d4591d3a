#include "morsewp/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "morsewp/error.hpp"

namespace morsewp {

namespace {

constexpr int kZetaTerms = 64;

// zeta(k) for k = 2..kZetaTerms+1 by Euler-Maclaurin summation with N = 10.
// Index 0 holds zeta(2).
const std::array<double, kZetaTerms>& zeta_table() {
  static const std::array<double, kZetaTerms> table = [] {
    // B_2j / (2j)!
    constexpr std::array<long double, 7> bernoulli_over_factorial = {
        1.0L / 12.0L,
        -1.0L / 720.0L,
        1.0L / 30240.0L,
        -1.0L / 1209600.0L,
        1.0L / 47900160.0L,
        -691.0L / 1307674368000.0L,
        1.0L / 74724249600.0L,
    };
    constexpr long double N = 10.0L;
    std::array<double, kZetaTerms> out{};
    for (int i = 0; i < kZetaTerms; ++i) {
      const long double k = i + 2;
      long double sum = 0.0L;
      for (int n = 1; n < 10; ++n) sum += std::pow(static_cast<long double>(n), -k);
      sum += std::pow(N, 1.0L - k) / (k - 1.0L) + 0.5L * std::pow(N, -k);
      long double rising = k;  // k (k+1) ... (k+2j-2)
      for (std::size_t j = 0; j < bernoulli_over_factorial.size(); ++j) {
        const long double power = -k - 2.0L * static_cast<long double>(j) - 1.0L;
        sum += bernoulli_over_factorial[j] * rising * std::pow(N, power);
        rising *= (k + 2.0L * j + 1.0L) * (k + 2.0L * j + 2.0L);
      }
      out[i] = static_cast<double>(sum);
    }
    return out;
  }();
  return table;
}

// ln Gamma(1 + eps) = -gamma eps + sum_{k>=2} (-1)^k zeta(k) eps^k / k, |eps| <= 1/2.
double log_gamma_one_plus(double eps) {
  constexpr double euler_gamma = 0.57721566490153286060651209;
  const auto& zeta = zeta_table();
  double sum = 0.0;
  double power = eps * eps;
  for (int i = 0; i < kZetaTerms; ++i) {
    const int k = i + 2;
    const double term = zeta[i] * power / k;
    sum += (k % 2 == 0) ? term : -term;
    power *= eps;
    if (std::abs(power) < 1e-20 * std::abs(sum)) break;
  }
  return -euler_gamma * eps + sum;
}

// Stirling series, valid for z >= 15.
double log_gamma_stirling(double z) {
  // B_2k / (2k (2k-1)), k = 1..8
  constexpr std::array<double, 8> c = {
      1.0 / 12.0,           -1.0 / 360.0,        1.0 / 1260.0,
      -1.0 / 1680.0,        1.0 / 1188.0,        -691.0 / 360360.0,
      1.0 / 156.0,          -3617.0 / 122400.0,
  };
  const double inv = 1.0 / z;
  const double inv2 = inv * inv;
  double series = 0.0;
  double power = inv;
  for (double ck : c) {
    series += ck * power;
    power *= inv2;
  }
  const double half_log_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
  return (z - 0.5) * std::log(z) - z + half_log_two_pi + series;
}

}  // namespace

double log_gamma(double z) {
  if (!std::isfinite(z) || z <= 0.0) {
    throw DomainError("log_gamma: argument must be positive and finite, got " +
                      std::to_string(z));
  }
  if (std::abs(z - 1.0) <= 0.5) return log_gamma_one_plus(z - 1.0);
  if (std::abs(z - 2.0) <= 0.5) {
    const double eps = z - 2.0;
    return log_gamma_one_plus(eps) + std::log1p(eps);
  }
  constexpr double stirling_threshold = 15.0;
  if (z >= stirling_threshold) return log_gamma_stirling(z);

  // Shift upward: Gamma(z) = Gamma(z + n) / (z (z+1) ... (z+n-1)).
  double product = 1.0;
  double shifted = z;
  while (shifted < stirling_threshold) {
    product *= shifted;
    shifted += 1.0;
  }
  return log_gamma_stirling(shifted) - std::log(product);
}

double assoc_laguerre(int n, double s, double xi) {
  if (n < 0) throw DomainError("assoc_laguerre: degree must be nonnegative");
  if (!(s > -1.0)) {
    throw DomainError("assoc_laguerre: order must exceed -1, got " + std::to_string(s));
  }
  if (n == 0) return 1.0;
  double previous = 1.0;
  double current = 1.0 + s - xi;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + s - xi) * current - (k + s) * previous) / (k + 1.0);
    previous = current;
    current = next;
  }
  return current;
}

std::vector<double> simpson_weights(std::size_t n, double h) {
  if (n < 2) throw ContractError("simpson_weights: need at least two nodes");
  std::vector<double> w(n, 0.0);
  if (n == 2) {
    w[0] = w[1] = 0.5 * h;
    return w;
  }
  // Simpson covers nodes [0, simpson_end]; a 3/8 panel covers the rest.
  const std::size_t simpson_end = (n % 2 == 1) ? n - 1 : n - 4;
  for (std::size_t i = 1; i < simpson_end; ++i) w[i] = (i % 2 == 1) ? 4.0 : 2.0;
  if (simpson_end > 0) {
    w[0] += 1.0;
    w[simpson_end] += 1.0;
  }
  for (double& wi : w) wi *= h / 3.0;
  if (n % 2 == 0) {
    const double e = 3.0 * h / 8.0;
    w[n - 4] += e;
    w[n - 3] += 3.0 * e;
    w[n - 2] += 3.0 * e;
    w[n - 1] += e;
  }
  return w;
}

QuadratureRule composite_simpson(double a, double b, std::size_t n) {
  if (!(a < b)) throw ContractError("composite_simpson: need a < b");
  if (n < 2) throw ContractError("composite_simpson: need at least two nodes");
  const double h = (b - a) / static_cast<double>(n - 1);
  QuadratureRule rule;
  rule.nodes.resize(n);
  for (std::size_t i = 0; i < n; ++i) rule.nodes[i] = a + h * static_cast<double>(i);
  rule.nodes.back() = b;
  rule.weights = simpson_weights(n, h);
  return rule;
}

std::complex<double> integrate(std::span<const std::complex<double>> f,
                               const QuadratureRule& rule) {
  if (f.size() != rule.weights.size()) {
    throw ContractError("integrate: " + std::to_string(f.size()) + " samples for a " +
                        std::to_string(rule.weights.size()) + "-node rule");
  }
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t i = 0; i < f.size(); ++i) sum += rule.weights[i] * f[i];
  return sum;
}

double integrate(std::span<const double> f, const QuadratureRule& rule) {
  if (f.size() != rule.weights.size()) {
    throw ContractError("integrate: " + std::to_string(f.size()) + " samples for a " +
                        std::to_string(rule.weights.size()) + "-node rule");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) sum += rule.weights[i] * f[i];
  return sum;
}

}  // namespace morsewp
