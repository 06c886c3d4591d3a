#pragma once

#include <complex>
#include <span>
#include <vector>

namespace morsewp {

/// Quadrature rule: sum_i weights[i] * f(nodes[i]) approximates the integral
/// of f over [nodes.front(), nodes.back()].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }
};

/// ln Gamma(z) for z > 0. Relative error below 1e-13 on [0.5, 200], including
/// the neighbourhoods of the zeros at z = 1 and z = 2. Throws DomainError for
/// z <= 0 or non-finite z.
double log_gamma(double z);

/// Generalized Laguerre polynomial L_n^s(xi) by the ascending three-term
/// recurrence. Requires s > -1 (DomainError otherwise).
double assoc_laguerre(int n, double s, double xi);

/// Composite Simpson weights for n uniformly spaced samples with spacing h.
/// An even n (odd interval count) closes with a Simpson 3/8 panel; n == 2
/// falls back to the trapezoid rule.
std::vector<double> simpson_weights(std::size_t n, double h);

/// Composite Simpson rule on n uniform nodes spanning [a, b].
QuadratureRule composite_simpson(double a, double b, std::size_t n);

/// sum_i w_i f_i. Throws ContractError on a length mismatch.
std::complex<double> integrate(std::span<const std::complex<double>> f,
                               const QuadratureRule& rule);
double integrate(std::span<const double> f, const QuadratureRule& rule);

}  // namespace morsewp
