#include "morsewp/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "morsewp/error.hpp"

namespace morsewp {

double CoefficientVector::norm_squared() const {
  double sum = 0.0;
  for (const auto& d : coeffs) sum += std::norm(d);
  return sum;
}

int CoefficientVector::peak_level() const {
  int best = 0;
  for (std::size_t m = 1; m < coeffs.size(); ++m) {
    if (std::norm(coeffs[m]) > std::norm(coeffs[static_cast<std::size_t>(best)])) {
      best = static_cast<int>(m);
    }
  }
  return best;
}

CoefficientVector cs_coefficients(double alpha, const MoleculeParams& params) {
  if (!std::isfinite(alpha)) throw ContractError("cs_coefficients: alpha must be finite");
  params.validate();
  const int n_prime = bound_level_max(params);
  const double lambda = lambda_param(params);

  CoefficientVector cv;
  cv.alpha = alpha;
  cv.n_prime = n_prime;
  cv.coeffs.assign(static_cast<std::size_t>(n_prime) + 1, complex{0.0, 0.0});

  if (alpha == 0.0) {
    cv.coeffs.back() = 1.0;
    return cv;
  }

  const double log_alpha = std::log(std::abs(alpha));
  // (-alpha)^k has sign (-sign(alpha))^k.
  const bool base_negative = alpha > 0.0;
  const double common = log_gamma(n_prime + 1.0) - log_gamma(2.0 * lambda - n_prime);

  std::vector<double> log_mag(cv.coeffs.size());
  double log_max = -std::numeric_limits<double>::infinity();
  for (int m = 0; m <= n_prime; ++m) {
    const int k = n_prime - m;
    log_mag[static_cast<std::size_t>(m)] =
        k * log_alpha - log_gamma(k + 1.0) +
        0.5 * (common + log_gamma(2.0 * lambda - m) - log_gamma(m + 1.0));
    log_max = std::max(log_max, log_mag[static_cast<std::size_t>(m)]);
  }

  double norm = 0.0;
  for (int m = 0; m <= n_prime; ++m) {
    const int k = n_prime - m;
    const double sign = (base_negative && k % 2 == 1) ? -1.0 : 1.0;
    const double value = sign * std::exp(log_mag[static_cast<std::size_t>(m)] - log_max);
    cv.coeffs[static_cast<std::size_t>(m)] = value;
    norm += value * value;
  }
  const double scale = 1.0 / std::sqrt(norm);
  for (auto& d : cv.coeffs) d *= scale;
  return cv;
}

EvolvedState evolve(const CoefficientVector& cv, double t, const MoleculeParams& params) {
  if (!std::isfinite(t)) throw ContractError("evolve: time must be finite");
  const auto energies = spectrum(params);
  if (cv.coeffs.size() > energies.size()) {
    throw ContractError("evolve: coefficient vector longer than the bound spectrum");
  }
  EvolvedState state{cv, t, cv.coeffs};
  for (std::size_t m = 0; m < state.phased.size(); ++m) {
    state.phased[m] *= std::polar(1.0, -energies[m] * t / params.hbar);
  }
  return state;
}

WaveFunction synthesize(const EvolvedState& state, const EigenBasis& basis) {
  std::ostringstream label;
  label << "coherent state alpha=" << state.base.alpha << " t=" << state.time;
  auto psi = basis.combine(state.phased, label.str());
  require_edge_decay(psi);
  return psi;
}

WaveFunction synthesize(const EvolvedState& state, const SpatialGrid& grid,
                        const MoleculeParams& params) {
  return synthesize(state, EigenBasis(grid, params));
}

complex autocorrelation(const CoefficientVector& cv, double t, const MoleculeParams& params) {
  const auto energies = spectrum(params);
  if (cv.coeffs.size() > energies.size()) {
    throw ContractError("autocorrelation: coefficient vector longer than the bound spectrum");
  }
  complex sum{0.0, 0.0};
  for (std::size_t m = 0; m < cv.coeffs.size(); ++m) {
    sum += std::norm(cv.coeffs[m]) * std::polar(1.0, -energies[m] * t / params.hbar);
  }
  return sum;
}

}  // namespace morsewp
