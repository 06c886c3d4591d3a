#pragma once

#include <vector>

#include "morsewp/morse.hpp"

namespace morsewp {

/// Expansion coefficients d_m, m = 0..n_prime, of the SU(2) coherent state
/// built on the highest bound level n_prime. Unit l2 norm.
struct CoefficientVector {
  double alpha = 0.0;
  int n_prime = 0;
  std::vector<complex> coeffs;

  double norm_squared() const;
  // argmax_m |d_m|^2
  int peak_level() const;
};

/// d_m = (-alpha)^{n'-m} / (n'-m)! * sqrt(n'! Gamma(2 lambda - m) / (m! Gamma(2 lambda - n'))),
/// renormalized to unit norm. Magnitudes are formed in log space; the sign of
/// (-alpha)^{n'-m} is tracked separately. alpha = 0 gives the pure level n'.
CoefficientVector cs_coefficients(double alpha, const MoleculeParams& params);

/// Coefficients after free evolution: phased[m] = d_m exp(-i E_m t / hbar).
struct EvolvedState {
  CoefficientVector base;
  double time = 0.0;
  std::vector<complex> phased;
};

EvolvedState evolve(const CoefficientVector& cv, double t, const MoleculeParams& params);

/// sum_m phased[m] psi_m(x) on the basis grid. Throws TruncationError if the
/// result has not decayed at the grid edges.
WaveFunction synthesize(const EvolvedState& state, const EigenBasis& basis);
WaveFunction synthesize(const EvolvedState& state, const SpatialGrid& grid,
                        const MoleculeParams& params);

/// A(t) = <chi(0)|chi(t)> = sum_m |d_m|^2 exp(-i E_m t / hbar).
complex autocorrelation(const CoefficientVector& cv, double t, const MoleculeParams& params);

}  // namespace morsewp
