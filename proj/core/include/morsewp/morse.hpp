#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "morsewp/specfun.hpp"

namespace morsewp {

using complex = std::complex<double>;

// Morse oscillator V(x) = D (exp(-2 beta x) - 2 exp(-beta x)), x = r/r0 - 1.
// Atomic units throughout; hbar is carried explicitly but defaults to 1.
struct MoleculeParams {
  double D = 0.0;     // dissociation energy, hartree
  double beta = 0.0;  // range parameter (dimensionless, in units of 1/r0)
  double mu = 0.0;    // reduced mass, electron masses
  double r0 = 0.0;    // equilibrium bond length, bohr
  double hbar = 1.0;

  // Hydrogen iodide.
  static MoleculeParams hydrogen_iodide() noexcept {
    return MoleculeParams{0.1125, 2.07932, 1819.99, 3.04159, 1.0};
  }

  // Throws ContractError on non-positive fields, NoBoundStateError if lambda <= 1/2.
  void validate() const;
};

double potential(double x, const MoleculeParams& params);

// lambda = sqrt(2 mu D r0^2 / (beta^2 hbar^2)).
double lambda_param(const MoleculeParams& params);

// floor(lambda - 1/2); levels 0..n_max are bound.
int bound_level_max(const MoleculeParams& params);

// Laguerre order s_n = 2 lambda - 1 - 2n.
double laguerre_order(int n, const MoleculeParams& params);

// E_n = -(D / lambda^2) (lambda - n - 1/2)^2. Throws LevelError outside 0..n_max.
double energy(int n, const MoleculeParams& params);

// E_0..E_{n_max}.
std::vector<double> spectrum(const MoleculeParams& params);

// Same eigenvalue expressed through s: E = -beta^2 hbar^2 s^2 / (8 mu r0^2).
double energy_from_order(double s, const MoleculeParams& params);

/// Uniform grid over the scaled coordinate x.
class SpatialGrid {
 public:
  /// Throws ContractError unless x_min < x_max and n_points >= 2.
  SpatialGrid(double x_min, double x_max, std::size_t n_points);

  /// [-0.8, 4.0] with 4096 points. Wide enough for HI levels 0..24 and for
  /// coherent states dominated by them; levels 25..29 extend further.
  static SpatialGrid default_grid() { return SpatialGrid(-0.8, 4.0, 4096); }
  /// [-0.8, 100] with 16385 points: every HI level, including the weakly
  /// bound n = 29 whose tail falls off as exp(-0.1 beta x), decays below
  /// kEdgeDecayTolerance here.
  static SpatialGrid wide_grid() { return SpatialGrid(-0.8, 100.0, 16385); }

  double x_min() const noexcept { return x_min_; }
  double x_max() const noexcept { return x_max_; }
  std::size_t size() const noexcept { return n_points_; }
  double spacing() const noexcept { return spacing_; }
  double x(std::size_t i) const noexcept {
    return i + 1 == n_points_ ? x_max_ : x_min_ + spacing_ * static_cast<double>(i);
  }
  std::vector<double> points() const;

  // Composite Simpson on the grid nodes; the module-wide quadrature.
  const QuadratureRule& rule() const noexcept { return rule_; }

  bool operator==(const SpatialGrid& other) const noexcept {
    return x_min_ == other.x_min_ && x_max_ == other.x_max_ && n_points_ == other.n_points_;
  }

 private:
  double x_min_;
  double x_max_;
  std::size_t n_points_;
  double spacing_;
  QuadratureRule rule_;
};

/// Complex samples of a state on a SpatialGrid. Normalization convention:
/// integral |psi|^2 dx = 1 over the dimensionless coordinate x (the r0 of
/// dr = r0 dx is absorbed into the eigenfunction prefactor).
struct WaveFunction {
  SpatialGrid grid;
  std::vector<complex> values;
  std::string label;

  WaveFunction(SpatialGrid g, std::vector<complex> v, std::string l = {});

  double norm_squared() const;
  std::vector<double> density() const;

  // |psi| at the first/last sample relative to max |psi| (0 for the zero state).
  double left_edge_ratio() const;
  double right_edge_ratio() const;

  WaveFunction& operator+=(const WaveFunction& other);
  WaveFunction& operator*=(complex factor);
};

WaveFunction operator+(WaveFunction a, const WaveFunction& b);
WaveFunction operator*(complex factor, WaveFunction a);

/// <a|b> under the grid quadrature. Throws ContractError on differing grids.
complex inner_product(const WaveFunction& a, const WaveFunction& b);

/// |<a|b>| / (||a|| ||b||); insensitive to a global phase on either state.
double overlap_magnitude(const WaveFunction& a, const WaveFunction& b);

/// Edge-decay threshold: |psi| at both boundaries must fall below this
/// fraction of its peak.
inline constexpr double kEdgeDecayTolerance = 1e-8;

/// Throws TruncationError when psi has not decayed below `tolerance` of its
/// peak at either edge of its grid.
void require_edge_decay(const WaveFunction& psi, double tolerance = kEdgeDecayTolerance);

/// Raw samples N e^{-xi/2} xi^{s/2} L_n^s(xi), xi = 2 lambda e^{-beta x}, with
/// the analytic prefactor N = [beta (2 lambda - 2n - 1) n! / Gamma(2 lambda - n)]^{1/2}.
/// No edge-decay check.
std::vector<double> eigenfunction_samples(int n, const SpatialGrid& grid,
                                          const MoleculeParams& params);

/// Normalized bound eigenfunction psi_n on `grid`. Throws LevelError for n
/// outside 0..n_max and TruncationError if the grid is too narrow for level n.
WaveFunction eigenfunction(int n, const SpatialGrid& grid, const MoleculeParams& params);

/// All bound eigenfunctions sampled on one grid. Immutable after
/// construction, so a single instance may be shared between threads.
class EigenBasis {
 public:
  EigenBasis(const SpatialGrid& grid, const MoleculeParams& params);

  const SpatialGrid& grid() const noexcept { return grid_; }
  const MoleculeParams& params() const noexcept { return params_; }
  int n_max() const noexcept { return n_max_; }
  std::size_t levels() const noexcept { return static_cast<std::size_t>(n_max_) + 1; }

  std::span<const double> level(int n) const;

  /// sum_m coeffs[m] psi_m(x). Only levels with a nonzero coefficient are
  /// touched. Throws ContractError if coeffs is longer than the basis.
  WaveFunction combine(std::span<const complex> coeffs, std::string label = {}) const;

  /// Gram matrix <psi_m|psi_n>, row-major levels() x levels().
  std::vector<double> gram() const;

 private:
  SpatialGrid grid_;
  MoleculeParams params_;
  int n_max_;
  std::vector<double> samples_;  // level-major
};

}  // namespace morsewp
