#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "morsewp/revival.hpp"

namespace morsewp {

/// Uniform grid over the momentum conjugate to x (hbar = 1 units).
class MomentumGrid {
 public:
  MomentumGrid(double p_min, double p_max, std::size_t n_points);

  static MomentumGrid symmetric(double p_max, std::size_t n_points) {
    return MomentumGrid(-p_max, p_max, n_points);
  }
  /// [-60, 60] with 512 points. Holds the HI coherent states used here and
  /// eigenstates up to about n = 5.
  static MomentumGrid default_grid() { return symmetric(60.0, 512); }
  /// [-100, 100] with 853 points, the default spacing on a wider window: the
  /// momentum marginal of every HI level up to n = 15 decays below 1e-6 of
  /// its peak at the edges.
  static MomentumGrid extended_grid() { return symmetric(100.0, 853); }

  double p_min() const noexcept { return p_min_; }
  double p_max() const noexcept { return p_max_; }
  std::size_t size() const noexcept { return n_points_; }
  double spacing() const noexcept { return spacing_; }
  double p(std::size_t j) const noexcept {
    return j + 1 == n_points_ ? p_max_ : p_min_ + spacing_ * static_cast<double>(j);
  }
  const QuadratureRule& rule() const noexcept { return rule_; }

  bool operator==(const MomentumGrid& other) const noexcept {
    return p_min_ == other.p_min_ && p_max_ == other.p_max_ && n_points_ == other.n_points_;
  }

 private:
  double p_min_;
  double p_max_;
  std::size_t n_points_;
  double spacing_;
  QuadratureRule rule_;
};

/// Real W(x_i, p_j), row-major with x as the slow index.
struct PhaseSpaceField {
  SpatialGrid x_axis;
  MomentumGrid p_axis;
  std::vector<double> values;
  // max |Im| of the evaluated integral before the real part was kept.
  double imag_residue = 0.0;
  std::vector<std::string> warnings;

  PhaseSpaceField(SpatialGrid x, MomentumGrid p);

  double& at(std::size_t i, std::size_t j) { return values[i * p_axis.size() + j]; }
  double at(std::size_t i, std::size_t j) const { return values[i * p_axis.size() + j]; }

  double max_abs() const;
  // Double integral over the x-p rectangle.
  double integral() const;
};

PhaseSpaceField operator-(const PhaseSpaceField& a, const PhaseSpaceField& b);
PhaseSpaceField operator+(const PhaseSpaceField& a, const PhaseSpaceField& b);

struct WignerOptions {
  double hbar = 1.0;
  // Worker threads over x rows; 0 picks std::thread::hardware_concurrency().
  // Results do not depend on this value.
  unsigned threads = 0;
  // Samples below this fraction of max |psi| are treated as zero when
  // trimming the x' window.
  double support_cutoff = 1e-15;
};

/// W(x, p) = 1/(pi hbar) int psi*(x - x') psi(x + x') exp(-2 i p x' / hbar) dx'.
/// The x' window is the largest symmetric window inside the grid, integrated
/// with composite Simpson on the native spacing; samples off the grid are 0.
/// No normalization requirement: this is the bilinear core used for parts of
/// a superposition.
PhaseSpaceField wigner_transform(const WaveFunction& psi, const MomentumGrid& p_axis,
                                 const WignerOptions& options = {});

/// Wigner function of a normalized state. Throws ContractError if
/// |<psi|psi> - 1| > 1e-6; records a warning when psi has not decayed to
/// kEdgeDecayTolerance at the grid edges.
PhaseSpaceField wigner(const WaveFunction& psi, const MomentumGrid& p_axis,
                       const WignerOptions& options = {});

/// Cross term 2 Re[1/(pi hbar) int a*(x - x') b(x + x') exp(-2 i p x' / hbar) dx'],
/// so that W[a + b] = W[a] + W[b] + cross_wigner(a, b).
PhaseSpaceField cross_wigner(const WaveFunction& a, const WaveFunction& b,
                             const MomentumGrid& p_axis, const WignerOptions& options = {});

/// The state at T_rev/8 split as W_total = W_even + W_odd + W_int, with
/// W_int extracted by subtraction.
struct WignerParts {
  PhaseSpaceField even;
  PhaseSpaceField odd;
  PhaseSpaceField interference;
  PhaseSpaceField total;
};

WignerParts wigner_parts_eighth(const CoefficientVector& cv, const EigenBasis& basis,
                                const MomentumGrid& p_axis, const WignerOptions& options = {});

struct Marginals {
  std::vector<double> position;  // int W dp, on the x axis
  std::vector<double> momentum;  // int W dx, on the p axis
};

Marginals marginals(const PhaseSpaceField& w);

struct Moments {
  double mean_x = 0.0;
  double mean_p = 0.0;
  double sigma_x = 0.0;
  double sigma_p = 0.0;
  double uncertainty_product = 0.0;
};

/// Moments of the two marginals, each normalized by its own integral.
/// Throws ToleranceError on a negative variance.
Moments moments(const PhaseSpaceField& w);

/// Operator expectation values on the wavefunction: <p> and <p^2> use
/// -i hbar d/dx by fourth-order central differences. Cross-check for moments().
Moments wavefunction_moments(const WaveFunction& psi, double hbar = 1.0);

/// hbar^2 / A with A = sigma_x sigma_p. Throws DomainError for a
/// non-positive product.
double sub_planck_area(const Moments& m, double hbar = 1.0);

}  // namespace morsewp
