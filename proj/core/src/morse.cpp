#include "morsewp/morse.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "morsewp/error.hpp"

namespace morsewp {

void MoleculeParams::validate() const {
  if (!(D > 0.0) || !(beta > 0.0) || !(mu > 0.0) || !(r0 > 0.0) || !(hbar > 0.0)) {
    throw ContractError("molecule parameters D, beta, mu, r0 and hbar must all be positive");
  }
  if (!(lambda_param(*this) > 0.5)) {
    throw NoBoundStateError("lambda = " + std::to_string(lambda_param(*this)) +
                            " <= 1/2: the potential has no bound state");
  }
}

double potential(double x, const MoleculeParams& params) {
  const double e = std::exp(-params.beta * x);
  return params.D * (e * e - 2.0 * e);
}

double lambda_param(const MoleculeParams& params) {
  return std::sqrt(2.0 * params.mu * params.D * params.r0 * params.r0 /
                   (params.beta * params.beta * params.hbar * params.hbar));
}

int bound_level_max(const MoleculeParams& params) {
  const double lambda = lambda_param(params);
  if (!(lambda > 0.5)) {
    throw NoBoundStateError("lambda = " + std::to_string(lambda) +
                            " <= 1/2: the potential has no bound state");
  }
  return static_cast<int>(std::floor(lambda - 0.5));
}

double laguerre_order(int n, const MoleculeParams& params) {
  return 2.0 * lambda_param(params) - 1.0 - 2.0 * n;
}

double energy(int n, const MoleculeParams& params) {
  const int n_max = bound_level_max(params);
  if (n < 0 || n > n_max) {
    throw LevelError("level " + std::to_string(n) + " outside 0.." + std::to_string(n_max));
  }
  const double lambda = lambda_param(params);
  const double d = lambda - n - 0.5;
  return -(params.D / (lambda * lambda)) * d * d;
}

std::vector<double> spectrum(const MoleculeParams& params) {
  params.validate();
  const int n_max = bound_level_max(params);
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) out[static_cast<std::size_t>(n)] = energy(n, params);
  return out;
}

double energy_from_order(double s, const MoleculeParams& params) {
  const double bh = params.beta * params.hbar;
  return -(bh * bh * s * s) / (8.0 * params.mu * params.r0 * params.r0);
}

SpatialGrid::SpatialGrid(double x_min, double x_max, std::size_t n_points)
    : x_min_(x_min), x_max_(x_max), n_points_(n_points), spacing_(0.0) {
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max)) {
    throw ContractError("SpatialGrid: need finite x_min < x_max");
  }
  if (n_points < 2) throw ContractError("SpatialGrid: need at least two points");
  spacing_ = (x_max - x_min) / static_cast<double>(n_points - 1);
  rule_ = composite_simpson(x_min, x_max, n_points);
}

std::vector<double> SpatialGrid::points() const {
  std::vector<double> out(n_points_);
  for (std::size_t i = 0; i < n_points_; ++i) out[i] = x(i);
  return out;
}

WaveFunction::WaveFunction(SpatialGrid g, std::vector<complex> v, std::string l)
    : grid(std::move(g)), values(std::move(v)), label(std::move(l)) {
  if (values.size() != grid.size()) {
    throw ContractError("WaveFunction: " + std::to_string(values.size()) +
                        " samples on a grid of " + std::to_string(grid.size()));
  }
}

double WaveFunction::norm_squared() const {
  const auto rho = density();
  return integrate(std::span<const double>(rho), grid.rule());
}

std::vector<double> WaveFunction::density() const {
  std::vector<double> rho(values.size());
  std::transform(values.begin(), values.end(), rho.begin(),
                 [](const complex& v) { return std::norm(v); });
  return rho;
}

namespace {

double peak_magnitude(const std::vector<complex>& values) {
  double peak = 0.0;
  for (const auto& v : values) peak = std::max(peak, std::abs(v));
  return peak;
}

}  // namespace

double WaveFunction::left_edge_ratio() const {
  const double peak = peak_magnitude(values);
  return peak > 0.0 ? std::abs(values.front()) / peak : 0.0;
}

double WaveFunction::right_edge_ratio() const {
  const double peak = peak_magnitude(values);
  return peak > 0.0 ? std::abs(values.back()) / peak : 0.0;
}

WaveFunction& WaveFunction::operator+=(const WaveFunction& other) {
  if (!(grid == other.grid)) throw ContractError("WaveFunction: adding states on different grids");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += other.values[i];
  return *this;
}

WaveFunction& WaveFunction::operator*=(complex factor) {
  for (auto& v : values) v *= factor;
  return *this;
}

WaveFunction operator+(WaveFunction a, const WaveFunction& b) {
  a += b;
  return a;
}

WaveFunction operator*(complex factor, WaveFunction a) {
  a *= factor;
  return a;
}

complex inner_product(const WaveFunction& a, const WaveFunction& b) {
  if (!(a.grid == b.grid)) throw ContractError("inner_product: states live on different grids");
  const auto& w = a.grid.rule().weights;
  complex sum{0.0, 0.0};
  for (std::size_t i = 0; i < w.size(); ++i) sum += w[i] * std::conj(a.values[i]) * b.values[i];
  return sum;
}

double overlap_magnitude(const WaveFunction& a, const WaveFunction& b) {
  const double na = std::real(inner_product(a, a));
  const double nb = std::real(inner_product(b, b));
  if (!(na > 0.0) || !(nb > 0.0)) throw ContractError("overlap_magnitude: zero state");
  return std::abs(inner_product(a, b)) / std::sqrt(na * nb);
}

void require_edge_decay(const WaveFunction& psi, double tolerance) {
  const double left = psi.left_edge_ratio();
  const double right = psi.right_edge_ratio();
  if (left >= tolerance || right >= tolerance) {
    std::ostringstream msg;
    msg << "state '" << psi.label << "' not decayed at grid edges [" << psi.grid.x_min() << ", "
        << psi.grid.x_max() << "]: |psi|/max = " << left << " (left), " << right
        << " (right), tolerance " << tolerance;
    throw TruncationError(msg.str(), left, right);
  }
}

std::vector<double> eigenfunction_samples(int n, const SpatialGrid& grid,
                                          const MoleculeParams& params) {
  params.validate();
  const int n_max = bound_level_max(params);
  if (n < 0 || n > n_max) {
    throw LevelError("level " + std::to_string(n) + " outside 0.." + std::to_string(n_max));
  }
  const double lambda = lambda_param(params);
  const double s = laguerre_order(n, params);
  // N sqrt(r0): the 1/r0 of the physical normalization is absorbed by dr = r0 dx.
  const double log_norm =
      0.5 * (std::log(params.beta) + std::log(2.0 * lambda - 2.0 * n - 1.0) +
             log_gamma(n + 1.0) - log_gamma(2.0 * lambda - n));
  const double log_two_lambda = std::log(2.0 * lambda);

  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double log_xi = log_two_lambda - params.beta * grid.x(i);
    const double xi = std::exp(log_xi);
    const double envelope = std::exp(log_norm + 0.5 * (s * log_xi - xi));
    out[i] = envelope == 0.0 ? 0.0 : envelope * assoc_laguerre(n, s, xi);
  }
  return out;
}

WaveFunction eigenfunction(int n, const SpatialGrid& grid, const MoleculeParams& params) {
  const auto samples = eigenfunction_samples(n, grid, params);
  WaveFunction psi(grid, std::vector<complex>(samples.begin(), samples.end()),
                   "eigenfunction n=" + std::to_string(n));
  require_edge_decay(psi);
  return psi;
}

EigenBasis::EigenBasis(const SpatialGrid& grid, const MoleculeParams& params)
    : grid_(grid), params_(params), n_max_(0) {
  params_.validate();
  n_max_ = bound_level_max(params_);
  samples_.reserve(levels() * grid_.size());
  for (int n = 0; n <= n_max_; ++n) {
    const auto level = eigenfunction_samples(n, grid_, params_);
    samples_.insert(samples_.end(), level.begin(), level.end());
  }
}

std::span<const double> EigenBasis::level(int n) const {
  if (n < 0 || n > n_max_) {
    throw LevelError("level " + std::to_string(n) + " outside 0.." + std::to_string(n_max_));
  }
  return {samples_.data() + static_cast<std::size_t>(n) * grid_.size(), grid_.size()};
}

WaveFunction EigenBasis::combine(std::span<const complex> coeffs, std::string label) const {
  if (coeffs.size() > levels()) {
    throw ContractError("EigenBasis::combine: " + std::to_string(coeffs.size()) +
                        " coefficients for " + std::to_string(levels()) + " levels");
  }
  std::vector<complex> values(grid_.size(), complex{0.0, 0.0});
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    if (coeffs[m] == complex{0.0, 0.0}) continue;
    const auto psi = level(static_cast<int>(m));
    for (std::size_t i = 0; i < values.size(); ++i) values[i] += coeffs[m] * psi[i];
  }
  return WaveFunction(grid_, std::move(values), std::move(label));
}

std::vector<double> EigenBasis::gram() const {
  const std::size_t L = levels();
  const auto& w = grid_.rule().weights;
  std::vector<double> g(L * L, 0.0);
  for (std::size_t a = 0; a < L; ++a) {
    const auto pa = level(static_cast<int>(a));
    for (std::size_t b = a; b < L; ++b) {
      const auto pb = level(static_cast<int>(b));
      double sum = 0.0;
      for (std::size_t i = 0; i < w.size(); ++i) sum += w[i] * pa[i] * pb[i];
      g[a * L + b] = g[b * L + a] = sum;
    }
  }
  return g;
}

}  // namespace morsewp
