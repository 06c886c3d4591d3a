#include "morsewp/phasespace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "morsewp/error.hpp"

namespace morsewp {

MomentumGrid::MomentumGrid(double p_min, double p_max, std::size_t n_points)
    : p_min_(p_min), p_max_(p_max), n_points_(n_points), spacing_(0.0) {
  if (!std::isfinite(p_min) || !std::isfinite(p_max) || !(p_min < p_max)) {
    throw ContractError("MomentumGrid: need finite p_min < p_max");
  }
  if (n_points < 2) throw ContractError("MomentumGrid: need at least two points");
  spacing_ = (p_max - p_min) / static_cast<double>(n_points - 1);
  rule_ = composite_simpson(p_min, p_max, n_points);
}

PhaseSpaceField::PhaseSpaceField(SpatialGrid x, MomentumGrid p)
    : x_axis(std::move(x)), p_axis(std::move(p)), values(x_axis.size() * p_axis.size(), 0.0) {}

double PhaseSpaceField::max_abs() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

double PhaseSpaceField::integral() const {
  const auto& wx = x_axis.rule().weights;
  const auto& wp = p_axis.rule().weights;
  double total = 0.0;
  for (std::size_t i = 0; i < wx.size(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < wp.size(); ++j) row += wp[j] * at(i, j);
    total += wx[i] * row;
  }
  return total;
}

namespace {

void require_same_axes(const PhaseSpaceField& a, const PhaseSpaceField& b) {
  if (!(a.x_axis == b.x_axis) || !(a.p_axis == b.p_axis)) {
    throw ContractError("phase-space fields live on different grids");
  }
}

// Index range [lo, hi] of samples at or above cutoff * max |psi|; empty
// (lo > hi) for the zero state.
struct Support {
  std::ptrdiff_t lo = 0;
  std::ptrdiff_t hi = -1;
};

Support support_of(const WaveFunction& psi, double cutoff) {
  double peak = 0.0;
  for (const auto& v : psi.values) peak = std::max(peak, std::abs(v));
  Support s;
  if (peak == 0.0) return s;
  const double floor = cutoff * peak;
  const auto n = static_cast<std::ptrdiff_t>(psi.values.size());
  s.lo = 0;
  while (s.lo < n && std::abs(psi.values[static_cast<std::size_t>(s.lo)]) < floor) ++s.lo;
  s.hi = n - 1;
  while (s.hi >= 0 && std::abs(psi.values[static_cast<std::size_t>(s.hi)]) < floor) --s.hi;
  return s;
}

// Evaluates (1/(pi hbar)) sum_k w_k a*(x_i - k h) b(x_i + k h) exp(-2 i p_j k h / hbar)
// for every (i, j). The +k and -k terms are folded so each p needs one pass
// over m = |k| against cos/sin tables. Rows are independent and each row sums
// in a fixed order, so the result does not depend on the thread count.
class CorrelationTransform {
 public:
  CorrelationTransform(const WaveFunction& a, const WaveFunction& b, const MomentumGrid& p_axis,
                       const WignerOptions& options)
      : a_(a), b_(b), p_axis_(p_axis), options_(options) {
    if (!(a.grid == b.grid)) throw ContractError("Wigner transform of states on different grids");
    if (!(options.hbar > 0.0)) throw ContractError("Wigner transform: hbar must be positive");
    sa_ = support_of(a, options.support_cutoff);
    sb_ = support_of(b, options.support_cutoff);
    n_ = static_cast<std::ptrdiff_t>(a.grid.size());
    stride_ = static_cast<std::size_t>((n_ - 1) / 2 + 1);
    const double h = a.grid.spacing();
    const std::size_t np = p_axis.size();
    cos_.resize(np * stride_);
    sin_.resize(np * stride_);
    for (std::size_t j = 0; j < np; ++j) {
      const double rate = -2.0 * p_axis.p(j) * h / options.hbar;
      for (std::size_t m = 0; m < stride_; ++m) {
        const double theta = rate * static_cast<double>(m);
        cos_[j * stride_ + m] = std::cos(theta);
        sin_[j * stride_ + m] = std::sin(theta);
      }
    }
  }

  // Writes the real part (doubled if requested) into out and returns the
  // largest |Im| seen.
  double run(PhaseSpaceField& out, bool real_part_doubled) const {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned threads = std::max(1u, options_.threads == 0 ? hw : options_.threads);
    const std::ptrdiff_t blocks = (n_ + kBlockRows - 1) / kBlockRows;
    std::vector<double> residues(threads, 0.0);
    auto worker = [&](unsigned t) {
      std::vector<Row> rows(kBlockRows);
      for (std::ptrdiff_t b = t; b < blocks; b += threads) {
        residues[t] = std::max(residues[t], block(b * kBlockRows, rows, out, real_part_doubled));
      }
    };
    if (threads == 1) {
      worker(0);
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(threads);
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    }
    return *std::max_element(residues.begin(), residues.end());
  }

 private:
  // Rows per cache block: the cos/sin table row for one p is reused across
  // all rows of a block.
  static constexpr std::ptrdiff_t kBlockRows = 32;

  // Folded coefficients of one x row. With c(k) the weighted correlation
  // product and exp(i theta_m) = cos + i sin at |k| = m,
  //   Re = sum_m even_re[m] cos - odd_im[m] sin,  Im = sum_m odd_re[m] sin + even_im[m] cos
  // where even_* = c(m) + c(-m), odd_* = c(m) - c(-m) (c(0) counted once).
  struct Row {
    bool active = false;
    std::ptrdiff_t m_lo = 0;
    std::vector<double> even_re, even_im, odd_re, odd_im;
  };

  complex term(std::ptrdiff_t i, std::ptrdiff_t k, std::ptrdiff_t window, double prefactor) const {
    if (i - k < sa_.lo || i - k > sa_.hi || i + k < sb_.lo || i + k > sb_.hi) return {0.0, 0.0};
    const std::ptrdiff_t node = k + window;
    const double w = (node == 0 || node == 2 * window) ? 1.0 : (node % 2 == 1 ? 4.0 : 2.0);
    return w * prefactor * std::conj(a_.values[static_cast<std::size_t>(i - k)]) *
           b_.values[static_cast<std::size_t>(i + k)];
  }

  void prepare(std::ptrdiff_t i, Row& r) const {
    r.active = false;
    const std::ptrdiff_t window = std::min(i, n_ - 1 - i);
    if (window == 0 || sa_.lo > sa_.hi || sb_.lo > sb_.hi) return;
    // a*(i - k) b(i + k) is nonzero only for these k.
    const std::ptrdiff_t k_lo = std::max({-window, i - sa_.hi, sb_.lo - i});
    const std::ptrdiff_t k_hi = std::min({window, i - sa_.lo, sb_.hi - i});
    if (k_lo > k_hi) return;

    const double prefactor = a_.grid.spacing() / 3.0 / (std::numbers::pi * options_.hbar);
    r.m_lo = (k_lo <= 0 && k_hi >= 0) ? 0 : std::min(std::abs(k_lo), std::abs(k_hi));
    const std::ptrdiff_t m_hi = std::max(std::abs(k_lo), std::abs(k_hi));
    const auto len = static_cast<std::size_t>(m_hi - r.m_lo + 1);
    r.even_re.assign(len, 0.0);
    r.even_im.assign(len, 0.0);
    r.odd_re.assign(len, 0.0);
    r.odd_im.assign(len, 0.0);
    for (std::ptrdiff_t m = r.m_lo; m <= m_hi; ++m) {
      const complex plus = term(i, m, window, prefactor);
      const complex minus = m == 0 ? complex{0.0, 0.0} : term(i, -m, window, prefactor);
      const auto idx = static_cast<std::size_t>(m - r.m_lo);
      r.even_re[idx] = plus.real() + minus.real();
      r.even_im[idx] = plus.imag() + minus.imag();
      r.odd_re[idx] = plus.real() - minus.real();
      r.odd_im[idx] = plus.imag() - minus.imag();
    }
    r.active = true;
  }

  double block(std::ptrdiff_t first, std::vector<Row>& rows, PhaseSpaceField& out,
               bool real_part_doubled) const {
    const std::ptrdiff_t last = std::min(first + kBlockRows, n_);
    bool any = false;
    for (std::ptrdiff_t i = first; i < last; ++i) {
      prepare(i, rows[static_cast<std::size_t>(i - first)]);
      any = any || rows[static_cast<std::size_t>(i - first)].active;
    }
    if (!any) return 0.0;

    double residue = 0.0;
    const std::size_t np = p_axis_.size();
    for (std::size_t j = 0; j < np; ++j) {
      for (std::ptrdiff_t i = first; i < last; ++i) {
        const Row& r = rows[static_cast<std::size_t>(i - first)];
        if (!r.active) continue;
        const double* c = cos_.data() + j * stride_ + r.m_lo;
        const double* sn = sin_.data() + j * stride_ + r.m_lo;
        const std::size_t len = r.even_re.size();
        // Four independent partial sums, combined in a fixed order.
        double re[4] = {0.0, 0.0, 0.0, 0.0};
        double im[4] = {0.0, 0.0, 0.0, 0.0};
        std::size_t m = 0;
        for (; m + 4 <= len; m += 4) {
          for (std::size_t u = 0; u < 4; ++u) {
            re[u] += r.even_re[m + u] * c[m + u] - r.odd_im[m + u] * sn[m + u];
            im[u] += r.odd_re[m + u] * sn[m + u] + r.even_im[m + u] * c[m + u];
          }
        }
        for (; m < len; ++m) {
          re[0] += r.even_re[m] * c[m] - r.odd_im[m] * sn[m];
          im[0] += r.odd_re[m] * sn[m] + r.even_im[m] * c[m];
        }
        const double total_re = (re[0] + re[1]) + (re[2] + re[3]);
        const double total_im = (im[0] + im[1]) + (im[2] + im[3]);
        out.at(static_cast<std::size_t>(i), j) = real_part_doubled ? 2.0 * total_re : total_re;
        residue = std::max(residue, std::abs(total_im));
      }
    }
    return residue;
  }

  const WaveFunction& a_;
  const WaveFunction& b_;
  const MomentumGrid& p_axis_;
  WignerOptions options_;
  Support sa_;
  Support sb_;
  std::ptrdiff_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<double> cos_;
  std::vector<double> sin_;
};

}  // namespace

PhaseSpaceField operator-(const PhaseSpaceField& a, const PhaseSpaceField& b) {
  require_same_axes(a, b);
  PhaseSpaceField out(a.x_axis, a.p_axis);
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = a.values[i] - b.values[i];
  out.imag_residue = std::max(a.imag_residue, b.imag_residue);
  return out;
}

PhaseSpaceField operator+(const PhaseSpaceField& a, const PhaseSpaceField& b) {
  require_same_axes(a, b);
  PhaseSpaceField out(a.x_axis, a.p_axis);
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = a.values[i] + b.values[i];
  out.imag_residue = std::max(a.imag_residue, b.imag_residue);
  return out;
}

PhaseSpaceField wigner_transform(const WaveFunction& psi, const MomentumGrid& p_axis,
                                 const WignerOptions& options) {
  PhaseSpaceField field(psi.grid, p_axis);
  CorrelationTransform transform(psi, psi, p_axis, options);
  field.imag_residue = transform.run(field, false);
  return field;
}

PhaseSpaceField wigner(const WaveFunction& psi, const MomentumGrid& p_axis,
                       const WignerOptions& options) {
  const double norm = psi.norm_squared();
  if (std::abs(norm - 1.0) > 1e-6) {
    std::ostringstream msg;
    msg << "wigner: state '" << psi.label << "' has norm " << norm << ", expected 1";
    throw ContractError(msg.str());
  }
  auto field = wigner_transform(psi, p_axis, options);
  const double edge = std::max(psi.left_edge_ratio(), psi.right_edge_ratio());
  if (edge >= kEdgeDecayTolerance) {
    std::ostringstream msg;
    msg << "state '" << psi.label << "' not decayed at grid edges (|psi|/max = " << edge
        << "); Wigner function may be truncated";
    field.warnings.push_back(msg.str());
  }
  return field;
}

PhaseSpaceField cross_wigner(const WaveFunction& a, const WaveFunction& b,
                             const MomentumGrid& p_axis, const WignerOptions& options) {
  PhaseSpaceField field(a.grid, p_axis);
  CorrelationTransform transform(a, b, p_axis, options);
  transform.run(field, true);
  // The imaginary part of a single cross integral is physical, not a residue.
  field.imag_residue = 0.0;
  return field;
}

WignerParts wigner_parts_eighth(const CoefficientVector& cv, const EigenBasis& basis,
                                const MomentumGrid& p_axis, const WignerOptions& options) {
  const auto split = even_odd_split(cv, basis);
  auto even = wigner_transform(split.even, p_axis, options);
  auto odd = wigner_transform(split.odd, p_axis, options);
  auto total = wigner(split.even + split.odd, p_axis, options);
  auto interference = total - even - odd;
  return {std::move(even), std::move(odd), std::move(interference), std::move(total)};
}

Marginals marginals(const PhaseSpaceField& w) {
  const std::size_t nx = w.x_axis.size();
  const std::size_t np = w.p_axis.size();
  const auto& wx = w.x_axis.rule().weights;
  const auto& wp = w.p_axis.rule().weights;
  Marginals m{std::vector<double>(nx, 0.0), std::vector<double>(np, 0.0)};
  for (std::size_t i = 0; i < nx; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < np; ++j) {
      const double v = w.at(i, j);
      row += wp[j] * v;
      m.momentum[j] += wx[i] * v;
    }
    m.position[i] = row;
  }
  return m;
}

namespace {

struct AxisMoments {
  double mean;
  double variance;
};

AxisMoments axis_moments(const std::vector<double>& density, const QuadratureRule& rule) {
  double zeroth = 0.0;
  double first = 0.0;
  double second = 0.0;
  for (std::size_t i = 0; i < density.size(); ++i) {
    const double w = rule.weights[i] * density[i];
    const double c = rule.nodes[i];
    zeroth += w;
    first += w * c;
    second += w * c * c;
  }
  if (!(zeroth > 0.0)) throw ToleranceError("moments: marginal has non-positive integral");
  const double mean = first / zeroth;
  return {mean, second / zeroth - mean * mean};
}

}  // namespace

Moments moments(const PhaseSpaceField& w) {
  const auto marg = marginals(w);
  const auto mx = axis_moments(marg.position, w.x_axis.rule());
  const auto mp = axis_moments(marg.momentum, w.p_axis.rule());
  if (!(mx.variance > 0.0) || !(mp.variance > 0.0)) {
    std::ostringstream msg;
    msg << "moments: non-positive variance (var_x = " << mx.variance << ", var_p = " << mp.variance
        << ")";
    throw ToleranceError(msg.str());
  }
  Moments m;
  m.mean_x = mx.mean;
  m.mean_p = mp.mean;
  m.sigma_x = std::sqrt(mx.variance);
  m.sigma_p = std::sqrt(mp.variance);
  m.uncertainty_product = m.sigma_x * m.sigma_p;
  return m;
}

Moments wavefunction_moments(const WaveFunction& psi, double hbar) {
  const std::size_t n = psi.values.size();
  if (n < 5) throw ContractError("wavefunction_moments: need at least five samples");
  const double h = psi.grid.spacing();
  const auto& v = psi.values;
  std::vector<complex> deriv(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= 2 && i + 2 < n) {
      deriv[i] = (v[i - 2] - 8.0 * v[i - 1] + 8.0 * v[i + 1] - v[i + 2]) / (12.0 * h);
    } else if (i == 0) {
      deriv[i] = (v[1] - v[0]) / h;
    } else if (i + 1 == n) {
      deriv[i] = (v[n - 1] - v[n - 2]) / h;
    } else {
      deriv[i] = (v[i + 1] - v[i - 1]) / (2.0 * h);
    }
  }
  const auto& rule = psi.grid.rule();
  double norm = 0.0, x1 = 0.0, x2 = 0.0, p1 = 0.0, p2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = rule.weights[i];
    const double rho = std::norm(v[i]);
    const double x = rule.nodes[i];
    norm += w * rho;
    x1 += w * rho * x;
    x2 += w * rho * x * x;
    // Re[psi* (-i hbar psi')] = hbar Im[psi* psi']
    p1 += w * hbar * std::imag(std::conj(v[i]) * deriv[i]);
    p2 += w * hbar * hbar * std::norm(deriv[i]);
  }
  Moments m;
  m.mean_x = x1 / norm;
  m.mean_p = p1 / norm;
  const double var_x = x2 / norm - m.mean_x * m.mean_x;
  const double var_p = p2 / norm - m.mean_p * m.mean_p;
  if (!(var_x > 0.0) || !(var_p > 0.0)) throw ToleranceError("wavefunction_moments: bad variance");
  m.sigma_x = std::sqrt(var_x);
  m.sigma_p = std::sqrt(var_p);
  m.uncertainty_product = m.sigma_x * m.sigma_p;
  return m;
}

double sub_planck_area(const Moments& m, double hbar) {
  if (!(m.uncertainty_product > 0.0)) {
    throw DomainError("sub_planck_area: uncertainty product must be positive");
  }
  return hbar * hbar / m.uncertainty_product;
}

}  // namespace morsewp
