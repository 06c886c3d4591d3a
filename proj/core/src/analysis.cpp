#include "morsewp/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "morsewp/error.hpp"

namespace morsewp {

std::vector<std::size_t> density_maxima(std::span<const double> density, double min_fraction,
                                        double dip_fraction) {
  std::vector<std::size_t> peaks;
  if (density.size() < 3) return peaks;
  const double top = *std::max_element(density.begin(), density.end());
  if (!(top > 0.0)) return peaks;
  for (std::size_t i = 1; i + 1 < density.size(); ++i) {
    if (density[i] > density[i - 1] && density[i] >= density[i + 1] &&
        density[i] > min_fraction * top) {
      peaks.push_back(i);
    }
  }
  // Merge neighbours that are not separated by a deep enough dip.
  bool merged = true;
  while (merged && peaks.size() > 1) {
    merged = false;
    for (std::size_t k = 0; k + 1 < peaks.size(); ++k) {
      const std::size_t a = peaks[k];
      const std::size_t b = peaks[k + 1];
      const double dip = *std::min_element(density.begin() + static_cast<std::ptrdiff_t>(a),
                                           density.begin() + static_cast<std::ptrdiff_t>(b) + 1);
      if (dip >= dip_fraction * std::min(density[a], density[b])) {
        peaks.erase(peaks.begin() + static_cast<std::ptrdiff_t>(density[a] < density[b] ? k : k + 1));
        merged = true;
        break;
      }
    }
  }
  return peaks;
}

namespace {

std::vector<double> gaussian_kernel(double sigma, double spacing) {
  const auto half = static_cast<std::ptrdiff_t>(std::ceil(4.0 * sigma / spacing));
  std::vector<double> k(static_cast<std::size_t>(2 * half + 1));
  for (std::ptrdiff_t i = -half; i <= half; ++i) {
    const double u = static_cast<double>(i) * spacing / sigma;
    k[static_cast<std::size_t>(i + half)] = std::exp(-0.5 * u * u);
  }
  return k;
}

}  // namespace

PhaseSpaceField gaussian_smooth(const PhaseSpaceField& w, double sigma_x, double sigma_p) {
  if (!(sigma_x > 0.0) || !(sigma_p > 0.0)) {
    throw ContractError("gaussian_smooth: widths must be positive");
  }
  const std::size_t nx = w.x_axis.size();
  const std::size_t np = w.p_axis.size();
  const auto kx = gaussian_kernel(sigma_x, w.x_axis.spacing());
  const auto kp = gaussian_kernel(sigma_p, w.p_axis.spacing());
  const auto hx = static_cast<std::ptrdiff_t>(kx.size() / 2);
  const auto hp = static_cast<std::ptrdiff_t>(kp.size() / 2);

  // Along p.
  PhaseSpaceField tmp(w.x_axis, w.p_axis);
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < np; ++j) {
      double sum = 0.0, wsum = 0.0;
      for (std::ptrdiff_t d = -hp; d <= hp; ++d) {
        const auto jj = static_cast<std::ptrdiff_t>(j) + d;
        if (jj < 0 || jj >= static_cast<std::ptrdiff_t>(np)) continue;
        const double kw = kp[static_cast<std::size_t>(d + hp)];
        sum += kw * w.at(i, static_cast<std::size_t>(jj));
        wsum += kw;
      }
      tmp.at(i, j) = sum / wsum;
    }
  }
  // Along x.
  PhaseSpaceField out(w.x_axis, w.p_axis);
  std::vector<double> column(nx);
  for (std::size_t j = 0; j < np; ++j) {
    for (std::size_t i = 0; i < nx; ++i) column[i] = tmp.at(i, j);
    for (std::size_t i = 0; i < nx; ++i) {
      double sum = 0.0, wsum = 0.0;
      for (std::ptrdiff_t d = -hx; d <= hx; ++d) {
        const auto ii = static_cast<std::ptrdiff_t>(i) + d;
        if (ii < 0 || ii >= static_cast<std::ptrdiff_t>(nx)) continue;
        const double kw = kx[static_cast<std::size_t>(d + hx)];
        sum += kw * column[static_cast<std::size_t>(ii)];
        wsum += kw;
      }
      out.at(i, j) = sum / wsum;
    }
  }
  return out;
}

SmoothingWidths husimi_widths(const Moments& shape, double hbar) {
  if (!(shape.sigma_x > 0.0) || !(shape.sigma_p > 0.0)) {
    throw ContractError("husimi_widths: spreads must be positive");
  }
  const double sx = std::sqrt(0.5 * hbar * shape.sigma_x / shape.sigma_p);
  return {sx, 0.5 * hbar / sx};
}

std::vector<Lobe> main_lobes(const PhaseSpaceField& w, const SmoothingWidths& widths,
                             std::size_t count) {
  const auto q = gaussian_smooth(w, widths.sigma_x, widths.sigma_p);
  const std::size_t nx = q.x_axis.size();
  const std::size_t np = q.p_axis.size();

  struct Peak {
    std::size_t i, j;
    double v;
  };
  std::vector<Peak> peaks;
  for (std::size_t i = 1; i + 1 < nx; ++i) {
    for (std::size_t j = 1; j + 1 < np; ++j) {
      const double v = q.at(i, j);
      if (v > 0.0 && v > q.at(i - 1, j) && v >= q.at(i + 1, j) && v > q.at(i, j - 1) &&
          v >= q.at(i, j + 1)) {
        peaks.push_back({i, j, v});
      }
    }
  }
  std::sort(peaks.begin(), peaks.end(), [](const Peak& a, const Peak& b) { return a.v > b.v; });
  if (peaks.size() > count) peaks.resize(count);

  std::vector<Lobe> lobes;
  std::vector<char> seen(nx * np);
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (const auto& peak : peaks) {
    std::fill(seen.begin(), seen.end(), 0);
    const double level = 0.5 * peak.v;
    double mass = 0.0, mx = 0.0, mp = 0.0;
    stack.assign(1, {peak.i, peak.j});
    seen[peak.i * np + peak.j] = 1;
    while (!stack.empty()) {
      const auto [i, j] = stack.back();
      stack.pop_back();
      const double v = q.at(i, j);
      mass += v;
      mx += v * q.x_axis.x(i);
      mp += v * q.p_axis.p(j);
      const std::pair<std::ptrdiff_t, std::ptrdiff_t> steps[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
      for (const auto& [di, dj] : steps) {
        const auto ii = static_cast<std::ptrdiff_t>(i) + di;
        const auto jj = static_cast<std::ptrdiff_t>(j) + dj;
        if (ii < 0 || jj < 0 || ii >= static_cast<std::ptrdiff_t>(nx) ||
            jj >= static_cast<std::ptrdiff_t>(np)) {
          continue;
        }
        const std::size_t idx = static_cast<std::size_t>(ii) * np + static_cast<std::size_t>(jj);
        // Descend monotonically so the region stays on this peak's own hill.
        if (seen[idx] || q.values[idx] < level || q.values[idx] > v) continue;
        seen[idx] = 1;
        stack.emplace_back(static_cast<std::size_t>(ii), static_cast<std::size_t>(jj));
      }
    }
    lobes.push_back({mx / mass, mp / mass, peak.v});
  }
  return lobes;
}

int sign_changes_along(const PhaseSpaceField& w, const Lobe& a, const Lobe& b,
                       std::size_t samples, double floor_fraction) {
  if (samples < 2) throw ContractError("sign_changes_along: need at least two samples");
  const double floor = floor_fraction * w.max_abs();
  const std::size_t nx = w.x_axis.size();
  const std::size_t np = w.p_axis.size();
  auto sample = [&](double x, double p) {
    const double u = std::clamp((x - w.x_axis.x_min()) / w.x_axis.spacing(), 0.0,
                                static_cast<double>(nx - 1));
    const double v = std::clamp((p - w.p_axis.p_min()) / w.p_axis.spacing(), 0.0,
                                static_cast<double>(np - 1));
    const auto i = std::min(static_cast<std::size_t>(u), nx - 2);
    const auto j = std::min(static_cast<std::size_t>(v), np - 2);
    const double fu = u - static_cast<double>(i);
    const double fv = v - static_cast<double>(j);
    return (1 - fu) * (1 - fv) * w.at(i, j) + fu * (1 - fv) * w.at(i + 1, j) +
           (1 - fu) * fv * w.at(i, j + 1) + fu * fv * w.at(i + 1, j + 1);
  };
  int changes = 0;
  int last_sign = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(samples - 1);
    const double val = sample(a.x + t * (b.x - a.x), a.p + t * (b.p - a.p));
    if (std::abs(val) < floor) continue;
    const int s = val > 0.0 ? 1 : -1;
    if (last_sign != 0 && s != last_sign) ++changes;
    last_sign = s;
  }
  return changes;
}

}  // namespace morsewp

namespace morsewp {

int ripple_count(const PhaseSpaceField& w, const Lobe& a, const Lobe& b, const Moments& scale,
                 double half_span, std::size_t samples) {
  if (!(scale.sigma_x > 0.0) || !(scale.sigma_p > 0.0)) {
    throw ContractError("ripple_count: scale spreads must be positive");
  }
  // Separation in scaled units, rotated by 90 degrees.
  const double dx = (b.x - a.x) / scale.sigma_x;
  const double dp = (b.p - a.p) / scale.sigma_p;
  const double len = std::hypot(dx, dp);
  if (!(len > 0.0)) throw ContractError("ripple_count: lobes coincide");
  const double ux = -dp / len;
  const double up = dx / len;
  const double mx = 0.5 * (a.x + b.x);
  const double mp = 0.5 * (a.p + b.p);
  const Lobe from{mx - half_span * ux * scale.sigma_x, mp - half_span * up * scale.sigma_p, 0.0};
  const Lobe to{mx + half_span * ux * scale.sigma_x, mp + half_span * up * scale.sigma_p, 0.0};
  return sign_changes_along(w, from, to, samples);
}

}  // namespace morsewp
