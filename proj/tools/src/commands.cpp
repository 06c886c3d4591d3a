#include "morsewp_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <numeric>
#include <optional>
#include <sstream>

#include "morsewp/morsewp.hpp"
#include "morsewp_cli/csv.hpp"

#include "CLI11.hpp"

namespace morsewp::cli {

namespace {

std::string alpha_tag(double alpha) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", alpha);
  return buf;
}

void ensure_out_dir(const RunConfig& config) {
  std::error_code ec;
  std::filesystem::create_directories(config.out_dir, ec);
  if (ec || !std::filesystem::is_directory(config.out_dir)) {
    throw IoError("cannot create output directory " + config.out_dir.string());
  }
}

std::vector<TimeSpec> default_times() {
  return {parse_time("0/1"), parse_time("1/8"), parse_time("1/4"), parse_time("1/2")};
}

std::vector<TimeSpec> requested_times(const RunConfig& config) {
  return config.times.empty() ? default_times() : config.times;
}

double rms(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s / static_cast<double>(a.size()));
}

double density_integral(const WaveFunction& psi) {
  const auto rho = psi.density();
  const auto& w = psi.grid.rule().weights;
  double total = 0.0;
  for (std::size_t i = 0; i < rho.size(); ++i) total += w[i] * rho[i];
  return total;
}

void print_spectrum_summary(const RunConfig& config, std::ostream& log) {
  const auto ts = timescales(config.molecule);
  log << "lambda = " << format_real(lambda_param(config.molecule), config.precision) << "\n"
      << "n_max = " << bound_level_max(config.molecule) << " ("
      << bound_level_max(config.molecule) + 1 << " bound levels)\n"
      << "T_cl = " << format_real(ts.t_classical, config.precision) << "\n"
      << "T_rev = " << format_real(ts.t_revival, config.precision) << "\n";
}

void write_levels(const RunConfig& config) {
  CsvWriter csv(config.out_dir / "levels.csv", config.precision);
  csv.header({"n", "E_n", "s_n"});
  const auto e = spectrum(config.molecule);
  for (std::size_t n = 0; n < e.size(); ++n) {
    const int level = static_cast<int>(n);
    csv.integer(level).real(e[n]).real(laguerre_order(level, config.molecule));
    csv.end_row();
  }
  csv.close();
}

void write_coefficients(const RunConfig& config, const std::vector<double>& alphas,
                        std::ostream& log) {
  CsvWriter csv(config.out_dir / "dm.csv", config.precision);
  csv.header({"alpha", "m", "re_d", "im_d", "abs2_d"});
  for (double alpha : alphas) {
    const auto cv = cs_coefficients(alpha, config.molecule);
    for (std::size_t m = 0; m < cv.coeffs.size(); ++m) {
      const auto d = cv.coeffs[m];
      csv.real(alpha).integer(static_cast<long long>(m)).real(d.real()).real(d.imag()).real(std::norm(d));
      csv.end_row();
    }
    log << "alpha = " << alpha_tag(alpha) << ": argmax |d_m|^2 at m = " << cv.peak_level() << "\n";
  }
  csv.close();
}

struct DensityResult {
  double alpha;
  TimeSpec time;
  double integral;
  std::size_t maxima;
};

std::vector<DensityResult> write_densities(const RunConfig& config, const EigenBasis& basis,
                                           const std::vector<double>& alphas,
                                           const std::vector<TimeSpec>& times, std::ostream& log) {
  const auto ts = timescales(config.molecule);
  std::vector<DensityResult> results;
  for (double alpha : alphas) {
    const auto cv = cs_coefficients(alpha, config.molecule);
    for (const auto& t : times) {
      const auto psi = synthesize(evolve(cv, t.resolve(ts), config.molecule), basis);
      const auto rho = psi.density();
      const auto name = "density_alpha" + alpha_tag(alpha) + "_t" + t.tag() + ".csv";
      CsvWriter csv(config.out_dir / name, config.precision);
      csv.header({"x", "density"});
      for (std::size_t i = 0; i < rho.size(); ++i) {
        csv.real(basis.grid().x(i)).real(rho[i]);
        csv.end_row();
      }
      csv.close();
      const DensityResult r{alpha, t, density_integral(psi), density_maxima(rho).size()};
      log << name << ": integral " << format_real(r.integral, 9) << ", " << r.maxima
          << " well-separated maxima\n";
      results.push_back(r);
    }
  }
  return results;
}

void write_matrix(const std::filesystem::path& path, const PhaseSpaceField& w,
                  const RunConfig& config) {
  CsvWriter csv(path, config.precision);
  const std::size_t stride = config.matrix_stride;
  csv.text("x\\p");
  for (std::size_t j = 0; j < w.p_axis.size(); j += stride) csv.real(w.p_axis.p(j));
  csv.end_row();
  for (std::size_t i = 0; i < w.x_axis.size(); i += stride) {
    csv.real(w.x_axis.x(i));
    for (std::size_t j = 0; j < w.p_axis.size(); j += stride) csv.real(w.at(i, j));
    csv.end_row();
  }
  csv.close();
}

struct EighthResult {
  double alpha;
  WignerParts parts;
  EvenOddSplit split;
  Moments moments;
};

EighthResult eighth_revival(const RunConfig& config, const EigenBasis& basis, double alpha) {
  const auto cv = cs_coefficients(alpha, config.molecule);
  auto parts = wigner_parts_eighth(cv, basis, config.p_grid());
  const auto m = moments(parts.total);
  return {alpha, std::move(parts), even_odd_split(cv, basis), m};
}

void write_moments(const RunConfig& config, const std::vector<EighthResult>& results) {
  CsvWriter csv(config.out_dir / "moments.csv", config.precision);
  csv.header({"alpha", "mean_x", "mean_p", "sigma_x", "sigma_p", "dxdp", "area"});
  for (const auto& r : results) {
    const auto& m = r.moments;
    csv.real(r.alpha).real(m.mean_x).real(m.mean_p).real(m.sigma_x).real(m.sigma_p);
    csv.real(m.uncertainty_product).real(sub_planck_area(m));
    csv.end_row();
  }
  csv.close();
}

double split_identity_error(const WignerParts& parts) {
  double worst = 0.0;
  for (std::size_t k = 0; k < parts.total.values.size(); ++k) {
    const double sum = parts.even.values[k] + parts.odd.values[k] + parts.interference.values[k];
    worst = std::max(worst, std::abs(parts.total.values[k] - sum));
  }
  return worst;
}

}  // namespace

void cmd_spectrum(const RunConfig& config, std::ostream& log) {
  config.validate();
  ensure_out_dir(config);
  print_spectrum_summary(config, log);
  write_levels(config);
  if (!config.eigenfunctions) return;

  const auto grid = config.x_grid();
  const int n_max = bound_level_max(config.molecule);
  std::vector<std::vector<double>> columns;
  for (int n = 0; n <= n_max; ++n) {
    columns.push_back(eigenfunction_samples(n, grid, config.molecule));
    double peak = 0.0;
    for (double v : columns.back()) peak = std::max(peak, std::abs(v));
    const double edge = std::max(std::abs(columns.back().front()), std::abs(columns.back().back()));
    if (peak > 0.0 && edge >= kEdgeDecayTolerance * peak) {
      log << "warning: level " << n << " not decayed at the grid edges (|psi|/max = "
          << format_real(edge / peak, 2) << ")\n";
    }
  }
  CsvWriter csv(config.out_dir / "eigenfunctions.csv", config.precision);
  std::vector<std::string> names{"x"};
  for (int n = 0; n <= n_max; ++n) names.push_back("psi_" + std::to_string(n));
  csv.header(names);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    csv.real(grid.x(i));
    for (const auto& c : columns) csv.real(c[i]);
    csv.end_row();
  }
  csv.close();
}

void cmd_coefficients(const RunConfig& config, std::ostream& log) {
  config.validate();
  ensure_out_dir(config);
  write_coefficients(config, config.alphas, log);
}

void cmd_evolve(const RunConfig& config, std::ostream& log) {
  config.validate();
  ensure_out_dir(config);
  const EigenBasis basis(config.x_grid(), config.molecule);
  const auto results = write_densities(config, basis, config.alphas, requested_times(config), log);
  for (const auto& r : results) {
    if (std::abs(r.integral - 1.0) > 1e-6) {
      throw ToleranceFailure("density for alpha " + alpha_tag(r.alpha) + " at t = " + r.time.text +
                             " integrates to " + format_real(r.integral, 9));
    }
  }
}

void cmd_wigner(const RunConfig& config, std::ostream& log) {
  config.validate();
  ensure_out_dir(config);
  const EigenBasis basis(config.x_grid(), config.molecule);
  std::vector<EighthResult> results;
  std::vector<std::string> problems;
  for (double alpha : config.alphas) {
    auto r = eighth_revival(config, basis, alpha);
    const auto tag = alpha_tag(alpha);
    write_matrix(config.out_dir / ("wigner_even_alpha" + tag + ".csv"), r.parts.even, config);
    write_matrix(config.out_dir / ("wigner_odd_alpha" + tag + ".csv"), r.parts.odd, config);
    write_matrix(config.out_dir / ("wigner_int_alpha" + tag + ".csv"), r.parts.interference, config);
    write_matrix(config.out_dir / ("wigner_total_alpha" + tag + ".csv"), r.parts.total, config);
    for (const auto& w : r.parts.total.warnings) log << "warning: " << w << "\n";

    const double integral = r.parts.total.integral();
    const double identity = split_identity_error(r.parts);
    log << "alpha = " << tag << ": dxdp = " << format_real(r.moments.uncertainty_product, 6)
        << ", area = " << format_real(sub_planck_area(r.moments), 6) << ", integral W = "
        << format_real(integral, 9) << ", imag residue = "
        << format_real(r.parts.total.imag_residue, 2) << "\n";
    if (r.parts.total.imag_residue >= 1e-10) problems.push_back("alpha " + tag + ": imaginary residue");
    if (std::abs(integral - 1.0) > 1e-3) problems.push_back("alpha " + tag + ": integral of W");
    if (identity >= 1e-10) problems.push_back("alpha " + tag + ": split identity");
    results.push_back(std::move(r));
  }
  write_moments(config, results);
  if (!problems.empty()) {
    std::string msg = "Wigner checks failed:";
    for (const auto& p : problems) msg += " " + p + ";";
    throw ToleranceFailure(msg);
  }
}

std::vector<Check> cmd_report(const RunConfig& config, std::ostream& log) {
  config.validate();
  ensure_out_dir(config);
  const auto& params = config.molecule;
  const auto ts = timescales(params);
  const std::vector<double> ref_alphas = {1.4, 2.5};
  const double ref_products[2] = {5.5914, 2.56404};
  const double ref_areas[2] = {0.179, 0.39};

  std::vector<Check> checks;
  auto check = [&](const std::string& name, const std::function<bool(std::ostringstream&)>& fn) {
    Check c{name, false, {}};
    std::ostringstream detail;
    detail.precision(8);
    try {
      c.pass = fn(detail);
    } catch (const std::exception& e) {
      detail << " error: " << e.what();
      c.pass = false;
    }
    c.detail = detail.str();
    log << (c.pass ? "PASS " : "FAIL ") << c.name << ":" << c.detail << "\n";
    checks.push_back(c);
  };

  print_spectrum_summary(config, log);
  write_levels(config);
  check("spectrum: 30 bound levels, E_n matches the s-form within 1e-12", [&](auto& d) {
    const int levels = bound_level_max(params) + 1;
    double rel = 0.0;
    for (int n = 0; n < levels; ++n) {
      const double e = energy(n, params);
      rel = std::max(rel, std::abs(energy_from_order(laguerre_order(n, params), params) - e) / std::abs(e));
    }
    d << " levels=" << levels << " max relative error=" << rel;
    return levels == 30 && rel < 1e-12;
  });

  write_coefficients(config, ref_alphas, log);
  check("coefficients: unit norm, argmax decreases from alpha 1.4 to 2.5", [&](auto& d) {
    const auto a = cs_coefficients(1.4, params);
    const auto b = cs_coefficients(2.5, params);
    d << " argmax " << a.peak_level() << " -> " << b.peak_level();
    return std::abs(a.norm_squared() - 1.0) < 1e-12 && std::abs(b.norm_squared() - 1.0) < 1e-12 &&
           b.peak_level() < a.peak_level();
  });

  std::optional<EigenBasis> basis;
  check("grid: coherent states decay at the spatial grid edges", [&](auto& d) {
    basis.emplace(config.x_grid(), params);
    for (double alpha : ref_alphas) {
      require_edge_decay(synthesize(evolve(cs_coefficients(alpha, params), 0.0, params), *basis));
    }
    d << " x in [" << config.x_min << ", " << config.x_max << "] x " << config.grid_points;
    return true;
  });

  std::vector<DensityResult> densities;
  auto times = default_times();
  for (const auto& t : config.times) times.push_back(t);
  check("densities: every density integrates to 1 within 1e-6", [&](auto& d) {
    if (!basis) throw ToleranceFailure("no spatial grid");
    densities = write_densities(config, *basis, ref_alphas, times, log);
    double worst = 0.0;
    for (const auto& r : densities) worst = std::max(worst, std::abs(r.integral - 1.0));
    d << " files=" << densities.size() << " max|integral - 1|=" << worst;
    return worst <= 1e-6;
  });
  check("densities: two maxima at T_rev/4, one at T_rev/2", [&](auto& d) {
    bool ok = !densities.empty();
    for (const auto& r : densities) {
      if (!r.time.fractional || r.time.r != 1 || (r.time.q != 4 && r.time.q != 2)) continue;
      d << " alpha=" << r.alpha << " t=" << r.time.text << ":" << r.maxima;
      ok = ok && r.maxima == (r.time.q == 4 ? 2u : 1u);
    }
    return ok;
  });

  std::vector<EighthResult> eighth;
  check("Wigner parts at T_rev/8 computed", [&](auto& d) {
    if (!basis) throw ToleranceFailure("no spatial grid");
    for (double alpha : ref_alphas) eighth.push_back(eighth_revival(config, *basis, alpha));
    write_moments(config, eighth);
    d << " p in [-" << config.p_max << ", " << config.p_max << "] x " << config.p_points;
    return true;
  });
  for (std::size_t k = 0; k < ref_alphas.size(); ++k) {
    std::ostringstream name;
    name << "uncertainty product alpha=" << ref_alphas[k] << " within 2% of " << ref_products[k];
    check(name.str(), [&](auto& d) {
      if (eighth.size() <= k) throw ToleranceFailure("Wigner parts unavailable");
      const double got = eighth[k].moments.uncertainty_product;
      d << " dxdp=" << got;
      return std::abs(got - ref_products[k]) <= 0.02 * ref_products[k];
    });
    std::ostringstream area;
    area << "sub-Planck area alpha=" << ref_alphas[k] << " within 2% of " << ref_areas[k];
    check(area.str(), [&](auto& d) {
      if (eighth.size() <= k) throw ToleranceFailure("Wigner parts unavailable");
      const double a = sub_planck_area(eighth[k].moments);
      d << " a=" << a;
      return std::abs(a - ref_areas[k]) <= 0.02 * ref_areas[k];
    });
  }

  // Wigner validity on eigenstates 0, 5, 15 (with a momentum window of at
  // least [-100, 100] at the configured spacing) and on the coherent states
  // at t = 0 and T_rev/8.
  struct Validity {
    double residue = 0.0, integral = 0.0, marginal = 0.0, bilinear = 0.0;
    bool done = false;
    std::string error;
  } v;
  try {
    if (!basis) throw ToleranceFailure("no spatial grid");
    const auto grid = config.x_grid();
    const auto pg = config.p_grid();
    const double p_ext = std::max(config.p_max, 100.0);
    const auto ext_points = static_cast<std::size_t>(
        std::lround(p_ext / config.p_max * static_cast<double>(config.p_points - 1))) + 1;
    const auto pg_ext = MomentumGrid::symmetric(p_ext, ext_points);
    auto one = [&](const WaveFunction& a, const WaveFunction& b, const MomentumGrid& axis,
                   const WignerParts* parts) {
      const auto psi = a + b;
      const auto total = parts ? parts->total : wigner_transform(psi, axis);
      v.residue = std::max(v.residue, total.imag_residue);
      v.integral = std::max(v.integral, std::abs(total.integral() - 1.0));
      v.marginal = std::max(v.marginal, rms(marginals(total).position, psi.density()));
      const auto sub = parts ? total - parts->even - parts->odd
                             : total - wigner_transform(a, axis) - wigner_transform(b, axis);
      const auto cross = cross_wigner(a, b, axis);
      for (std::size_t k = 0; k < sub.values.size(); ++k) {
        v.bilinear = std::max(v.bilinear, std::abs(sub.values[k] - cross.values[k]));
      }
    };
    for (int n : {0, 5, 15}) {
      auto left = eigenfunction(n, grid, params);
      auto right = left;
      for (std::size_t i = 0; i < left.values.size(); ++i) {
        (i < left.values.size() / 2 ? right : left).values[i] = 0.0;
      }
      one(left, right, pg_ext, nullptr);
    }
    for (std::size_t k = 0; k < ref_alphas.size(); ++k) {
      const auto cv = cs_coefficients(ref_alphas[k], params);
      one(basis->combine(classical_coefficients(cv, 0.0, ts, LevelParity::even)),
          basis->combine(classical_coefficients(cv, 0.0, ts, LevelParity::odd)), pg, nullptr);
      if (eighth.size() > k) one(eighth[k].split.even, eighth[k].split.odd, pg, &eighth[k].parts);
    }
    v.done = true;
  } catch (const std::exception& e) {
    v.error = e.what();
  }
  auto validity = [&](const std::string& name, double value, double limit) {
    check(name, [&](auto& d) {
      if (!v.done) throw ToleranceFailure(v.error);
      d << " max=" << value;
      return value < limit;
    });
  };
  validity("Wigner reality: imaginary residue < 1e-10", v.residue, 1e-10);
  validity("Wigner normalization: |integral - 1| < 1e-3", v.integral, 1e-3);
  validity("Wigner marginal fidelity: RMS < 1e-3", v.marginal, 1e-3);
  validity("Wigner bilinearity: split vs direct cross term < 1e-10", v.bilinear, 1e-10);

  check("Wigner lobes: even part split along x, odd part split along p", [&](auto& d) {
    if (eighth.size() != ref_alphas.size()) throw ToleranceFailure("Wigner parts unavailable");
    bool ok = true;
    for (const auto& e : eighth) {
      const auto widths = husimi_widths(e.moments);
      for (bool even : {true, false}) {
        const auto lobes = main_lobes(even ? e.parts.even : e.parts.odd, widths);
        if (lobes.size() < 2) return false;
        const double dx = std::abs(lobes[1].x - lobes[0].x) / e.moments.sigma_x;
        const double dp = std::abs(lobes[1].p - lobes[0].p) / e.moments.sigma_p;
        d << " alpha=" << e.alpha << (even ? " even" : " odd") << " dx/sx=" << dx << " dp/sp=" << dp;
        ok = ok && (even ? dx > dp : dp > dx);
      }
    }
    return ok;
  });

  check("Gauss sums: (1,8) matches {e^{i pi/4}, 1, -e^{i pi/4}, 1}/2, unitarity for q <= 32", [&](auto& d) {
    const auto fd = gauss_amplitudes(1, 8);
    const complex e = std::polar(0.5, std::numbers::pi / 4.0);
    const complex expected[4] = {e, 0.5, -e, 0.5};
    double worst = 0.0;
    for (int p = 0; p < 4; ++p) worst = std::max(worst, std::abs(fd.amplitudes[p] - expected[p]));
    double unitarity = 0.0;
    for (int q = 2; q <= 32; ++q) {
      for (int r = 1; r < q; ++r) {
        if (std::gcd(r, q) != 1) continue;
        double total = 0.0;
        for (const auto& a : gauss_amplitudes(r, q).amplitudes) total += std::norm(a);
        unitarity = std::max(unitarity, std::abs(total - 1.0));
      }
    }
    d << " (1,8) error=" << worst << " unitarity error=" << unitarity;
    return worst < 1e-12 && unitarity < 1e-12;
  });

  check("fractional revivals: reconstruction and even/odd overlaps >= 0.999", [&](auto& d) {
    if (!basis) throw ToleranceFailure("no spatial grid");
    double worst = 1.0;
    for (double alpha : ref_alphas) {
      const auto cv = cs_coefficients(alpha, params);
      for (auto [r, q] : {std::pair{1, 2}, {1, 4}, {1, 8}, {3, 8}}) {
        const auto exact = synthesize(evolve(cv, ts.t_revival * r / q, params), *basis);
        worst = std::min(worst, overlap_magnitude(exact, reconstruct_fractional(cv, r, q, *basis)));
      }
      const auto split = even_odd_split(cv, *basis);
      const auto exact = synthesize(evolve(cv, ts.t_revival / 8, params), *basis);
      worst = std::min(worst, overlap_magnitude(exact, split.even + split.odd));
    }
    d << " min overlap=" << worst;
    return worst >= 0.999;
  });

  check("eigenbasis: Gram deviation < 1e-6 on [-0.8, 100] x 16385", [&](auto& d) {
    const EigenBasis wide(SpatialGrid::wide_grid(), params);
    const auto g = wide.gram();
    const std::size_t n = wide.levels();
    double worst = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        worst = std::max(worst, std::abs(g[a * n + b] - (a == b ? 1.0 : 0.0)));
      }
    }
    d << " deviation=" << worst;
    return worst < 1e-6;
  });

  const auto passed = static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; }));
  const auto path = config.out_dir / "report.txt";
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << "morsewp reproduction report\n"
      << "molecule: D=" << params.D << " beta=" << params.beta << " mu=" << params.mu
      << " r0=" << params.r0 << "\n"
      << "lambda=" << format_real(lambda_param(params), config.precision)
      << " n_max=" << bound_level_max(params)
      << " T_cl=" << format_real(ts.t_classical, config.precision)
      << " T_rev=" << format_real(ts.t_revival, config.precision) << "\n"
      << "x grid: [" << config.x_min << ", " << config.x_max << "] x " << config.grid_points
      << "; p grid: [-" << config.p_max << ", " << config.p_max << "] x " << config.p_points << "\n\n";
  for (const auto& c : checks) out << (c.pass ? "PASS " : "FAIL ") << c.name << ":" << c.detail << "\n";
  out << "\nsummary: " << passed << " of " << checks.size() << " checks passed\n";
  out.close();
  if (out.fail()) throw IoError("error while writing " + path.string());
  log << "summary: " << passed << " of " << checks.size() << " checks passed; report at "
      << path.string() << "\n";
  return checks;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Morse oscillator wave packets: spectrum, revivals and Wigner functions", "morsewp"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::vector<double> alphas;
  std::vector<std::string> times;
  std::size_t grid_points = 0, p_points = 0, matrix_stride = 0;
  double x_min = 0.0, x_max = 0.0, p_max = 0.0;
  std::string out_dir;
  int precision = 0;
  bool eigenfunctions = false;

  auto* o_config = app.add_option("--config", config_path, "key = value configuration file");
  auto* o_alpha = app.add_option("--alpha", alphas, "coherent-state parameter (repeatable)");
  auto* o_time = app.add_option("--time", times, "r/q of T_rev or atomic units (repeatable)");
  auto* o_grid = app.add_option("--grid-points", grid_points, "spatial grid points");
  auto* o_xmin = app.add_option("--x-min", x_min, "left edge of the grid in x = r/r0 - 1");
  auto* o_xmax = app.add_option("--x-max", x_max, "right edge of the grid in x = r/r0 - 1");
  auto* o_ppoints = app.add_option("--p-points", p_points, "momentum grid points");
  auto* o_pmax = app.add_option("--p-max", p_max, "momentum window half-width");
  auto* o_out = app.add_option("--out", out_dir, "output directory");
  auto* o_prec = app.add_option("--precision", precision, "digits after the point in CSV reals");
  auto* o_stride = app.add_option("--matrix-stride", matrix_stride, "Wigner matrix output stride");
  auto* o_eig = app.add_flag("--eigenfunctions", eigenfunctions, "also write eigenfunctions.csv");

  auto* s_spectrum = app.add_subcommand("spectrum", "bound levels and timescales");
  auto* s_coeff = app.add_subcommand("coefficients", "coherent-state expansion coefficients");
  auto* s_evolve = app.add_subcommand("evolve", "probability densities at chosen times");
  auto* s_wigner = app.add_subcommand("wigner", "Wigner parts at the eighth revival");
  auto* s_report = app.add_subcommand("report", "full reproduction suite with report.txt");

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    RunConfig config;
    if (*o_config) load_config_file(config_path, config);
    if (*o_alpha) config.alphas = alphas;
    if (*o_time) {
      config.times.clear();
      for (const auto& t : times) config.times.push_back(parse_time(t));
    }
    if (*o_grid) config.grid_points = grid_points;
    if (*o_xmin) config.x_min = x_min;
    if (*o_xmax) config.x_max = x_max;
    if (*o_ppoints) config.p_points = p_points;
    if (*o_pmax) config.p_max = p_max;
    if (*o_out) config.out_dir = out_dir;
    if (*o_prec) config.precision = precision;
    if (*o_stride) config.matrix_stride = matrix_stride;
    if (*o_eig) config.eigenfunctions = eigenfunctions;

    if (*s_spectrum) {
      cmd_spectrum(config, out);
    } else if (*s_coeff) {
      cmd_coefficients(config, out);
    } else if (*s_evolve) {
      cmd_evolve(config, out);
    } else if (*s_wigner) {
      cmd_wigner(config, out);
    } else if (*s_report) {
      const auto checks = cmd_report(config, out);
      for (const auto& c : checks) {
        if (!c.pass) return kExitTolerance;
      }
    }
    return kExitOk;
  } catch (const CliError& e) {
    err << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const morsewp::ToleranceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitTolerance;
  } catch (const morsewp::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
}

}  // namespace morsewp::cli
