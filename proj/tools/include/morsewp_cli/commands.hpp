#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "morsewp_cli/config.hpp"

namespace morsewp::cli {

/// levels.csv (n, E_n, s_n) and, with config.eigenfunctions, eigenfunctions.csv
/// (x, psi_0 .. psi_nmax). Prints lambda, n_max, T_cl and T_rev.
void cmd_spectrum(const RunConfig& config, std::ostream& log);

/// dm.csv (alpha, m, re_d, im_d, abs2_d) for every configured alpha.
void cmd_coefficients(const RunConfig& config, std::ostream& log);

/// density_alpha<A>_t<T>.csv (x, density) per alpha and time. Without times,
/// uses 0, 1/8, 1/4 and 1/2 of T_rev. Throws ToleranceFailure if a density
/// does not integrate to 1 within 1e-6.
void cmd_evolve(const RunConfig& config, std::ostream& log);

/// Wigner parts at T_rev/8 per alpha: wigner_{even,odd,int,total}_alpha<A>.csv
/// matrices (header row of p values, first column x) and moments.csv. Throws
/// ToleranceFailure if the reality, normalization or split identity checks fail.
void cmd_wigner(const RunConfig& config, std::ostream& log);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Full reproduction suite: writes the spectrum, coefficient, density and
/// moment files plus report.txt. Returns the checks; the report is written
/// even when some fail.
std::vector<Check> cmd_report(const RunConfig& config, std::ostream& log);

/// Entry point shared by the executable and the tests. Returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace morsewp::cli
