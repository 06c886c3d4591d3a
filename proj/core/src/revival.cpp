#include "morsewp/revival.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "morsewp/error.hpp"

namespace morsewp {

Timescales timescales(const MoleculeParams& params) {
  params.validate();
  const double lambda = lambda_param(params);
  Timescales ts;
  ts.t_revival = 2.0 * std::numbers::pi * params.hbar * lambda * lambda / params.D;
  ts.t_classical = ts.t_revival / (2.0 * lambda - 1.0);
  return ts;
}

std::vector<double> FractionalDecomposition::shifts(const Timescales& ts) const {
  std::vector<double> out(static_cast<std::size_t>(l));
  for (int p = 0; p < l; ++p) {
    out[static_cast<std::size_t>(p)] =
        static_cast<double>(r) / q * ts.t_revival - static_cast<double>(p) / l * ts.t_classical;
  }
  return out;
}

int revival_period(int q) { return q % 4 == 0 ? q / 2 : q; }

FractionalDecomposition gauss_amplitudes(int r, int q) {
  if (q < 2 || r < 1) throw ContractError("gauss_amplitudes: need r >= 1 and q >= 2");
  if (std::gcd(r, q) != 1) {
    throw ContractError("gauss_amplitudes: " + std::to_string(r) + "/" + std::to_string(q) +
                        " is not in lowest terms");
  }
  FractionalDecomposition fd;
  fd.r = r;
  fd.q = q;
  fd.l = revival_period(q);
  const long long L = fd.l;
  const long long Q = q;
  fd.amplitudes.assign(static_cast<std::size_t>(fd.l), complex{0.0, 0.0});
  for (long long p = 0; p < L; ++p) {
    complex sum{0.0, 0.0};
    for (long long m = 0; m < L; ++m) {
      // m^2 r / q - m p / l reduced to a single fraction over lcm(q, l) = q.
      const long long numer = ((m * m % Q) * r % Q - (m * p % L) * (Q / L)) % Q;
      sum += std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(numer) / q);
    }
    fd.amplitudes[static_cast<std::size_t>(p)] = sum / static_cast<double>(L);
  }
  return fd;
}

std::vector<complex> classical_coefficients(const CoefficientVector& cv, double t,
                                            const Timescales& ts, LevelParity parity) {
  const double cycles = t / ts.t_classical;
  std::vector<complex> out(cv.coeffs.size(), complex{0.0, 0.0});
  for (std::size_t m = 0; m < out.size(); ++m) {
    if (parity == LevelParity::even && m % 2 == 1) continue;
    if (parity == LevelParity::odd && m % 2 == 0) continue;
    // Keep only the fractional part of m t / T_cl so whole periods are exact.
    double turns = std::fmod(static_cast<double>(m) * cycles, 1.0);
    out[m] = cv.coeffs[m] * std::polar(1.0, -2.0 * std::numbers::pi * turns);
  }
  return out;
}

WaveFunction classical_wavepacket(const CoefficientVector& cv, double t, const EigenBasis& basis) {
  const auto ts = timescales(basis.params());
  std::ostringstream label;
  label << "classical packet alpha=" << cv.alpha << " t=" << t;
  auto psi = basis.combine(classical_coefficients(cv, t, ts), label.str());
  require_edge_decay(psi);
  return psi;
}

WaveFunction reconstruct_fractional(const CoefficientVector& cv, int r, int q,
                                    const EigenBasis& basis) {
  const auto fd = gauss_amplitudes(r, q);
  const auto ts = timescales(basis.params());
  const auto times = fd.shifts(ts);
  WaveFunction total(basis.grid(), std::vector<complex>(basis.grid().size()),
                     "fractional revival " + std::to_string(r) + "/" + std::to_string(q));
  for (std::size_t p = 0; p < times.size(); ++p) {
    total += fd.amplitudes[p] * classical_wavepacket(cv, times[p], basis);
  }
  return total;
}

EvenOddSplit even_odd_split(const CoefficientVector& cv, const EigenBasis& basis) {
  const auto ts = timescales(basis.params());
  const double eighth = ts.t_revival / 8.0;
  auto even = basis.combine(
      classical_coefficients(cv, eighth - ts.t_classical / 4.0, ts, LevelParity::even),
      "even part T_rev/8");
  auto odd_coeffs = classical_coefficients(cv, eighth, ts, LevelParity::odd);
  const complex eighth_turn = std::polar(1.0, std::numbers::pi / 4.0);
  for (auto& c : odd_coeffs) c *= eighth_turn;
  auto odd = basis.combine(odd_coeffs, "odd part T_rev/8");
  require_edge_decay(even);
  require_edge_decay(odd);
  return {std::move(even), std::move(odd)};
}

}  // namespace morsewp
