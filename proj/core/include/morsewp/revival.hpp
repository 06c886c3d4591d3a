#pragma once

#include <vector>

#include "morsewp/coherent.hpp"

namespace morsewp {

// T_rev = 2 pi hbar lambda^2 / D, T_cl = T_rev / (2 lambda - 1).
struct Timescales {
  double t_classical = 0.0;
  double t_revival = 0.0;
};

Timescales timescales(const MoleculeParams& params);

// At t = (r/q) T_rev the state is sum_p amplitudes[p] chi_cl(t - (p/l) T_cl).
struct FractionalDecomposition {
  int r = 0;
  int q = 0;
  int l = 0;  // q/2 when 4 | q, q otherwise
  std::vector<complex> amplitudes;

  // Classical-packet times (r/q) T_rev - (p/l) T_cl, p = 0..l-1.
  std::vector<double> shifts(const Timescales& ts) const;
};

/// Period of the quadratic phase exp(2 pi i m^2 r / q) in m.
int revival_period(int q);

/// a_p = (1/l) sum_{m=0}^{l-1} exp[2 pi i (m^2 r / q - m p / l)].
/// The + sign pairs with exp(-i E_m t) and makes (r, q) = (1, 8) give
/// {e^{i pi/4}/2, 1/2, -e^{i pi/4}/2, 1/2}. Phases are reduced with integer
/// arithmetic before the exponential. Throws ContractError unless
/// r >= 1, q >= 2 and gcd(r, q) = 1.
FractionalDecomposition gauss_amplitudes(int r, int q);

/// d_m exp(-2 pi i m t / T_cl), optionally restricted to even or odd m.
enum class LevelParity { all, even, odd };
std::vector<complex> classical_coefficients(const CoefficientVector& cv, double t,
                                            const Timescales& ts,
                                            LevelParity parity = LevelParity::all);

/// chi_cl(x, t): synthesis with the linear-in-m phase only.
WaveFunction classical_wavepacket(const CoefficientVector& cv, double t, const EigenBasis& basis);

/// sum_p a_p chi_cl(x, (r/q) T_rev - (p/l) T_cl). Equals the exactly evolved
/// state up to a global phase.
WaveFunction reconstruct_fractional(const CoefficientVector& cv, int r, int q,
                                    const EigenBasis& basis);

struct EvenOddSplit {
  WaveFunction even;  // chi_cl^even(T_rev/8 - T_cl/4)
  WaveFunction odd;   // e^{i pi/4} chi_cl^odd(T_rev/8)
};

/// Two-cat decomposition of the state at one-eighth of the revival time;
/// even + odd reproduces chi(T_rev/8) up to a global phase.
EvenOddSplit even_odd_split(const CoefficientVector& cv, const EigenBasis& basis);

}  // namespace morsewp
