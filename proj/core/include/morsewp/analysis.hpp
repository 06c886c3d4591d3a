#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "morsewp/phasespace.hpp"

namespace morsewp {

/// Indices of the well-separated maxima of a sampled density: strict local
/// maxima above `min_fraction` of the global peak, where two neighbours only
/// count separately if the density between them drops below `dip_fraction`
/// of the lower one. Otherwise the lower maximum is absorbed.
std::vector<std::size_t> density_maxima(std::span<const double> density,
                                        double min_fraction = 0.1, double dip_fraction = 0.5);

/// Gaussian smoothing of W along both axes (standard deviations in axis
/// units, kernel cut at 4 sigma, renormalized at the edges).
PhaseSpaceField gaussian_smooth(const PhaseSpaceField& w, double sigma_x, double sigma_p);

/// Minimum-uncertainty smoothing widths (sigma_x sigma_p = hbar / 2) with the
/// aspect ratio of `shape`. Smoothing W with them gives the Husimi function,
/// which suppresses interference fringes between separated packets.
struct SmoothingWidths {
  double sigma_x;
  double sigma_p;
};
SmoothingWidths husimi_widths(const Moments& shape, double hbar = 1.0);

struct Lobe {
  double x = 0.0;
  double p = 0.0;
  double height = 0.0;  // peak of the smoothed field
};

/// The `count` highest lobes of W after Husimi smoothing, tallest first.
/// Each centroid is the smoothed-weight average over the region reachable
/// from its peak by non-increasing steps that stay above half the peak.
std::vector<Lobe> main_lobes(const PhaseSpaceField& w, const SmoothingWidths& widths,
                             std::size_t count = 2);

/// Sign changes of W along the straight segment from a to b (bilinear
/// interpolation, `samples` points). Values below `floor_fraction` of max |W|
/// are ignored so that numerical noise around zero does not count.
int sign_changes_along(const PhaseSpaceField& w, const Lobe& a, const Lobe& b,
                       std::size_t samples = 2000, double floor_fraction = 1e-3);

/// Interference ripples between two lobes: sign changes of W along the line
/// through their midpoint perpendicular to the separation, covering
/// +-`half_span` standard units on each side. Distances are measured in units
/// of `scale` (sigma_x, sigma_p), so perpendicularity is axis-scale invariant.
int ripple_count(const PhaseSpaceField& w, const Lobe& a, const Lobe& b, const Moments& scale,
                 double half_span = 1.0, std::size_t samples = 2000);

}  // namespace morsewp
