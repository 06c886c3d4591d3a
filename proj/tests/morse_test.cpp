#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "morsewp/error.hpp"
#include "morsewp/morse.hpp"

namespace morsewp {
namespace {

const MoleculeParams kHI = MoleculeParams::hydrogen_iodide();

// Same D, beta, r0 as HI with mu chosen so that lambda takes the given value.
MoleculeParams with_lambda(double lambda) {
  MoleculeParams p = kHI;
  p.mu = lambda * lambda * p.beta * p.beta * p.hbar * p.hbar / (2.0 * p.D * p.r0 * p.r0);
  return p;
}

int sign_changes(const WaveFunction& psi) {
  double peak = 0.0;
  for (const auto& v : psi.values) peak = std::max(peak, std::abs(v.real()));
  int changes = 0;
  int last = 0;
  for (const auto& v : psi.values) {
    if (std::abs(v.real()) < 1e-10 * peak) continue;
    const int s = v.real() > 0 ? 1 : -1;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

TEST(Potential, Landmarks) {
  EXPECT_DOUBLE_EQ(potential(0.0, kHI), -kHI.D);
  EXPECT_NEAR(potential(60.0, kHI), 0.0, 1e-40);
  // mpmath, 30 digits: D (e^{0.831728} - 2 e^{0.415864})
  EXPECT_NEAR(potential(-0.2, kHI), -0.0825833726881250090408148964479, 1e-15);
}

TEST(Lambda, HydrogenIodide) {
  // mpmath evaluation of sqrt(2 mu D r0^2 / beta^2) with the HI constants.
  EXPECT_NEAR(lambda_param(kHI), 29.6009126079468125104480211103, 1e-12);
}

TEST(Lambda, Scaling) {
  MoleculeParams p = kHI;
  p.D *= 4.0;
  EXPECT_NEAR(lambda_param(p), 2.0 * lambda_param(kHI), 1e-12);
  EXPECT_NEAR(lambda_param(with_lambda(1.0)), 1.0, 1e-14);
}

TEST(BoundLevels, Counts) {
  EXPECT_EQ(bound_level_max(kHI), 29);  // 30 bound states
  EXPECT_EQ(bound_level_max(with_lambda(1.6)), 1);
  EXPECT_EQ(bound_level_max(with_lambda(0.6)), 0);
  EXPECT_THROW(bound_level_max(with_lambda(0.5)), NoBoundStateError);
  EXPECT_THROW(with_lambda(0.4).validate(), NoBoundStateError);
}

TEST(Params, Validation) {
  EXPECT_NO_THROW(kHI.validate());
  for (double MoleculeParams::*field : {&MoleculeParams::D, &MoleculeParams::beta,
                                        &MoleculeParams::mu, &MoleculeParams::r0}) {
    MoleculeParams p = kHI;
    p.*field = 0.0;
    EXPECT_THROW(p.validate(), ContractError);
    p.*field = -1.0;
    EXPECT_THROW(p.validate(), ContractError);
  }
}

TEST(Energy, GroundStateValue) {
  // mpmath: -(D / lambda^2) (lambda - 1/2)^2
  EXPECT_NEAR(energy(0, kHI), -0.108731539822687063595659096905, 1e-15);
}

TEST(Energy, SpectrumShape) {
  const auto e = spectrum(kHI);
  ASSERT_EQ(e.size(), 30u);
  for (std::size_t n = 0; n < e.size(); ++n) {
    EXPECT_LT(e[n], 0.0);
    if (n > 0) EXPECT_GT(e[n], e[n - 1]);
  }
  EXPECT_THROW(energy(30, kHI), LevelError);
  EXPECT_THROW(energy(-1, kHI), LevelError);
}

TEST(Energy, AgreesWithLaguerreOrderForm) {
  for (int n = 0; n <= 29; ++n) {
    const double s = laguerre_order(n, kHI);
    EXPECT_GT(s, 0.0);
    const double direct = energy(n, kHI);
    EXPECT_NEAR(energy_from_order(s, kHI), direct, 1e-12 * std::abs(direct)) << "n=" << n;
  }
}

TEST(Energy, LaguerreOrderConstraint) {
  const double lambda = lambda_param(kHI);
  for (int n = 0; n <= 29; ++n) {
    EXPECT_DOUBLE_EQ(laguerre_order(n, kHI) + 2.0 * n, 2.0 * lambda - 1.0);
  }
}

TEST(SpatialGrid, Construction) {
  const auto g = SpatialGrid::default_grid();
  EXPECT_EQ(g.size(), 4096u);
  EXPECT_DOUBLE_EQ(g.x(0), -0.8);
  EXPECT_DOUBLE_EQ(g.x(4095), 4.0);
  EXPECT_NEAR(g.spacing(), 4.8 / 4095.0, 1e-15);
  EXPECT_THROW(SpatialGrid(1.0, 1.0, 10), ContractError);
  EXPECT_THROW(SpatialGrid(2.0, 1.0, 10), ContractError);
  EXPECT_THROW(SpatialGrid(0.0, 1.0, 1), ContractError);
}

TEST(Eigenfunction, GroundStateIsNodelessAndCentred) {
  const auto grid = SpatialGrid::default_grid();
  const auto psi = eigenfunction(0, grid, kHI);
  std::size_t peak = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_GE(psi.values[i].real(), 0.0);
    EXPECT_EQ(psi.values[i].imag(), 0.0);
    if (std::abs(psi.values[i]) > std::abs(psi.values[peak])) peak = i;
  }
  EXPECT_LT(std::abs(grid.x(peak)), 0.05);
  EXPECT_NEAR(psi.norm_squared(), 1.0, 1e-6);
}

TEST(Eigenfunction, NodeCountMatchesLevel) {
  const auto grid = SpatialGrid::default_grid();
  for (int n : {1, 5, 10, 17}) {
    EXPECT_EQ(sign_changes(eigenfunction(n, grid, kHI)), n) << "n=" << n;
  }
}

TEST(Eigenfunction, NormalizedOnDefaultGridUpToLevel24) {
  const auto grid = SpatialGrid::default_grid();
  for (int n = 0; n <= 24; ++n) {
    const auto psi = eigenfunction(n, grid, kHI);
    EXPECT_NEAR(psi.norm_squared(), 1.0, 1e-6) << "n=" << n;
    EXPECT_LT(psi.left_edge_ratio(), kEdgeDecayTolerance);
    EXPECT_LT(psi.right_edge_ratio(), kEdgeDecayTolerance);
  }
}

TEST(Eigenfunction, OrthogonalPairOnDefaultGrid) {
  const auto grid = SpatialGrid::default_grid();
  EXPECT_NEAR(std::abs(inner_product(eigenfunction(3, grid, kHI), eigenfunction(7, grid, kHI))),
              0.0, 1e-6);
}

TEST(Eigenfunction, TruncationReportedForNarrowGrid) {
  const auto grid = SpatialGrid::default_grid();
  try {
    eigenfunction(29, grid, kHI);
    FAIL() << "expected TruncationError";
  } catch (const TruncationError& e) {
    EXPECT_GT(e.right_ratio(), 0.5);
    EXPECT_LT(e.left_ratio(), kEdgeDecayTolerance);
  }
  EXPECT_THROW(eigenfunction(3, SpatialGrid(-0.1, 0.1, 64), kHI), TruncationError);
  EXPECT_THROW(eigenfunction(30, grid, kHI), LevelError);
}

TEST(EigenBasis, OrthonormalOnWideGrid) {
  const EigenBasis basis(SpatialGrid::wide_grid(), kHI);
  ASSERT_EQ(basis.levels(), 30u);
  const auto g = basis.gram();
  double worst = 0.0;
  for (std::size_t a = 0; a < 30; ++a) {
    for (std::size_t b = 0; b < 30; ++b) {
      worst = std::max(worst, std::abs(g[a * 30 + b] - (a == b ? 1.0 : 0.0)));
    }
  }
  EXPECT_LT(worst, 1e-6);
  for (int n = 0; n <= 29; ++n) {
    EXPECT_NO_THROW(eigenfunction(n, basis.grid(), kHI)) << "n=" << n;
  }
}

TEST(EigenBasis, CombineMatchesManualSum) {
  const auto grid = SpatialGrid(-0.6, 2.0, 257);
  const EigenBasis basis(grid, kHI);
  std::vector<complex> c(4, 0.0);
  c[1] = {0.5, 0.0};
  c[3] = {0.0, -2.0};
  const auto psi = basis.combine(c);
  const auto l1 = basis.level(1);
  const auto l3 = basis.level(3);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_EQ(psi.values[i], c[1] * l1[i] + c[3] * l3[i]);
  }
  EXPECT_THROW(basis.combine(std::vector<complex>(31)), ContractError);
}

TEST(WaveFunction, OverlapIgnoresGlobalPhase) {
  const auto grid = SpatialGrid::default_grid();
  const auto psi = eigenfunction(2, grid, kHI);
  EXPECT_NEAR(overlap_magnitude(psi, std::polar(3.0, 1.1) * psi), 1.0, 1e-14);
  EXPECT_THROW(WaveFunction(grid, std::vector<complex>(10)), ContractError);
}

}  // namespace
}  // namespace morsewp
