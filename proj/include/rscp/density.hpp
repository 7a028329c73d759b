#pragma once

#include <cstddef>
#include <vector>

#include "rscp/states.hpp"

namespace rscp::density {

/// Cubic lattice [-h, h]^3 with n_points samples per axis. n_points is odd,
/// so the planes x = 0, y = 0, z = 0 are sampled exactly.
struct GridSpec {
  int n_points = 151;
  double half_extent = 1;

  void validate() const;
  double spacing() const { return 2 * half_extent / (n_points - 1); }
  /// Coordinate of lattice index i; exactly antisymmetric about the centre.
  double coord(int i) const { return (i - (n_points - 1) / 2) * spacing(); }
};

/// N^3 block of density values in x-fastest order.
struct DensityGrid {
  GridSpec spec;
  std::vector<double> values;
  double max_value = 0;
  bool relative = false;  // true after normalize_relative

  states::StateLabels labels;
  states::PotentialParams params;
  states::QuasiNumbers quasi;

  std::size_t index(int i, int j, int k) const {
    const std::size_t n = spec.n_points;
    return (static_cast<std::size_t>(k) * n + j) * n + i;
  }
  double at(int i, int j, int k) const { return values[index(i, j, k)]; }
};

double density_at(const states::BoundState& state, double x, double y, double z);
double density_at(const states::StateLabels& labels, const states::PotentialParams& params,
                  double x, double y, double z);

/// Smallest h with int_0^h u^2 dr >= coverage, by bisection.
double auto_extent(const states::BoundState& state, double coverage = 0.999);
double auto_extent(const states::StateLabels& labels, const states::PotentialParams& params,
                   double coverage = 0.999);

/// Evaluates the density on every lattice point. `workers` = 0 uses the
/// hardware concurrency. The result does not depend on `workers`.
DensityGrid build_grid(const states::BoundState& state, const GridSpec& spec, unsigned workers = 0);
DensityGrid build_grid(const states::StateLabels& labels, const states::PotentialParams& params,
                       const GridSpec& spec, unsigned workers = 0);

/// Rescales so the maximum is exactly 100. Throws Errc::degenerate_grid on
/// an all-zero grid.
DensityGrid normalize_relative(const DensityGrid& grid);

/// Riemann sum of values times voxel volume.
double grid_mass(const DensityGrid& grid);

}  // namespace rscp::density
