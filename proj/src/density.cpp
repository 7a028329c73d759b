#include "rscp/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "rscp/error.hpp"
#include "rscp/quadrature.hpp"

namespace rscp::density {

void GridSpec::validate() const {
  if (n_points < 3 || n_points % 2 == 0)
    throw Error(Errc::domain, "grid n_points must be odd and >= 3, got " + std::to_string(n_points));
  if (!(half_extent > 0) || !std::isfinite(half_extent))
    throw Error(Errc::domain, "grid half_extent must be positive");
}

double density_at(const states::BoundState& state, double x, double y, double z) {
  const double r = std::sqrt((x * x + y * y) + z * z);
  if (r == 0) return 0;
  return state.density(r, std::clamp(z / r, -1.0, 1.0));
}

double density_at(const states::StateLabels& labels, const states::PotentialParams& params,
                  double x, double y, double z) {
  return density_at(states::BoundState(labels, params), x, y, z);
}

double auto_extent(const states::BoundState& state, double coverage) {
  if (!(coverage > 0 && coverage < 1)) throw Error(Errc::domain, "coverage must lie in (0, 1)");
  auto u2 = [&state](double r) {
    const double u = state.radial(r);
    return u * u;
  };
  auto cumulative = [&u2](double h) { return quad::integrate_adaptive(u2, 0.0, h, true, false).value; };

  const auto& q = state.quasi();
  double hi = q.n_prime * q.n_prime / state.params().Z;
  while (cumulative(hi) < coverage) hi *= 2;
  double lo = 0;
  while (hi - lo > 1e-10 * hi) {
    const double mid = 0.5 * (lo + hi);
    (cumulative(mid) < coverage ? lo : hi) = mid;
  }
  return hi;
}

double auto_extent(const states::StateLabels& labels, const states::PotentialParams& params,
                   double coverage) {
  return auto_extent(states::BoundState(labels, params), coverage);
}

DensityGrid build_grid(const states::BoundState& state, const GridSpec& spec, unsigned workers) {
  spec.validate();
  DensityGrid grid;
  grid.spec = spec;
  grid.labels = state.labels();
  grid.params = state.params();
  grid.quasi = state.quasi();
  const int n = spec.n_points;
  grid.values.assign(static_cast<std::size_t>(n) * n * n, 0.0);

  std::vector<double> axis(n);
  for (int i = 0; i < n; ++i) axis[i] = spec.coord(i);

  auto fill_slab = [&](int k) {
    const double z = axis[k];
    for (int j = 0; j < n; ++j) {
      const double y = axis[j];
      for (int i = 0; i < n; ++i) grid.values[grid.index(i, j, k)] = density_at(state, axis[i], y, z);
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, n);
  if (workers == 1) {
    for (int k = 0; k < n; ++k) fill_slab(k);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (int k = static_cast<int>(w); k < n; k += static_cast<int>(workers)) fill_slab(k);
      });
  }
  grid.max_value = *std::max_element(grid.values.begin(), grid.values.end());
  return grid;
}

DensityGrid build_grid(const states::StateLabels& labels, const states::PotentialParams& params,
                       const GridSpec& spec, unsigned workers) {
  return build_grid(states::BoundState(labels, params), spec, workers);
}

DensityGrid normalize_relative(const DensityGrid& grid) {
  if (!(grid.max_value > 0)) throw Error(Errc::degenerate_grid, "normalize_relative: grid is all zero");
  DensityGrid out = grid;
  out.relative = true;
  if (grid.max_value == 100) return out;
  const double peak = grid.max_value;
  for (double& v : out.values) v = v == peak ? 100.0 : 100.0 * v / peak;
  out.max_value = 100;
  return out;
}

double grid_mass(const DensityGrid& grid) {
  const double d = grid.spec.spacing();
  double sum = 0;
  for (double v : grid.values) sum += v;
  return sum * d * d * d;
}

}  // namespace rscp::density
