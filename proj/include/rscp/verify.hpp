#pragma once

// Independent numerical oracles for the closed-form state: quadrature
// norms, ODE residuals, a textbook hydrogen path, and sweep statistics.

#include <optional>
#include <string>
#include <vector>

#include "rscp/density.hpp"
#include "rscp/states.hpp"

namespace rscp::verify {

struct QuadratureCheck {
  double value = 0;
  double tail_bound = 0;  // bound on the neglected integral beyond the cut-off
  double cutoff = 0;      // radial: upper integration limit
  int nodes_per_panel = 0;
  bool converged = false;
};

/// int_0^inf u^2 dr: Gauss-Legendre on [0, R] plus an analytic bound on
/// the exponential tail beyond R (R chosen so the bound is <= 1e-12).
QuadratureCheck quad_radial_norm(const states::BoundState& state);

/// int_{-1}^{1} H^2 dx, panels split at x = 0.
QuadratureCheck quad_angular_norm(const states::BoundState& state);

/// Generic radial moment int_0^inf r^p u^2 dr on the same scheme as
/// quad_radial_norm (p = 0 gives the norm).
QuadratureCheck radial_moment(const states::BoundState& state, int power);

/// <r> and <|cos theta|>.
double expectation_r(const states::BoundState& state);
double expectation_abs_cos(const states::BoundState& state);

struct Residuals {
  double radial_max = 0;
  double angular_max = 0;
};

/// Maximum relative residual of the separated radial and angular equations
/// at `n_samples` log-spaced radii and `n_samples` seeded random
/// x in (0.05, 0.95). Derivatives come from an independent term-by-term
/// expansion, not from specfun::AngularFunction. `energy_scale` multiplies
/// E in the radial equation (sensitivity check).
Residuals ode_residuals(const states::BoundState& state, int n_samples, double energy_scale = 1.0);

/// Textbook hydrogen-like density |R_nl Y_lm|^2 with charge Z, via
/// std::assoc_laguerre and std::assoc_legendre.
double hydrogen_oracle(int n, int l, int m, double x, double y, double z, double Z = 1);

struct VerificationReport {
  states::StateLabels labels;
  states::PotentialParams params;
  states::QuasiNumbers quasi;
  double radial_norm = 0;
  double angular_norm = 0;
  double radial_residual_max = 0;
  double angular_residual_max = 0;
  std::optional<double> grid_mass;

  double norm_tolerance = 1e-8;
  double residual_tolerance = 1e-6;
  double grid_mass_low = 0.97;
  double grid_mass_high = 1.005;

  bool radial_norm_pass = false;
  bool angular_norm_pass = false;
  bool radial_residual_pass = false;
  bool angular_residual_pass = false;
  bool grid_mass_pass = true;

  bool passed() const {
    return radial_norm_pass && angular_norm_pass && radial_residual_pass && angular_residual_pass && grid_mass_pass;
  }
};

/// Runs the norm and residual checks; attaches the grid mass when a grid
/// is supplied.
VerificationReport verify_state(const states::BoundState& state, int n_samples = 100,
                                const density::DensityGrid* grid = nullptr);

struct SweepInput {
  states::StateLabels labels;
  states::PotentialParams params;
};

struct SweepRow {
  SweepInput input;
  bool skipped = false;
  std::string skip_reason;
  states::QuasiNumbers quasi;
  double mean_r = 0;
  double mean_abs_cos = 0;
  std::vector<double> levels;
  std::vector<double> pole_concentration;  // per level; empty without grids
};

struct SweepGridSettings {
  bool build_grids = false;
  int n_points = 151;
  double coverage = 0.999;
  std::vector<double> levels{10, 30, 50, 70, 90};
  unsigned workers = 0;
};

/// One row per input in input order. Inadmissible states are kept as
/// skipped rows with the mapping error message.
std::vector<SweepRow> sweep_statistics(const std::vector<SweepInput>& inputs, const SweepGridSettings& settings = {});

}  // namespace rscp::verify
