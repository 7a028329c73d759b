#include "rscp/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "rscp/error.hpp"
#include "rscp/quadrature.hpp"
#include "rscp/surface.hpp"

namespace rscp::verify {
namespace {

// Upper bound of ln|u(r)| using |F| <= sum_j |f_j| rho^j.
double log_abs_u_bound(const states::QuasiNumbers& q, double Z, double r) {
  const double rho = 2 * Z * r / q.n_prime;
  const double beta = 2 * q.l_prime + 2;
  double term = 1, fabs_sum = 1;
  for (int j = 0; j < q.n_r; ++j) {
    term *= std::abs((j - q.n_r) * rho / ((beta + j) * (j + 1)));
    fabs_sum += term;
  }
  const double log_pref = 0.5 * (std::log(Z) + specfun::log_gamma(q.n_prime + q.l_prime + 1)
                                 - specfun::log_gamma(q.n_r + 1.0) - 2 * std::log(q.n_prime))
                          - specfun::log_gamma(beta);
  return log_pref + (q.l_prime + 1) * std::log(rho) - 0.5 * rho + std::log(fabs_sum);
}

}  // namespace

QuadratureCheck radial_moment(const states::BoundState& state, int power) {
  const auto& q = state.quasi();
  const double Z = state.params().Z;
  const double decay = 2 * Z / q.n_prime;
  const double degree = power + 2 * (q.l_prime + 1) + 2 * q.n_r;

  // For r >= R the integrand g = r^p u^2 satisfies (ln g)' <= degree/R - decay
  // =: -s, so int_R^inf g <= g(R) / s.
  double cutoff = std::max(1.0, q.n_prime * q.n_prime / Z);
  double tail = 0;
  for (int iter = 0; iter < 400; ++iter) {
    const double s = decay - degree / cutoff;
    if (s > 0) {
      const double log_g = power * std::log(cutoff) + 2 * log_abs_u_bound(q, Z, cutoff);
      tail = std::exp(log_g) / s;
      if (tail <= 1e-12 * 1e-3) break;
    }
    cutoff *= 1.25;
  }

  auto integrand = [&state, power](double r) {
    const double u = state.radial(r);
    return (power == 0 ? 1.0 : std::pow(r, power)) * u * u;
  };
  const auto res = quad::integrate_adaptive(integrand, 0.0, cutoff, true, false);
  return {res.value, tail, cutoff, res.nodes, res.converged};
}

QuadratureCheck quad_radial_norm(const states::BoundState& state) { return radial_moment(state, 0); }

QuadratureCheck quad_angular_norm(const states::BoundState& state) {
  const auto& h = state.angular();
  auto sq = [&h](double x) {
    const double v = h(x);
    return v * v;
  };
  const auto left = quad::integrate_adaptive(sq, -1.0, 0.0, true, true);
  const auto right = quad::integrate_adaptive(sq, 0.0, 1.0, true, true);
  return {left.value + right.value, 0, 1, std::max(left.nodes, right.nodes), left.converged && right.converged};
}

double expectation_r(const states::BoundState& state) {
  const auto res = radial_moment(state, 1);
  if (!res.converged) throw Error(Errc::quadrature_cap, "expectation_r: quadrature did not converge");
  return res.value;
}

double expectation_abs_cos(const states::BoundState& state) {
  const auto& h = state.angular();
  auto f = [&h](double x) {
    const double v = h(x);
    return x * v * v;
  };
  const auto res = quad::integrate_adaptive(f, 0.0, 1.0, true, true);
  if (!res.converged) throw Error(Errc::quadrature_cap, "expectation_abs_cos: quadrature did not converge");
  return 2 * res.value;
}

Residuals ode_residuals(const states::BoundState& state, int n_samples, double energy_scale) {
  const auto& q = state.quasi();
  const double Z = state.params().Z;
  Residuals out;

  // Radial: u = g(rho) F(rho), g = rho^a e^{-rho/2}, rho = s r. Everything is
  // divided by g, so the normalization never enters.
  const double s = 2 * Z / q.n_prime;
  const double a = q.l_prime + 1;
  const double beta = 2 * q.l_prime + 2;
  std::vector<double> f(q.n_r + 1);
  f[0] = 1;
  for (int j = 0; j < q.n_r; ++j) f[j + 1] = f[j] * (j - q.n_r) / ((beta + j) * (j + 1));
  const double e2 = 2 * q.energy * energy_scale;
  const double r_min = 1e-3 * q.n_prime / Z;
  const double r_max = 4 * q.n_prime * q.n_prime / Z;
  for (int i = 0; i < n_samples; ++i) {
    const double frac = n_samples == 1 ? 0.5 : double(i) / (n_samples - 1);
    const double r = r_min * std::pow(r_max / r_min, frac);
    const double rho = s * r;
    double F = 0, F1 = 0, F2 = 0;
    for (int j = q.n_r; j >= 0; --j) {
      F2 = F2 * rho + 2 * F1;
      F1 = F1 * rho + F;
      F = F * rho + f[j];
    }
    const double lg = a / rho - 0.5;
    const std::array<double, 6> terms{s * s * (lg * lg - a / (rho * rho)) * F,
                                      s * s * 2 * lg * F1,
                                      s * s * F2,
                                      e2 * F,
                                      2 * Z / r * F,
                                      -q.lambda / (r * r) * F};
    double sum = 0, mag = 0;
    for (double t : terms) {
      sum += t;
      mag += std::abs(t);
    }
    if (mag > 0) out.radial_max = std::max(out.radial_max, std::abs(sum) / mag);
  }

  // Angular: H = P(x) S(x), P = (1-x^2)^{m'/2} x^{gamma1}; S from the
  // coefficient ratio c_{nu+1}/c_nu = -(k-nu)(2k+2g-2nu-1)/((nu+1)(2l'-2nu-1)).
  const int k = q.k;
  const double g = q.gamma1;
  const double mp = q.m_prime;
  const double c = g * (g - 1);
  std::vector<double> coeff(k + 1);
  coeff[0] = 1;
  for (int nu = 0; nu < k; ++nu)
    coeff[nu + 1] = -coeff[nu] * (k - nu) * (2 * k + 2 * g - 2 * nu - 1) / ((nu + 1) * (2 * q.l_prime - 2 * nu - 1));
  std::mt19937_64 rng(0x5eed0001ULL);
  std::uniform_real_distribution<double> dist(0.05, 0.95);
  for (int i = 0; i < n_samples; ++i) {
    const double x = dist(rng);
    const double t = x * x;
    double S = 0, S1 = 0, S2 = 0;
    for (int nu = 0; nu <= k; ++nu) {
      const double e = 2.0 * (k - nu);
      S += coeff[nu] * std::pow(x, e);
      if (e >= 1) S1 += coeff[nu] * e * std::pow(x, e - 1);
      if (e >= 2) S2 += coeff[nu] * e * (e - 1) * std::pow(x, e - 2);
    }
    const double om = 1 - t;
    const double p1 = -mp * x / om + g / x;
    const double p1d = -mp * (1 + t) / (om * om) - g / t;
    const std::array<double, 8> terms{om * S2,       om * 2 * p1 * S1,   om * (p1 * p1 + p1d) * S,
                                      -2 * x * S1,   -2 * x * p1 * S,    q.lambda * S,
                                      -mp * mp / om * S, -c / t * S};
    double sum = 0, mag = 0;
    for (double v : terms) {
      sum += v;
      mag += std::abs(v);
    }
    if (mag > 0) out.angular_max = std::max(out.angular_max, std::abs(sum) / mag);
  }
  return out;
}

double hydrogen_oracle(int n, int l, int m, double x, double y, double z, double Z) {
  const int am = std::abs(m);
  const double r = std::sqrt(x * x + y * y + z * z);
  if (r == 0 && l > 0) return 0;
  const double rho = 2 * Z * r / n;
  const double norm_r = std::sqrt(std::pow(2 * Z / n, 3) * std::tgamma(n - l) / (2.0 * n * std::tgamma(n + l + 1)));
  const double R = norm_r * std::exp(-rho / 2) * std::pow(rho, l)
                   * std::assoc_laguerre(static_cast<unsigned>(n - l - 1), static_cast<unsigned>(2 * l + 1), rho);
  const double ct = r == 0 ? 1.0 : z / r;
  const double P = std::assoc_legendre(static_cast<unsigned>(l), static_cast<unsigned>(am), ct);
  const double y2 = (2 * l + 1) / (4 * std::numbers::pi) * std::tgamma(l - am + 1) / std::tgamma(l + am + 1) * P * P;
  return R * R * y2;
}

VerificationReport verify_state(const states::BoundState& state, int n_samples, const density::DensityGrid* grid) {
  VerificationReport rep;
  rep.labels = state.labels();
  rep.params = state.params();
  rep.quasi = state.quasi();
  const auto rn = quad_radial_norm(state);
  const auto an = quad_angular_norm(state);
  rep.radial_norm = rn.value;
  rep.angular_norm = an.value;
  const auto res = ode_residuals(state, n_samples);
  rep.radial_residual_max = res.radial_max;
  rep.angular_residual_max = res.angular_max;
  rep.radial_norm_pass = rn.converged && std::abs(rn.value - 1) < rep.norm_tolerance;
  rep.angular_norm_pass = an.converged && std::abs(an.value - 1) < rep.norm_tolerance;
  rep.radial_residual_pass = res.radial_max < rep.residual_tolerance;
  rep.angular_residual_pass = res.angular_max < rep.residual_tolerance;
  if (grid) {
    rep.grid_mass = density::grid_mass(*grid);
    rep.grid_mass_pass = *rep.grid_mass >= rep.grid_mass_low && *rep.grid_mass <= rep.grid_mass_high;
  }
  return rep;
}

namespace {

SweepRow sweep_row(const SweepInput& in, const SweepGridSettings& settings) {
  SweepRow row;
  row.input = in;
  std::optional<states::BoundState> state;
  try {
    state.emplace(in.labels, in.params);
  } catch (const Error& e) {
    row.skipped = true;
    row.skip_reason = e.what();
    return row;
  }
  row.quasi = state->quasi();
  row.mean_r = expectation_r(*state);
  row.mean_abs_cos = expectation_abs_cos(*state);
  if (settings.build_grids) {
    const density::GridSpec spec{settings.n_points, density::auto_extent(*state, settings.coverage)};
    const auto grid = density::normalize_relative(density::build_grid(*state, spec, 1));
    row.levels = settings.levels;
    for (double level : settings.levels) {
      try {
        row.pole_concentration.push_back(surface::pole_concentration(grid, level));
      } catch (const Error&) {
        row.pole_concentration.push_back(std::nan(""));
      }
    }
  }
  return row;
}

}  // namespace

std::vector<SweepRow> sweep_statistics(const std::vector<SweepInput>& inputs, const SweepGridSettings& settings) {
  std::vector<SweepRow> rows(inputs.size());
  unsigned workers = settings.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : settings.workers;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(inputs.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) {
      try {
        rows[i] = sweep_row(inputs[i], settings);
      } catch (const std::exception& e) {
        rows[i].input = inputs[i];
        rows[i].skipped = true;
        rows[i].skip_reason = e.what();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return rows;
}

}  // namespace rscp::verify
