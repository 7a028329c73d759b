#include "rscp/states.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "rscp/error.hpp"

namespace rscp::states {

using specfun::log_gamma;

void PotentialParams::validate() const {
  if (!(Z > 0) || !std::isfinite(Z)) throw Error(Errc::domain, "Z must be positive");
  if (!std::isfinite(b)) throw Error(Errc::domain, "b must be finite");
  if (!(c >= 0) || !std::isfinite(c)) throw Error(Errc::domain, "c must be non-negative");
}

QuasiNumbers map_quantum_numbers(const StateLabels& labels, const PotentialParams& params) {
  params.validate();
  const int am = std::abs(labels.m);
  if (labels.l < 0 || am > labels.l)
    throw Error(Errc::domain, "labels must satisfy l >= 0 and |m| <= l");
  const int n_r = labels.n - labels.l - 1;
  if (n_r < 0)
    throw Error(Errc::negative_radial_number,
                "n - l - 1 = " + std::to_string(n_r) + " is negative");
  const double order_sq = params.b + static_cast<double>(am) * am;
  if (order_sq < 0)
    throw Error(Errc::imaginary_order,
                "imaginary order: b + m^2 = " + std::to_string(order_sq) + " < 0");

  const int n_theta = labels.l - am;
  QuasiNumbers q;
  q.m_prime = std::sqrt(order_sq);
  if (params.c > 0) {
    if (n_theta % 2 == 0)
      throw Error(Errc::no_gamma_branch,
                  "no gamma1-branch state: c > 0 requires odd l - |m|, got " + std::to_string(n_theta));
    q.gamma1 = 0.5 * (1 + std::sqrt(1 + 4 * params.c));
    q.k = (n_theta - 1) / 2;
  } else {
    q.gamma1 = n_theta % 2;
    q.k = (n_theta - n_theta % 2) / 2;
  }
  q.l_prime = 2.0 * q.k + q.gamma1 + q.m_prime;
  q.n_r = n_r;
  q.n_prime = n_r + q.l_prime + 1;
  q.lambda = q.l_prime * (q.l_prime + 1);
  q.energy = energy(q, params.Z);
  return q;
}

double energy(const QuasiNumbers& q, double Z) { return -Z * Z / (2 * q.n_prime * q.n_prime); }

double potential_V(const PotentialParams& params, double r, double theta) {
  if (!(theta >= 0 && theta <= std::numbers::pi))
    throw Error(Errc::domain, "potential_V: theta must lie in [0, pi]");
  constexpr double pole_eps = 1e-14;
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  if (params.b != 0 && std::abs(s) < pole_eps)
    throw PoleError(params.b > 0 ? 1 : -1, "potential_V: b/sin^2 pole");
  if (params.c != 0 && std::abs(c) < pole_eps)
    throw PoleError(params.c > 0 ? 1 : -1, "potential_V: c/cos^2 pole");
  const double angular = (params.b != 0 ? params.b / (s * s) : 0.0)
                         + (params.c != 0 ? params.c / (c * c) : 0.0);
  if (!(r > 0)) throw PoleError(angular != 0 ? (angular > 0 ? 1 : -1) : -1, "potential_V: r = 0 pole");
  return -params.Z / r + angular / (2 * r * r);
}

namespace {

double radial_log_prefactor(const QuasiNumbers& q, double Z) {
  return 0.5 * (std::log(Z) + log_gamma(q.n_prime + q.l_prime + 1) - log_gamma(q.n_r + 1.0)
                - 2 * std::log(q.n_prime))
         - log_gamma(2 * q.l_prime + 2);
}

double radial_eval(const QuasiNumbers& q, double log_prefactor, double scale, double r) {
  if (r <= 0) return 0;
  const double rho = scale * r;
  const double f = specfun::kummer_terminating(q.n_r, 2 * q.l_prime + 2, rho);
  if (f == 0) return 0;
  const double log_mag = log_prefactor + (q.l_prime + 1) * std::log(rho) - 0.5 * rho + std::log(std::abs(f));
  return (f < 0 ? -1.0 : 1.0) * std::exp(log_mag);
}

}  // namespace

double radial_u(const QuasiNumbers& q, const PotentialParams& params, double r) {
  if (!(r >= 0)) throw Error(Errc::domain, "radial_u: r must be non-negative");
  return radial_eval(q, radial_log_prefactor(q, params.Z), 2 * params.Z / q.n_prime, r);
}

BoundState::BoundState(const StateLabels& labels, const PotentialParams& params)
    : labels_(labels),
      params_(params),
      quasi_(map_quantum_numbers(labels, params)),
      angular_(quasi_.angular()),
      log_prefactor_(radial_log_prefactor(quasi_, params.Z)),
      scale_(2 * params.Z / quasi_.n_prime) {}

double BoundState::radial(double r) const { return radial_eval(quasi_, log_prefactor_, scale_, r); }

double BoundState::density(double r, double x) const {
  if (r <= 0) return 0;
  const double u = radial(r);
  const double h = angular_(x);
  return (u / r) * (u / r) * h * h / (2 * std::numbers::pi);
}

double wavefunction_modulus_sq(const StateLabels& labels, const PotentialParams& params,
                               double r, double theta) {
  if (!(r > 0)) throw Error(Errc::domain, "wavefunction_modulus_sq: r must be positive");
  return BoundState(labels, params).density(r, std::cos(theta));
}

}  // namespace rscp::states
