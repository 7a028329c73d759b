#pragma once

// Bound states of the double ring-shaped Coulomb potential
//   V(r, theta) = -Z/r + (b / sin^2 theta + c / cos^2 theta) / (2 r^2)
// in atomic units (hbar = M = e = a0 = 1).

#include "rscp/specfun.hpp"

namespace rscp::states {

struct PotentialParams {
  double Z = 1;
  double b = 0;
  double c = 0;

  /// Throws Error(domain) when Z <= 0 or c < 0.
  void validate() const;
};

/// Physical labels (n, l, m), named as for hydrogen.
struct StateLabels {
  int n = 1;
  int l = 0;
  int m = 0;
};

/// Quasi quantum numbers of one bound state.
struct QuasiNumbers {
  double m_prime = 0;
  double gamma1 = 0;
  int k = 0;
  double l_prime = 0;
  int n_r = 0;
  double n_prime = 1;
  double lambda = 0;  // separation constant l'(l'+1)
  double energy = 0;

  specfun::UalpSpec angular() const { return {k, gamma1, m_prime, l_prime}; }
};

/// Maps (n, l, m) and (Z, b, c) to the quasi quantum numbers.
///
/// c = 0: gamma1 = (l - |m|) mod 2, k = (l - |m| - gamma1) / 2.
/// c > 0: only the regular branch gamma1 = (1 + sqrt(1 + 4c)) / 2 exists,
///        which requires odd l - |m|; k = (l - |m| - 1) / 2.
///
/// Errors: Errc::imaginary_order if b + m^2 < 0, Errc::no_gamma_branch for
/// c > 0 with even l - |m|, Errc::negative_radial_number if n < l + 1,
/// Errc::domain for c < 0, Z <= 0, l < 0 or |m| > l.
QuasiNumbers map_quantum_numbers(const StateLabels& labels, const PotentialParams& params);

/// Potential value; throws PoleError at r = 0 or on the angular poles of
/// nonzero b / c terms.
double potential_V(const PotentialParams& params, double r, double theta);

double energy(const QuasiNumbers& q, double Z = 1);

/// Radial function u(r) with int_0^inf u^2 dr = 1. Prefactor in log space.
double radial_u(const QuasiNumbers& q, const PotentialParams& params, double r);

/// A fully resolved bound state: quasi numbers plus the normalized angular
/// function, ready for repeated evaluation. Immutable after construction.
class BoundState {
 public:
  BoundState(const StateLabels& labels, const PotentialParams& params);

  const StateLabels& labels() const noexcept { return labels_; }
  const PotentialParams& params() const noexcept { return params_; }
  const QuasiNumbers& quasi() const noexcept { return quasi_; }
  const specfun::AngularFunction& angular() const noexcept { return angular_; }

  double radial(double r) const;

  /// |Psi|^2 at spherical radius r and cos(theta) = x. Zero at r = 0.
  double density(double r, double x) const;

 private:
  StateLabels labels_;
  PotentialParams params_;
  QuasiNumbers quasi_;
  specfun::AngularFunction angular_;
  double log_prefactor_ = 0;
  double scale_ = 0;  // 2Z / n'
};

/// |Psi|^2 = (1/2pi) (u^2 / r^2) H^2(cos theta).
double wavefunction_modulus_sq(const StateLabels& labels, const PotentialParams& params,
                               double r, double theta);

}  // namespace rscp::states
