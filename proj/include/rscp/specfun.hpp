#pragma once

// Special functions for the angular and radial factors: log-gamma,
// terminating Kummer series and the universal associated Legendre family
// P_{l'}^{m'}(gamma1, x) with its closed-form normalization.

#include <vector>

namespace rscp::specfun {

/// A real number stored as sign and natural log of its magnitude.
struct SignedLogValue {
  int sign = 0;               // -1, 0 or +1
  double log_magnitude = 0;   // ignored when sign == 0

  static SignedLogValue from(double x);
  double value() const;

  friend SignedLogValue operator*(SignedLogValue a, SignedLogValue b) {
    if (a.sign == 0 || b.sign == 0) return {};
    return {a.sign * b.sign, a.log_magnitude + b.log_magnitude};
  }
};

/// ln Gamma(x) for x > 0. Throws Error(domain) otherwise.
double log_gamma(double x);

/// F(-n_r, beta, x) = sum_{j=0}^{n_r} (-n_r)_j x^j / ((beta)_j j!).
double kummer_terminating(int n_r, double beta, double x);

/// Parameters of one member of the universal associated Legendre family.
/// l_prime is always 2k + gamma1 + m_prime.
struct UalpSpec {
  int k = 0;
  double gamma1 = 0;
  double m_prime = 0;
  double l_prime = 0;

  static UalpSpec make(int k, double gamma1, double m_prime);
};

/// Coefficients of x^{2k-2nu}, nu = 0..k, of the finite sum, evaluated
/// entirely through log-gamma with the (-1)^nu sign tracked separately.
std::vector<SignedLogValue> ualp_coefficients(const UalpSpec& spec);

/// log of the closed-form normalization constant N_{l'm'}.
double ualp_log_norm(const UalpSpec& spec);

struct HDerivatives {
  double value = 0;
  double d1 = 0;
  double d2 = 0;
};

/// Normalized angular function H(x) = N (1-x^2)^{m'/2} |x|^{gamma1} S(x).
///
/// Construction evaluates the closed-form normalization and cross-checks
/// it against Gauss-Legendre quadrature of H^2 over [-1, 1]. If they differ
/// by more than 1e-8 the quadrature constant is used and
/// `used_quadrature_norm()` reports it.
///
/// For integer gamma1 (0 or 1) the factor is the ordinary power x^{gamma1},
/// so H has parity (-1)^{gamma1} and coincides with the classical
/// associated Legendre function. For non-integer gamma1 the even extension
/// |x|^{gamma1} is used. H^2 is even in both cases.
class AngularFunction {
 public:
  explicit AngularFunction(const UalpSpec& spec);

  const UalpSpec& spec() const noexcept { return spec_; }

  /// Throws Error(domain) for |x| > 1.
  double operator()(double x) const;

  /// Analytic H, H', H''. Requires |x| < 1, and x != 0 unless gamma1 is
  /// an integer.
  HDerivatives derivatives(double x) const;

  double norm() const noexcept { return norm_; }
  double closed_form_norm() const noexcept { return closed_form_norm_; }
  /// Integral of H^2 with the closed-form constant, before any correction.
  double closed_form_integral() const noexcept { return closed_form_integral_; }
  bool used_quadrature_norm() const noexcept { return used_quadrature_; }

 private:
  double eval_abs(double ax) const;  // H(|x|) for 0 <= ax <= 1
  double parity_sign(double x) const;

  UalpSpec spec_;
  bool integer_gamma_ = false;
  std::vector<double> poly_;  // normalized coefficients of (x^2)^{k-nu}, highest first
  double norm_ = 1;
  double closed_form_norm_ = 1;
  double closed_form_integral_ = 1;
  bool used_quadrature_ = false;
};

/// Convenience wrappers building an AngularFunction per call.
double angular_H(const UalpSpec& spec, double x);
HDerivatives angular_H_derivatives(const UalpSpec& spec, double x);

}  // namespace rscp::specfun
