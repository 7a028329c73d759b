#include "rscp/specfun.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <numbers>
#include <string>

#include "rscp/error.hpp"
#include "rscp/quadrature.hpp"

namespace rscp {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::domain: return "domain";
    case Errc::imaginary_order: return "imaginary_order";
    case Errc::no_gamma_branch: return "no_gamma_branch";
    case Errc::negative_radial_number: return "negative_radial_number";
    case Errc::pole: return "pole";
    case Errc::degenerate_grid: return "degenerate_grid";
    case Errc::empty_selection: return "empty_selection";
    case Errc::quadrature_cap: return "quadrature_cap";
    case Errc::io: return "io";
  }
  return "unknown";
}

}  // namespace rscp

namespace rscp::specfun {

SignedLogValue SignedLogValue::from(double x) {
  if (x == 0) return {};
  return {x < 0 ? -1 : 1, std::log(std::abs(x))};
}

double SignedLogValue::value() const {
  if (sign == 0) return 0;
  return sign * std::exp(log_magnitude);
}

double log_gamma(double x) {
  if (!(x > 0) || !std::isfinite(x))
    throw Error(Errc::domain, "log_gamma: argument must be positive and finite, got " + std::to_string(x));
  return boost::math::lgamma(x);
}

double kummer_terminating(int n_r, double beta, double x) {
  if (n_r < 0) throw Error(Errc::domain, "kummer_terminating: n_r must be non-negative");
  if (!(beta > 0)) throw Error(Errc::domain, "kummer_terminating: beta must be positive");
  double term = 1;
  double sum = 1;
  for (int j = 0; j < n_r; ++j) {
    term *= (j - n_r) * x / ((beta + j) * (j + 1));
    sum += term;
  }
  return sum;
}

UalpSpec UalpSpec::make(int k, double gamma1, double m_prime) {
  if (k < 0) throw Error(Errc::domain, "UalpSpec: k must be non-negative");
  if (!(gamma1 >= 0) || !(m_prime >= 0))
    throw Error(Errc::domain, "UalpSpec: gamma1 and m_prime must be non-negative");
  return {k, gamma1, m_prime, 2.0 * k + gamma1 + m_prime};
}

std::vector<SignedLogValue> ualp_coefficients(const UalpSpec& s) {
  const double lp = s.l_prime;
  const double g = s.gamma1;
  std::vector<SignedLogValue> out;
  out.reserve(s.k + 1);
  for (int nu = 0; nu <= s.k; ++nu) {
    const double log_mag = log_gamma(s.k + g - nu + 1) + log_gamma(2 * lp - 2 * nu + 1)
                           - lp * std::numbers::ln2 - log_gamma(nu + 1.0) - log_gamma(s.k - nu + 1.0)
                           - log_gamma(2 * s.k + 2 * g - 2 * nu + 1) - log_gamma(lp - nu + 1);
    out.push_back({nu % 2 == 0 ? 1 : -1, log_mag});
  }
  return out;
}

double ualp_log_norm(const UalpSpec& s) {
  const double lp = s.l_prime;
  const double g = s.gamma1;
  const int k = s.k;
  // Gamma(l' - k - gamma1 + 1) == Gamma(k + m' + 1) > 0 by construction.
  const double inner = log_gamma(k + 1.0) + std::log(2 * lp + 1) + log_gamma(2 * k + 2 * g + 1)
                       + log_gamma(lp - k + 1) - std::numbers::ln2 - log_gamma(lp - k - g + 1)
                       - log_gamma(k + g + 1) - log_gamma(2 * lp - 2 * k + 1);
  return g * std::numbers::ln2 + 0.5 * inner;
}

AngularFunction::AngularFunction(const UalpSpec& spec) : spec_(spec) {
  integer_gamma_ = spec.gamma1 == std::floor(spec.gamma1);
  const double log_norm = ualp_log_norm(spec);
  closed_form_norm_ = std::exp(log_norm);
  const auto coeffs = ualp_coefficients(spec);
  poly_.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    const double log_scaled = c.log_magnitude + log_norm;
    if (log_scaled > 700)
      throw Error(Errc::domain, "AngularFunction: coefficient magnitude out of double range");
    poly_.push_back(c.sign * std::exp(log_scaled));
  }
  norm_ = closed_form_norm_;

  // H^2 is even; integrate [0, 1] and double. Graded toward x = 0 for the
  // |x|^{2 gamma1} cusp and toward x = 1 for (1 - x^2)^{m'}.
  auto sq = [this](double x) {
    const double h = eval_abs(x);
    return h * h;
  };
  const auto res = quad::integrate_adaptive(sq, 0.0, 1.0, true, true);
  closed_form_integral_ = 2 * res.value;
  if (std::abs(closed_form_integral_ - 1) > 1e-8) {
    const double scale = 1 / std::sqrt(closed_form_integral_);
    for (double& p : poly_) p *= scale;
    norm_ *= scale;
    used_quadrature_ = true;
  }
}

double AngularFunction::eval_abs(double ax) const {
  const double t = ax * ax;
  double s = poly_[0];
  for (std::size_t i = 1; i < poly_.size(); ++i) s = s * t + poly_[i];
  const double w = spec_.m_prime == 0 ? 1.0 : std::pow((1 - ax) * (1 + ax), 0.5 * spec_.m_prime);
  const double g = spec_.gamma1 == 0 ? 1.0 : std::pow(ax, spec_.gamma1);
  return w * g * s;
}

double AngularFunction::parity_sign(double x) const {
  return (x < 0 && integer_gamma_ && static_cast<int>(spec_.gamma1) % 2 == 1) ? -1.0 : 1.0;
}

double AngularFunction::operator()(double x) const {
  if (!(std::abs(x) <= 1)) throw Error(Errc::domain, "angular_H: |x| must not exceed 1");
  return parity_sign(x) * eval_abs(std::abs(x));
}

HDerivatives AngularFunction::derivatives(double x) const {
  if (!(std::abs(x) < 1)) throw Error(Errc::domain, "angular_H_derivatives: x must lie in (-1, 1)");
  if (x == 0 && !integer_gamma_)
    throw Error(Errc::domain, "angular_H_derivatives: x = 0 excluded for non-integer gamma1");
  const double ax = std::abs(x);
  const double a = 0.5 * spec_.m_prime;
  const double one_m_t = (1 - ax) * (1 + ax);

  // W = (1 - x^2)^a
  double w = 1, w1 = 0, w2 = 0;
  if (a != 0) {
    w = std::pow(one_m_t, a);
    w1 = -2 * a * ax * w / one_m_t;
    w2 = -2 * a * w / one_m_t + 4 * a * (a - 1) * ax * ax * w / (one_m_t * one_m_t);
  }

  // R = x^{gamma1} * sum_nu p_nu x^{2(k - nu)}, differentiated term by term.
  double r0 = 0, r1 = 0, r2 = 0;
  const int k = spec_.k;
  for (int nu = 0; nu <= k; ++nu) {
    const double p = poly_[nu];
    const double e = 2.0 * (k - nu) + spec_.gamma1;
    r0 += p * (e == 0 ? 1.0 : std::pow(ax, e));
    if (e != 0) r1 += p * e * (e == 1 ? 1.0 : std::pow(ax, e - 1));
    if (e != 0 && e != 1) r2 += p * e * (e - 1) * (e == 2 ? 1.0 : std::pow(ax, e - 2));
  }

  HDerivatives d{w * r0, w1 * r0 + w * r1, w2 * r0 + 2 * w1 * r1 + w * r2};
  const double s = parity_sign(x);
  if (x < 0) return {s * d.value, -s * d.d1, s * d.d2};
  return d;
}

double angular_H(const UalpSpec& spec, double x) { return AngularFunction(spec)(x); }

HDerivatives angular_H_derivatives(const UalpSpec& spec, double x) {
  return AngularFunction(spec).derivatives(x);
}

}  // namespace rscp::specfun
