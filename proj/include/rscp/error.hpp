#pragma once

#include <stdexcept>
#include <string>

namespace rscp {

enum class Errc {
  domain,
  imaginary_order,
  no_gamma_branch,
  negative_radial_number,
  pole,
  degenerate_grid,
  empty_selection,
  quadrature_cap,
  io,
};

/// Stable machine-readable name, used in CLI error JSON.
const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Raised by the potential at r = 0, sin(theta) = 0 or cos(theta) = 0.
/// `sign()` is the sign of the diverging term.
class PoleError : public Error {
 public:
  PoleError(int sign, const std::string& what) : Error(Errc::pole, what), sign_(sign) {}
  int sign() const noexcept { return sign_; }

 private:
  int sign_;
};

}  // namespace rscp
