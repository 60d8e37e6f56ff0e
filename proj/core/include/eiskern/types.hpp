#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eiskern {

using Complex = std::complex<double>;

namespace constants {
inline constexpr double pi = std::numbers::pi;
inline constexpr double euler_gamma = std::numbers::egamma;
inline constexpr double ln2 = std::numbers::ln2;
}  // namespace constants

// Error hierarchy. Every failure raised by the library derives from Error.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PoleError : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};
struct NonConvergence : Error {
  using Error::Error;
};
struct QuadratureFailure : Error {
  using Error::Error;
};
struct StripError : Error {
  using Error::Error;
};
struct UnsupportedOrder : Error {
  using Error::Error;
};
struct StepError : Error {
  using Error::Error;
};

struct SumControl {
  int max_terms = 200000;
  double rel_tol = 1e-14;
  bool accelerate = true;

  void validate() const;
};

struct QuadControl {
  int panel_nodes = 10;
  int max_depth = 40;
  double abs_tol = 1e-15;
  double rel_tol = 1e-13;

  void validate() const;
};

enum class Route : std::uint8_t {
  direct,
  closed,
  polygamma,
  integral,
  quadrature,
  digamma,
  partial_fraction,
  taylor_moments,
  taylor_eta,
  taylor,
  series,
  fourier,
  euler_transform,
  asymptotic,
};

std::string_view route_name(Route r);

struct Evaluation {
  Complex value{};
  double err_estimate = 0.0;
  int terms_used = 0;
  Route route = Route::direct;
};

// Arguments closer than this to a pole are rejected outright.
inline constexpr double pole_guard = 1e-12;

void require_finite(Complex z, std::string_view what);
void require_finite(double x, std::string_view what);

}  // namespace eiskern
