#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace riflab {

using Complex = std::complex<double>;
using ComplexLD = std::complex<long double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr long double kPiLD = 3.141592653589793238462643383279502884L;

/// Coordinate of the bidisk. The meaning (free variable vs. substituted variable)
/// is stated by each function that takes one.
enum class Axis { z1 = 1, z2 = 2 };

inline Axis other(Axis a) { return a == Axis::z1 ? Axis::z2 : Axis::z1; }
inline int index_of(Axis a) { return a == Axis::z1 ? 0 : 1; }
Axis axis_from_int(int a);

/// Failure categories. The CLI maps these onto process exit codes.
enum class ErrorCode {
  parse,
  zero_constant_term,
  unstable_denominator,
  degenerate_slice,
  zero_polynomial,
  no_convergence,
  denominator_vanishes,
  insufficient_samples,
  invalid_exponent,
  point_too_close_to_boundary,
  singular_evaluation_point,
  pole_input,
  flat_gradient,
  start_off_level,
  invalid_argument,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Execution policy for the data-parallel kernels. Both paths produce
/// bit-identical results; `serial` is the reference.
enum class Exec { serial, parallel };

struct Bidegree {
  int m = 0;
  int n = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

}  // namespace riflab
