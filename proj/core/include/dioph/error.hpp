#ifndef DIOPH_ERROR_HPP
#define DIOPH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dioph {

enum class errc {
  // input / validation failures
  not_prime,
  even_characteristic,
  reducible_modulus,
  degree_mismatch,
  division_by_zero,
  both_zero,
  not_a_pth_power,
  zero_polynomial,
  precondition_square,
  constant_polynomial,
  wrong_weight,
  weight_too_small,
  too_few_points,
  all_zero,
  invalid_problem,
  invalid_argument,
  // resource limits
  cap_exceeded,
  // a mathematically guaranteed identity or bound failed (implementation bug)
  non_divisible,
  property_violated,
};

// Coarse classes drive the CLI exit codes: validation -> 2, cap -> 3, property -> 4.
enum class error_class { validation = 2, cap = 3, property = 4 };

constexpr error_class classify(errc c) {
  switch (c) {
    case errc::cap_exceeded:
      return error_class::cap;
    case errc::non_divisible:
    case errc::property_violated:
      return error_class::property;
    default:
      return error_class::validation;
  }
}

constexpr const char* errc_name(errc c) {
  switch (c) {
    case errc::not_prime: return "NotPrime";
    case errc::even_characteristic: return "EvenCharacteristic";
    case errc::reducible_modulus: return "ReducibleModulus";
    case errc::degree_mismatch: return "DegreeMismatch";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::both_zero: return "BothZero";
    case errc::not_a_pth_power: return "NotAPthPower";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::precondition_square: return "PreconditionSquare";
    case errc::constant_polynomial: return "ConstantPolynomial";
    case errc::wrong_weight: return "WrongWeight";
    case errc::weight_too_small: return "WeightTooSmall";
    case errc::too_few_points: return "TooFewPoints";
    case errc::all_zero: return "AllZero";
    case errc::invalid_problem: return "InvalidProblem";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::non_divisible: return "NonDivisible";
    case errc::property_violated: return "PropertyViolated";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const { return code_; }
  error_class cls() const { return classify(code_); }
  const char* code_name() const { return errc_name(code_); }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace dioph

#endif
