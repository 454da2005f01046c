#ifndef DIOPH_ASYMPTOTICS_HPP
#define DIOPH_ASYMPTOTICS_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "dioph/rational.hpp"
#include "dioph/tuple_count.hpp"

namespace dioph {

// q^m / (m! 2^C(m,d)) as a reduced rational.
Rational main_term(std::uint64_t q, unsigned m, unsigned d);

struct FitResult {
  double slope = 0;
  double intercept = 0;
  double residual = 0;  // RMS residual in log space
  int used = 0;
  int dropped = 0;
};

// Least-squares slope of log(magnitude) vs log(q). Points with magnitude
// <= 0 are dropped and counted; AllZero when none survive, TooFewPoints
// when fewer than two do.
FitResult exponent_fit(std::span<const std::pair<double, double>> points);

enum class ScalingMode { N, CardD };

struct ScalingRow {
  std::uint64_t q = 0;
  Int128 measured = 0;
  Rational main;       // q^m/(m! 2^C) for N, q^m for CardD
  Rational error;      // measured - main
  double abs_error = 0;
};

struct ScalingReport {
  std::vector<ScalingRow> rows;
  ScalingMode mode = ScalingMode::CardD;
  bool deg1_branch = false;       // deg f = 1 vs deg f >= 2
  double theoretical_exponent = 0;  // m-1 or m-1/2
  double fitted_exponent = 0;
  double fit_residual = 0;
  int dropped_zero_rows = 0;
};

// Per-field error rows plus a log-log exponent fit over |error|. Fields
// must have strictly increasing q.
ScalingReport scaling_study(const std::vector<FieldSpec>& fields,
                            std::span<const std::uint64_t> f_encodings, unsigned d, unsigned m,
                            ScalingMode mode, bool zero_is_square = true,
                            std::uint64_t cost_cap = kDefaultCostCap, unsigned threads = 1);

}  // namespace dioph

#endif
