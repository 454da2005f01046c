#include "dioph/asymptotics.hpp"

#include <cmath>

namespace dioph {

Rational main_term(std::uint64_t q, unsigned m, unsigned d) {
  if (d < 1 || d > m || std::uint64_t(m) > q) raise(errc::invalid_problem, "need 1 <= d <= m <= q");
  if (m > 20 || binomial(m, d) > 64)
    raise(errc::cap_exceeded, "main term denominator overflows 128 bits");
  Int128 num = ipow128(q, m);
  Int128 den = 1;
  for (unsigned i = 2; i <= m; ++i) den *= i;
  den <<= binomial(m, d);
  return Rational(num, den);
}

FitResult exponent_fit(std::span<const std::pair<double, double>> points) {
  FitResult fit;
  std::vector<std::pair<double, double>> logs;
  for (auto& [q, mag] : points) {
    if (mag <= 0) {
      ++fit.dropped;
      continue;
    }
    logs.emplace_back(std::log(q), std::log(mag));
  }
  if (logs.empty()) raise(errc::all_zero, "no positive magnitudes to fit");
  if (logs.size() < 2) raise(errc::too_few_points, "exponent fit needs >= 2 positive points");
  fit.used = int(logs.size());

  double mx = 0, my = 0;
  for (auto& [x, y] : logs) {
    mx += x;
    my += y;
  }
  mx /= double(logs.size());
  my /= double(logs.size());
  double sxx = 0, sxy = 0;
  for (auto& [x, y] : logs) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (sxx == 0) raise(errc::too_few_points, "all q equal; slope undefined");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0;
  for (auto& [x, y] : logs) {
    double r = y - (fit.intercept + fit.slope * x);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / double(logs.size()));
  return fit;
}

ScalingReport scaling_study(const std::vector<FieldSpec>& fields,
                            std::span<const std::uint64_t> f_encodings, unsigned d, unsigned m,
                            ScalingMode mode, bool zero_is_square, std::uint64_t cost_cap,
                            unsigned threads) {
  if (fields.empty()) raise(errc::too_few_points, "no fields given");
  for (std::size_t i = 1; i < fields.size(); ++i)
    if (fields[i].q() <= fields[i - 1].q())
      raise(errc::invalid_argument, "fields must have strictly increasing q");

  ScalingReport rep;
  rep.mode = mode;
  std::vector<std::pair<double, double>> pts;
  for (const auto& F : fields) {
    auto f = poly_from_encodings(F, f_encodings);
    auto ps = ProblemSpec::make(F, f, d, m, zero_is_square, cost_cap);
    rep.deg1_branch = (f.degree() == 1);

    ScalingRow row;
    row.q = F.q();
    if (mode == ScalingMode::N) {
      row.measured = count_tuples_bruteforce(ps, threads);
      row.main = main_term(F.q(), m, d);
    } else {
      row.measured = card_D(ps, threads);
      row.main = Rational(ipow128(F.q(), m));
    }
    row.error = Rational(row.measured) - row.main;
    row.abs_error = std::fabs(row.error.to_double());
    pts.emplace_back(double(row.q), row.abs_error);
    rep.rows.push_back(std::move(row));
  }
  rep.theoretical_exponent = rep.deg1_branch ? double(m) - 1.0 : double(m) - 0.5;

  int zero_rows = 0;
  for (auto& p : pts)
    if (p.second <= 0) ++zero_rows;
  rep.dropped_zero_rows = zero_rows;
  if (int(pts.size()) - zero_rows >= 2) {
    auto fit = exponent_fit(pts);
    rep.fitted_exponent = fit.slope;
    rep.fit_residual = fit.residual;
  }
  return rep;
}

}  // namespace dioph
