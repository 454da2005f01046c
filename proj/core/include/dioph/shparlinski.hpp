#ifndef DIOPH_SHPARLINSKI_HPP
#define DIOPH_SHPARLINSKI_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "dioph/tuple_count.hpp"

namespace dioph {

// Partition of the selected subsets by membership of the pivot coordinate:
// B = selected subsets containing the pivot, C = the rest. Both nonempty.
struct PivotSplit {
  unsigned pivot = 0;                 // 0-based coordinate
  std::vector<std::size_t> b_subsets; // indices into the lexicographic family
  std::vector<std::size_t> c_subsets;
};

// Deterministic pivot: the smallest coordinate in the union of the selected
// subsets that is missing from their intersection. Requires |eps| >= 2.
PivotSplit choose_pivot(const EpsilonVector& eps, unsigned m, unsigned d);

struct AveragedR {
  Int128 inner_sum = 0;  // sum over b in F_q* of the substituted tuple sum
  Int128 value = 0;      // inner_sum / (q-1), exact
};

// The b-averaged form of R(eps): for each b != 0 the scaling substitution
// fixes the B-products and multiplies the C-products by b^d, so the inner
// double sum is exactly (q-1) R(eps). NonDivisible signals a bug.
AveragedR r_epsilon_averaged(const ProblemSpec& ps, const EpsilonVector& eps,
                             unsigned threads = 1);
AveragedR r_epsilon_averaged_with(const ProblemSpec& ps, const EpsilonVector& eps,
                                  const PivotSplit& split, unsigned threads = 1);

// F(x) = prod_{j in B} f(c_j x) with c_j the product of the non-pivot
// coordinates of A_j; params holds the m-1 non-pivot values in coordinate
// order.
Polynomial build_F_poly(const ProblemSpec& ps, const PivotSplit& split,
                        std::span<const Elt> params);

// G(b) = prod_{j in C} f(b^d prod_{i in A_j} params_i).
Polynomial build_G_poly(const ProblemSpec& ps, const PivotSplit& split,
                        std::span<const Elt> params);

struct DegeneracyReport {
  Int128 card_D_set = 0;  // params with F a square over the closure
  Int128 card_E_set = 0;  // params with G a square over the closure
  double ratio_D = 0;     // card / q^(m-2)
  double ratio_E = 0;
  bool witness_F_excluded = false;  // proof witnesses must land outside the sets
  bool witness_G_excluded = false;
  PivotSplit split;
};

// Full scan of the q^(m-1) parameter space; F or G collapsing to a constant
// (or to the zero polynomial, possible only when f(0) = 0) counts as
// degenerate since the Weil bound gives no saving there.
DegeneracyReport scan_degenerate(const ProblemSpec& ps, const EpsilonVector& eps,
                                 unsigned threads = 1);

struct GrowthPoint {
  std::uint64_t q = 0;
  Int128 r = 0;
  double ratio = 0;  // |R| / q^(m-1)
};

struct GrowthReport {
  std::vector<GrowthPoint> points;
  bool all_zero = false;
  int dropped_zero = 0;
  double fitted_exponent = 0;  // slope of log|R| vs log q over nonzero points
  double max_ratio = 0;
};

// |R(eps)| across a family of fields sharing one epsilon pattern, with a
// log-log slope fit; needs >= 4 field sizes.
GrowthReport growth_check(const std::vector<FieldSpec>& fields,
                                    std::span<const std::uint64_t> f_encodings, unsigned d,
                                    unsigned m, const EpsilonVector& eps,
                                    std::uint64_t cost_cap = kDefaultCostCap,
                                    unsigned threads = 1);

}  // namespace dioph

#endif
