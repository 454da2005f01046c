#include "dioph/shparlinski.hpp"

#include <algorithm>
#include <cmath>

#include "dioph/asymptotics.hpp"
#include "dioph/characters.hpp"
#include "dioph/parallel.hpp"

namespace dioph {

namespace {

std::vector<std::size_t> selected_indices(const EpsilonVector& eps) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < eps.bits.size(); ++i)
    if (eps.bits[i]) out.push_back(i);
  return out;
}

// product over the coordinates of A, skipping `skip` (pass m for no skip)
Elt masked_product(const FieldSpec& F, const Subset& A, std::span<const Elt> value_of_coord,
                   unsigned skip) {
  Elt prod = 1;
  for (auto i : A)
    if (i != skip) prod = F.mul(prod, value_of_coord[i]);
  return prod;
}

}  // namespace

PivotSplit choose_pivot(const EpsilonVector& eps, unsigned m, unsigned d) {
  auto family = enumerate_family(m, d);
  if (eps.bits.size() != family.size())
    raise(errc::invalid_argument, "epsilon length must be C(m,d)");
  auto sel = selected_indices(eps);
  if (sel.size() < 2) raise(errc::weight_too_small, "pivot split requires |epsilon| >= 2");

  std::vector<char> in_union(m, 0), in_all(m, 1);
  for (auto j : sel) {
    std::vector<char> here(m, 0);
    for (auto i : family[j]) here[i] = 1;
    for (unsigned i = 0; i < m; ++i) {
      in_union[i] |= here[i];
      in_all[i] &= here[i];
    }
  }
  unsigned pivot = m;
  for (unsigned i = 0; i < m; ++i) {
    if (in_union[i] && !in_all[i]) {
      pivot = i;
      break;
    }
  }
  // distinct d-sets always leave the intersection strictly inside the union
  if (pivot == m) raise(errc::property_violated, "no pivot found for distinct subsets");

  PivotSplit split;
  split.pivot = pivot;
  for (auto j : sel) {
    bool has = std::find(family[j].begin(), family[j].end(), pivot) != family[j].end();
    (has ? split.b_subsets : split.c_subsets).push_back(j);
  }
  return split;
}

AveragedR r_epsilon_averaged_with(const ProblemSpec& ps, const EpsilonVector& eps,
                                  const PivotSplit& split, unsigned threads) {
  auto family = enumerate_family(ps.m, ps.d);
  if (eps.bits.size() != family.size())
    raise(errc::invalid_argument, "epsilon length must be C(m,d)");
  if (eps.weight() < 2) raise(errc::weight_too_small, "averaging requires |epsilon| >= 2");
  if (split.b_subsets.empty() || split.c_subsets.empty())
    raise(errc::invalid_argument, "pivot split must have nonempty B and C");

  std::uint64_t q = ps.q();
  UInt128 cost = 0;
  if (!pow_within(q, ps.m + 1, UInt128(ps.cost_cap), cost))
    raise(errc::cap_exceeded, "(q-1) q^m cost exceeds the configured cap");

  auto chi = ps.chi_f_table();
  std::vector<Subset> b_sets, c_sets;
  for (auto j : split.b_subsets) b_sets.push_back(family[j]);
  for (auto j : split.c_subsets) c_sets.push_back(family[j]);

  // sum over b != 0, partitioned on b; the tuple sum nests inside
  Int128 inner = parallel_block_reduce<Int128>(
      q - 1, threads, Int128(0),
      [&](std::uint64_t lo, std::uint64_t hi) {
        Int128 acc = 0;
        std::vector<Elt> a(ps.m, 0);
        for (std::uint64_t bi = lo; bi < hi; ++bi) {
          Elt b = Elt(bi + 1);
          Elt b_d = ps.field.pow(b, ps.d);
          std::fill(a.begin(), a.end(), Elt(0));
          for (;;) {
            int term = 1;
            for (const auto& A : b_sets) {
              Elt prod = a[A[0]];
              for (std::size_t i = 1; i < A.size(); ++i) prod = ps.field.mul(prod, a[A[i]]);
              int c = chi[prod];
              if (c == 0) {
                term = 0;
                break;
              }
              term *= c;
            }
            if (term != 0) {
              for (const auto& A : c_sets) {
                Elt prod = b_d;
                for (auto i : A) prod = ps.field.mul(prod, a[i]);
                int c = chi[prod];
                if (c == 0) {
                  term = 0;
                  break;
                }
                term *= c;
              }
            }
            acc += term;
            unsigned pos = ps.m;
            for (;;) {
              if (pos == 0) goto next_b;
              --pos;
              if (++a[pos] < q) break;
              a[pos] = 0;
            }
          }
        next_b:;
        }
        return acc;
      },
      [](Int128& x, Int128 y) { x += y; });

  AveragedR out;
  out.inner_sum = inner;
  Int128 qm1 = Int128(q) - 1;
  if (inner % qm1 != 0)
    raise(errc::non_divisible, "averaged inner sum not divisible by q-1 (implementation bug)");
  out.value = inner / qm1;
  return out;
}

AveragedR r_epsilon_averaged(const ProblemSpec& ps, const EpsilonVector& eps, unsigned threads) {
  return r_epsilon_averaged_with(ps, eps, choose_pivot(eps, ps.m, ps.d), threads);
}

Polynomial build_F_poly(const ProblemSpec& ps, const PivotSplit& split,
                        std::span<const Elt> params) {
  auto family = enumerate_family(ps.m, ps.d);
  // params are the non-pivot coordinates in order; spread them to coordinates
  std::vector<Elt> coord(ps.m, 0);
  std::size_t at = 0;
  for (unsigned i = 0; i < ps.m; ++i)
    if (i != split.pivot) coord[i] = params[at++];
  Polynomial F = Polynomial::constant(1);
  for (auto j : split.b_subsets) {
    Elt c = masked_product(ps.field, family[j], coord, split.pivot);
    F = poly_mul(ps.field, F, poly_dilate(ps.field, ps.f, c, 1));
  }
  return F;
}

Polynomial build_G_poly(const ProblemSpec& ps, const PivotSplit& split,
                        std::span<const Elt> params) {
  auto family = enumerate_family(ps.m, ps.d);
  std::vector<Elt> coord(ps.m, 0);
  std::size_t at = 0;
  for (unsigned i = 0; i < ps.m; ++i)
    if (i != split.pivot) coord[i] = params[at++];
  Polynomial G = Polynomial::constant(1);
  for (auto j : split.c_subsets) {
    Elt c = masked_product(ps.field, family[j], coord, ps.m);  // pivot not in A_j
    G = poly_mul(ps.field, G, poly_dilate(ps.field, ps.f, c, ps.d));
  }
  return G;
}

DegeneracyReport scan_degenerate(const ProblemSpec& ps, const EpsilonVector& eps,
                                 unsigned threads) {
  DegeneracyReport rep;
  rep.split = choose_pivot(eps, ps.m, ps.d);
  std::uint64_t q = ps.q();
  unsigned nparams = ps.m - 1;
  UInt128 cost = 0;
  if (!pow_within(q, nparams, UInt128(ps.cost_cap), cost))
    raise(errc::cap_exceeded, "q^(m-1) scan exceeds the configured cap");

  // zero and constant polynomials count as degenerate
  auto degenerate = [&](const Polynomial& g) {
    if (g.is_zero()) return true;
    return is_eth_power_over_closure(ps.field, g, 2);
  };

  struct Counts {
    Int128 d_count = 0, e_count = 0;
  };
  std::uint64_t total = std::uint64_t(cost);
  Counts counts = parallel_block_reduce<Counts>(
      total, threads, Counts{},
      [&](std::uint64_t lo, std::uint64_t hi) {
        Counts local;
        std::vector<Elt> params(nparams, 0);
        for (std::uint64_t code = lo; code < hi; ++code) {
          std::uint64_t c = code;
          for (unsigned i = 0; i < nparams; ++i) {
            params[i] = Elt(c % q);
            c /= q;
          }
          if (degenerate(build_F_poly(ps, rep.split, params))) ++local.d_count;
          if (degenerate(build_G_poly(ps, rep.split, params))) ++local.e_count;
        }
        return local;
      },
      [](Counts& acc, const Counts& part) {
        acc.d_count += part.d_count;
        acc.e_count += part.e_count;
      });
  rep.card_D_set = counts.d_count;
  rep.card_E_set = counts.e_count;
  double scale = std::pow(double(q), double(ps.m) - 2.0);
  rep.ratio_D = double(rep.card_D_set) / scale;
  rep.ratio_E = double(rep.card_E_set) / scale;

  // proof witnesses: 1 on A_F minus the pivot (resp. on A_G), 0 elsewhere
  auto family = enumerate_family(ps.m, ps.d);
  {
    std::vector<Elt> coord(ps.m, 0);
    for (auto i : family[rep.split.b_subsets[0]])
      if (i != rep.split.pivot) coord[i] = 1;
    std::vector<Elt> params;
    for (unsigned i = 0; i < ps.m; ++i)
      if (i != rep.split.pivot) params.push_back(coord[i]);
    rep.witness_F_excluded = !degenerate(build_F_poly(ps, rep.split, params));
  }
  {
    std::vector<Elt> coord(ps.m, 0);
    for (auto i : family[rep.split.c_subsets[0]]) coord[i] = 1;
    std::vector<Elt> params;
    for (unsigned i = 0; i < ps.m; ++i)
      if (i != rep.split.pivot) params.push_back(coord[i]);
    rep.witness_G_excluded = !degenerate(build_G_poly(ps, rep.split, params));
  }
  return rep;
}

GrowthReport growth_check(const std::vector<FieldSpec>& fields,
                                    std::span<const std::uint64_t> f_encodings, unsigned d,
                                    unsigned m, const EpsilonVector& eps,
                                    std::uint64_t cost_cap, unsigned threads) {
  if (fields.size() < 4) raise(errc::too_few_points, "growth check needs >= 4 field sizes");
  if (eps.weight() < 2) raise(errc::weight_too_small, "growth check is for |epsilon| >= 2");
  GrowthReport rep;
  std::vector<std::pair<double, double>> pts;
  for (const auto& F : fields) {
    auto f = poly_from_encodings(F, f_encodings);
    auto ps = ProblemSpec::make(F, f, d, m, true, cost_cap);
    GrowthPoint gp;
    gp.q = F.q();
    gp.r = r_epsilon(ps, eps, threads);
    gp.ratio = std::fabs(double(gp.r)) / std::pow(double(gp.q), double(m) - 1.0);
    rep.max_ratio = std::max(rep.max_ratio, gp.ratio);
    rep.points.push_back(gp);
    if (gp.r == 0)
      ++rep.dropped_zero;
    else
      pts.emplace_back(double(gp.q), std::fabs(double(gp.r)));
  }
  if (pts.empty()) {
    rep.all_zero = true;  // degenerate-zero: no exponent to fit
    return rep;
  }
  if (pts.size() >= 2) {
    rep.fitted_exponent = exponent_fit(pts).slope;
  } else {
    rep.fitted_exponent = 0;  // single nonzero point: no slope
  }
  return rep;
}

}  // namespace dioph
