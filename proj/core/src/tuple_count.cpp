#include "dioph/tuple_count.hpp"

#include <algorithm>
#include <cmath>

#include "dioph/characters.hpp"
#include "dioph/parallel.hpp"

namespace dioph {

namespace {

constexpr Int128 kInt128Max = Int128((UInt128(1) << 127) - 1);

UInt128 checked_pow(std::uint64_t base, unsigned exp, const char* what) {
  UInt128 out = 0;
  if (!pow_within(base, exp, UInt128(kInt128Max), out))
    raise(errc::cap_exceeded, std::string(what) + " overflows 128-bit counting range");
  return out;
}

void require_cost(std::uint64_t cap, UInt128 cost, const char* what) {
  if (cost > UInt128(cap))
    raise(errc::cap_exceeded,
          std::string(what) + " cost exceeds the configured cap " + std::to_string(cap));
}

UInt128 qm_cost(const ProblemSpec& ps) { return checked_pow(ps.q(), ps.m, "q^m"); }

// Runs term over every tuple of F_q^m, partitioned on the first coordinate;
// partial sums merge in coordinate order, so results are thread-count
// independent.
template <class Term>
Int128 sum_over_tuples(const FieldSpec& F, unsigned m, unsigned threads, Term term) {
  std::uint64_t q = F.q();
  return parallel_block_reduce<Int128>(
      q, threads, Int128(0),
      [&](std::uint64_t lo, std::uint64_t hi) {
        Int128 acc = 0;
        std::vector<Elt> a(m, 0);
        for (std::uint64_t first = lo; first < hi; ++first) {
          a[0] = Elt(first);
          std::fill(a.begin() + 1, a.end(), Elt(0));
          for (;;) {
            acc += term(a.data());
            unsigned pos = m;
            for (;;) {
              if (pos <= 1) goto next_first;
              --pos;
              if (++a[pos] < q) break;
              a[pos] = 0;
            }
          }
        next_first:;
        }
        return acc;
      },
      [](Int128& x, Int128 y) { x += y; });
}

Elt subset_product(const FieldSpec& F, const Elt* a, const Subset& s) {
  Elt prod = a[s[0]];
  for (std::size_t i = 1; i < s.size(); ++i) prod = F.mul(prod, a[s[i]]);
  return prod;
}

bool pairwise_distinct(const Elt* a, unsigned m) {
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = i + 1; j < m; ++j)
      if (a[i] == a[j]) return false;
  return true;
}

// Depth-first enumeration of m-element subsets of F_q in increasing
// encoding order, pruning as soon as a d-subset product fails `admit`.
// At each full set, `found` receives the chosen elements.
template <class Admit, class Found>
void for_each_admissible_set(const FieldSpec& F, unsigned m, unsigned d, Elt first,
                             Admit admit, Found found) {
  std::uint64_t q = F.q();
  std::vector<Elt> chosen;
  chosen.reserve(m);

  // all products of (d-1)-subsets of `chosen` times v must pass
  auto check_new = [&](Elt v) {
    if (d == 1) return admit(v);
    unsigned need = d - 1;
    if (chosen.size() < need) return true;
    std::vector<unsigned> idx(need);
    // lexicographic (d-1)-subsets of the prefix
    for (unsigned i = 0; i < need; ++i) idx[i] = i;
    for (;;) {
      Elt prod = v;
      for (unsigned i = 0; i < need; ++i) prod = F.mul(prod, chosen[idx[i]]);
      if (!admit(prod)) return false;
      int pos = int(need) - 1;
      while (pos >= 0 && idx[pos] == chosen.size() - need + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (unsigned i = unsigned(pos) + 1; i < need; ++i) idx[i] = idx[i - 1] + 1;
    }
    return true;
  };

  auto rec = [&](auto&& self, Elt from) -> void {
    if (chosen.size() == m) {
      found(chosen);
      return;
    }
    for (std::uint64_t v = from; v + (m - chosen.size()) <= q; ++v) {
      if (!check_new(Elt(v))) continue;
      chosen.push_back(Elt(v));
      self(self, Elt(v + 1));
      chosen.pop_back();
    }
  };

  if (1 + first > q || m == 0) return;
  if (!check_new(first)) return;
  chosen.push_back(first);
  rec(rec, first + 1);
}

}  // namespace

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  UInt128 r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UInt128(UINT64_MAX)) raise(errc::cap_exceeded, "binomial overflows");
  }
  return std::uint64_t(r);
}

std::vector<Subset> enumerate_family(unsigned m, unsigned d) {
  if (d < 1 || d > m) raise(errc::invalid_problem, "need 1 <= d <= m");
  std::uint64_t count = binomial(m, d);
  if (count > 10'000'000) raise(errc::cap_exceeded, "subset family too large");
  std::vector<Subset> out;
  out.reserve(count);
  Subset cur(d);
  for (unsigned i = 0; i < d; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    int pos = int(d) - 1;
    while (pos >= 0 && cur[pos] == m - d + unsigned(pos)) --pos;
    if (pos < 0) break;
    ++cur[pos];
    for (unsigned i = unsigned(pos) + 1; i < d; ++i) cur[i] = cur[i - 1] + 1;
  }
  return out;
}

unsigned EpsilonVector::weight() const {
  unsigned w = 0;
  for (auto b : bits) w += b;
  return w;
}

EpsilonVector EpsilonVector::zero(std::size_t n) { return {std::vector<std::uint8_t>(n, 0)}; }

EpsilonVector EpsilonVector::all_ones(std::size_t n) { return {std::vector<std::uint8_t>(n, 1)}; }

EpsilonVector EpsilonVector::parse(const std::string& bitstring, std::size_t expected_length) {
  if (bitstring.size() != expected_length)
    raise(errc::invalid_argument, "epsilon bitstring must have length C(m,d) = " +
                                      std::to_string(expected_length));
  EpsilonVector eps;
  eps.bits.reserve(bitstring.size());
  for (char ch : bitstring) {
    if (ch != '0' && ch != '1') raise(errc::invalid_argument, "epsilon bitstring must be 0/1");
    eps.bits.push_back(ch == '1');
  }
  return eps;
}

std::string EpsilonVector::to_string() const {
  std::string s;
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

ProblemSpec ProblemSpec::make(FieldSpec field, Polynomial f, unsigned d, unsigned m,
                              bool zero_is_square, std::uint64_t cost_cap) {
  if (d < 1) raise(errc::invalid_problem, "need d >= 1");
  // Definition-wise d < m; the d = m case (a single subset) is meaningful
  // and exercised throughout, so only d <= m is enforced.
  if (d > m) raise(errc::invalid_problem, "need d <= m");
  if (std::uint64_t(m) > field.q()) raise(errc::invalid_problem, "need m <= q");
  if (m > 20) raise(errc::cap_exceeded, "m too large for 128-bit counting");
  if (binomial(m, d) > 64) raise(errc::cap_exceeded, "C(m,d) too large for 128-bit counting");
  if (f.is_constant()) raise(errc::invalid_problem, "f must be non-constant");
  if (is_square_over_closure(field, f))
    raise(errc::invalid_problem, "f must be non-square over the algebraic closure");
  ProblemSpec ps{std::move(field), std::move(f), d, m, zero_is_square, cost_cap};
  require_cost(cost_cap, qm_cost(ps), "q^m");
  return ps;
}

std::vector<std::int8_t> ProblemSpec::chi_f_table() const {
  std::vector<std::int8_t> chi(q());
  for (std::uint64_t x = 0; x < q(); ++x)
    chi[x] = std::int8_t(quad_char(field, poly_eval(field, f, Elt(x))));
  return chi;
}

Int128 count_tuples_bruteforce(const ProblemSpec& ps, unsigned threads) {
  require_cost(ps.cost_cap, qm_cost(ps), "q^m");
  auto chi = ps.chi_f_table();
  bool lenient = ps.zero_is_square;
  auto admit = [&](Elt prod) { return lenient ? chi[prod] >= 0 : chi[prod] == 1; };
  return parallel_block_reduce<Int128>(
      ps.q(), threads, Int128(0),
      [&](std::uint64_t lo, std::uint64_t hi) {
        Int128 acc = 0;
        for (std::uint64_t first = lo; first < hi; ++first)
          for_each_admissible_set(ps.field, ps.m, ps.d, Elt(first), admit,
                                  [&](const std::vector<Elt>&) { ++acc; });
        return acc;
      },
      [](Int128& x, Int128 y) { x += y; });
}

Int128 card_D(const ProblemSpec& ps, unsigned threads) {
  require_cost(ps.cost_cap, qm_cost(ps), "q^m");
  auto chi = ps.chi_f_table();
  auto family = enumerate_family(ps.m, ps.d);
  return sum_over_tuples(ps.field, ps.m, threads, [&](const Elt* a) -> Int128 {
    Int128 term = 1;
    for (const auto& A : family) {
      int c = chi[subset_product(ps.field, a, A)];
      if (c < 0) return 0;
      if (c > 0) term <<= 1;
    }
    return term;
  });
}

Int128 card_D_star(const ProblemSpec& ps, unsigned threads) {
  require_cost(ps.cost_cap, qm_cost(ps), "q^m");
  auto chi = ps.chi_f_table();
  auto family = enumerate_family(ps.m, ps.d);
  unsigned m = ps.m;
  return sum_over_tuples(ps.field, ps.m, threads, [&](const Elt* a) -> Int128 {
    if (!pairwise_distinct(a, m)) return 0;
    Int128 term = 1;
    for (const auto& A : family) {
      int c = chi[subset_product(ps.field, a, A)];
      if (c < 0) return 0;
      if (c > 0) term <<= 1;
    }
    return term;
  });
}

Int128 conf_count(std::uint64_t q, unsigned m) {
  if (std::uint64_t(m) > q) raise(errc::invalid_problem, "need m <= q");
  Int128 acc = 1;
  for (unsigned i = 0; i < m; ++i) {
    Int128 factor = Int128(q - i);
    if (factor != 0 && acc > kInt128Max / factor)
      raise(errc::cap_exceeded, "Conf count overflows 128 bits");
    acc *= factor;
  }
  return acc;
}

Int128 r_epsilon(const ProblemSpec& ps, const EpsilonVector& eps, unsigned threads) {
  auto family = enumerate_family(ps.m, ps.d);
  if (eps.bits.size() != family.size())
    raise(errc::invalid_argument, "epsilon length must be C(m,d)");
  require_cost(ps.cost_cap, qm_cost(ps), "q^m");
  std::vector<Subset> selected;
  for (std::size_t i = 0; i < family.size(); ++i)
    if (eps.bits[i]) selected.push_back(family[i]);
  if (selected.empty()) return Int128(checked_pow(ps.q(), ps.m, "q^m"));  // empty product
  auto chi = ps.chi_f_table();
  return sum_over_tuples(ps.field, ps.m, threads, [&](const Elt* a) -> Int128 {
    int term = 1;
    for (const auto& A : selected) {
      int c = chi[subset_product(ps.field, a, A)];
      if (c == 0) return 0;
      term *= c;
    }
    return term;
  });
}

Int128 r_epsilon_total(const ProblemSpec& ps, unsigned threads) {
  std::size_t n = ps.family_size();
  if (n > 62) raise(errc::cap_exceeded, "C(m,d) too large to enumerate epsilon vectors");
  UInt128 qm = qm_cost(ps);
  require_cost(ps.cost_cap, qm, "q^m");
  require_cost(ps.cost_cap, qm * ((UInt128(1) << n) - 1), "q^m 2^C(m,d)");
  Int128 total = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
    EpsilonVector eps = EpsilonVector::zero(n);
    for (std::size_t i = 0; i < n; ++i) eps.bits[i] = (mask >> i) & 1;
    total += r_epsilon(ps, eps, threads);
  }
  return total;
}

Weight1BoundReport weight1_bound_check(const ProblemSpec& ps, const EpsilonVector& eps,
                                   unsigned threads) {
  if (eps.weight() != 1) raise(errc::wrong_weight, "weight-1 bound requires |epsilon| = 1");
  Weight1BoundReport rep;
  rep.r = r_epsilon(ps, eps, threads);
  std::uint64_t q = ps.q();
  unsigned m = ps.m;
  int deg = ps.f.degree();
  rep.bound = double(deg - 1) * std::pow(double(q), double(m) - 0.5) +
              double(ps.d - 1) * std::pow(double(q), double(m) - 1.0);
  // exact comparison: |R| - (d-1) q^(m-1) <= (deg-1) q^(m-1/2), squared
  Int128 slack = abs128(rep.r) - Int128(ps.d - 1) * ipow128(q, m - 1);
  UInt128 q_pow = 0;
  if (slack <= 0) {
    rep.satisfied = true;
  } else if (UInt128(slack) <= (UInt128(1) << 63) &&
             pow_within(q, 2 * m - 1, UInt128(kInt128Max), q_pow)) {
    UInt128 lhs = UInt128(slack) * UInt128(slack);  // <= 2^126
    UInt128 cc = UInt128(std::uint64_t(deg - 1)) * std::uint64_t(deg - 1);
    if (cc != 0 && q_pow > UInt128(kInt128Max) / cc)
      rep.satisfied = true;  // rhs exceeds any representable lhs
    else
      rep.satisfied = lhs <= cc * q_pow;
  } else {
    rep.satisfied = double(slack) <= double(deg - 1) * std::pow(double(q), double(m) - 0.5);
  }
  return rep;
}

NxReport n_x_counts(const FieldSpec& field, unsigned d, std::uint64_t cost_cap,
                    unsigned threads) {
  if (d < 1) raise(errc::invalid_problem, "need d >= 1");
  NxReport rep;
  rep.q = field.q();
  rep.d = d;
  Int128 qd = ipow128(rep.q, d);
  Int128 q1d = ipow128(rep.q - 1, d);
  rep.n_nonzero = ipow128(rep.q - 1, d - 1);
  rep.n_zero = qd - q1d;

  UInt128 cost = checked_pow(rep.q, d, "q^d");
  if (cost > UInt128(cost_cap) || rep.q > (std::uint64_t(1) << 22)) {
    rep.direct_checked = false;  // closed form only, flagged
    return rep;
  }
  using Counts = std::vector<Int128>;
  Counts counts = parallel_block_reduce<Counts>(
      rep.q, threads, Counts(rep.q, 0),
      [&](std::uint64_t lo, std::uint64_t hi) {
        Counts local(rep.q, 0);
        std::vector<Elt> a(d, 0);
        for (std::uint64_t first = lo; first < hi; ++first) {
          a[0] = Elt(first);
          std::fill(a.begin() + 1, a.end(), Elt(0));
          for (;;) {
            Elt prod = a[0];
            for (unsigned i = 1; i < d; ++i) prod = field.mul(prod, a[i]);
            ++local[prod];
            unsigned pos = d;
            for (;;) {
              if (pos <= 1) goto next_first;
              --pos;
              if (++a[pos] < rep.q) break;
              a[pos] = 0;
            }
          }
        next_first:;
        }
        return local;
      },
      [](Counts& acc, const Counts& part) {
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += part[i];
      });
  if (counts[0] != rep.n_zero)
    raise(errc::property_violated, "N(0) closed form disagrees with enumeration");
  for (std::uint64_t x = 1; x < rep.q; ++x)
    if (counts[x] != rep.n_nonzero)
      raise(errc::property_violated, "N(x) closed form disagrees with enumeration");
  rep.direct_checked = true;
  return rep;
}

RelationReport tuple_count_relation(const ProblemSpec& ps, unsigned threads) {
  require_cost(ps.cost_cap, qm_cost(ps), "q^m");
  auto chi = ps.chi_f_table();
  auto family = enumerate_family(ps.m, ps.d);
  std::size_t C = family.size();

  struct Tally {
    Int128 lenient = 0, strict = 0, fiber = 0;  // fiber = sum of 2^(C - z)
  };
  auto admit = [&](Elt prod) { return chi[prod] >= 0; };
  Tally t = parallel_block_reduce<Tally>(
      ps.q(), threads, Tally{},
      [&](std::uint64_t lo, std::uint64_t hi) {
        Tally local;
        for (std::uint64_t first = lo; first < hi; ++first)
          for_each_admissible_set(ps.field, ps.m, ps.d, Elt(first), admit,
                                  [&](const std::vector<Elt>& chosen) {
                                    unsigned z = 0;
                                    for (const auto& A : family) {
                                      Elt prod = chosen[A[0]];
                                      for (std::size_t i = 1; i < A.size(); ++i)
                                        prod = ps.field.mul(prod, chosen[A[i]]);
                                      if (chi[prod] == 0) ++z;
                                    }
                                    ++local.lenient;
                                    if (z == 0) ++local.strict;
                                    local.fiber += Int128(1) << (C - z);
                                  });
        return local;
      },
      [](Tally& acc, const Tally& part) {
        acc.lenient += part.lenient;
        acc.strict += part.strict;
        acc.fiber += part.fiber;
      });

  RelationReport rep;
  rep.n = ps.zero_is_square ? t.lenient : t.strict;
  rep.n_strict = t.strict;
  rep.card_d_star = card_D_star(ps, threads);
  Int128 mfact = 1;
  for (unsigned i = 2; i <= ps.m; ++i) mfact *= i;
  Int128 denom = mfact * (Int128(1) << C);
  rep.ratio = Rational(rep.card_d_star, denom);
  rep.discrepancy = Rational(rep.n) - rep.ratio;
  rep.fiber_deficit = Rational(t.lenient) - Rational(t.fiber, Int128(1) << C);
  return rep;
}

}  // namespace dioph
