#include "dioph/characters.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "dioph/parallel.hpp"

namespace dioph {

int quad_char(const FieldSpec& F, Elt x) {
  if (x == 0) return 0;
  return F.pow(x, (F.q() - 1) / 2) == F.one() ? 1 : -1;
}

Character Character::of_order(const FieldSpec& F, unsigned order, std::uint64_t table_cap) {
  if (order == 0 || (F.q() - 1) % order != 0)
    raise(errc::invalid_argument,
          "character order " + std::to_string(order) + " does not divide q-1");
  Character chi;
  chi.order_ = order;
  chi.q_ = F.q();
  if (order <= 2) return chi;  // trivial/quadratic: Euler criterion, no table
  Elt g = find_generator(F, table_cap);
  chi.exps_.assign(F.q(), 0);
  Elt x = 1;
  for (std::uint64_t j = 0; j < F.q() - 1; ++j) {
    chi.exps_[x] = std::uint32_t(j % order);
    x = F.mul(x, g);
  }
  return chi;
}

std::optional<unsigned> Character::apply(const FieldSpec& F, Elt x) const {
  if (F.q() != q_) raise(errc::invalid_argument, "character applied to the wrong field");
  if (x == 0) return std::nullopt;
  if (order_ == 1) return 0;
  if (order_ == 2) return quad_char(F, x) == 1 ? 0u : 1u;
  return exps_[x];
}

std::int64_t CharSum::total() const {
  std::int64_t t = zeros;
  for (auto n : counts) t += n;
  return t;
}

Int128 CharSum::quadratic_value() const {
  if (order != 2) raise(errc::invalid_argument, "not a quadratic character sum");
  return Int128(counts[0]) - Int128(counts[1]);
}

double CharSum::magnitude() const {
  if (order == 2) return std::fabs(double(counts[0] - counts[1]));
  std::complex<double> s = 0;
  for (unsigned j = 0; j < counts.size(); ++j) {
    double theta = 2.0 * std::numbers::pi * j / double(order);
    s += double(counts[j]) * std::complex<double>(std::cos(theta), std::sin(theta));
  }
  return std::abs(s);
}

CharSum weil_sum(const FieldSpec& F, const Polynomial& f, const Character& chi,
                 unsigned threads) {
  struct Tally {
    std::vector<std::int64_t> counts;
    std::int64_t zeros = 0;
  };
  unsigned e = chi.order();
  Tally init;
  init.counts.assign(e, 0);
  Tally r = parallel_block_reduce<Tally>(
      F.q(), threads, init,
      [&](std::uint64_t lo, std::uint64_t hi) {
        Tally t;
        t.counts.assign(e, 0);
        for (std::uint64_t x = lo; x < hi; ++x) {
          auto j = chi.apply(F, poly_eval(F, f, Elt(x)));
          if (j)
            ++t.counts[*j];
          else
            ++t.zeros;
        }
        return t;
      },
      [](Tally& acc, const Tally& part) {
        for (std::size_t j = 0; j < acc.counts.size(); ++j) acc.counts[j] += part.counts[j];
        acc.zeros += part.zeros;
      });
  CharSum out;
  out.order = e;
  out.counts = std::move(r.counts);
  out.zeros = r.zeros;
  return out;
}

WeilReport weil_check(const FieldSpec& F, const Polynomial& f, const Character& chi,
                      unsigned threads) {
  if (f.is_constant()) raise(errc::constant_polynomial, "Weil bound needs deg f >= 1");
  if (is_eth_power_over_closure(F, f, chi.order()))
    raise(errc::precondition_square,
          "f is an e-th power over the closure; the Weil bound is not asserted");
  WeilReport rep;
  rep.sum = weil_sum(F, f, chi, threads);
  rep.magnitude = rep.sum.magnitude();
  std::int64_t deg = f.degree();
  rep.bound = double(deg - 1) * std::sqrt(double(F.q()));
  if (chi.order() == 2) {
    // |n0 - n1|^2 <= (deg-1)^2 q, all integers
    Int128 v = rep.sum.quadratic_value();
    rep.satisfied = v * v <= Int128(deg - 1) * (deg - 1) * Int128(F.q());
  } else {
    rep.satisfied = rep.magnitude <= rep.bound * (1.0 + 1e-12) + 1e-9;
  }
  return rep;
}

WeilFuzzReport weil_fuzz(std::uint64_t seed, int trials, unsigned threads) {
  std::vector<FieldSpec> pool;
  for (std::uint32_t p = 3; p <= 199; p += 2)
    if (is_prime_u64(p)) pool.push_back(FieldSpec::make(p));
  pool.push_back(FieldSpec::make(3, 2));
  pool.push_back(FieldSpec::make(5, 2));
  pool.push_back(FieldSpec::make(3, 3));

  std::mt19937_64 rng(seed);
  WeilFuzzReport rep;
  rep.seed = seed;
  rep.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const FieldSpec& F = pool[rng() % pool.size()];
    unsigned deg = 2 + unsigned(rng() % 5);  // 2..6
    Polynomial f;
    for (;;) {
      std::vector<Elt> c(deg + 1);
      for (auto& v : c) v = Elt(rng() % F.q());
      if (c.back() == 0) c.back() = 1 + Elt(rng() % (F.q() - 1));
      f = Polynomial(std::move(c));
      if (!is_square_over_closure(F, f)) break;
    }
    Character chi = Character::quadratic(F);
    auto r = weil_check(F, f, chi, threads);
    if (!r.satisfied) ++rep.violations;
    if (r.bound > 0) rep.worst_ratio = std::max(rep.worst_ratio, r.magnitude / r.bound);
  }
  return rep;
}

}  // namespace dioph
