#ifndef DIOPH_CHARACTERS_HPP
#define DIOPH_CHARACTERS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "dioph/field.hpp"
#include "dioph/int128.hpp"
#include "dioph/poly.hpp"

namespace dioph {

// chi(x) for the quadratic character: 0 at x = 0, +1 on nonzero squares,
// -1 otherwise (Euler criterion x^((q-1)/2)).
int quad_char(const FieldSpec& F, Elt x);

// Multiplicative character of order e | q-1. Values are reported as
// root-of-unity exponents: chi(x) = zeta_e^j. Order 2 evaluates by Euler's
// criterion; higher orders use a discrete-log table over the canonical
// generator, hence the desk-scale cap.
class Character {
 public:
  static Character of_order(const FieldSpec& F, unsigned order,
                            std::uint64_t table_cap = kDefaultGeneratorCap);
  static Character quadratic(const FieldSpec& F) { return of_order(F, 2); }

  unsigned order() const { return order_; }
  std::uint64_t q() const { return q_; }

  // exponent j with chi(x) = zeta_e^j, or nullopt for x = 0
  std::optional<unsigned> apply(const FieldSpec& F, Elt x) const;

 private:
  Character() = default;
  unsigned order_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> exps_;  // dlog mod e per element; empty for order 2
};

// Exact residue-class tally of a complete character sum sum_x chi(f(x)):
// counts[j] = #{x : chi(f(x)) = zeta_e^j}, zeros = #{x : f(x) = 0}.
// Magnitudes go floating only at the reporting boundary.
struct CharSum {
  unsigned order = 2;
  std::vector<std::int64_t> counts;
  std::int64_t zeros = 0;

  std::int64_t total() const;
  // exact integer value n_0 - n_1, defined for order 2
  Int128 quadratic_value() const;
  double magnitude() const;
};

CharSum weil_sum(const FieldSpec& F, const Polynomial& f, const Character& chi,
                 unsigned threads = 1);

struct WeilReport {
  CharSum sum;
  double magnitude = 0;
  double bound = 0;  // (deg f - 1) * sqrt(q)
  bool satisfied = false;
};

// Asserts the Weil precondition (f non-constant, not an e-th power over the
// closure) and checks |sum| <= (deg f - 1) sqrt(q); exact integer compare
// for the quadratic case.
WeilReport weil_check(const FieldSpec& F, const Polynomial& f, const Character& chi,
                      unsigned threads = 1);

struct WeilFuzzReport {
  int trials = 0;
  int violations = 0;
  double worst_ratio = 0;  // max |sum| / bound over trials with bound > 0
  std::uint64_t seed = 0;
};

// Seeded random non-square f (2 <= deg <= 6) over odd primes <= 199 plus
// GF(9), GF(25), GF(27); every trial must satisfy the Weil bound.
WeilFuzzReport weil_fuzz(std::uint64_t seed, int trials = 200, unsigned threads = 1);

}  // namespace dioph

#endif
