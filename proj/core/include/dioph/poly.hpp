#ifndef DIOPH_POLY_HPP
#define DIOPH_POLY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dioph/field.hpp"

namespace dioph {

// Univariate polynomial over a FieldSpec, ascending coefficients with
// trailing zeros stripped. The zero polynomial is the empty list
// (degree() == -1). Plain value type; the field is passed to operations.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Elt> coeffs) : c_(std::move(coeffs)) { strip(); }

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(Elt c) { return Polynomial({c}); }

  int degree() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Elt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Elt leading() const { return c_.empty() ? 0 : c_.back(); }
  std::span<const Elt> coeffs() const { return c_; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void strip() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Elt> c_;
};

// Validates that every raw value is a legal encoding in [0, q).
Polynomial poly_from_encodings(const FieldSpec& F, std::span<const std::uint64_t> raw);

Elt poly_eval(const FieldSpec& F, const Polynomial& f, Elt x);

Polynomial poly_add(const FieldSpec& F, const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const FieldSpec& F, const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const FieldSpec& F, const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const FieldSpec& F, const Polynomial& a, Elt c);

// (quotient, remainder) with g != 0.
std::pair<Polynomial, Polynomial> poly_divmod(const FieldSpec& F, const Polynomial& f,
                                              const Polynomial& g);

Polynomial poly_monic(const FieldSpec& F, const Polynomial& f);
Polynomial poly_derivative(const FieldSpec& F, const Polynomial& f);

// Monic gcd via Euclid; errors with BothZero when f = g = 0.
Polynomial poly_gcd(const FieldSpec& F, const Polynomial& f, const Polynomial& g);

// r with r(x)^p = f(x); requires every exponent with a nonzero coefficient
// to be a multiple of p. Coefficient-wise root is c -> c^(p^(k-1)).
Polynomial pth_root(const FieldSpec& F, const Polynomial& f);

struct SquarefreeFactor {
  Polynomial part;            // monic, squarefree
  std::uint64_t multiplicity; // exact, including the characteristic-p branch
};

// Full squarefree decomposition f = lc * prod part_i^mult_i with pairwise
// coprime squarefree parts. Multiplicities stay exact across the f' = 0
// branch (roots of g(x^p) carry p times the multiplicity of g's roots).
std::vector<SquarefreeFactor> squarefree_decomposition(const FieldSpec& F, const Polynomial& f);

// Monic product of the distinct irreducible factors of f.
Polynomial squarefree_part(const FieldSpec& F, const Polynomial& f);

// True iff every root of f in the algebraic closure has multiplicity
// divisible by e; constants count (any constant is an e-th power there).
bool is_eth_power_over_closure(const FieldSpec& F, const Polynomial& f, unsigned e);

inline bool is_square_over_closure(const FieldSpec& F, const Polynomial& f) {
  return is_eth_power_over_closure(F, f, 2);
}

// x -> f(c * x^e) as a polynomial in x.
Polynomial poly_dilate(const FieldSpec& F, const Polynomial& f, Elt c, unsigned e);

std::string poly_to_string(const FieldSpec& F, const Polynomial& f);

}  // namespace dioph

#endif
