#ifndef DIOPH_FIELD_HPP
#define DIOPH_FIELD_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dioph/error.hpp"

namespace dioph {

// A field element is carried by its canonical integer encoding
// enc(x) = sum coeffs[i] * p^i, a bijection [0, q) <-> F_q with enc(0) = 0
// and enc(1) = 1. All subset enumeration and CLI I/O use this encoding.
using Elt = std::uint32_t;

inline constexpr std::uint64_t kDefaultGeneratorCap = std::uint64_t(1) << 20;

// F_q = F_p[t]/(modulus), q = p^k, p an odd prime. Immutable after
// construction and safe to share across threads.
class FieldSpec {
 public:
  // modulus: ascending coefficients, length k+1, monic. Omitted => the
  // monic irreducible of degree k with the smallest integer encoding of its
  // non-leading coefficients (so GF(p^k) is reproducible across runs).
  static FieldSpec make(std::uint32_t p, std::uint32_t k = 1,
                        std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint64_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return mod_; }
  bool is_prime_field() const { return k_ == 1; }

  Elt zero() const { return 0; }
  Elt one() const { return 1; }

  Elt add(Elt a, Elt b) const {
    if (k_ == 1) {
      std::uint64_t s = std::uint64_t(a) + b;
      return Elt(s >= p_ ? s - p_ : s);
    }
    return add_ext(a, b);
  }

  Elt neg(Elt a) const {
    if (k_ == 1) return a == 0 ? 0 : Elt(p_ - a);
    return neg_ext(a);
  }

  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }

  Elt mul(Elt a, Elt b) const {
    if (k_ == 1) return Elt((std::uint64_t(a) * b) % p_);
    if (!mul_table_.empty()) return mul_table_[std::size_t(a) * q_ + b];
    return mul_ext(a, b);
  }

  Elt inv(Elt a) const;
  Elt pow(Elt a, std::uint64_t e) const;

  std::vector<std::uint32_t> decode(Elt a) const;
  Elt encode(std::span<const std::uint32_t> coeffs) const;

  // Parsed/printed form: "p", "p^k", or "p^k:c0,c1,...,ck".
  std::string literal() const;

 private:
  FieldSpec() = default;

  Elt add_ext(Elt a, Elt b) const;
  Elt neg_ext(Elt a) const;
  Elt mul_ext(Elt a, Elt b) const;

  std::uint32_t p_ = 0;
  std::uint32_t k_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> mod_;
  std::vector<Elt> mul_table_;  // k > 1 and q small; empty otherwise
};

// The q elements in increasing integer encoding: 0, 1, 2, ...
std::vector<Elt> enumerate_elements(const FieldSpec& field);

// Smallest (by encoding) element of multiplicative order q-1. Needs a full
// order computation, hence the desk-scale cap.
Elt find_generator(const FieldSpec& field, std::uint64_t cap = kDefaultGeneratorCap);

// Field literal grammar used by the CLI: "p" | "p^k" | "p^k:c0,c1,...,ck".
FieldSpec parse_field_literal(const std::string& text);

bool is_prime_u64(std::uint64_t n);

}  // namespace dioph

#endif
