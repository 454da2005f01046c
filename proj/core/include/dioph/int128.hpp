#ifndef DIOPH_INT128_HPP
#define DIOPH_INT128_HPP

#include <cstdint>
#include <string>

namespace dioph {

// All counting runs in 128-bit integers: q^m * 2^C(m,d) can exceed 64 bits
// near the edge of the cost cap.
using Int128 = __int128;
using UInt128 = unsigned __int128;

constexpr Int128 abs128(Int128 v) { return v < 0 ? -v : v; }

constexpr Int128 gcd128(Int128 a, Int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    Int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::string to_string(Int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  UInt128 u = neg ? UInt128(-(v + 1)) + 1 : UInt128(v);
  std::string digits;
  while (u != 0) {
    digits.push_back(char('0' + int(u % 10)));
    u /= 10;
  }
  if (neg) digits.push_back('-');
  return std::string(digits.rbegin(), digits.rend());
}

inline bool fits_int64(Int128 v) {
  return v >= Int128(INT64_MIN) && v <= Int128(INT64_MAX);
}

// q^m with overflow detection against a ceiling; returns false when the power
// would exceed `limit`.
inline bool pow_within(std::uint64_t base, unsigned exp, UInt128 limit, UInt128& out) {
  UInt128 r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) return false;
    r *= base;
  }
  out = r;
  return r <= limit;
}

inline Int128 ipow128(std::uint64_t base, unsigned exp) {
  Int128 r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= Int128(base);
  return r;
}

}  // namespace dioph

#endif
