#include "dioph/field.hpp"

#include <algorithm>
#include <charconv>

#include "dioph/int128.hpp"

namespace dioph {

namespace {

// Largest q for which a k>1 field precomputes its q*q multiplication table.
constexpr std::uint64_t kMulTableMaxQ = 2048;

// Representable encodings are 32-bit; extension fields beyond this are out
// of desk scale anyway.
constexpr std::uint64_t kMaxQ = std::uint64_t(1) << 31;

using FpPoly = std::vector<std::uint32_t>;  // ascending, trailing zeros stripped

void fp_strip(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo monic g, coefficients in F_p.
FpPoly fp_mod(FpPoly f, const FpPoly& g, std::uint32_t p) {
  fp_strip(f);
  while (f.size() >= g.size()) {
    std::uint64_t lead = f.back();
    std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::uint64_t sub = (lead * g[i]) % p;
      std::uint64_t cur = f[i + shift];
      f[i + shift] = std::uint32_t((cur + p - sub) % p);
    }
    fp_strip(f);
  }
  return f;
}

bool fp_is_zero(const FpPoly& f) { return f.empty(); }

std::uint32_t fp_eval(const FpPoly& f, std::uint32_t x, std::uint32_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
  return std::uint32_t(acc);
}

// Irreducibility over F_p by trial division with all monic divisors of
// degree <= deg/2 (root search suffices for deg <= 3).
bool fp_irreducible(const FpPoly& f, std::uint32_t p) {
  std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  for (std::uint32_t x = 0; x < p; ++x)
    if (fp_eval(f, x, p) == 0) return false;
  if (deg <= 3) return true;
  for (std::size_t dd = 2; dd <= deg / 2; ++dd) {
    // odometer over the dd non-leading coefficients of a monic divisor
    FpPoly div(dd + 1, 0);
    div[dd] = 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dd; ++i) total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t c = code;
      for (std::size_t i = 0; i < dd; ++i) {
        div[i] = std::uint32_t(c % p);
        c /= p;
      }
      if (fp_is_zero(fp_mod(f, div, p))) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::make(std::uint32_t p, std::uint32_t k,
                          std::optional<std::vector<std::uint32_t>> modulus) {
  if (p % 2 == 0) raise(errc::even_characteristic, "q must be an odd prime power, got p=" + std::to_string(p));
  if (!is_prime_u64(p)) raise(errc::not_prime, "p=" + std::to_string(p) + " is not prime");
  if (k < 1) raise(errc::degree_mismatch, "extension degree must be >= 1");

  FieldSpec F;
  F.p_ = p;
  F.k_ = k;
  UInt128 q = 1;
  if (!pow_within(p, k, UInt128(kMaxQ), q))
    raise(errc::cap_exceeded, "q = p^k exceeds the representable range");
  F.q_ = std::uint64_t(q);

  if (modulus) {
    auto& m = *modulus;
    if (m.size() != std::size_t(k) + 1)
      raise(errc::degree_mismatch, "modulus must have degree exactly k");
    for (auto c : m)
      if (c >= p) raise(errc::degree_mismatch, "modulus coefficient out of range [0, p)");
    if (m.back() != 1) raise(errc::degree_mismatch, "modulus must be monic");
    if (k > 1 && !fp_irreducible(m, p))
      raise(errc::reducible_modulus, "modulus is reducible over F_p");
    F.mod_ = m;
  } else if (k == 1) {
    F.mod_ = {0, 1};  // t - 0 placeholder; arithmetic is plain mod p
  } else {
    // smallest monic irreducible by integer encoding of (c_0..c_{k-1})
    FpPoly cand(k + 1, 0);
    cand[k] = 1;
    bool found = false;
    for (std::uint64_t code = 0; code < F.q_; ++code) {
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < k; ++i) {
        cand[i] = std::uint32_t(c % p);
        c /= p;
      }
      if (fp_irreducible(cand, p)) {
        found = true;
        break;
      }
    }
    if (!found) raise(errc::reducible_modulus, "no irreducible modulus found");  // unreachable
    F.mod_ = cand;
  }

  if (k > 1 && F.q_ <= kMulTableMaxQ) {
    F.mul_table_.resize(std::size_t(F.q_) * F.q_);
    for (Elt a = 0; a < F.q_; ++a)
      for (Elt b = a; b < F.q_; ++b) {
        Elt prod = F.mul_ext(a, b);
        F.mul_table_[std::size_t(a) * F.q_ + b] = prod;
        F.mul_table_[std::size_t(b) * F.q_ + a] = prod;
      }
  }
  return F;
}

std::vector<std::uint32_t> FieldSpec::decode(Elt a) const {
  std::vector<std::uint32_t> out(k_);
  std::uint64_t v = a;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out[i] = std::uint32_t(v % p_);
    v /= p_;
  }
  return out;
}

Elt FieldSpec::encode(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != k_) raise(errc::degree_mismatch, "coefficient vector must have length k");
  std::uint64_t v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) raise(errc::degree_mismatch, "coefficient out of range [0, p)");
    v = v * p_ + coeffs[i];
  }
  return Elt(v);
}

Elt FieldSpec::add_ext(Elt a, Elt b) const {
  std::uint64_t x = a, y = b, out = 0, scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    std::uint64_t s = x % p_ + y % p_;
    if (s >= p_) s -= p_;
    out += s * scale;
    scale *= p_;
    x /= p_;
    y /= p_;
  }
  return Elt(out);
}

Elt FieldSpec::neg_ext(Elt a) const {
  std::uint64_t x = a, out = 0, scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    std::uint64_t c = x % p_;
    out += (c == 0 ? 0 : p_ - c) * scale;
    scale *= p_;
    x /= p_;
  }
  return Elt(out);
}

Elt FieldSpec::mul_ext(Elt a, Elt b) const {
  // schoolbook product, then reduce with x^k = -(m_0 + ... + m_{k-1} x^{k-1})
  std::vector<std::uint64_t> av(k_), bv(k_), prod(2 * k_ - 1, 0);
  std::uint64_t x = a, y = b;
  for (std::uint32_t i = 0; i < k_; ++i) {
    av[i] = x % p_;
    bv[i] = y % p_;
    x /= p_;
    y /= p_;
  }
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (av[i] == 0) continue;
    for (std::uint32_t j = 0; j < k_; ++j)
      prod[i + j] = (prod[i + j] + av[i] * bv[j]) % p_;
  }
  for (std::size_t i = prod.size(); i-- > k_;) {
    std::uint64_t lead = prod[i];
    if (lead == 0) continue;
    prod[i] = 0;
    for (std::uint32_t j = 0; j < k_; ++j) {
      std::uint64_t sub = (lead * mod_[j]) % p_;
      prod[i - k_ + j] = (prod[i - k_ + j] + p_ - sub) % p_;
    }
  }
  std::uint64_t out = 0;
  for (std::size_t i = k_; i-- > 0;) out = out * p_ + prod[i];
  return Elt(out);
}

Elt FieldSpec::pow(Elt a, std::uint64_t e) const {
  Elt r = 1, base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Elt FieldSpec::inv(Elt a) const {
  if (a == 0) raise(errc::division_by_zero, "inverse of zero");
  return pow(a, q_ - 2);
}

std::string FieldSpec::literal() const {
  if (k_ == 1) return std::to_string(p_);
  std::string s = std::to_string(p_) + "^" + std::to_string(k_) + ":";
  for (std::size_t i = 0; i < mod_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(mod_[i]);
  }
  return s;
}

std::vector<Elt> enumerate_elements(const FieldSpec& field) {
  std::vector<Elt> out(field.q());
  for (std::uint64_t i = 0; i < field.q(); ++i) out[i] = Elt(i);
  return out;
}

Elt find_generator(const FieldSpec& field, std::uint64_t cap) {
  if (field.q() > cap)
    raise(errc::cap_exceeded, "q=" + std::to_string(field.q()) +
                                  " exceeds the generator-search cap " + std::to_string(cap));
  std::uint64_t n = field.q() - 1;
  auto factors = prime_factors(n);
  for (std::uint64_t g = 1; g < field.q(); ++g) {
    bool primitive = true;
    for (auto r : factors) {
      if (field.pow(Elt(g), n / r) == field.one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) return Elt(g);
  }
  raise(errc::property_violated, "no generator found in F_q*");  // unreachable for a field
}

FieldSpec parse_field_literal(const std::string& text) {
  auto parse_u32 = [&](std::string_view sv) -> std::uint32_t {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
    if (ec != std::errc() || ptr != sv.data() + sv.size())
      raise(errc::invalid_argument, "bad number in field literal: '" + std::string(sv) + "'");
    return v;
  };
  auto caret = text.find('^');
  if (caret == std::string::npos) return FieldSpec::make(parse_u32(text), 1);
  auto colon = text.find(':', caret);
  std::uint32_t p = parse_u32(text.substr(0, caret));
  std::uint32_t k =
      parse_u32(colon == std::string::npos ? text.substr(caret + 1)
                                           : text.substr(caret + 1, colon - caret - 1));
  if (colon == std::string::npos) return FieldSpec::make(p, k);
  std::vector<std::uint32_t> coeffs;
  std::string_view rest = std::string_view(text).substr(colon + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    coeffs.push_back(parse_u32(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return FieldSpec::make(p, k, std::move(coeffs));
}

}  // namespace dioph
