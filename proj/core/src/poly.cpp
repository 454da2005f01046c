#include "dioph/poly.hpp"

#include <cassert>

namespace dioph {

Polynomial poly_from_encodings(const FieldSpec& F, std::span<const std::uint64_t> raw) {
  std::vector<Elt> c;
  c.reserve(raw.size());
  for (auto v : raw) {
    if (v >= F.q())
      raise(errc::invalid_argument,
            "coefficient encoding " + std::to_string(v) + " out of range [0, q)");
    c.push_back(Elt(v));
  }
  return Polynomial(std::move(c));
}

Elt poly_eval(const FieldSpec& F, const Polynomial& f, Elt x) {
  Elt acc = 0;
  auto c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), c[i]);
  return acc;
}

Polynomial poly_add(const FieldSpec& F, const Polynomial& a, const Polynomial& b) {
  std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<Elt> c(n, 0);
  for (std::size_t i = 0; i < n; ++i) c[i] = F.add(a.coeff(i), b.coeff(i));
  return Polynomial(std::move(c));
}

Polynomial poly_sub(const FieldSpec& F, const Polynomial& a, const Polynomial& b) {
  std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<Elt> c(n, 0);
  for (std::size_t i = 0; i < n; ++i) c[i] = F.sub(a.coeff(i), b.coeff(i));
  return Polynomial(std::move(c));
}

Polynomial poly_mul(const FieldSpec& F, const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial::zero();
  std::vector<Elt> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeff(i) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(a.coeff(i), b.coeff(j)));
  }
  return Polynomial(std::move(c));
}

Polynomial poly_scale(const FieldSpec& F, const Polynomial& a, Elt s) {
  std::vector<Elt> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& v : c) v = F.mul(v, s);
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> poly_divmod(const FieldSpec& F, const Polynomial& f,
                                              const Polynomial& g) {
  if (g.is_zero()) raise(errc::division_by_zero, "polynomial division by zero");
  std::vector<Elt> rem(f.coeffs().begin(), f.coeffs().end());
  int dg = g.degree();
  if (f.degree() < dg) return {Polynomial::zero(), f};
  std::vector<Elt> quo(f.degree() - dg + 1, 0);
  Elt lg_inv = F.inv(g.leading());
  for (int i = f.degree(); i >= dg; --i) {
    Elt top = rem[i];
    if (top == 0) continue;
    Elt factor = F.mul(top, lg_inv);
    quo[i - dg] = factor;
    for (int j = 0; j <= dg; ++j)
      rem[i - dg + j] = F.sub(rem[i - dg + j], F.mul(factor, g.coeff(j)));
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial poly_monic(const FieldSpec& F, const Polynomial& f) {
  if (f.is_zero() || f.leading() == 1) return f;
  return poly_scale(F, f, F.inv(f.leading()));
}

Polynomial poly_derivative(const FieldSpec& F, const Polynomial& f) {
  if (f.is_constant()) return Polynomial::zero();
  std::vector<Elt> c(f.coeffs().size() - 1, 0);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
    Elt scalar = Elt(i % F.p());  // the prime-subfield element i*1
    c[i - 1] = F.mul(f.coeff(i), scalar);
  }
  return Polynomial(std::move(c));
}

Polynomial poly_gcd(const FieldSpec& F, const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() && g.is_zero()) raise(errc::both_zero, "gcd(0, 0) is undefined");
  Polynomial a = f, b = g;
  while (!b.is_zero()) {
    auto [q, r] = poly_divmod(F, a, b);
    a = b;
    b = r;
  }
  return poly_monic(F, a);
}

Polynomial pth_root(const FieldSpec& F, const Polynomial& f) {
  std::uint32_t p = F.p();
  std::vector<Elt> c((f.coeffs().size() + p - 1) / p, 0);
  // inverse Frobenius on coefficients: c -> c^(p^(k-1))
  std::uint64_t root_exp = 1;
  for (std::uint32_t i = 0; i + 1 < F.k(); ++i) root_exp *= p;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (f.coeff(i) == 0) continue;
    if (i % p != 0)
      raise(errc::not_a_pth_power, "exponent " + std::to_string(i) + " not divisible by p");
    c[i / p] = F.pow(f.coeff(i), root_exp);
  }
  return Polynomial(std::move(c));
}

std::vector<SquarefreeFactor> squarefree_decomposition(const FieldSpec& F, const Polynomial& f) {
  if (f.is_zero()) raise(errc::zero_polynomial, "squarefree decomposition of 0");
  std::vector<SquarefreeFactor> out;
  Polynomial g = poly_monic(F, f);
  if (g.is_constant()) return out;

  Polynomial deriv = poly_derivative(F, g);
  if (deriv.is_zero()) {
    // g = h(x^p): each root multiplicity of the p-th root scales by p
    auto rec = squarefree_decomposition(F, pth_root(F, g));
    for (auto& sf : rec) out.push_back({sf.part, sf.multiplicity * F.p()});
    return out;
  }

  // classic characteristic-p loop: extracts factors whose multiplicity is
  // not divisible by p; what remains of c is a perfect p-th power
  Polynomial c = poly_gcd(F, g, deriv);
  Polynomial w = poly_divmod(F, g, c).first;
  std::uint64_t i = 1;
  while (!(w.is_constant())) {
    Polynomial y = poly_gcd(F, w, c);
    Polynomial z = poly_divmod(F, w, y).first;
    if (z.degree() >= 1) out.push_back({z, i});
    ++i;
    w = y;
    c = poly_divmod(F, c, y).first;
    assert(i <= std::uint64_t(f.degree()) + 1);
  }
  if (!c.is_constant()) {
    auto rec = squarefree_decomposition(F, pth_root(F, c));
    for (auto& sf : rec) out.push_back({sf.part, sf.multiplicity * F.p()});
  }
  return out;
}

Polynomial squarefree_part(const FieldSpec& F, const Polynomial& f) {
  if (f.is_zero()) raise(errc::zero_polynomial, "squarefree part of 0");
  Polynomial acc = Polynomial::constant(1);
  for (auto& sf : squarefree_decomposition(F, f)) acc = poly_mul(F, acc, sf.part);
  return acc;
}

bool is_eth_power_over_closure(const FieldSpec& F, const Polynomial& f, unsigned e) {
  if (f.is_zero()) raise(errc::zero_polynomial, "squareness of the zero polynomial");
  if (e == 0) raise(errc::invalid_argument, "e must be positive");
  if (f.is_constant()) return true;  // closure constants are always e-th powers
  for (auto& sf : squarefree_decomposition(F, f))
    if (sf.multiplicity % e != 0) return false;
  return true;
}

Polynomial poly_dilate(const FieldSpec& F, const Polynomial& f, Elt c, unsigned e) {
  if (f.is_zero()) return Polynomial::zero();
  if (c == 0) return Polynomial::constant(poly_eval(F, f, 0));
  std::vector<Elt> out(std::size_t(f.degree()) * e + 1, 0);
  Elt cpow = 1;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    out[i * e] = F.mul(f.coeff(i), cpow);
    cpow = F.mul(cpow, c);
  }
  return Polynomial(std::move(out));
}

std::string poly_to_string(const FieldSpec& F, const Polynomial& f) {
  (void)F;
  if (f.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(f.coeff(i));
  }
  return s;
}

}  // namespace dioph
