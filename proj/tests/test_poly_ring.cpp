#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dioph/poly.hpp"
#include "support/test_util.hpp"

using namespace dioph;
using dioph::testing::expect_error;

namespace {

Polynomial P(std::initializer_list<Elt> cs) { return Polynomial(std::vector<Elt>(cs)); }

Polynomial random_poly(const FieldSpec& F, std::mt19937_64& rng, int max_deg) {
  int deg = int(rng() % (max_deg + 1));
  std::vector<Elt> c(deg + 1);
  for (auto& v : c) v = Elt(rng() % F.q());
  if (c.back() == 0) c.back() = 1;
  return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("representation strips trailing zeros") {
  CHECK(Polynomial({1, 2, 0, 0}).degree() == 1);
  CHECK(Polynomial({0, 0}).is_zero());
  CHECK(Polynomial::zero().degree() == -1);
  CHECK(P({0, 1}).degree() == 1);
}

TEST_CASE("evaluation (Horner)") {
  auto F3 = FieldSpec::make(3);
  auto F7 = FieldSpec::make(7);
  CHECK(poly_eval(F3, P({1, 1}), 2) == 0);        // x+1 at 2
  CHECK(poly_eval(F3, P({1, 0, 1}), 1) == 2);     // x^2+1 at 1
  CHECK(poly_eval(F7, P({1, 1}), 6) == 0);        // x+1 at 6
  CHECK(poly_eval(F3, Polynomial::zero(), 2) == 0);
}

TEST_CASE("degree is additive for products") {
  std::mt19937_64 rng(7);
  for (auto F : {FieldSpec::make(3), FieldSpec::make(3, 2), FieldSpec::make(5)}) {
    for (int it = 0; it < 100; ++it) {
      auto f = random_poly(F, rng, 4);
      auto g = random_poly(F, rng, 4);
      CHECK(poly_mul(F, f, g).degree() == f.degree() + g.degree());
    }
  }
}

TEST_CASE("formal derivative in characteristic p") {
  auto F3 = FieldSpec::make(3);
  CHECK(poly_derivative(F3, P({1, 2, 1})) == P({2, 2}));  // (x^2+2x+1)' = 2x+2
  CHECK(poly_derivative(F3, P({0, 0, 0, 1})).is_zero());  // (x^3)' = 3x^2 = 0
  CHECK(poly_derivative(F3, P({1, 1})) == P({1}));
}

TEST_CASE("monic gcd via Euclid") {
  auto F3 = FieldSpec::make(3);
  CHECK(poly_gcd(F3, P({1, 2, 1}), P({2, 2})) == P({1, 1}));  // (x+1)^2 with derivative
  CHECK(poly_gcd(F3, P({0, 2}), Polynomial::zero()) == P({0, 1}));  // monic f / leading
  CHECK(poly_gcd(F3, P({1, 0, 1}), P({0, 1})) == P({1}));
  expect_error(errc::both_zero,
               [&] { poly_gcd(F3, Polynomial::zero(), Polynomial::zero()); });
}

TEST_CASE("p-th roots") {
  auto F3 = FieldSpec::make(3);
  CHECK(pth_root(F3, P({0, 0, 0, 1})) == P({0, 1}));                 // x^3 -> x
  CHECK(pth_root(F3, P({1, 0, 0, 2, 0, 0, 1})) == P({1, 2, 1}));     // x^6+2x^3+1
  expect_error(errc::not_a_pth_power, [&] { pth_root(F3, P({1, 0, 1})); });

  // over GF(9) the coefficient root goes through c^(p^(k-1))
  auto G9 = FieldSpec::make(3, 2);
  Elt t = 3;
  Polynomial f({G9.pow(t, 3), 0, 0, 1});  // x^3 + t^3 = (x + t)^3
  auto r = pth_root(G9, f);
  CHECK(r == Polynomial({t, 1}));
  CHECK(poly_mul(G9, poly_mul(G9, r, r), r) == f);
}

TEST_CASE("squarefree part") {
  auto F3 = FieldSpec::make(3);
  CHECK(squarefree_part(F3, P({1, 2, 1})) == P({1, 1}));       // (x+1)^2
  CHECK(squarefree_part(F3, P({0, 0, 0, 1})) == P({0, 1}));    // x^3
  CHECK(squarefree_part(F3, P({1, 0, 1})) == P({1, 0, 1}));    // already squarefree
  expect_error(errc::zero_polynomial, [&] { squarefree_part(F3, Polynomial::zero()); });
}

TEST_CASE("squarefree decomposition carries exact multiplicities") {
  auto F3 = FieldSpec::make(3);
  // (x+1)^6 = ((x+1)^2)^3, pure p-branch
  Polynomial f = P({1});
  for (int i = 0; i < 6; ++i) f = poly_mul(F3, f, P({1, 1}));
  auto dec = squarefree_decomposition(F3, f);
  REQUIRE(dec.size() == 1);
  CHECK(dec[0].part == P({1, 1}));
  CHECK(dec[0].multiplicity == 6);

  // x^2 (x^2+1)^3: mixed branches
  Polynomial g = poly_mul(F3, P({0, 0, 1}),
                          poly_mul(F3, P({1, 0, 1}), poly_mul(F3, P({1, 0, 1}), P({1, 0, 1}))));
  auto dec2 = squarefree_decomposition(F3, g);
  REQUIRE(dec2.size() == 2);
  std::uint64_t mult_x = 0, mult_x2p1 = 0;
  for (auto& sf : dec2) {
    if (sf.part == P({0, 1})) mult_x = sf.multiplicity;
    if (sf.part == P({1, 0, 1})) mult_x2p1 = sf.multiplicity;
  }
  CHECK(mult_x == 2);
  CHECK(mult_x2p1 == 3);
}

TEST_CASE("squareness over the closure") {
  auto F3 = FieldSpec::make(3);
  CHECK(is_square_over_closure(F3, P({1, 2, 1})));       // (x+1)^2
  CHECK(!is_square_over_closure(F3, P({1, 0, 1})));      // two simple roots
  CHECK(is_square_over_closure(F3, P({0, 0, 0, 0, 0, 0, 1})));  // x^6
  CHECK(!is_square_over_closure(F3, P({0, 0, 0, 1})));   // x^3
  CHECK(is_square_over_closure(F3, P({2})));             // nonsquare constant of F_q
  CHECK(is_square_over_closure(F3, P({1})));
  expect_error(errc::zero_polynomial,
               [&] { is_square_over_closure(F3, Polynomial::zero()); });

  // e-th power generalization
  CHECK(is_eth_power_over_closure(F3, P({0, 0, 0, 1}), 3));      // x^3
  CHECK(!is_eth_power_over_closure(F3, P({0, 0, 0, 1}), 2));
  CHECK(is_eth_power_over_closure(F3, P({0, 0, 0, 0, 0, 0, 1}), 6));
}

TEST_CASE("f*f is always a square; squares have even degree") {
  std::mt19937_64 rng(99);
  for (auto F : {FieldSpec::make(3), FieldSpec::make(5), FieldSpec::make(3, 2)}) {
    for (int it = 0; it < 120; ++it) {
      auto f = random_poly(F, rng, 4);
      if (f.is_zero()) continue;
      CHECK(is_square_over_closure(F, poly_mul(F, f, f)));
      if (is_square_over_closure(F, f)) CHECK(f.degree() % 2 == 0);
    }
  }
}

TEST_CASE("squarefree part divides f and is squarefree") {
  std::mt19937_64 rng(321);
  for (auto F : {FieldSpec::make(3), FieldSpec::make(3, 2), FieldSpec::make(7)}) {
    for (int it = 0; it < 120; ++it) {
      auto f = random_poly(F, rng, 3);
      auto g = random_poly(F, rng, 2);
      auto prod = poly_mul(F, f, poly_mul(F, g, g));  // force some multiplicity
      if (prod.is_constant()) continue;
      auto sf = squarefree_part(F, prod);
      CHECK(poly_divmod(F, prod, sf).second.is_zero());
      if (!sf.is_constant()) {
        auto d = poly_derivative(F, sf);
        REQUIRE(!d.is_zero());  // squarefree over a perfect field is separable
        CHECK(poly_gcd(F, sf, d) == P({1}));
      }
    }
  }
}

TEST_CASE("dilation f(c x^e)") {
  auto F3 = FieldSpec::make(3);
  CHECK(poly_dilate(F3, P({1, 1}), 1, 2) == P({1, 0, 1}));   // x+1 -> x^2+1
  CHECK(poly_dilate(F3, P({1, 1}), 0, 2) == P({1}));         // f(0) = 1
  CHECK(poly_dilate(F3, P({1, 0, 1}), 2, 1) == P({1, 0, 1}));  // 4x^2+1 = x^2+1 mod 3
  CHECK(poly_dilate(F3, P({1, 1}), 2, 3) == P({1, 0, 0, 2}));

  std::mt19937_64 rng(5);
  for (auto F : {FieldSpec::make(5), FieldSpec::make(3, 2)}) {
    for (int it = 0; it < 60; ++it) {
      auto f = random_poly(F, rng, 4);
      if (f.is_zero()) continue;
      Elt c = 1 + Elt(rng() % (F.q() - 1));
      CHECK(poly_dilate(F, f, c, 1).degree() == f.degree());
      CHECK(is_square_over_closure(F, poly_dilate(F, f, c, 1)) ==
            is_square_over_closure(F, f));
      // evaluation consistency: f(c x^e) at x equals f(c * x^e)
      Elt x = Elt(rng() % F.q());
      unsigned e = 1 + unsigned(rng() % 3);
      CHECK(poly_eval(F, poly_dilate(F, f, c, e), x) ==
            poly_eval(F, f, F.mul(c, F.pow(x, e))));
    }
  }
}
