#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dioph/asymptotics.hpp"
#include "dioph/tuple_count.hpp"
#include "support/oracles.hpp"
#include "support/test_util.hpp"

using namespace dioph;
using dioph::testing::expect_error;

namespace {

ProblemSpec make_ps(std::uint32_t p, unsigned k, std::vector<std::uint64_t> f, unsigned d,
                    unsigned m, bool zero_is_square = true) {
  auto F = FieldSpec::make(p, k);
  auto poly = poly_from_encodings(F, f);
  return ProblemSpec::make(std::move(F), std::move(poly), d, m, zero_is_square);
}

const std::vector<std::uint64_t> kXp1{1, 1};
const std::vector<std::uint64_t> kX2p1{1, 0, 1};

}  // namespace

TEST_CASE("subset family enumeration is lexicographic") {
  auto f32 = enumerate_family(3, 2);
  REQUIRE(f32.size() == 3);
  CHECK(f32[0] == Subset{0, 1});
  CHECK(f32[1] == Subset{0, 2});
  CHECK(f32[2] == Subset{1, 2});

  auto f42 = enumerate_family(4, 2);
  REQUIRE(f42.size() == 6);
  CHECK(f42.front() == Subset{0, 1});
  CHECK(f42.back() == Subset{2, 3});

  CHECK(enumerate_family(2, 2) == std::vector<Subset>{{0, 1}});
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(26, 13) == 10400600);
}

TEST_CASE("problem validation") {
  expect_error(errc::invalid_problem, [] { make_ps(3, 1, kXp1, 3, 2); });       // d > m
  expect_error(errc::invalid_problem, [] { make_ps(3, 1, kXp1, 2, 4); });       // m > q
  expect_error(errc::invalid_problem, [] { make_ps(3, 1, {2}, 2, 2); });        // constant
  expect_error(errc::invalid_problem, [] { make_ps(3, 1, {1, 2, 1}, 2, 2); });  // (x+1)^2
  expect_error(errc::cap_exceeded, [] {
    auto F = FieldSpec::make(101);
    ProblemSpec::make(F, poly_from_encodings(F, kXp1), 2, 5, true, 1000);
  });
}

TEST_CASE("hand-derived pinned values, q = 3") {
  auto ps = make_ps(3, 1, kXp1, 2, 2);
  CHECK(count_tuples_bruteforce(ps) == 3);  // {0,1}, {0,2}, {1,2}
  CHECK(card_D(ps) == 12);
  CHECK(card_D_star(ps) == 10);
  CHECK(r_epsilon(ps, EpsilonVector::all_ones(1)) == 3);

  auto strict = make_ps(3, 1, kXp1, 2, 2, false);
  CHECK(count_tuples_bruteforce(strict) == 2);  // {1,2} has f-value 0
}

TEST_CASE("hand-derived pinned values, q = 5 and q = 7") {
  auto ps5 = make_ps(5, 1, kXp1, 2, 3);
  CHECK(count_tuples_bruteforce(ps5) == 3);  // {0,1,3}, {0,1,4}, {0,2,4}
  CHECK(card_D_star(ps5) == 120);            // frozen from the direct-summation oracle

  auto ps7 = make_ps(7, 1, kXp1, 2, 2);
  CHECK(count_tuples_bruteforce(ps7) == 14);  // 6 pairs with 0 + 8 pairs with ab in {1,3,6}
}

TEST_CASE("set counter agrees with the naive subset oracle") {
  for (auto& [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 1}, {7, 1}, {3, 2}}) {
    for (auto& fc : {kXp1, kX2p1}) {
      for (auto [d, m] : {std::pair<unsigned, unsigned>{2, 2}, {2, 3}}) {
        if (m > FieldSpec::make(p, k).q()) continue;
        auto ps = make_ps(p, k, fc, d, m);
        CHECK(count_tuples_bruteforce(ps) == dioph::testing::tuple_count_by_subsets(ps));
        auto strict = make_ps(p, k, fc, d, m, false);
        CHECK(count_tuples_bruteforce(strict) ==
              dioph::testing::tuple_count_by_subsets(strict));
      }
    }
  }
}

TEST_CASE("card_D dual route: character product vs square-root table") {
  for (auto& [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 1}, {5, 1}, {3, 2}}) {
    for (auto& fc : {kXp1, kX2p1}) {
      for (auto [d, m] : {std::pair<unsigned, unsigned>{2, 2}, {2, 3}}) {
        auto ps = make_ps(p, k, fc, d, m);
        CHECK(card_D(ps) == dioph::testing::card_D_by_sqrt_table(ps));
      }
    }
  }
}

TEST_CASE("R(0) = q^m and the epsilon-sum identity") {
  auto ps = make_ps(5, 1, kXp1, 2, 3);
  CHECK(r_epsilon(ps, EpsilonVector::zero(3)) == 125);
  CHECK(card_D(ps) == 125 + r_epsilon_total(ps));

  auto ps9 = make_ps(3, 2, kX2p1, 2, 3);
  CHECK(r_epsilon(ps9, EpsilonVector::zero(3)) == 729);
  CHECK(card_D(ps9) == 729 + r_epsilon_total(ps9));

  CHECK(card_D(make_ps(3, 1, kXp1, 2, 2)) == 9 + r_epsilon(make_ps(3, 1, kXp1, 2, 2),
                                                           EpsilonVector::all_ones(1)));
}

TEST_CASE("card_D_star sandwich") {
  for (auto& fc : {kXp1, kX2p1}) {
    for (auto [d, m] : {std::pair<unsigned, unsigned>{2, 2}, {2, 3}, {2, 4}}) {
      auto ps = make_ps(7, 1, fc, d, m);
      Int128 full = card_D(ps);
      Int128 star = card_D_star(ps);
      CHECK(star <= full);
      Int128 outside = ipow128(7, m) - conf_count(7, m);
      CHECK(full - star <= (Int128(1) << ps.family_size()) * outside);
      CHECK(full - star >= 0);
    }
  }
}

TEST_CASE("conf_count is the falling factorial") {
  CHECK(conf_count(3, 2) == 6);
  CHECK(conf_count(5, 3) == 60);
  CHECK(conf_count(17, 1) == 17);
  CHECK(conf_count(5, 5) == 120);
  expect_error(errc::invalid_problem, [] { conf_count(3, 5); });
}

TEST_CASE("epsilon parsing") {
  auto eps = EpsilonVector::parse("101", 3);
  CHECK(eps.weight() == 2);
  CHECK(eps.to_string() == "101");
  expect_error(errc::invalid_argument, [] { EpsilonVector::parse("10", 3); });
  expect_error(errc::invalid_argument, [] { EpsilonVector::parse("1x1", 3); });
}

TEST_CASE("weight-1 bound, tight at q = 3") {
  auto ps = make_ps(3, 1, kXp1, 2, 2);
  auto rep = weight1_bound_check(ps, EpsilonVector::all_ones(1));
  CHECK(rep.r == 3);
  CHECK(rep.bound == doctest::Approx(3.0));
  CHECK(rep.satisfied);  // equality counts

  auto ps2 = make_ps(3, 1, kX2p1, 2, 2);
  auto rep2 = weight1_bound_check(ps2, EpsilonVector::all_ones(1));
  CHECK(rep2.r == 1);  // direct summation: 3 + 2*(-1)
  CHECK(rep2.bound == doctest::Approx(std::pow(3.0, 1.5) + 3.0));
  CHECK(rep2.satisfied);

  expect_error(errc::wrong_weight, [&] {
    auto ps3 = make_ps(5, 1, kXp1, 2, 3);
    weight1_bound_check(ps3, EpsilonVector::parse("110", 3));
  });
}

TEST_CASE("N(x) closed form vs direct enumeration") {
  auto rep = n_x_counts(FieldSpec::make(3), 2);
  CHECK(rep.n_nonzero == 2);
  CHECK(rep.n_zero == 5);
  CHECK(rep.direct_checked);

  auto rep1 = n_x_counts(FieldSpec::make(11), 1);
  CHECK(rep1.n_nonzero == 1);
  CHECK(rep1.n_zero == 1);
  CHECK(rep1.direct_checked);

  auto rep9 = n_x_counts(FieldSpec::make(3, 2), 3);
  CHECK(rep9.n_nonzero == 64);
  CHECK(rep9.n_zero == 729 - 512);
  CHECK(rep9.direct_checked);

  // over the cap: closed form only, flagged
  auto repbig = n_x_counts(FieldSpec::make(101), 4, 1000);
  CHECK(!repbig.direct_checked);
  CHECK(repbig.n_nonzero == Int128(100) * 100 * 100);
}

TEST_CASE("projection fiber accounting (zero-value discrepancy)") {
  auto ps = make_ps(3, 1, kXp1, 2, 2);
  auto rel = tuple_count_relation(ps);
  CHECK(rel.n == 3);
  CHECK(rel.card_d_star == 10);
  CHECK(rel.ratio == Rational(5, 2));
  CHECK(rel.discrepancy == Rational(1, 2));       // the single set {1,2} hits f-value 0
  CHECK(rel.fiber_deficit == rel.discrepancy);    // exact identity under the lenient flag

  auto ps7 = make_ps(7, 1, kXp1, 2, 2);
  auto rel7 = tuple_count_relation(ps7);
  CHECK(rel7.n == 14);
  CHECK(rel7.card_d_star == 50);
  CHECK(rel7.ratio == Rational(25, 2));
  CHECK(rel7.discrepancy == Rational(3, 2));  // three pairs with product 6
  CHECK(rel7.fiber_deficit == rel7.discrepancy);

  // -1 is a non-residue mod 7, so x^2+1 never vanishes: zero discrepancy
  auto ps7b = make_ps(7, 1, kX2p1, 2, 2);
  auto rel7b = tuple_count_relation(ps7b);
  CHECK(rel7b.discrepancy == Rational(Int128(0)));
  CHECK(rel7b.fiber_deficit == Rational(Int128(0)));

  // over GF(9) the lenient/fiber identity still holds when zeros do occur
  auto ps9 = make_ps(3, 2, kX2p1, 2, 2);
  auto rel9 = tuple_count_relation(ps9);
  CHECK(rel9.discrepancy == rel9.fiber_deficit);

  // strict counting drops exactly the zero-value sets
  auto strict = make_ps(7, 1, kXp1, 2, 2, false);
  auto rels = tuple_count_relation(strict);
  CHECK(rels.n == 11);
  CHECK(rels.n_strict == 11);
}

TEST_CASE("counts are independent of the thread count") {
  auto ps = make_ps(7, 1, kXp1, 2, 3);
  CHECK(card_D(ps, 1) == card_D(ps, 2));
  CHECK(card_D_star(ps, 1) == card_D_star(ps, 3));
  CHECK(count_tuples_bruteforce(ps, 1) == count_tuples_bruteforce(ps, 2));
  auto eps = EpsilonVector::parse("110", 3);
  CHECK(r_epsilon(ps, eps, 1) == r_epsilon(ps, eps, 2));
}
