#include "bmaps/symfun.hpp"

#include <doctest.h>

#include <random>

using namespace bmaps;

namespace {
RatFunc rf(long v) { return RatFunc(Var::alpha, Rat(v)); }
} // namespace

TEST_SUITE_BEGIN("symfun");

TEST_CASE("p to m hand values") {
  // p_(2) = m_(2)
  SymFunc p2 = SymFunc::unit(Basis::p, Partition({2}));
  SymFunc m2 = p_to_m(p2);
  CHECK(m2.at(Partition({2})) == rf(1));
  CHECK(m2.at(Partition({1, 1})).is_zero());

  // p_(1,1) = m_(2) + 2 m_(1,1)
  SymFunc p11 = SymFunc::unit(Basis::p, Partition({1, 1}));
  SymFunc m11 = p_to_m(p11);
  CHECK(m11.at(Partition({2})) == rf(1));
  CHECK(m11.at(Partition({1, 1})) == rf(2));
}

TEST_CASE("base change round trips, all degrees to 8") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& lambda : all_partitions(n)) {
      SymFunc p = SymFunc::unit(Basis::p, lambda);
      CHECK(m_to_p(p_to_m(p)) == p);
      SymFunc m = SymFunc::unit(Basis::m, lambda);
      CHECK(p_to_m(m_to_p(m)) == m);
    }
    // p->m entries are nonnegative integers
    const auto& t = TransitionTables::get(n);
    for (const auto& row : t.p_to_m)
      for (const Rat& v : row) {
        CHECK(rat_is_integer(v));
        CHECK(v >= 0);
      }
  }
}

TEST_CASE("hall scalar product") {
  SymFunc p2 = SymFunc::unit(Basis::p, Partition({2}));
  SymFunc p11 = SymFunc::unit(Basis::p, Partition({1, 1}));
  // <p_2, p_2> = 2 alpha
  CHECK(hall_scalar(p2, p2) ==
        RatFunc(Poly::monomial(Var::alpha, 1, Rat(2)), Poly::constant(Var::alpha, 1)));
  // <p_11, p_11> = 2 alpha^2
  CHECK(hall_scalar(p11, p11) ==
        RatFunc(Poly::monomial(Var::alpha, 2, Rat(2)), Poly::constant(Var::alpha, 1)));
  CHECK(hall_scalar(p2, p11).is_zero());
  CHECK_THROWS_AS(hall_scalar(p2, SymFunc::unit(Basis::p, Partition({3}))),
                  std::invalid_argument);

  // symmetry and bilinearity on random small combinations
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> cdist(-3, 3);
  for (int n = 2; n <= 5; ++n) {
    auto parts = all_partitions(n);
    std::uniform_int_distribution<size_t> pick(0, parts.size() - 1);
    for (int trial = 0; trial < 20; ++trial) {
      SymFunc f = SymFunc::unit(Basis::p, parts[pick(rng)]).scaled_rf(rf(cdist(rng)));
      SymFunc g = SymFunc::unit(Basis::p, parts[pick(rng)]).scaled_rf(rf(cdist(rng)));
      SymFunc h = SymFunc::unit(Basis::p, parts[pick(rng)]).scaled_rf(rf(cdist(rng)));
      CHECK(hall_scalar(f, g) == hall_scalar(g, f));
      CHECK(hall_scalar(f + g, h) == hall_scalar(f, h) + hall_scalar(g, h));
    }
  }
}

TEST_CASE("p_product is union of indices") {
  SymFunc p2 = SymFunc::unit(Basis::p, Partition({2}));
  SymFunc p1 = SymFunc::unit(Basis::p, Partition({1}));
  SymFunc prod = p_product(p2, p1);
  CHECK(prod.degree == 3);
  CHECK(prod.at(Partition({2, 1})) == rf(1));
  SymFunc empty = SymFunc::unit(Basis::p, Partition());
  CHECK(p_product(empty, p2) == p2);
  CHECK(p_product(p_product(p1, p1), p1).at(Partition({1, 1, 1})) == rf(1));
}

TEST_CASE("single-variable specialization") {
  // p_(2,1) -> t^3
  SymFunc p21 = SymFunc::unit(Basis::p, Partition({2, 1}));
  auto img = specialize_single_variable(p21);
  CHECK(img.t_power == 3);
  CHECK(img.coeff == rf(1));

  // J_(2) = p_(1,1) + alpha p_(2) -> (1 + alpha) t^2
  SymFunc j2 = SymFunc::unit(Basis::p, Partition({1, 1}));
  j2.add_term(Partition({2}), RatFunc::variable(Var::alpha));
  auto img2 = specialize_single_variable(j2);
  CHECK(img2.t_power == 2);
  CHECK(img2.coeff == RatFunc(Poly(Var::alpha, {Rat(1), Rat(1)}),
                              Poly::constant(Var::alpha, 1)));

  // J_(1,1) = p_(1,1) - p_(2) -> 0
  SymFunc j11 = SymFunc::unit(Basis::p, Partition({1, 1}));
  j11.add_term(Partition({2}), rf(-1));
  CHECK(eval_ones(j11).is_zero());
}

TEST_SUITE_END();
