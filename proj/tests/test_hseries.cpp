#include "bmaps/hseries.hpp"

#include <doctest.h>

#include <random>

using namespace bmaps;

namespace {

RatFunc rf(long num, long den = 1) { return RatFunc(Var::alpha, rat_of(num, den)); }

// independent oracle: formal exp, truncated; exp(L) = sum L^k / k!
TripleSeries exp_series(const TripleSeries& l) {
  TripleSeries out = TripleSeries::zero(l.max_degree);
  TripleKey empty_key{Partition(), Partition(), Partition()};
  out.slice[0].emplace(empty_key, rf(1));
  TripleSeries power = l; // L^1
  Rat kfact(1);
  for (int k = 1; k <= l.max_degree; ++k) {
    kfact *= k;
    for (int n = 1; n <= l.max_degree; ++n)
      for (const auto& [key, v] : power.slice[static_cast<size_t>(n)]) {
        auto scaled = v.scaled(Rat(1) / kfact);
        auto it = out.slice[static_cast<size_t>(n)].find(key);
        if (it == out.slice[static_cast<size_t>(n)].end())
          out.slice[static_cast<size_t>(n)].emplace(key, scaled);
        else {
          it->second = it->second + scaled;
          if (it->second.is_zero()) out.slice[static_cast<size_t>(n)].erase(it);
        }
      }
    if (k == l.max_degree) break;
    // multiply by L, truncating
    TripleSeries next = TripleSeries::zero(l.max_degree);
    for (int a = 1; a <= l.max_degree; ++a)
      for (const auto& [ka, va] : power.slice[static_cast<size_t>(a)])
        for (int b = 1; a + b <= l.max_degree; ++b)
          for (const auto& [kb, vb] : l.slice[static_cast<size_t>(b)]) {
            TripleKey key{union_parts(ka[0], kb[0]), union_parts(ka[1], kb[1]),
                          union_parts(ka[2], kb[2])};
            auto& slot = next.slice[static_cast<size_t>(a + b)];
            auto it = slot.find(key);
            if (it == slot.end())
              slot.emplace(key, va * vb);
            else
              it->second = it->second + va * vb;
          }
    power = std::move(next);
  }
  return out;
}

bool series_equal(const TripleSeries& a, const TripleSeries& b) {
  if (a.max_degree != b.max_degree) return false;
  for (int n = 0; n <= a.max_degree; ++n)
    if (!(a.slice[static_cast<size_t>(n)] == b.slice[static_cast<size_t>(n)]))
      return false;
  return true;
}

Poly beta_poly(std::initializer_list<long> coeffs) {
  std::vector<Rat> c;
  for (long v : coeffs) c.push_back(Rat(v));
  return Poly(Var::beta, std::move(c));
}

} // namespace

TEST_SUITE_BEGIN("hseries");

TEST_CASE("phi slices by hand") {
  TripleSeries phi = build_phi(2);
  // degree 0: constant 1
  CHECK(phi.slice[0].size() == 1);
  // degree 1: the single key ((1),(1),(1)) with coefficient 1/alpha
  Partition one({1});
  REQUIRE(phi.slice[1].size() == 1);
  CHECK(phi.slice[1].at(TripleKey{one, one, one}) ==
        RatFunc(Poly::constant(Var::alpha, 1), Poly::monomial(Var::alpha, 1)));
  // degree 2, key ((2),(2),(2)):
  //   alpha^3 / (2 alpha^2 (1+alpha)) + (-1)^3 / (2 alpha (1+alpha))
  //   = (alpha - 1) / (2 alpha)
  Partition two({2});
  CHECK(phi.slice[2].at(TripleKey{two, two, two}) ==
        RatFunc(Poly(Var::alpha, {Rat(-1), Rat(1)}),
                Poly::monomial(Var::alpha, 1, Rat(2))));
}

TEST_CASE("log of a one-term series") {
  // log(1 + c t p_1 p_1 p_1): degree-1 slice c, degree-2 slice -c^2/2 at
  // the (1,1)-cubed key
  Partition one({1}), oneone({1, 1});
  TripleSeries s = TripleSeries::zero(2);
  s.slice[0].emplace(TripleKey{Partition(), Partition(), Partition()}, rf(1));
  Rat c = rat_of(3, 7);
  s.slice[1].emplace(TripleKey{one, one, one}, RatFunc(Var::alpha, c));
  TripleSeries lg = log_series(s);
  CHECK(lg.slice[1].at(TripleKey{one, one, one}) == RatFunc(Var::alpha, c));
  CHECK(lg.slice[2].at(TripleKey{oneone, oneone, oneone}) ==
        RatFunc(Var::alpha, -c * c / 2));
  CHECK_THROWS_AS(log_series(TripleSeries::zero(1)), std::invalid_argument);
}

TEST_CASE("exp oracle inverts log on random small series") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> cdist(-3, 3);
  std::uniform_int_distribution<size_t> pick(0, 2);
  for (int trial = 0; trial < 10; ++trial) {
    TripleSeries s = TripleSeries::zero(3);
    s.slice[0].emplace(TripleKey{Partition(), Partition(), Partition()}, rf(1));
    for (int n = 1; n <= 3; ++n) {
      auto parts = all_partitions(n);
      for (int terms = 0; terms < 2; ++terms) {
        TripleKey key{parts[pick(rng) % parts.size()],
                      parts[pick(rng) % parts.size()],
                      parts[pick(rng) % parts.size()]};
        long c = cdist(rng);
        if (c != 0)
          s.slice[static_cast<size_t>(n)].insert_or_assign(key, rf(c));
      }
    }
    CHECK(series_equal(exp_series(log_series(s)), s));
  }
}

TEST_CASE("hand-oracle h values at degrees 1 and 2") {
  HTable h = extract_h(2);
  Partition one({1}), two({2}), oneone({1, 1});
  CHECK(h.at(1, one, one, one) == beta_poly({1}));
  CHECK(h.at(2, two, two, two) == beta_poly({0, 1}));      // beta
  CHECK(h.at(2, two, two, oneone) == beta_poly({1}));      // 1
  CHECK(h.at(2, two, oneone, two) == beta_poly({1}));      // 1
  CHECK(h.at(2, oneone, oneone, two).is_zero());
  CHECK(h.at(2, oneone, two, two) == beta_poly({1}));      // symmetry partner
  CHECK(h.at(2, oneone, oneone, oneone).is_zero());
}

TEST_CASE("checks pass through degree 4") {
  HTable h = extract_h(4);
  for (int n = 1; n <= 4; ++n) {
    CHECK(polynomiality_check(h, n).empty());
    CHECK(marginal_sum_check(h, n).empty());
    CHECK(expansion_check(h, n).empty());
  }
}

TEST_CASE("marginal sum example n=2") {
  HTable h = extract_h(2);
  Partition two({2});
  Poly total(Var::beta);
  for (const auto& tau : all_partitions(2)) total = total + h.at(2, two, two, tau);
  CHECK(total == beta_poly({1, 1})); // beta + 1 = (1+beta)^1 * 1
}

TEST_SUITE_END();
