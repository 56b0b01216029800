#include "bmaps/poly.hpp"

#include <doctest.h>

#include <random>

using namespace bmaps;

namespace {

Poly make_beta(std::initializer_list<long> coeffs) {
  std::vector<Rat> c;
  for (long v : coeffs) c.push_back(Rat(v));
  return Poly(Var::beta, std::move(c));
}

std::mt19937_64 rng(20240917);

Rat random_rat() {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 5);
  return rat_of(num(rng), den(rng));
}

RatFunc random_ratfunc() {
  std::uniform_int_distribution<int> deg(0, 3);
  auto poly = [&](bool nonzero) {
    Poly p(Var::alpha);
    do {
      std::vector<Rat> c;
      int d = deg(rng);
      for (int i = 0; i <= d; ++i) c.push_back(random_rat());
      p = Poly(Var::alpha, std::move(c));
    } while (nonzero && p.is_zero());
    return p;
  };
  return RatFunc(poly(false), poly(true));
}

} // namespace

TEST_SUITE_BEGIN("exactalg");

TEST_CASE("polynomial ring operations") {
  Poly one_plus = make_beta({1, 1});
  CHECK(one_plus * one_plus == make_beta({1, 2, 1}));
  CHECK(make_beta({0, 0, 1}).eval_at(Rat(-1)) == 1);
  CHECK((make_beta({0, 1}) - make_beta({0, 1})).eval_at(Rat(7)) == 0);
  CHECK((make_beta({0, 1}) - make_beta({0, 1})).is_zero());
  CHECK_THROWS_AS(Poly(Var::alpha, {Rat(1)}) + make_beta({1}),
                  std::invalid_argument);
  CHECK(make_beta({3, 0, 2}).degree() == 2);
  CHECK(Poly(Var::beta).degree() == -1);
}

TEST_CASE("rational function normalization") {
  // (alpha^2 - 1) / (alpha - 1) -> alpha + 1
  RatFunc f(Poly(Var::alpha, {Rat(-1), Rat(0), Rat(1)}),
            Poly(Var::alpha, {Rat(-1), Rat(1)}));
  CHECK(f == RatFunc(Poly(Var::alpha, {Rat(1), Rat(1)}),
                     Poly::constant(Var::alpha, 1)));
  RatFunc x = RatFunc::variable(Var::alpha);
  CHECK(x / x == RatFunc(Var::alpha, Rat(1)));
  RatFunc inv_x = RatFunc(Var::alpha, Rat(1)) / x;
  CHECK(inv_x + inv_x == RatFunc(Poly::constant(Var::alpha, 2),
                                 Poly::monomial(Var::alpha, 1)));
  CHECK_THROWS_AS(x / RatFunc(Var::alpha), std::invalid_argument);
}

TEST_CASE("field axioms on random samples") {
  for (int trial = 0; trial < 200; ++trial) {
    RatFunc f = random_ratfunc(), g = random_ratfunc();
    CHECK((f + g) - g == f);
    if (!f.is_zero()) CHECK(f * (RatFunc(Var::alpha, Rat(1)) / f) ==
                            RatFunc(Var::alpha, Rat(1)));
    // normalization is idempotent: rebuilding from num/den changes nothing
    CHECK(RatFunc(f.num(), f.den()) == f);
  }
}

TEST_CASE("alpha -> beta + 1 substitution") {
  RatFunc alpha = RatFunc::variable(Var::alpha);
  RatFunc one(Var::alpha, Rat(1));
  CHECK((alpha - one).alpha_to_beta() == RatFunc::variable(Var::beta));
  CHECK((alpha * alpha).alpha_to_beta() ==
        RatFunc(Poly(Var::beta, {Rat(1), Rat(2), Rat(1)}),
                Poly::constant(Var::beta, 1)));
  // (alpha - 1)/(alpha + 1) -> beta/(beta + 2)
  RatFunc f = (alpha - one) / (alpha + one);
  CHECK(f.alpha_to_beta() == RatFunc(Poly::monomial(Var::beta, 1),
                                     Poly(Var::beta, {Rat(2), Rat(1)})));
  // substitution is a ring homomorphism
  for (int trial = 0; trial < 100; ++trial) {
    RatFunc a = random_ratfunc(), b = random_ratfunc();
    CHECK((a * b).alpha_to_beta() == a.alpha_to_beta() * b.alpha_to_beta());
    CHECK((a + b).alpha_to_beta() == a.alpha_to_beta() + b.alpha_to_beta());
  }
}

TEST_CASE("as_polynomial is the executable polynomiality check") {
  RatFunc poly_like(Poly(Var::beta, {Rat(0), Rat(1), Rat(1)}),
                    Poly::constant(Var::beta, 1));
  CHECK(as_polynomial(poly_like) == make_beta({0, 1, 1}));
  RatFunc not_poly(Poly::monomial(Var::beta, 1), Poly(Var::beta, {Rat(2), Rat(1)}));
  CHECK_THROWS_AS(as_polynomial(not_poly), NonPolynomial);
  CHECK(as_polynomial(RatFunc(Var::beta)).is_zero());
}

TEST_CASE("b-basis decomposition") {
  // p = beta, g = 1
  auto a = b_basis_decompose(make_beta({0, 1}), 1);
  REQUIRE(a.has_value());
  CHECK(*a == std::vector<Rat>{Rat(1)});

  // p = beta^2 + 2(beta+1), g = 2 -> (1, 2)
  auto b = b_basis_decompose(make_beta({2, 2, 1}), 2);
  REQUIRE(b.has_value());
  CHECK(*b == std::vector<Rat>{Rat(1), Rat(2)});

  // p = (beta+1)^2, g = 2: the beta coefficient forces a_1 = 2 but the
  // constant forces a_1 = 1 -> not in the span
  CHECK_FALSE(b_basis_decompose(make_beta({1, 2, 1}), 2).has_value());

  // reconstruction property on random in-span polynomials
  std::uniform_int_distribution<int> gdist(0, 7);
  std::uniform_int_distribution<long> cdist(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    int g = gdist(rng);
    Poly p(Var::beta);
    std::vector<Rat> want;
    for (int i = 0; i <= g / 2; ++i) {
      Rat c(cdist(rng));
      want.push_back(c);
      p = p + b_basis_element(Var::beta, g, i).scaled(c);
    }
    auto got = b_basis_decompose(p, g);
    REQUIRE(got.has_value());
    CHECK(*got == want);
  }
}

TEST_SUITE_END();
