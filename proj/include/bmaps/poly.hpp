// Dense univariate polynomials and normalized rational functions over Q.
// Each polynomial carries a tag naming the indeterminate's role (alpha before
// the beta = alpha - 1 shift, beta after). Tags are data: mixing tags in an
// arithmetic operation is a hard error, never a coercion.

#pragma once

#include "bmaps/rational.hpp"

#include <optional>
#include <vector>

namespace bmaps {

enum class Var : std::uint8_t { alpha, beta };

std::string var_name(Var v);

class Poly {
public:
  Poly() = default;
  explicit Poly(Var var) : var_(var) {}
  Poly(Var var, std::vector<Rat> coeffs);

  static Poly constant(Var var, const Rat& c);
  static Poly monomial(Var var, int power, const Rat& c = 1);

  Var var() const { return var_; }
  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  // coefficient of x^i (0 beyond the stored range)
  const Rat& coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& leading() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const Rat& c) const;
  bool operator==(const Poly& o) const { return var_ == o.var_ && c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Rat eval_at(const Rat& q) const;

  // substitute x -> x + 1 and retag; realizes alpha = beta + 1
  Poly shifted_retag(Var to) const;

  std::string to_string() const;

private:
  void trim();
  static void check_same(const Poly& a, const Poly& b);

  Var var_ = Var::alpha;
  std::vector<Rat> c_; // c_[i] = coefficient of x^i; no trailing zeros
};

Poly poly_divmod(const Poly& a, const Poly& b, Poly* rem);
// monic gcd over Q (content-stripped); gcd(0,0) = 0
Poly poly_gcd(Poly a, Poly b);

// Rational function num/den, always normalized: coprime, den monic and
// nonzero; the zero function is 0/1. Equality is plain field equality.
class RatFunc {
public:
  RatFunc() : num_(Var::alpha), den_(Poly::constant(Var::alpha, 1)) {}
  explicit RatFunc(Var var)
      : num_(var), den_(Poly::constant(var, 1)) {}
  RatFunc(Poly num, Poly den);
  RatFunc(Var var, const Rat& c); // constant

  static RatFunc variable(Var var) {
    return RatFunc(Poly::monomial(var, 1), Poly::constant(var, 1));
  }

  Var var() const { return num_.var(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc scaled(const Rat& c) const;
  bool operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  // alpha -> beta + 1 on numerator and denominator
  RatFunc alpha_to_beta() const;

  std::string to_string() const;

private:
  void normalize();
  Poly num_, den_;
};

// Signals a value the polynomiality theorem says cannot happen: a coefficient
// that is not a polynomial after normalization.
struct NonPolynomial : std::runtime_error {
  explicit NonPolynomial(const std::string& what) : std::runtime_error(what) {}
};

// numerator if the denominator is 1, otherwise throws NonPolynomial
Poly as_polynomial(const RatFunc& f);

// Coefficients (a_0,...,a_{g/2}) with p = sum_i a_i x^{g-2i} (x+1)^i, solved
// exactly; empty when p is not in the span (the system is overdetermined for
// g >= 2, so this is a real check). Requires deg(p) <= g.
std::optional<std::vector<Rat>> b_basis_decompose(const Poly& p, int g);

// x^{g-2i} (x+1)^i in the given variable
Poly b_basis_element(Var var, int g, int i);

} // namespace bmaps
