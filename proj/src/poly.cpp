#include "bmaps/poly.hpp"

#include <cassert>
#include <sstream>

namespace bmaps {

std::string var_name(Var v) { return v == Var::alpha ? "alpha" : "beta"; }

Poly::Poly(Var var, std::vector<Rat> coeffs) : var_(var), c_(std::move(coeffs)) {
  trim();
}

Poly Poly::constant(Var var, const Rat& c) {
  Poly p(var);
  if (c != 0) p.c_ = {c};
  return p;
}

Poly Poly::monomial(Var var, int power, const Rat& c) {
  Poly p(var);
  if (c != 0) {
    p.c_.assign(static_cast<size_t>(power) + 1, Rat(0));
    p.c_.back() = c;
  }
  return p;
}

const Rat& Poly::coeff(int i) const {
  static const Rat zero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[static_cast<size_t>(i)];
}

const Rat& Poly::leading() const {
  static const Rat zero(0);
  return c_.empty() ? zero : c_.back();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_same(const Poly& a, const Poly& b) {
  if (a.var_ != b.var_)
    throw std::invalid_argument("indeterminate tag mismatch: " +
                                var_name(a.var_) + " vs " + var_name(b.var_));
}

Poly Poly::operator+(const Poly& o) const {
  check_same(*this, o);
  Poly r(var_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly r(var_);
  r.c_.reserve(c_.size());
  for (const Rat& v : c_) r.c_.push_back(-v);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_same(*this, o);
  if (is_zero() || o.is_zero()) return Poly(var_);
  Poly r(var_);
  r.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  r.trim();
  return r;
}

Poly Poly::scaled(const Rat& c) const {
  if (c == 0) return Poly(var_);
  Poly r(var_);
  r.c_.reserve(c_.size());
  for (const Rat& v : c_) r.c_.push_back(v * c);
  return r;
}

Rat Poly::eval_at(const Rat& q) const {
  Rat acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * q + c_[i];
  return acc;
}

Poly Poly::shifted_retag(Var to) const {
  // Horner in (x + 1)
  Poly r(to);
  Poly xp1(to, {Rat(1), Rat(1)});
  for (size_t i = c_.size(); i-- > 0;)
    r = r * xp1 + Poly::constant(to, c_[i]);
  return r;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << rat_str(c_[i]);
    if (i >= 1) os << "*" << var_name(var_);
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

Poly poly_divmod(const Poly& a, const Poly& b, Poly* rem) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  Poly q(a.var());
  std::vector<Rat> r(a.coeffs());
  const int db = b.degree();
  std::vector<Rat> qc;
  if (static_cast<int>(r.size()) - 1 >= db)
    qc.assign(r.size() - static_cast<size_t>(db), Rat(0));
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    if (r[static_cast<size_t>(i)] == 0) continue;
    Rat f = r[static_cast<size_t>(i)] / b.leading();
    qc[static_cast<size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j)
      r[static_cast<size_t>(i - db + j)] -= f * b.coeff(j);
  }
  if (rem) *rem = Poly(a.var(), std::move(r));
  return Poly(a.var(), std::move(qc));
}

Poly poly_gcd(Poly a, Poly b) {
  // Euclid with monic remainders; degrees stay small here.
  while (!b.is_zero()) {
    Poly r(a.var());
    poly_divmod(a, b, &r);
    a = std::move(b);
    b = std::move(r);
    if (!b.is_zero()) b = b.scaled(Rat(1) / b.leading());
  }
  if (!a.is_zero()) a = a.scaled(Rat(1) / a.leading());
  return a;
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.var() != den_.var())
    throw std::invalid_argument("rational function with mixed tags");
  normalize();
}

RatFunc::RatFunc(Var var, const Rat& c)
    : num_(Poly::constant(var, c)), den_(Poly::constant(var, 1)) {}

void RatFunc::normalize() {
  if (den_.is_zero())
    throw std::invalid_argument("division by the zero rational function");
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.var(), 1);
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = poly_divmod(num_, g, nullptr);
    den_ = poly_divmod(den_, g, nullptr);
  }
  Rat lead = den_.leading();
  if (lead != 1) {
    Rat inv = Rat(1) / lead;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero())
    throw std::invalid_argument("division by the zero rational function");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::scaled(const Rat& c) const {
  return RatFunc(num_.scaled(c), den_);
}

RatFunc RatFunc::alpha_to_beta() const {
  return RatFunc(num_.shifted_retag(Var::beta), den_.shifted_retag(Var::beta));
}

std::string RatFunc::to_string() const {
  if (den_ == Poly::constant(var(), 1)) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

Poly as_polynomial(const RatFunc& f) {
  if (f.den() != Poly::constant(f.var(), 1))
    throw NonPolynomial("not a polynomial: " + f.to_string());
  return f.num();
}

Poly b_basis_element(Var var, int g, int i) {
  Poly p = Poly::monomial(var, g - 2 * i);
  Poly xp1(var, {Rat(1), Rat(1)});
  for (int k = 0; k < i; ++k) p = p * xp1;
  return p;
}

std::optional<std::vector<Rat>> b_basis_decompose(const Poly& p, int g) {
  if (g < 0) throw std::invalid_argument("b_basis_decompose: g must be >= 0");
  if (p.degree() > g)
    throw std::invalid_argument("b_basis_decompose: deg(p) exceeds g");
  const int k = g / 2 + 1; // unknowns a_0..a_{g/2}
  // rows: coefficient of x^r for r = 0..g; columns: basis elements
  std::vector<std::vector<Rat>> m(static_cast<size_t>(g + 1),
                                  std::vector<Rat>(static_cast<size_t>(k + 1), Rat(0)));
  for (int i = 0; i < k; ++i) {
    Poly b = b_basis_element(p.var(), g, i);
    for (int r = 0; r <= g; ++r) m[static_cast<size_t>(r)][static_cast<size_t>(i)] = b.coeff(r);
  }
  for (int r = 0; r <= g; ++r) m[static_cast<size_t>(r)][static_cast<size_t>(k)] = p.coeff(r);

  // Gaussian elimination on the augmented system
  int row = 0;
  std::vector<int> pivot_of_col(static_cast<size_t>(k), -1);
  for (int col = 0; col < k && row <= g; ++col) {
    int pr = -1;
    for (int r = row; r <= g; ++r)
      if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { pr = r; break; }
    if (pr < 0) continue;
    std::swap(m[static_cast<size_t>(row)], m[static_cast<size_t>(pr)]);
    Rat inv = Rat(1) / m[static_cast<size_t>(row)][static_cast<size_t>(col)];
    for (int c = col; c <= k; ++c) m[static_cast<size_t>(row)][static_cast<size_t>(c)] *= inv;
    for (int r = 0; r <= g; ++r) {
      if (r == row) continue;
      Rat f = m[static_cast<size_t>(r)][static_cast<size_t>(col)];
      if (f == 0) continue;
      for (int c = col; c <= k; ++c)
        m[static_cast<size_t>(r)][static_cast<size_t>(c)] -= f * m[static_cast<size_t>(row)][static_cast<size_t>(c)];
    }
    pivot_of_col[static_cast<size_t>(col)] = row;
    ++row;
  }
  // inconsistent row: 0 = nonzero
  for (int r = row; r <= g; ++r)
    if (m[static_cast<size_t>(r)][static_cast<size_t>(k)] != 0) return std::nullopt;

  std::vector<Rat> a(static_cast<size_t>(k), Rat(0));
  for (int col = 0; col < k; ++col)
    if (pivot_of_col[static_cast<size_t>(col)] >= 0)
      a[static_cast<size_t>(col)] =
          m[static_cast<size_t>(pivot_of_col[static_cast<size_t>(col)])][static_cast<size_t>(k)];
  return a;
}

} // namespace bmaps
