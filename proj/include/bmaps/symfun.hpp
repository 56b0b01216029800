// Truncated symmetric-function workspace over Q(alpha): power-sum and
// monomial bases per degree, the base change between them, the
// alpha-deformed Hall scalar product <p_l, p_m> = z_l alpha^{ell(l)} delta,
// and the one-variable specialization p_k -> t^k.
//
// Alphabets are never materialized; a symmetric function is its coefficient
// table, graded by degree, keyed by partitions of that degree.

#pragma once

#include "bmaps/partitions.hpp"
#include "bmaps/poly.hpp"

#include <map>

namespace bmaps {

enum class Basis : std::uint8_t { p, m };

struct SymFunc {
  int degree = 0;
  Basis basis = Basis::p;
  std::map<Partition, RatFunc> coeff; // absent key = zero; stored values nonzero

  static SymFunc unit(Basis b, const Partition& key);

  void add_term(const Partition& key, const RatFunc& c); // drops zeros
  const RatFunc& at(const Partition& key) const;          // zero if absent
  SymFunc scaled_rf(const RatFunc& c) const;
  SymFunc operator+(const SymFunc& o) const;
  SymFunc operator-(const SymFunc& o) const;
  bool operator==(const SymFunc& o) const;
};

// Exact transition matrices between the p- and m-bases in one degree.
// p_to_m entries are the nonnegative integers counting ordered block
// assignments; m_to_p is its exact inverse over Q.
struct TransitionTables {
  int degree = 0;
  std::vector<Partition> order;           // all_partitions(degree) order
  std::map<Partition, int> index;
  std::vector<std::vector<Rat>> p_to_m;   // row: p_lambda expanded in m
  std::vector<std::vector<Rat>> m_to_p;   // inverse

  static const TransitionTables& get(int degree); // built once, cached
};

SymFunc p_to_m(const SymFunc& f);
SymFunc m_to_p(const SymFunc& f);

// bilinear extension of <p_l, p_m>_alpha = z_l alpha^{ell(l)} delta_{l,m}
RatFunc hall_scalar(const SymFunc& f, const SymFunc& g);

// p_lambda * p_mu = p_{lambda u mu}; degrees add
SymFunc p_product(const SymFunc& f, const SymFunc& g);

// p_k -> t^k. For a degree-graded f this is c * t^degree; returns c and the
// power. eval_ones is the t = 1 evaluation (p_k -> 1).
struct OneVariableImage {
  int t_power = 0;
  RatFunc coeff;
};
OneVariableImage specialize_single_variable(const SymFunc& f);
RatFunc eval_ones(const SymFunc& f);

} // namespace bmaps
