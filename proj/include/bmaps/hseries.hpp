// The Goulden-Jackson coefficients h_{mu,nu}^tau(beta), extracted exactly:
// build Phi = sum_lambda J_lambda(x) J_lambda(y) J_lambda(z) t^|lambda| /
// <J_lambda, J_lambda>, take the formal log, apply alpha t d/dt, read the
// coefficient of p_mu(x) p_nu(y) p_tau(z) t^n, and substitute alpha = beta+1.
// Conversion to a genuine polynomial in beta is the executable form of the
// polynomiality theorem; failure aborts with the offending triple.
//
// The three-alphabet ring is a table keyed by partition triples per degree;
// multiplication is key-union convolution since the p-basis is multiplicative.

#pragma once

#include "bmaps/jack.hpp"

#include <array>

namespace bmaps {

using TripleKey = std::array<Partition, 3>; // (mu, nu, tau)

std::string triple_str(const TripleKey& k);

struct TripleSeries {
  int max_degree = 0;
  // slice[n]: coefficient of t^n, keyed by (mu,nu,tau) all of size n
  std::vector<std::map<TripleKey, RatFunc>> slice;

  static TripleSeries zero(int max_degree);
};

TripleSeries build_phi(int max_degree);

// formal log of a series with constant slice 1 (constant term checked);
// computed by powers of (Phi - 1) truncated at max_degree
TripleSeries log_series(const TripleSeries& phi);

struct HTable {
  int max_degree = 0;
  std::vector<std::map<TripleKey, Poly>> slice; // beta polynomials, n = 1..N

  const Poly& at(int n, const Partition& mu, const Partition& nu,
                 const Partition& tau) const; // zero poly if absent
};

// alpha * n * [t^n] log Phi, then alpha = beta + 1; throws NonPolynomial with
// the offending triple if the polynomiality theorem were violated
HTable extract_h(int max_degree);

struct HCheckFailure {
  TripleKey key;
  std::string detail;
};

// degree bound deg <= 2 + n - ell(mu) - ell(nu) - ell(tau), exact zero when
// the bound is negative, and symmetry in mu <-> nu
std::vector<HCheckFailure> polynomiality_check(const HTable& h, int n);

// sum_tau h(beta) = (1+beta)^{n+1-ell(mu)-ell(nu)} sum_tau h(0), per (mu,nu)
std::vector<HCheckFailure> marginal_sum_check(const HTable& h, int n);

// every entry decomposes as sum a_i beta^{g-2i}(beta+1)^i; entries with
// ell-sum > n+2 are exactly zero
std::vector<HCheckFailure> expansion_check(const HTable& h, int n);

} // namespace bmaps
