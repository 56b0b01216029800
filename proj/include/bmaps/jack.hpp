// Jack symmetric functions J_lambda^(alpha), built exactly from their
// defining conditions:
//   (C1) J_lambda = sum_{mu <= lambda} a_mu m_mu   (dominance triangular)
//   (C2) [m_{1^n}] J_lambda = n!
//   (C3) <J_lambda, J_mu>_alpha = 0 for lambda != mu
// Construction is Gram-Schmidt on the monomial basis along a fixed linear
// extension of dominance (reverse-lex, smallest first). The closed forms for
// one-part shapes are kept as independent cross-checks, never used to build.

#pragma once

#include "bmaps/symfun.hpp"

namespace bmaps {

struct JackEntry {
  Partition lambda;
  SymFunc m_form; // authoritative for C1/C2 checks
  SymFunc p_form; // authoritative for scalar products
  RatFunc norm;   // <J,J>_alpha
};

class JackTable {
public:
  explicit JackTable(int n);

  int degree() const { return n_; }
  const std::vector<JackEntry>& entries() const { return entries_; }
  const JackEntry& at(const Partition& lambda) const;
  const RatFunc& norm(const Partition& lambda) const { return at(lambda).norm; }

  // built once per degree, then shared read-only
  static const JackTable& get(int n);

private:
  int n_ = 0;
  std::vector<JackEntry> entries_;
  std::map<Partition, size_t> index_;
};

// <J_(n), J_(n)> = (1+alpha)(1+2alpha)...(1+(n-1)alpha) alpha^n n!
RatFunc one_part_norm_formula(int n);

// J_(n) = sum_{mu |- n} n! alpha^{n - ell(mu)} / z_mu * p_mu
SymFunc one_part_jack_formula(int n);

// prod_{k<n} (1 + k alpha), the one-variable evaluation coefficient for (n)
RatFunc one_part_evaluation_formula(int n);

struct JackCheckFailure {
  std::string check;
  Partition lambda, mu;
  std::string detail;
};

// C1-C3 plus the three closed-form identities for degree n; empty = all pass
std::vector<JackCheckFailure> check_jack_invariants(int n);
std::vector<JackCheckFailure> check_one_part_formulas(int n);

} // namespace bmaps
