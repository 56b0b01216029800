#include "bmaps/jack.hpp"

#include <algorithm>
#include <mutex>

namespace bmaps {

JackTable::JackTable(int n) : n_(n) {
  const auto& tables = TransitionTables::get(n);
  std::vector<Partition> order = tables.order; // (n) first
  std::reverse(order.begin(), order.end());    // build smallest-dominance first

  Partition ones(std::vector<int>(static_cast<size_t>(n), 1));
  const Rat nfact(factorial(n));

  for (const Partition& lambda : order) {
    SymFunc jm = SymFunc::unit(Basis::m, lambda);
    SymFunc jp = m_to_p(jm);
    for (const JackEntry& prev : entries_) {
      RatFunc c = hall_scalar(jp, prev.p_form) / prev.norm;
      if (c.is_zero()) continue;
      jm = jm - prev.m_form.scaled_rf(c);
      jp = jp - prev.p_form.scaled_rf(c);
    }
    // C2 normalization: [m_{1^n}] = n!
    RatFunc bottom = jm.at(ones);
    if (bottom.is_zero())
      throw std::logic_error("Jack build: vanishing m_{1^n} coefficient at " +
                             lambda.to_string());
    RatFunc scale = RatFunc(Var::alpha, nfact) / bottom;
    jm = jm.scaled_rf(scale);
    jp = jp.scaled_rf(scale);
    RatFunc norm = hall_scalar(jp, jp);
    if (norm.is_zero())
      throw std::logic_error("Jack build: vanishing norm at " + lambda.to_string());
    index_[lambda] = entries_.size();
    entries_.push_back(JackEntry{lambda, std::move(jm), std::move(jp), std::move(norm)});
  }
}

const JackEntry& JackTable::at(const Partition& lambda) const {
  auto it = index_.find(lambda);
  if (it == index_.end())
    throw std::invalid_argument("JackTable: unknown partition " + lambda.to_string());
  return entries_[it->second];
}

const JackTable& JackTable::get(int n) {
  static std::mutex mu;
  static std::map<int, JackTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, JackTable(n)).first;
  return it->second;
}

RatFunc one_part_norm_formula(int n) {
  Poly acc = Poly::monomial(Var::alpha, n, Rat(factorial(n)));
  for (int k = 1; k < n; ++k)
    acc = acc * Poly(Var::alpha, {Rat(1), Rat(k)});
  return RatFunc(acc, Poly::constant(Var::alpha, 1));
}

SymFunc one_part_jack_formula(int n) {
  SymFunc f;
  f.degree = n;
  f.basis = Basis::p;
  for (const Partition& mu : all_partitions(n)) {
    Rat c = Rat(factorial(n)) / Rat(z_factor(mu));
    f.add_term(mu, RatFunc(Poly::monomial(Var::alpha, n - mu.length(), c),
                           Poly::constant(Var::alpha, 1)));
  }
  return f;
}

RatFunc one_part_evaluation_formula(int n) {
  Poly acc = Poly::constant(Var::alpha, 1);
  for (int k = 1; k < n; ++k)
    acc = acc * Poly(Var::alpha, {Rat(1), Rat(k)});
  return RatFunc(acc, Poly::constant(Var::alpha, 1));
}

std::vector<JackCheckFailure> check_jack_invariants(int n) {
  std::vector<JackCheckFailure> fails;
  const JackTable& jt = JackTable::get(n);
  Partition ones(std::vector<int>(static_cast<size_t>(n), 1));
  const RatFunc nfact(Var::alpha, Rat(factorial(n)));

  for (const JackEntry& e : jt.entries()) {
    if (!(e.m_form.at(ones) == nfact))
      fails.push_back({"C2", e.lambda, e.lambda, "[m_{1^n}] != n!"});
    for (const auto& [mu, c] : e.m_form.coeff) {
      (void)c;
      if (!dominance_leq(mu, e.lambda))
        fails.push_back({"C1", e.lambda, mu, "nonzero coefficient above lambda"});
    }
    // alpha = 1 sanity: the norm specializes to a positive rational
    Rat norm_at_1 = e.norm.num().eval_at(Rat(1)) / e.norm.den().eval_at(Rat(1));
    if (!(norm_at_1 > 0))
      fails.push_back({"norm@alpha=1", e.lambda, e.lambda, "not positive"});
  }
  for (const JackEntry& a : jt.entries())
    for (const JackEntry& b : jt.entries()) {
      if (a.lambda == b.lambda) continue;
      if (!hall_scalar(a.p_form, b.p_form).is_zero())
        fails.push_back({"C3", a.lambda, b.lambda, "nonzero scalar product"});
    }
  return fails;
}

std::vector<JackCheckFailure> check_one_part_formulas(int n) {
  std::vector<JackCheckFailure> fails;
  if (n < 1) return fails;
  const JackTable& jt = JackTable::get(n);
  Partition full(std::vector<int>{n});

  {
    const JackEntry& e = jt.at(full);
    if (!(e.p_form == one_part_jack_formula(n)))
      fails.push_back({"one-part expansion", full, full, "p-expansion mismatch"});
    if (!(e.norm == one_part_norm_formula(n)))
      fails.push_back({"one-part norm", full, full, "norm formula mismatch"});
  }
  for (const JackEntry& e : jt.entries()) {
    OneVariableImage img = specialize_single_variable(e.p_form);
    if (e.lambda.length() <= 1) {
      if (!(img.coeff == one_part_evaluation_formula(n)) || img.t_power != n)
        fails.push_back({"one-variable evaluation", e.lambda, e.lambda,
                         "expected prod (1+k alpha) t^n"});
    } else if (!img.coeff.is_zero()) {
      fails.push_back({"one-variable evaluation", e.lambda, e.lambda,
                       "expected 0 for ell > 1"});
    }
  }
  return fails;
}

} // namespace bmaps
