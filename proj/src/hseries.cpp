#include "bmaps/hseries.hpp"

namespace bmaps {

std::string triple_str(const TripleKey& k) {
  return "(" + k[0].to_string() + " | " + k[1].to_string() + " | " +
         k[2].to_string() + ")";
}

TripleSeries TripleSeries::zero(int max_degree) {
  TripleSeries s;
  s.max_degree = max_degree;
  s.slice.resize(static_cast<size_t>(max_degree) + 1);
  return s;
}

namespace {

void add_into(std::map<TripleKey, RatFunc>& slice, const TripleKey& key,
              const RatFunc& v) {
  if (v.is_zero()) return;
  auto it = slice.find(key);
  if (it == slice.end()) {
    slice.emplace(key, v);
    return;
  }
  it->second = it->second + v;
  if (it->second.is_zero()) slice.erase(it);
}

// degree-graded product of two series with no constant term
TripleSeries mul_truncated(const TripleSeries& a, const TripleSeries& b) {
  TripleSeries out = TripleSeries::zero(a.max_degree);
  for (int da = 1; da <= a.max_degree; ++da) {
    if (a.slice[static_cast<size_t>(da)].empty()) continue;
    for (int db = 1; da + db <= a.max_degree; ++db) {
      const auto& sb = b.slice[static_cast<size_t>(db)];
      if (sb.empty()) continue;
      auto& target = out.slice[static_cast<size_t>(da + db)];
      for (const auto& [ka, va] : a.slice[static_cast<size_t>(da)])
        for (const auto& [kb, vb] : sb) {
          TripleKey k{union_parts(ka[0], kb[0]), union_parts(ka[1], kb[1]),
                      union_parts(ka[2], kb[2])};
          add_into(target, k, va * vb);
        }
    }
  }
  return out;
}

} // namespace

TripleSeries build_phi(int max_degree) {
  TripleSeries phi = TripleSeries::zero(max_degree);
  TripleKey empty_key{Partition(), Partition(), Partition()};
  phi.slice[0].emplace(empty_key, RatFunc(Var::alpha, Rat(1)));
  for (int n = 1; n <= max_degree; ++n) {
    auto& target = phi.slice[static_cast<size_t>(n)];
    for (const JackEntry& e : JackTable::get(n).entries()) {
      RatFunc inv_norm = RatFunc(Var::alpha, Rat(1)) / e.norm;
      for (const auto& [mu, cx] : e.p_form.coeff)
        for (const auto& [nu, cy] : e.p_form.coeff) {
          RatFunc cxy = cx * cy * inv_norm;
          for (const auto& [tau, cz] : e.p_form.coeff)
            add_into(target, TripleKey{mu, nu, tau}, cxy * cz);
        }
    }
  }
  return phi;
}

TripleSeries log_series(const TripleSeries& phi) {
  TripleKey empty_key{Partition(), Partition(), Partition()};
  auto c0 = phi.slice.at(0);
  if (c0.size() != 1 ||
      !(c0.begin()->first == empty_key) ||
      !(c0.begin()->second == RatFunc(Var::alpha, Rat(1))))
    throw std::invalid_argument("log_series: constant term must be 1");

  TripleSeries u = phi; // Phi - 1
  u.slice[0].clear();
  TripleSeries acc = u;
  TripleSeries power = u;
  for (int k = 2; k <= phi.max_degree; ++k) {
    power = mul_truncated(power, u);
    Rat c = Rat(k % 2 == 1 ? 1 : -1, k);
    for (int n = 1; n <= phi.max_degree; ++n)
      for (const auto& [key, v] : power.slice[static_cast<size_t>(n)])
        add_into(acc.slice[static_cast<size_t>(n)], key, v.scaled(c));
  }
  return acc;
}

const Poly& HTable::at(int n, const Partition& mu, const Partition& nu,
                       const Partition& tau) const {
  static const Poly zero(Var::beta);
  if (n < 1 || n > max_degree) return zero;
  const auto& s = slice[static_cast<size_t>(n)];
  auto it = s.find(TripleKey{mu, nu, tau});
  return it == s.end() ? zero : it->second;
}

HTable extract_h(int max_degree) {
  TripleSeries lg = log_series(build_phi(max_degree));
  HTable h;
  h.max_degree = max_degree;
  h.slice.resize(static_cast<size_t>(max_degree) + 1);
  for (int n = 1; n <= max_degree; ++n) {
    for (const auto& [key, v] : lg.slice[static_cast<size_t>(n)]) {
      // alpha * t d/dt multiplies the t^n slice by alpha * n
      RatFunc psi = v * RatFunc(Poly::monomial(Var::alpha, 1, Rat(n)),
                                Poly::constant(Var::alpha, 1));
      RatFunc in_beta = psi.alpha_to_beta();
      Poly p(Var::beta);
      try {
        p = as_polynomial(in_beta);
      } catch (const NonPolynomial&) {
        throw NonPolynomial("polynomiality violated at n=" + std::to_string(n) +
                            " " + triple_str(key) + ": " + in_beta.to_string());
      }
      if (!p.is_zero()) h.slice[static_cast<size_t>(n)].emplace(key, p);
    }
  }
  return h;
}

std::vector<HCheckFailure> polynomiality_check(const HTable& h, int n) {
  std::vector<HCheckFailure> fails;
  const auto parts = all_partitions(n);
  for (const Partition& mu : parts)
    for (const Partition& nu : parts)
      for (const Partition& tau : parts) {
        const Poly& p = h.at(n, mu, nu, tau);
        int bound = 2 + n - mu.length() - nu.length() - tau.length();
        if (bound < 0 && !p.is_zero())
          fails.push_back({TripleKey{mu, nu, tau},
                           "expected zero (negative degree bound)"});
        if (bound >= 0 && p.degree() > bound)
          fails.push_back({TripleKey{mu, nu, tau}, "degree bound exceeded"});
        if (!(p == h.at(n, nu, mu, tau)))
          fails.push_back({TripleKey{mu, nu, tau}, "mu<->nu symmetry broken"});
      }
  return fails;
}

std::vector<HCheckFailure> marginal_sum_check(const HTable& h, int n) {
  std::vector<HCheckFailure> fails;
  const auto parts = all_partitions(n);
  for (const Partition& mu : parts)
    for (const Partition& nu : parts) {
      Poly total(Var::beta);
      Rat at_zero(0);
      for (const Partition& tau : parts) {
        const Poly& p = h.at(n, mu, nu, tau);
        total = total + p;
        at_zero += p.eval_at(Rat(0));
      }
      int e = n + 1 - mu.length() - nu.length();
      Poly expected = Poly::constant(Var::beta, at_zero);
      Poly xp1(Var::beta, {Rat(1), Rat(1)});
      for (int i = 0; i < e; ++i) expected = expected * xp1;
      if (!(total == expected))
        fails.push_back({TripleKey{mu, nu, Partition()},
                         "marginal sum != (1+beta)^" + std::to_string(e) +
                             " * sum at beta=0"});
    }
  return fails;
}

std::vector<HCheckFailure> expansion_check(const HTable& h, int n) {
  std::vector<HCheckFailure> fails;
  const auto parts = all_partitions(n);
  for (const Partition& mu : parts)
    for (const Partition& nu : parts)
      for (const Partition& tau : parts) {
        const Poly& p = h.at(n, mu, nu, tau);
        int g = 2 + n - mu.length() - nu.length() - tau.length();
        if (g < 0) {
          if (!p.is_zero())
            fails.push_back({TripleKey{mu, nu, tau}, "expected exact zero"});
          continue;
        }
        if (p.degree() > g) {
          fails.push_back({TripleKey{mu, nu, tau}, "degree exceeds g"});
          continue;
        }
        auto a = b_basis_decompose(p, g);
        if (!a) {
          fails.push_back({TripleKey{mu, nu, tau}, "not in the b-basis span"});
          continue;
        }
        Poly rebuilt(Var::beta);
        for (size_t i = 0; i < a->size(); ++i)
          rebuilt = rebuilt +
                    b_basis_element(Var::beta, g, static_cast<int>(i)).scaled((*a)[i]);
        if (!(rebuilt == p))
          fails.push_back({TripleKey{mu, nu, tau}, "b-basis reconstruction failed"});
      }
  return fails;
}

} // namespace bmaps
