#include "bmaps/symfun.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <mutex>

namespace bmaps {

SymFunc SymFunc::unit(Basis b, const Partition& key) {
  SymFunc f;
  f.degree = key.size();
  f.basis = b;
  f.coeff.emplace(key, RatFunc(Var::alpha, Rat(1)));
  return f;
}

void SymFunc::add_term(const Partition& key, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = coeff.find(key);
  if (it == coeff.end()) {
    coeff.emplace(key, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) coeff.erase(it);
}

const RatFunc& SymFunc::at(const Partition& key) const {
  static const RatFunc zero(Var::alpha);
  auto it = coeff.find(key);
  return it == coeff.end() ? zero : it->second;
}

SymFunc SymFunc::scaled_rf(const RatFunc& c) const {
  SymFunc out;
  out.degree = degree;
  out.basis = basis;
  if (c.is_zero()) return out;
  for (const auto& [k, v] : coeff) out.coeff.emplace(k, v * c);
  return out;
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
  if (basis != o.basis || degree != o.degree)
    throw std::invalid_argument("SymFunc addition: degree or basis mismatch");
  SymFunc out = *this;
  for (const auto& [k, v] : o.coeff) out.add_term(k, v);
  return out;
}

SymFunc SymFunc::operator-(const SymFunc& o) const {
  return *this + o.scaled_rf(RatFunc(Var::alpha, Rat(-1)));
}

bool SymFunc::operator==(const SymFunc& o) const {
  return basis == o.basis && degree == o.degree && coeff == o.coeff;
}

namespace {

// [m_mu] p_lambda = #{ordered tuples of disjoint blocks covering the parts of
// lambda with block sums mu_1, mu_2, ...}. Enumerate unordered set partitions
// of the part list once; each contributes prod_s m_s(mu)! ordered tuples.
void set_partitions(const std::vector<int>& items, size_t i,
                    std::vector<std::vector<int>>& blocks,
                    const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  if (i == items.size()) {
    emit(blocks);
    return;
  }
  for (size_t b = 0; b < blocks.size(); ++b) {
    blocks[b].push_back(items[i]);
    set_partitions(items, i + 1, blocks, emit);
    blocks[b].pop_back();
  }
  blocks.push_back({items[i]});
  set_partitions(items, i + 1, blocks, emit);
  blocks.pop_back();
}

std::vector<std::vector<Rat>> invert(const std::vector<std::vector<Rat>>& a) {
  const size_t n = a.size();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  for (size_t col = 0; col < n; ++col) {
    size_t pr = col;
    while (pr < n && m[pr][col] == 0) ++pr;
    if (pr == n) throw std::logic_error("transition matrix is singular");
    std::swap(m[col], m[pr]);
    Rat inv = Rat(1) / m[col][col];
    for (size_t c = 0; c < 2 * n; ++c) m[col][c] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (size_t c = 0; c < 2 * n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::vector<std::vector<Rat>> out(n, std::vector<Rat>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out[i][j] = m[i][n + j];
  return out;
}

TransitionTables build_tables(int n) {
  TransitionTables t;
  t.degree = n;
  t.order = all_partitions(n);
  for (size_t i = 0; i < t.order.size(); ++i) t.index[t.order[i]] = static_cast<int>(i);
  const size_t np = t.order.size();
  t.p_to_m.assign(np, std::vector<Rat>(np, Rat(0)));

  for (size_t li = 0; li < np; ++li) {
    const auto& parts = t.order[li].parts();
    std::vector<std::vector<int>> blocks;
    set_partitions(parts, 0, blocks,
                   [&](const std::vector<std::vector<int>>& bs) {
                     std::vector<int> sums;
                     sums.reserve(bs.size());
                     for (const auto& b : bs) {
                       int s = 0;
                       for (int v : b) s += v;
                       sums.push_back(s);
                     }
                     std::sort(sums.begin(), sums.end(), std::greater<int>());
                     Partition mu(sums);
                     Rat orderings(1);
                     int i = 0;
                     while (i < mu.length()) {
                       int j = i;
                       while (j < mu.length() && mu.part(j) == mu.part(i)) ++j;
                       for (int f = 2; f <= j - i; ++f) orderings *= f;
                       i = j;
                     }
                     t.p_to_m[li][static_cast<size_t>(t.index.at(mu))] += orderings;
                   });
  }
  t.m_to_p = invert(t.p_to_m);
  return t;
}

} // namespace

const TransitionTables& TransitionTables::get(int degree) {
  static std::mutex mu;
  static std::map<int, TransitionTables> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(degree);
  if (it == cache.end()) it = cache.emplace(degree, build_tables(degree)).first;
  return it->second;
}

namespace {
SymFunc change_basis(const SymFunc& f, Basis to,
                     const std::vector<std::vector<Rat>>& matrix) {
  const auto& t = TransitionTables::get(f.degree);
  SymFunc out;
  out.degree = f.degree;
  out.basis = to;
  for (const auto& [key, c] : f.coeff) {
    const auto row = static_cast<size_t>(t.index.at(key));
    for (size_t j = 0; j < t.order.size(); ++j) {
      if (matrix[row][j] == 0) continue;
      out.add_term(t.order[j], c.scaled(matrix[row][j]));
    }
  }
  return out;
}
} // namespace

SymFunc p_to_m(const SymFunc& f) {
  if (f.basis != Basis::p) throw std::invalid_argument("p_to_m: not in p-basis");
  return change_basis(f, Basis::m, TransitionTables::get(f.degree).p_to_m);
}

SymFunc m_to_p(const SymFunc& f) {
  if (f.basis != Basis::m) throw std::invalid_argument("m_to_p: not in m-basis");
  return change_basis(f, Basis::p, TransitionTables::get(f.degree).m_to_p);
}

RatFunc hall_scalar(const SymFunc& f, const SymFunc& g) {
  if (f.degree != g.degree)
    throw std::invalid_argument("hall_scalar: degree mismatch");
  const SymFunc* fp = &f;
  const SymFunc* gp = &g;
  SymFunc fc, gc;
  if (f.basis != Basis::p) { fc = m_to_p(f); fp = &fc; }
  if (g.basis != Basis::p) { gc = m_to_p(g); gp = &gc; }
  RatFunc acc(Var::alpha);
  for (const auto& [key, cf] : fp->coeff) {
    const RatFunc& cg = gp->at(key);
    if (cg.is_zero()) continue;
    RatFunc w(Poly::monomial(Var::alpha, key.length(), Rat(z_factor(key))),
              Poly::constant(Var::alpha, 1));
    acc = acc + cf * cg * w;
  }
  return acc;
}

SymFunc p_product(const SymFunc& f, const SymFunc& g) {
  if (f.basis != Basis::p || g.basis != Basis::p)
    throw std::invalid_argument("p_product: both factors must be in p-basis");
  SymFunc out;
  out.degree = f.degree + g.degree;
  out.basis = Basis::p;
  for (const auto& [kf, cf] : f.coeff)
    for (const auto& [kg, cg] : g.coeff)
      out.add_term(union_parts(kf, kg), cf * cg);
  return out;
}

OneVariableImage specialize_single_variable(const SymFunc& f) {
  if (f.basis != Basis::p)
    throw std::invalid_argument("specialize_single_variable: p-basis required");
  OneVariableImage img;
  img.t_power = f.degree;
  img.coeff = RatFunc(Var::alpha);
  for (const auto& [key, c] : f.coeff) {
    (void)key;
    img.coeff = img.coeff + c;
  }
  return img;
}

RatFunc eval_ones(const SymFunc& f) { return specialize_single_variable(f).coeff; }

} // namespace bmaps
