#include "bmaps/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bmaps {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    parts.push_back(std::stoi(tok));
  }
  return Partition(std::move(parts));
}

int Partition::multiplicity(int v) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
}

std::string Partition::to_string() const {
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {
void gen_parts(int remaining, int max_part, std::vector<int>& acc,
               std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    acc.push_back(k);
    gen_parts(remaining - k, k, acc, out);
    acc.pop_back();
  }
}
} // namespace

std::vector<Partition> all_partitions(int n) {
  if (n < 0) throw std::invalid_argument("all_partitions: n must be >= 0");
  std::vector<Partition> out;
  std::vector<int> acc;
  gen_parts(n, n == 0 ? 1 : n, acc, out);
  return out;
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("dominance_leq: sizes differ");
  const auto& a = lambda.parts();
  const auto& b = mu.parts();
  long sa = 0, sb = 0;
  size_t len = std::max(a.size(), b.size());
  for (size_t j = 0; j < len; ++j) {
    sa += j < a.size() ? a[j] : 0;
    sb += j < b.size() ? b[j] : 0;
    if (sa > sb) return false;
  }
  return true;
}

std::int64_t z_factor(const Partition& lambda) {
  std::int64_t z = 1;
  const auto& p = lambda.parts();
  size_t i = 0;
  while (i < p.size()) {
    size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    std::int64_t m = static_cast<std::int64_t>(j - i);
    for (std::int64_t t = 1; t <= m; ++t) z *= p[i] * t; // i^m * m! interleaved
    i = j;
  }
  return z;
}

Partition union_parts(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

Partition down(const Partition& mu, int i) {
  std::vector<int> parts = mu.parts();
  auto it = std::find(parts.begin(), parts.end(), i);
  if (it == parts.end())
    throw std::invalid_argument("down: no part equal to " + std::to_string(i));
  parts.erase(it);
  if (i > 1) parts.push_back(i - 1);
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

namespace {
// Distribute, value by value, the multiplicity of each distinct part among the
// k slots. Enumerating count vectors (not per-copy assignments) avoids
// duplicate tuples when parts repeat.
struct SplitGen {
  std::vector<std::pair<int, int>> runs; // (value, multiplicity), descending
  std::vector<int> want;                 // target sizes
  std::vector<int> have;                 // current sums
  std::vector<std::vector<int>> acc;     // parts per slot
  std::vector<std::vector<Partition>>* out;

  void run_value(size_t vi) {
    if (vi == runs.size()) {
      std::vector<Partition> tuple;
      tuple.reserve(acc.size());
      for (auto& parts : acc) tuple.push_back(Partition(parts));
      out->push_back(std::move(tuple));
      return;
    }
    distribute(vi, 0, runs[vi].second);
  }

  void distribute(size_t vi, size_t slot, int left) {
    const int v = runs[vi].first;
    if (slot + 1 == have.size()) {
      if (have[slot] + left * v > want[slot]) return;
      place(vi, slot, left);
      return;
    }
    int fit = (want[slot] - have[slot]) / v;
    for (int c = 0; c <= std::min(left, fit); ++c) {
      place_partial(vi, slot, c, left);
    }
  }

  void place_partial(size_t vi, size_t slot, int c, int left) {
    const int v = runs[vi].first;
    have[slot] += c * v;
    for (int t = 0; t < c; ++t) acc[slot].push_back(v);
    distribute(vi, slot + 1, left - c);
    for (int t = 0; t < c; ++t) acc[slot].pop_back();
    have[slot] -= c * v;
  }

  void place(size_t vi, size_t slot, int c) {
    const int v = runs[vi].first;
    have[slot] += c * v;
    for (int t = 0; t < c; ++t) acc[slot].push_back(v);
    run_value(vi + 1);
    for (int t = 0; t < c; ++t) acc[slot].pop_back();
    have[slot] -= c * v;
  }
};
} // namespace

std::vector<std::vector<Partition>> splits(const Partition& mu,
                                           const std::vector<int>& sizes) {
  int total = std::accumulate(sizes.begin(), sizes.end(), 0);
  for (int r : sizes)
    if (r < 0) throw std::invalid_argument("splits: negative target size");
  if (total != mu.size())
    throw std::invalid_argument("splits: sizes do not sum to |mu|");

  std::vector<std::vector<Partition>> out;
  if (sizes.empty()) {
    if (mu.empty()) out.push_back({});
    return out;
  }
  SplitGen g;
  const auto& p = mu.parts();
  size_t i = 0;
  while (i < p.size()) {
    size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    g.runs.push_back({p[i], static_cast<int>(j - i)});
    i = j;
  }
  g.want = sizes;
  g.have.assign(sizes.size(), 0);
  g.acc.assign(sizes.size(), {});
  g.out = &out;
  g.run_value(0);
  return out;
}

} // namespace bmaps
