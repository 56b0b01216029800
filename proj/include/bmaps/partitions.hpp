// Integer partitions: the index set for everything else in this project.
// A partition is a weakly decreasing sequence of positive ints; the empty
// partition is a valid value. Values are immutable and usable as map keys.

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bmaps {

class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  static Partition parse(const std::string& text); // "3,2,1"; "" = empty

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }            // |lambda|
  int length() const { return static_cast<int>(parts_.size()); } // ell(lambda)
  bool empty() const { return parts_.empty(); }
  int part(int i) const { return parts_.at(static_cast<size_t>(i)); }

  // number of parts equal to v
  int multiplicity(int v) const;

  std::string to_string() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  // lexicographic on the part vectors; a total order for containers
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
  std::vector<int> parts_;
  int size_ = 0;
};

// All partitions of n in reverse-lexicographic order, (n) first, (1^n) last.
// This is a linear extension of the dominance order (larger first).
std::vector<Partition> all_partitions(int n);

// lambda <= mu in dominance order. Requires |lambda| == |mu|.
bool dominance_leq(const Partition& lambda, const Partition& mu);

// z_lambda = prod_i i^{m_i} m_i!  (number of permutations commuting with a
// fixed permutation of cycle type lambda).
std::int64_t z_factor(const Partition& lambda);

// multiset union of parts
Partition union_parts(const Partition& a, const Partition& b);

// (mu \ (i)) u (i-1); for i = 1 the part just disappears.
// Throws if mu has no part equal to i.
Partition down(const Partition& mu, int i);

// All tuples (mu^1,...,mu^k), |mu^j| = sizes[j], whose union is mu.
// Each tuple exactly once. Throws if sum(sizes) != |mu|.
std::vector<std::vector<Partition>> splits(const Partition& mu,
                                           const std::vector<int>& sizes);

struct PartitionHash {
  size_t operator()(const Partition& p) const {
    size_t h = 1469598103934665603ull;
    for (int v : p.parts()) {
      h ^= static_cast<size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

} // namespace bmaps
