// Statistics on rooted bipartite maps: the root-deletion trace with its
// edge types (bridge / border / twisted / handle) and kinds (first / second
// relative to a set of orientations), the measures of non-orientability
// eta_O, exhaustive enumeration by edge count, the per-type polynomials
// (H_eta) and their handle-split a-polynomials, and the two sign-reversing
// involutions (sigma_eta on unicellular classes, and the two-handle
// involution built on the unique reconnection).

#pragma once

#include "bmaps/mapcore.hpp"
#include "bmaps/poly.hpp"

#include <functional>
#include <map>
#include <set>

namespace bmaps {

enum class EdgeType : std::uint8_t { Bridge, Border, Twisted, Handle };
enum class Kind : std::uint8_t { First, Second };

std::string edge_type_name(EdgeType t);

// A set of orientations: one face direction per face of every map,
// deterministic per isomorphism class, canonical on orientable maps, root
// face always in the root direction. Canonical picks the direction holding
// the face's minimal canonical flag; Seeded hashes (canonical key, face) with
// the seed instead.
struct OrientationRule {
  enum class Variant : std::uint8_t { Canonical, Seeded };
  Variant variant = Variant::Canonical;
  std::uint64_t seed = 0;

  static OrientationRule canonical() { return {}; }
  static OrientationRule seeded(std::uint64_t s) {
    return {Variant::Seeded, s};
  }
  static OrientationRule parse(const std::string& text);
  std::string to_string() const;
};

// chosen[f] = 1 iff flag f lies on the chosen direction orbit of its face
std::vector<char> orientation_set(const RootedMap& m, const OrientationRule& rule);

EdgeType classify_root_edge(const RootedMap& m);

struct TraceStep {
  int label = 0;       // 1-based deletion label
  Flag edge = -1;      // stable edge id (min flag token) in the original map
  EdgeType type = EdgeType::Bridge;
  Kind kind = Kind::First;
  RootedMap submap;    // M^label, tokens inherited from the original map
};

struct Trace {
  std::vector<TraceStep> steps;
  int handles = 0;   // i(M)
  int twisted = 0;   // j(M)
  int second = 0;    // eta_O(M) when traced with a rule
};

// full root-deletion record; after a bridge the component with the old root
// corner is decomposed first
Trace trace(const RootedMap& m, const OrientationRule& rule);
Trace trace_types(const RootedMap& m); // types only, kinds left First

int eta(const RootedMap& m, const OrientationRule& rule);

// twist operator tau_i by deletion label; label preservation and
// involutivity per the twist proposition
RootedMap twist(const RootedMap& m, int label);

// C(M): the partition of corner ids into faces, comparable across maps with
// the same surviving flag tokens
using CornerPartition = std::set<std::set<std::pair<Flag, Flag>>>;
CornerPartition corner_partition(const RootedMap& m);

// Every rooted bipartite map with n edges exactly once, streamed. Built by
// reversing root-edge deletion, so no dedup is needed; audit with
// canonical keys to convert that argument into a test.
void enumerate_maps(int n, const std::function<void(const RootedMap&)>& emit);
std::vector<RootedMap> all_maps(int n);
std::vector<RootedMap> enumerate_by_type(const MapType& type);

// sigma_eta of the unicellular involution lemma: defined on unicellular maps
// whose trace contains at least one handle; a composition of twists at
// non-bridge labels. Flips the parity of every eta_O, preserves the handle
// count and the type.
RootedMap sigma_eta(const RootedMap& m);

// The unique reconnection of the two-handle lemma: erase e_k and e_j, re-pair
// the four half-edges crosswise so that C((M')^k) = C(M^k). Defined when the
// trace reads two handles i<j, no twisted edges, and some C(M^k) differs from
// C((tau_j M)^k).
RootedMap reconnect_unique(const RootedMap& m);

// The two-handle involution sigma_O with eta_O(sigma(M)) = 2 - eta_O(M) on
// unicellular maps with exactly two handles and no twisted edges.
RootedMap sigma_two_handles(const RootedMap& m, const OrientationRule& rule);

// per-type statistics of all n-edge maps under one rule
struct EtaEntry {
  Poly h_eta{Var::beta};        // sum over maps of beta^eta
  std::map<int, Poly> a_split;  // i -> a_i(beta) = sum beta^{eta + 2i - g}
  long count_all = 0;
  long count_orientable = 0;
  long count_unhandled = 0;     // i(M) = 0
  std::map<int, long> count_by_handles;
};

struct EtaTable {
  int n = 0;
  OrientationRule rule;
  std::map<MapType, EtaEntry> entries;

  struct RefinedKey {
    Partition mu, nu;
    int root_degree = 0;
    bool operator<(const RefinedKey& o) const {
      if (!(mu == o.mu)) return mu < o.mu;
      if (!(nu == o.nu)) return nu < o.nu;
      return root_degree < o.root_degree;
    }
  };
  struct RefinedEntry {
    Poly h{Var::beta};       // summed over all tau, fixed root degree
    long orientable = 0;
  };
  std::map<RefinedKey, RefinedEntry> refined;
};

EtaTable h_eta_table(int n, const OrientationRule& rule);

} // namespace bmaps
