// Rooted bipartite maps on arbitrary surfaces, orientable or not, encoded by
// three fixed-point-free involutions on quarter-edge flags:
//
//   cross(f)       other end of f's edge, same ribbon side
//   side(f)        same end, other ribbon side
//   corner_next(f) same vertex and face, adjacent edge; its 2-orbits are the
//                  corners
//
// cross and side commute, and cross*side is again a fixed-point-free
// involution; 4 flags per edge. Vertices are <side, corner_next> orbits,
// faces are <cross, corner_next> orbits; a face of degree d carries 2d flags.
//
// Rooting and direction conventions (fixed here, used by every operation):
//   * the root is a flag on the root edge at the root vertex; the root corner
//     is {root, corner_next(root)};
//   * the root-face walk in the root direction crosses the root edge first:
//     its arrival sequence is cross(root), phi(cross(root)), ... where
//     phi(u) = cross(corner_next(u)). The first corner visited after the root
//     corner is the corner entered at cross(root). A face direction is one of
//     the two phi-orbits on its flags (they are always exactly two).
//   * deleting the root edge re-roots the surviving component(s) at
//     corner_next(side(root)) and, for the far component of a bridge, at
//     corner_next(side(cross(root))) — both inherit the walk direction.
//
// Flag tokens are stable: deleting or re-gluing an edge never renumbers the
// flags of other edges, so corners can be identified across sibling maps.
// Vertex colors are stored per flag; the far component of a bridge deletion
// is recolored so its root vertex is black again.

#pragma once

#include "bmaps/partitions.hpp"

#include <cstdint>

namespace bmaps {

using Flag = std::int32_t;

struct MapType {
  Partition mu, nu, tau; // black degrees, white degrees, face degrees / 2
  bool operator==(const MapType& o) const {
    return mu == o.mu && nu == o.nu && tau == o.tau;
  }
  bool operator<(const MapType& o) const {
    if (!(mu == o.mu)) return mu < o.mu;
    if (!(nu == o.nu)) return nu < o.nu;
    return tau < o.tau;
  }
  std::string to_string() const {
    return mu.to_string() + ":" + nu.to_string() + ":" + tau.to_string();
  }
};

class RootedMap {
public:
  RootedMap() = default; // the edgeless map: a lone (black) vertex

  static RootedMap empty_map() { return RootedMap(); }
  static RootedMap single_edge();

  bool is_empty() const { return root_ < 0; }
  int edge_count() const { return edges_; }
  Flag root() const { return root_; }
  Flag cross(Flag f) const { return cross_.at(static_cast<size_t>(f)); }
  Flag side(Flag f) const { return side_.at(static_cast<size_t>(f)); }
  Flag corner_next(Flag f) const { return corner_.at(static_cast<size_t>(f)); }
  bool present(Flag f) const {
    return f >= 0 && f < capacity() && cross_[static_cast<size_t>(f)] >= 0;
  }
  bool white(Flag f) const { return color_.at(static_cast<size_t>(f)) != 0; }
  Flag capacity() const { return static_cast<Flag>(cross_.size()); }
  std::vector<Flag> flags() const;

  // phi, the face-walk successor: corner_next then cross
  Flag walk_next(Flag f) const { return cross(corner_next(f)); }
  // min token among the 4 flags of f's edge; the stable edge identity
  Flag edge_id(Flag f) const;

  std::vector<std::vector<Flag>> faces() const;    // <cross, corner_next> orbits
  std::vector<std::vector<Flag>> vertices() const; // <side, corner_next> orbits
  int face_count() const;    // 1 for the edgeless map
  int vertex_count() const;  // 1 for the edgeless map
  MapType map_type() const;
  int genus2x() const; // 2 - v - f + e, twice the genus; odd only if non-orientable
  bool is_orientable() const;
  int root_vertex_degree() const;

  struct Deleted;
  Deleted delete_root_edge() const;

  // New edge from the root corner to the white-incident corner of flag c; the
  // two twist bits are the two gluings. Deleting the result's root edge gives
  // back exactly this map.
  RootedMap insert_nonbridge_edge(Flag c, bool twist_bit) const;

  // Re-glue one edge the unique other way (swap its cross pairing).
  RootedMap with_edge_twisted(Flag on_edge) const;
  RootedMap with_edges_twisted(const std::vector<Flag>& edge_flags) const;

  // Re-pair cross on two edges: {a-half, b-half} as given. Used by the
  // two-handle reconnection. Pairs are (flag, flag) with their side-partners
  // paired alongside.
  RootedMap with_cross_pairs(const std::vector<std::pair<Flag, Flag>>& pairs) const;

  // Recompute vertex colors from the root (root black, cross alternates).
  // Returns false if the structure is disconnected or not 2-colorable; the
  // map is left recolored only on success.
  bool recolor_from_root();

  std::vector<Flag> canonical_order() const;   // BFS from the root
  std::vector<std::int32_t> canonical_key() const;
  RootedMap canonical_form() const;            // relabeled to BFS numbering
  std::uint64_t canonical_hash() const;

  void validate() const; // throws std::logic_error on a broken invariant

  bool operator==(const RootedMap& o) const {
    return canonical_key() == o.canonical_key();
  }

private:
  friend RootedMap insert_bridge(const RootedMap& m1, const RootedMap& m2);

  void flip_colors();
  std::vector<Flag> component_of(Flag start) const;
  RootedMap restricted_to(const std::vector<Flag>& comp, Flag new_root) const;
  Flag alloc4(); // grow by 4 slots, returns the first new token

  std::vector<Flag> cross_, side_, corner_; // -1 = absent slot
  std::vector<std::uint8_t> color_;         // 0 black, 1 white (per flag's vertex)
  Flag root_ = -1;
  int edges_ = 0;
};

struct RootedMap::Deleted {
  bool bridge = false;
  RootedMap one; // non-bridge result, or component with the old root corner
  RootedMap two; // far component (root recolored black), bridge only
};

// The unique map whose root-edge deletion yields (m1, m2) with the standard
// re-rooting; m2's colors are flipped (its root becomes the white end).
RootedMap insert_bridge(const RootedMap& m1, const RootedMap& m2);

} // namespace bmaps
