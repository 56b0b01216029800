#include "bmaps/mapcore.hpp"
#include "bmaps/mapstats.hpp"

#include <doctest.h>

#include <set>

using namespace bmaps;

namespace {

// reconstructions of M from delete_root_edge(M), used for the round trips
std::vector<RootedMap> reinsertions(const RootedMap::Deleted& d) {
  std::vector<RootedMap> out;
  if (d.bridge) {
    out.push_back(insert_bridge(d.one, d.two));
    return out;
  }
  const RootedMap& m = d.one;
  // the white-end corner that was split is unknown here; try every corner
  for (Flag c : m.flags()) {
    if (!m.white(c)) continue;
    out.push_back(m.insert_nonbridge_edge(c, false));
    out.push_back(m.insert_nonbridge_edge(c, true));
  }
  return out;
}

} // namespace

TEST_SUITE_BEGIN("mapcore");

TEST_CASE("single edge map") {
  RootedMap m = RootedMap::single_edge();
  m.validate();
  MapType t = m.map_type();
  CHECK(t.mu == Partition({1}));
  CHECK(t.nu == Partition({1}));
  CHECK(t.tau == Partition({1}));
  CHECK(m.genus2x() == 0);
  CHECK(m.is_orientable());
  CHECK(m.face_count() == 1);
  CHECK(m.vertex_count() == 2);
  CHECK(m.root_vertex_degree() == 1);
}

TEST_CASE("the two insertions into the single edge map") {
  RootedMap m0 = RootedMap::single_edge();
  // the unique white corner
  Flag c = -1;
  for (Flag f : m0.flags())
    if (m0.white(f) && f < m0.corner_next(f)) c = f;
  REQUIRE(c >= 0);

  RootedMap a = m0.insert_nonbridge_edge(c, false);
  RootedMap b = m0.insert_nonbridge_edge(c, true);
  a.validate();
  b.validate();
  CHECK(a.edge_count() == 2);
  // one gluing creates a border (two faces, planar), the other a twisted
  // edge (one face, projective plane)
  std::multiset<int> fcounts{a.face_count(), b.face_count()};
  CHECK(fcounts == std::multiset<int>{1, 2});
  CHECK(a.canonical_key() != b.canonical_key());

  const RootedMap& proj = a.face_count() == 1 ? a : b;
  const RootedMap& digon = a.face_count() == 1 ? b : a;
  CHECK(proj.genus2x() == 1);
  CHECK_FALSE(proj.is_orientable());
  CHECK(proj.map_type().tau == Partition({2}));
  CHECK(digon.genus2x() == 0);
  CHECK(digon.is_orientable());
  CHECK(digon.map_type().tau == Partition({1, 1}));

  // deleting the projective map's root edge keeps it connected
  auto del = proj.delete_root_edge();
  CHECK_FALSE(del.bridge);
  CHECK(del.one == m0);
}

TEST_CASE("bridge deletions and the path with two edges") {
  RootedMap m0 = RootedMap::single_edge();
  // path white-black-white rooted at the middle black vertex
  RootedMap path = insert_bridge(m0, RootedMap::empty_map());
  path.validate();
  CHECK(path.edge_count() == 2);
  CHECK(path.map_type().mu == Partition({2}));
  CHECK(path.map_type().nu == Partition({1, 1}));
  CHECK(path.map_type().tau == Partition({2})); // one face of degree 4

  auto del = path.delete_root_edge();
  CHECK(del.bridge);
  CHECK(del.one == m0);
  CHECK(del.two.is_empty());

  // single edge splits into two empty maps
  auto del0 = m0.delete_root_edge();
  CHECK(del0.bridge);
  CHECK(del0.one.is_empty());
  CHECK(del0.two.is_empty());
  CHECK(insert_bridge(RootedMap::empty_map(), RootedMap::empty_map()) == m0);
}

TEST_CASE("insert then delete is the identity, exhaustively to 4 edges") {
  for (int n = 0; n <= 3; ++n) {
    for (const RootedMap& m : all_maps(n)) {
      if (!m.is_empty()) {
        for (Flag c : m.flags()) {
          if (!m.white(c)) continue;
          for (bool bit : {false, true}) {
            RootedMap grown = m.insert_nonbridge_edge(c, bit);
            grown.validate();
            auto del = grown.delete_root_edge();
            REQUIRE_FALSE(del.bridge);
            CHECK(del.one == m);
          }
        }
      }
      for (int k = 0; k + n <= 3; ++k) {
        for (const RootedMap& other : all_maps(k)) {
          RootedMap grown = insert_bridge(m, other);
          grown.validate();
          auto del = grown.delete_root_edge();
          REQUIRE(del.bridge);
          CHECK(del.one == m);
          CHECK(del.two == other);
        }
      }
    }
  }
}

TEST_CASE("delete then reinsert recovers the map, exhaustively to 3 edges") {
  for (int n = 1; n <= 3; ++n) {
    for (const RootedMap& m : all_maps(n)) {
      auto del = m.delete_root_edge();
      auto back = reinsertions(del);
      int hits = 0;
      for (const RootedMap& r : back)
        if (r == m) ++hits;
      CHECK(hits >= 1);
      if (del.bridge) CHECK(back.size() == 1);
    }
  }
}

TEST_CASE("structural invariants on every map with up to 4 edges") {
  for (int n = 0; n <= 4; ++n) {
    for (const RootedMap& m : all_maps(n)) {
      m.validate();
      CHECK(m.genus2x() >= 0);
      if (m.is_orientable()) CHECK(m.genus2x() % 2 == 0);
      if (m.is_empty()) continue;
      // sum of face degrees = sum of vertex degrees = 2e
      long fsum = 0, vsum = 0;
      for (const auto& f : m.faces()) fsum += static_cast<long>(f.size()) / 2;
      for (const auto& v : m.vertices()) vsum += static_cast<long>(v.size()) / 2;
      CHECK(fsum == 2 * m.edge_count());
      CHECK(vsum == 2 * m.edge_count());
      MapType t = m.map_type();
      CHECK(t.mu.size() == m.edge_count());
      CHECK(t.nu.size() == m.edge_count());
      CHECK(t.tau.size() == m.edge_count());
    }
  }
}

TEST_CASE("canonical forms") {
  RootedMap a = RootedMap::single_edge();
  RootedMap b = insert_bridge(RootedMap::empty_map(), RootedMap::empty_map());
  CHECK(a.canonical_key() == b.canonical_key());
  CHECK(a.canonical_form().canonical_key() == a.canonical_key());
  // keys separate everything the enumerator produces at n = 3
  std::set<std::vector<std::int32_t>> keys;
  auto maps3 = all_maps(3);
  for (const RootedMap& m : maps3) keys.insert(m.canonical_key());
  CHECK(keys.size() == maps3.size());
}

TEST_CASE("low-level twisting") {
  RootedMap m0 = RootedMap::single_edge();
  // both gluings of a lone edge are the same rooted map
  CHECK(m0.with_edge_twisted(m0.root()) == m0);
  for (int n = 1; n <= 4; ++n) {
    for (const RootedMap& m : all_maps(n)) {
      for (Flag f : m.flags()) {
        if (m.edge_id(f) != f) continue;
        RootedMap tw = m.with_edge_twisted(f);
        tw.validate();
        CHECK(tw.with_edge_twisted(f) == m);
        // vertex distributions are preserved
        CHECK(tw.map_type().mu == m.map_type().mu);
        CHECK(tw.map_type().nu == m.map_type().nu);
      }
    }
  }
}

TEST_CASE("orientability propagates through untwisted growth") {
  // growing an orientable map: of the two gluings of a new edge, exactly one
  // keeps the map orientable; following those keeps everything orientable
  for (int n = 1; n <= 4; ++n) {
    for (const RootedMap& m : all_maps(n)) {
      if (!m.is_orientable()) continue;
      for (Flag c : m.flags()) {
        if (!m.white(c) || c >= m.corner_next(c)) continue;
        bool o0 = m.insert_nonbridge_edge(c, false).is_orientable();
        bool o1 = m.insert_nonbridge_edge(c, true).is_orientable();
        CHECK(o0 != o1);
      }
      // bridges never create non-orientability
      CHECK(insert_bridge(m, RootedMap::single_edge()).is_orientable());
    }
  }
  // a chain of orientability-preserving insertions stays orientable
  RootedMap m = RootedMap::single_edge();
  for (int step = 0; step < 4; ++step) {
    Flag c = -1;
    for (Flag f : m.flags())
      if (m.white(f) && f < m.corner_next(f)) c = f;
    RootedMap grown = m.insert_nonbridge_edge(c, false);
    if (!grown.is_orientable()) grown = m.insert_nonbridge_edge(c, true);
    grown.validate();
    CHECK(grown.is_orientable());
    m = grown;
  }
}

TEST_CASE("error paths") {
  RootedMap empty = RootedMap::empty_map();
  CHECK_THROWS_AS(empty.delete_root_edge(), std::invalid_argument);
  CHECK_THROWS_AS(empty.insert_nonbridge_edge(0, false), std::invalid_argument);
  RootedMap m0 = RootedMap::single_edge();
  // black-incident corner rejected
  Flag black_flag = m0.root();
  CHECK_THROWS_AS(m0.insert_nonbridge_edge(black_flag, false),
                  std::invalid_argument);
}

TEST_SUITE_END();
