#include "bmaps/mapstats.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace bmaps {

std::string edge_type_name(EdgeType t) {
  switch (t) {
    case EdgeType::Bridge: return "bridge";
    case EdgeType::Border: return "border";
    case EdgeType::Twisted: return "twisted";
    case EdgeType::Handle: return "handle";
  }
  return "?";
}

OrientationRule OrientationRule::parse(const std::string& text) {
  if (text == "canonical") return canonical();
  const std::string prefix = "seeded:";
  if (text.rfind(prefix, 0) == 0)
    return seeded(std::stoull(text.substr(prefix.size())));
  throw std::invalid_argument("bad orientation rule: " + text);
}

std::string OrientationRule::to_string() const {
  return variant == Variant::Canonical ? "canonical"
                                       : "seeded:" + std::to_string(seed);
}

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// the phi-orbit through f
std::vector<Flag> walk_orbit(const RootedMap& m, Flag f) {
  std::vector<Flag> orbit;
  Flag cur = f;
  do {
    orbit.push_back(cur);
    cur = m.walk_next(cur);
  } while (cur != f);
  return orbit;
}

} // namespace

std::vector<char> orientation_set(const RootedMap& m, const OrientationRule& rule) {
  std::vector<char> chosen(static_cast<size_t>(m.capacity()), 0);
  if (m.is_empty()) return chosen;

  if (m.is_orientable()) {
    // canonical orientation: the global 2-coloring class of cross(root).
    // phi preserves the classes, so this picks one direction per face, and
    // the root face gets the root direction.
    std::vector<signed char> col(static_cast<size_t>(m.capacity()), -1);
    std::vector<Flag> stack{m.root()};
    col[static_cast<size_t>(m.root())] = 0;
    while (!stack.empty()) {
      Flag f = stack.back();
      stack.pop_back();
      for (Flag g : {m.cross(f), m.side(f), m.corner_next(f)}) {
        if (col[static_cast<size_t>(g)] < 0) {
          col[static_cast<size_t>(g)] =
              static_cast<signed char>(1 - col[static_cast<size_t>(f)]);
          stack.push_back(g);
        }
      }
    }
    signed char root_dir = col[static_cast<size_t>(m.cross(m.root()))];
    for (Flag f : m.flags())
      if (col[static_cast<size_t>(f)] == root_dir)
        chosen[static_cast<size_t>(f)] = 1;
    return chosen;
  }

  // Non-orientable: the root face takes the root direction; other faces pick
  // a direction through the canonical relabeling so the choice depends only
  // on the isomorphism class.
  std::vector<Flag> order = m.canonical_order();
  std::vector<Flag> pos(static_cast<size_t>(m.capacity()), -1);
  for (size_t i = 0; i < order.size(); ++i)
    pos[static_cast<size_t>(order[i])] = static_cast<Flag>(i);
  const std::uint64_t map_hash =
      rule.variant == OrientationRule::Variant::Seeded ? m.canonical_hash() : 0;

  std::vector<char> seen(static_cast<size_t>(m.capacity()), 0);
  const Flag root_dir_flag = m.cross(m.root());
  for (Flag f : m.flags()) {
    if (seen[static_cast<size_t>(f)]) continue;
    std::vector<Flag> o1 = walk_orbit(m, f);
    std::vector<Flag> o2 = walk_orbit(m, m.corner_next(f)); // mirror direction
    for (Flag g : o1) seen[static_cast<size_t>(g)] = 1;
    for (Flag g : o2) seen[static_cast<size_t>(g)] = 1;

    auto contains = [](const std::vector<Flag>& v, Flag x) {
      return std::find(v.begin(), v.end(), x) != v.end();
    };
    const std::vector<Flag>* pick = nullptr;
    if (contains(o1, root_dir_flag)) {
      pick = &o1;
    } else if (contains(o2, root_dir_flag)) {
      pick = &o2;
    } else {
      Flag best = -1;
      for (Flag g : o1) if (best < 0 || pos[static_cast<size_t>(g)] < pos[static_cast<size_t>(best)]) best = g;
      for (Flag g : o2) if (pos[static_cast<size_t>(g)] < pos[static_cast<size_t>(best)]) best = g;
      bool take_best_side = true;
      if (rule.variant == OrientationRule::Variant::Seeded) {
        std::uint64_t h = mix64(rule.seed ^ mix64(map_hash ^ static_cast<std::uint64_t>(
                                    pos[static_cast<size_t>(best)])));
        take_best_side = (h & 1ull) == 0;
      }
      bool best_in_o1 = contains(o1, best);
      pick = (best_in_o1 == take_best_side) ? &o1 : &o2;
    }
    for (Flag g : *pick) chosen[static_cast<size_t>(g)] = 1;
  }
  return chosen;
}

EdgeType classify_root_edge(const RootedMap& m) {
  auto del = m.delete_root_edge();
  if (del.bridge) return EdgeType::Bridge;
  int df = del.one.face_count() - m.face_count();
  switch (df) {
    case -1: return EdgeType::Border;
    case 0: return EdgeType::Twisted;
    case 1: return EdgeType::Handle;
    default: throw std::logic_error("face count changed by more than one");
  }
}

namespace {

Trace trace_impl(const RootedMap& m, const OrientationRule* rule) {
  Trace t;
  std::vector<RootedMap> pending;
  RootedMap cur = m;
  int label = 1;
  while (true) {
    if (cur.is_empty()) {
      if (pending.empty()) break;
      cur = std::move(pending.back());
      pending.pop_back();
      continue;
    }
    auto del = cur.delete_root_edge();
    EdgeType type;
    Kind kind = Kind::First;
    if (del.bridge) {
      type = EdgeType::Bridge;
    } else {
      int df = del.one.face_count() - cur.face_count();
      type = df == -1 ? EdgeType::Border
             : df == 0 ? EdgeType::Twisted
                       : EdgeType::Handle;
      if (rule) {
        // first corner after the root corner, pushed through the deletion:
        // the direction flag is corner_next(side(cross(root)))
        Flag w = cur.corner_next(cur.side(cur.cross(cur.root())));
        kind = orientation_set(del.one, *rule)[static_cast<size_t>(w)]
                   ? Kind::First
                   : Kind::Second;
      }
    }
    if (type == EdgeType::Handle) ++t.handles;
    if (type == EdgeType::Twisted) ++t.twisted;
    if (kind == Kind::Second) ++t.second;
    t.steps.push_back(TraceStep{label, cur.edge_id(cur.root()), type, kind, cur});
    ++label;
    if (del.bridge) {
      if (!del.one.is_empty()) {
        if (!del.two.is_empty()) pending.push_back(std::move(del.two));
        cur = std::move(del.one);
      } else {
        cur = std::move(del.two);
      }
    } else {
      cur = std::move(del.one);
    }
  }
  return t;
}

} // namespace

Trace trace(const RootedMap& m, const OrientationRule& rule) {
  return trace_impl(m, &rule);
}

Trace trace_types(const RootedMap& m) { return trace_impl(m, nullptr); }

int eta(const RootedMap& m, const OrientationRule& rule) {
  return trace(m, rule).second;
}

RootedMap twist(const RootedMap& m, int label) {
  if (label < 1 || label > m.edge_count())
    throw std::invalid_argument("twist: label out of range");
  Trace t = trace_types(m);
  return m.with_edge_twisted(t.steps[static_cast<size_t>(label - 1)].edge);
}

CornerPartition corner_partition(const RootedMap& m) {
  CornerPartition out;
  for (const auto& face : m.faces()) {
    std::set<std::pair<Flag, Flag>> corners;
    for (Flag f : face) {
      Flag g = m.corner_next(f);
      corners.insert({std::min(f, g), std::max(f, g)});
    }
    out.insert(std::move(corners));
  }
  return out;
}

namespace {

// one designator flag per corner incident to a white vertex
std::vector<Flag> white_corner_designators(const RootedMap& m) {
  std::vector<Flag> out;
  for (Flag f : m.flags())
    if (m.white(f) && f < m.corner_next(f)) out.push_back(f);
  return out;
}

void emit_level(const std::vector<std::vector<RootedMap>>& levels, int n,
                const std::function<void(const RootedMap&)>& emit) {
  if (n == 0) {
    emit(RootedMap::empty_map());
    return;
  }
  for (int a = 0; a <= n - 1; ++a) {
    int b = n - 1 - a;
    for (const RootedMap& m1 : levels[static_cast<size_t>(a)])
      for (const RootedMap& m2 : levels[static_cast<size_t>(b)])
        emit(insert_bridge(m1, m2));
  }
  for (const RootedMap& m : levels[static_cast<size_t>(n - 1)]) {
    if (m.is_empty()) continue;
    for (Flag c : white_corner_designators(m)) {
      emit(m.insert_nonbridge_edge(c, false));
      emit(m.insert_nonbridge_edge(c, true));
    }
  }
}

} // namespace

void enumerate_maps(int n, const std::function<void(const RootedMap&)>& emit) {
  if (n < 0) throw std::invalid_argument("enumerate_maps: n must be >= 0");
  std::vector<std::vector<RootedMap>> levels(static_cast<size_t>(std::max(n, 1)));
  levels[0] = {RootedMap::empty_map()};
  for (int k = 1; k < n; ++k)
    emit_level(levels, k,
               [&](const RootedMap& m) { levels[static_cast<size_t>(k)].push_back(m); });
  emit_level(levels, n, emit);
}

std::vector<RootedMap> all_maps(int n) {
  std::vector<RootedMap> out;
  enumerate_maps(n, [&](const RootedMap& m) { out.push_back(m); });
  return out;
}

std::vector<RootedMap> enumerate_by_type(const MapType& type) {
  std::vector<RootedMap> out;
  enumerate_maps(type.mu.size(), [&](const RootedMap& m) {
    if (m.map_type() == type) out.push_back(m);
  });
  return out;
}

namespace {

// Edge ids to twist for sigma_eta, following the involution lemma's proof
// case by case. All returned labels are non-bridges, so the twists commute
// and the composition is label-stable.
void sigma_eta_edges(const RootedMap& m, std::vector<Flag>& out) {
  Trace t = trace_types(m);
  if (m.face_count() != 1)
    throw std::invalid_argument("sigma_eta: map is not unicellular");
  if (t.handles == 0)
    throw std::invalid_argument("sigma_eta: map is unhandled");
  const TraceStep& first = t.steps.front();
  switch (first.type) {
    case EdgeType::Handle:
      out.push_back(first.edge);
      return;
    case EdgeType::Twisted: {
      auto del = m.delete_root_edge();
      std::vector<Flag> sub;
      sigma_eta_edges(del.one, sub);
      RootedMap without = m.with_edges_twisted(sub);
      sub.push_back(first.edge);
      RootedMap with = m.with_edges_twisted(sub);
      bool w1 = without.face_count() == 1;
      bool w2 = with.face_count() == 1;
      if (w1 == w2)
        throw std::logic_error("sigma_eta: exactly one candidate must be unicellular");
      if (w1) sub.pop_back();
      out.insert(out.end(), sub.begin(), sub.end());
      return;
    }
    case EdgeType::Bridge: {
      auto del = m.delete_root_edge();
      if (!del.one.is_empty() && trace_types(del.one).handles >= 1)
        sigma_eta_edges(del.one, out);
      else
        sigma_eta_edges(del.two, out);
      return;
    }
    case EdgeType::Border:
      throw std::logic_error("sigma_eta: border root edge on a unicellular map");
  }
}

} // namespace

RootedMap sigma_eta(const RootedMap& m) {
  std::vector<Flag> edges;
  sigma_eta_edges(m, edges);
  return m.with_edges_twisted(edges);
}

namespace {

struct TwoHandleShape {
  int label_i = 0, label_j = 0;
  Flag edge_i = -1, edge_j = -1;
};

TwoHandleShape two_handle_shape(const RootedMap& m, const Trace& t) {
  if (m.face_count() != 1)
    throw std::invalid_argument("two-handle involution: map is not unicellular");
  if (t.handles != 2 || t.twisted != 0)
    throw std::invalid_argument(
        "two-handle involution: trace must read two handles, no twisted edges");
  TwoHandleShape s;
  for (const TraceStep& step : t.steps) {
    if (step.type != EdgeType::Handle) continue;
    if (s.label_i == 0) {
      s.label_i = step.label;
      s.edge_i = step.edge;
    } else {
      s.label_j = step.label;
      s.edge_j = step.edge;
    }
  }
  return s;
}

} // namespace

RootedMap reconnect_unique(const RootedMap& m) {
  Trace t = trace_types(m);
  TwoHandleShape s = two_handle_shape(m, t);

  RootedMap mt = m.with_edge_twisted(s.edge_j);
  Trace tt = trace_types(mt);
  int k = 0;
  for (int lab = s.label_j; lab >= 1; --lab) {
    if (corner_partition(t.steps[static_cast<size_t>(lab - 1)].submap) !=
        corner_partition(tt.steps[static_cast<size_t>(lab - 1)].submap)) {
      k = lab;
      break;
    }
  }
  if (k == 0)
    throw std::invalid_argument(
        "reconnect_unique: all corner partitions agree with the twisted map");
  if (!(s.label_i < k && k < s.label_j) ||
      t.steps[static_cast<size_t>(k - 1)].type != EdgeType::Border)
    throw std::logic_error("reconnect_unique: k is not an inner border label");

  const CornerPartition target =
      corner_partition(t.steps[static_cast<size_t>(k - 1)].submap);
  const Flag rk = t.steps[static_cast<size_t>(k - 1)].submap.root();
  const Flag rj = t.steps[static_cast<size_t>(s.label_j - 1)].submap.root();
  const Flag bk = m.cross(rk); // second half-edge of e_k
  const Flag bj = m.cross(rj); // second half-edge of e_j

  std::vector<RootedMap> matches;
  for (Flag a : {bj, m.side(bj)})
    for (Flag b : {bk, m.side(bk)}) {
      RootedMap cand = m.with_cross_pairs({{rk, a}, {rj, b}});
      if (!cand.recolor_from_root()) continue; // disconnected or not bipartite
      Trace tc = trace_types(cand);
      if (static_cast<int>(tc.steps.size()) < k) continue;
      if (corner_partition(tc.steps[static_cast<size_t>(k - 1)].submap) == target)
        matches.push_back(std::move(cand));
    }
  if (matches.size() != 1)
    throw std::logic_error("reconnect_unique: expected exactly one valid re-pairing, got " +
                           std::to_string(matches.size()));
  return matches.front();
}

RootedMap sigma_two_handles(const RootedMap& m, const OrientationRule& rule) {
  Trace t = trace_types(m);
  TwoHandleShape s = two_handle_shape(m, t);

  RootedMap mt = m.with_edge_twisted(s.edge_j);
  Trace tt = trace_types(mt);
  bool all_equal = true;
  for (int lab = 1; lab <= s.label_j; ++lab) {
    if (corner_partition(t.steps[static_cast<size_t>(lab - 1)].submap) !=
        corner_partition(tt.steps[static_cast<size_t>(lab - 1)].submap)) {
      all_equal = false;
      break;
    }
  }
  RootedMap cand0, cand1;
  if (all_equal) {
    cand0 = mt;
    cand1 = m.with_edges_twisted({s.edge_i, s.edge_j});
  } else {
    cand0 = reconnect_unique(m);
    cand1 = cand0.with_edge_twisted(s.edge_i);
  }
  const int target = 2 - eta(m, rule);
  const bool ok0 = eta(cand0, rule) == target;
  const bool ok1 = eta(cand1, rule) == target;
  if (ok0 == ok1)
    throw std::logic_error("sigma_two_handles: expected exactly one candidate with eta = 2 - eta(M)");
  return ok0 ? cand0 : cand1;
}

EtaTable h_eta_table(int n, const OrientationRule& rule) {
  EtaTable table;
  table.n = n;
  table.rule = rule;
  enumerate_maps(n, [&](const RootedMap& m) {
    Trace t = trace(m, rule);
    const int e = t.second; // eta
    const int i = t.handles;
    MapType type = m.map_type();
    const int g = n + 2 - type.mu.length() - type.nu.length() - type.tau.length();
    EtaEntry& entry = table.entries[type];
    entry.h_eta = entry.h_eta + Poly::monomial(Var::beta, e);
    // the eta bounds corollary guarantees 0 <= eta + 2i - g <= i
    const int apow = e + 2 * i - g;
    if (apow < 0 || apow > i)
      throw std::logic_error("eta bounds violated at " + type.to_string());
    auto [it, inserted] = entry.a_split.try_emplace(i, Poly(Var::beta));
    it->second = it->second + Poly::monomial(Var::beta, apow);
    entry.count_all += 1;
    if (m.is_orientable()) entry.count_orientable += 1;
    if (i == 0) entry.count_unhandled += 1;
    entry.count_by_handles[i] += 1;

    EtaTable::RefinedKey rk{type.mu, type.nu, m.root_vertex_degree()};
    EtaTable::RefinedEntry& re = table.refined[rk];
    re.h = re.h + Poly::monomial(Var::beta, e);
    if (m.is_orientable()) re.orientable += 1;
  });
  return table;
}

} // namespace bmaps
