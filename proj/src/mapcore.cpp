#include "bmaps/mapcore.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace bmaps {

RootedMap RootedMap::single_edge() {
  RootedMap m;
  m.cross_ = {2, 3, 0, 1};
  m.side_ = {1, 0, 3, 2};
  m.corner_ = {1, 0, 3, 2}; // degree-1 ends: side and corner pair the same way
  m.color_ = {0, 0, 1, 1};
  m.root_ = 0;
  m.edges_ = 1;
  return m;
}

std::vector<Flag> RootedMap::flags() const {
  std::vector<Flag> out;
  out.reserve(static_cast<size_t>(4 * edges_));
  for (Flag f = 0; f < capacity(); ++f)
    if (cross_[static_cast<size_t>(f)] >= 0) out.push_back(f);
  return out;
}

Flag RootedMap::edge_id(Flag f) const {
  Flag a = f, b = side(f), c = cross(f), d = side(cross(f));
  return std::min(std::min(a, b), std::min(c, d));
}

namespace {
std::vector<std::vector<Flag>> orbits(const RootedMap& m,
                                      const std::vector<Flag>& all,
                                      Flag (RootedMap::*g1)(Flag) const,
                                      Flag (RootedMap::*g2)(Flag) const) {
  std::vector<std::vector<Flag>> out;
  std::vector<char> seen(static_cast<size_t>(m.capacity()), 0);
  for (Flag start : all) {
    if (seen[static_cast<size_t>(start)]) continue;
    std::vector<Flag> orbit;
    std::vector<Flag> stack{start};
    seen[static_cast<size_t>(start)] = 1;
    while (!stack.empty()) {
      Flag f = stack.back();
      stack.pop_back();
      orbit.push_back(f);
      for (Flag g : {(m.*g1)(f), (m.*g2)(f)}) {
        if (!seen[static_cast<size_t>(g)]) {
          seen[static_cast<size_t>(g)] = 1;
          stack.push_back(g);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}
} // namespace

std::vector<std::vector<Flag>> RootedMap::faces() const {
  return orbits(*this, flags(), &RootedMap::cross, &RootedMap::corner_next);
}

std::vector<std::vector<Flag>> RootedMap::vertices() const {
  return orbits(*this, flags(), &RootedMap::side, &RootedMap::corner_next);
}

int RootedMap::face_count() const {
  return is_empty() ? 1 : static_cast<int>(faces().size());
}

int RootedMap::vertex_count() const {
  return is_empty() ? 1 : static_cast<int>(vertices().size());
}

MapType RootedMap::map_type() const {
  std::vector<int> mu, nu, tau;
  for (const auto& v : vertices()) {
    int deg = static_cast<int>(v.size()) / 2;
    (white(v.front()) ? nu : mu).push_back(deg);
  }
  for (const auto& f : faces()) {
    // face degree = |orbit|/2; tau stores degrees halved
    int orbit = static_cast<int>(f.size());
    if (orbit % 4 != 0)
      throw std::logic_error("odd face degree: bipartiteness violated");
    tau.push_back(orbit / 4);
  }
  auto desc = [](std::vector<int>& v) {
    std::sort(v.begin(), v.end(), std::greater<int>());
  };
  desc(mu); desc(nu); desc(tau);
  return MapType{Partition(mu), Partition(nu), Partition(tau)};
}

int RootedMap::genus2x() const {
  int g2 = 2 - vertex_count() - face_count() + edges_;
  if (g2 < 0) throw std::logic_error("negative genus: corrupted map");
  return g2;
}

bool RootedMap::is_orientable() const {
  if (is_empty()) return true;
  // orientable iff flags are 2-colorable with all three involutions swapping
  std::vector<signed char> col(static_cast<size_t>(capacity()), -1);
  std::vector<Flag> stack{root_};
  col[static_cast<size_t>(root_)] = 0;
  while (!stack.empty()) {
    Flag f = stack.back();
    stack.pop_back();
    for (Flag g : {cross(f), side(f), corner_next(f)}) {
      if (col[static_cast<size_t>(g)] < 0) {
        col[static_cast<size_t>(g)] = static_cast<signed char>(1 - col[static_cast<size_t>(f)]);
        stack.push_back(g);
      } else if (col[static_cast<size_t>(g)] == col[static_cast<size_t>(f)]) {
        return false;
      }
    }
  }
  return true;
}

int RootedMap::root_vertex_degree() const {
  if (is_empty()) return 0;
  std::vector<Flag> all = flags();
  auto vs = vertices();
  for (const auto& v : vs)
    if (std::binary_search(v.begin(), v.end(), root_))
      return static_cast<int>(v.size()) / 2;
  throw std::logic_error("root flag not found in any vertex");
}

void RootedMap::flip_colors() {
  for (Flag f = 0; f < capacity(); ++f)
    if (cross_[static_cast<size_t>(f)] >= 0) color_[static_cast<size_t>(f)] ^= 1;
}

std::vector<Flag> RootedMap::component_of(Flag start) const {
  std::vector<Flag> comp;
  std::vector<char> seen(static_cast<size_t>(capacity()), 0);
  std::vector<Flag> stack{start};
  seen[static_cast<size_t>(start)] = 1;
  while (!stack.empty()) {
    Flag f = stack.back();
    stack.pop_back();
    comp.push_back(f);
    for (Flag g : {cross(f), side(f), corner_next(f)}) {
      if (!seen[static_cast<size_t>(g)]) {
        seen[static_cast<size_t>(g)] = 1;
        stack.push_back(g);
      }
    }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

RootedMap RootedMap::restricted_to(const std::vector<Flag>& comp,
                                   Flag new_root) const {
  RootedMap m;
  m.cross_.assign(static_cast<size_t>(capacity()), -1);
  m.side_.assign(static_cast<size_t>(capacity()), -1);
  m.corner_.assign(static_cast<size_t>(capacity()), -1);
  m.color_.assign(static_cast<size_t>(capacity()), 0);
  for (Flag f : comp) {
    m.cross_[static_cast<size_t>(f)] = cross_[static_cast<size_t>(f)];
    m.side_[static_cast<size_t>(f)] = side_[static_cast<size_t>(f)];
    m.corner_[static_cast<size_t>(f)] = corner_[static_cast<size_t>(f)];
    m.color_[static_cast<size_t>(f)] = color_[static_cast<size_t>(f)];
  }
  m.root_ = new_root;
  m.edges_ = static_cast<int>(comp.size()) / 4;
  return m;
}

RootedMap::Deleted RootedMap::delete_root_edge() const {
  if (is_empty())
    throw std::invalid_argument("delete_root_edge: map has no edges");
  const Flag r = root_, r2 = side(r), q = cross(r), q2 = side(q);
  const bool black_leaf = corner_next(r) == r2; // root vertex has degree 1
  const bool white_leaf = corner_next(q) == q2;
  const Flag x = corner_next(r2), y = corner_next(r);
  const Flag u = corner_next(q), w = corner_next(q2);

  RootedMap m = *this;
  for (Flag f : {r, r2, q, q2}) {
    m.cross_[static_cast<size_t>(f)] = -1;
    m.side_[static_cast<size_t>(f)] = -1;
    m.corner_[static_cast<size_t>(f)] = -1;
    m.color_[static_cast<size_t>(f)] = 0;
  }
  m.edges_ -= 1;
  if (!black_leaf) {
    m.corner_[static_cast<size_t>(x)] = y;
    m.corner_[static_cast<size_t>(y)] = x;
  }
  if (!white_leaf) {
    m.corner_[static_cast<size_t>(u)] = w;
    m.corner_[static_cast<size_t>(w)] = u;
  }

  Deleted res;
  if (black_leaf && white_leaf) {
    res.bridge = true;
    res.one = empty_map();
    res.two = empty_map();
    return res;
  }
  if (black_leaf) {
    res.bridge = true;
    res.one = empty_map();
    m.root_ = w;
    m.flip_colors();
    res.two = std::move(m);
    return res;
  }
  if (white_leaf) {
    res.bridge = true;
    m.root_ = x;
    res.one = std::move(m);
    res.two = empty_map();
    return res;
  }
  std::vector<Flag> comp = m.component_of(x);
  if (static_cast<int>(comp.size()) == 4 * m.edges_) {
    m.root_ = x;
    res.bridge = false;
    res.one = std::move(m);
    return res;
  }
  res.bridge = true;
  res.one = m.restricted_to(comp, x);
  std::vector<Flag> rest;
  for (Flag f : m.flags())
    if (!std::binary_search(comp.begin(), comp.end(), f)) rest.push_back(f);
  res.two = m.restricted_to(rest, w);
  res.two.flip_colors();
  return res;
}

Flag RootedMap::alloc4() {
  Flag base = capacity();
  cross_.resize(static_cast<size_t>(base) + 4, -1);
  side_.resize(static_cast<size_t>(base) + 4, -1);
  corner_.resize(static_cast<size_t>(base) + 4, -1);
  color_.resize(static_cast<size_t>(base) + 4, 0);
  return base;
}

RootedMap RootedMap::insert_nonbridge_edge(Flag c, bool twist_bit) const {
  if (is_empty())
    throw std::invalid_argument("insert_nonbridge_edge: map is empty");
  if (!present(c))
    throw std::invalid_argument("insert_nonbridge_edge: no such flag");
  if (!white(c))
    throw std::invalid_argument(
        "insert_nonbridge_edge: corner must be white-incident");
  RootedMap m = *this;
  const Flag r = m.alloc4(), r2 = r + 1, q = r + 2, q2 = r + 3;
  const Flag n = root_, mm = corner_next(n);
  const Flag c2 = corner_next(c);
  m.side_[static_cast<size_t>(r)] = r2;
  m.side_[static_cast<size_t>(r2)] = r;
  m.side_[static_cast<size_t>(q)] = q2;
  m.side_[static_cast<size_t>(q2)] = q;
  m.corner_[static_cast<size_t>(r)] = mm;
  m.corner_[static_cast<size_t>(mm)] = r;
  m.corner_[static_cast<size_t>(r2)] = n;
  m.corner_[static_cast<size_t>(n)] = r2;
  m.corner_[static_cast<size_t>(q)] = c;
  m.corner_[static_cast<size_t>(c)] = q;
  m.corner_[static_cast<size_t>(q2)] = c2;
  m.corner_[static_cast<size_t>(c2)] = q2;
  if (twist_bit) {
    m.cross_[static_cast<size_t>(r)] = q2;
    m.cross_[static_cast<size_t>(q2)] = r;
    m.cross_[static_cast<size_t>(r2)] = q;
    m.cross_[static_cast<size_t>(q)] = r2;
  } else {
    m.cross_[static_cast<size_t>(r)] = q;
    m.cross_[static_cast<size_t>(q)] = r;
    m.cross_[static_cast<size_t>(r2)] = q2;
    m.cross_[static_cast<size_t>(q2)] = r2;
  }
  m.color_[static_cast<size_t>(r)] = color_[static_cast<size_t>(n)];
  m.color_[static_cast<size_t>(r2)] = color_[static_cast<size_t>(n)];
  m.color_[static_cast<size_t>(q)] = 1;
  m.color_[static_cast<size_t>(q2)] = 1;
  m.root_ = r;
  m.edges_ += 1;
  return m;
}

RootedMap insert_bridge(const RootedMap& m1, const RootedMap& m2) {
  RootedMap m;
  const Flag off = m1.capacity();
  const Flag base = off + m2.capacity();
  const size_t total = static_cast<size_t>(base) + 4;
  m.cross_.assign(total, -1);
  m.side_.assign(total, -1);
  m.corner_.assign(total, -1);
  m.color_.assign(total, 0);
  for (Flag f = 0; f < off; ++f) {
    if (!m1.present(f)) continue;
    m.cross_[static_cast<size_t>(f)] = m1.cross(f);
    m.side_[static_cast<size_t>(f)] = m1.side(f);
    m.corner_[static_cast<size_t>(f)] = m1.corner_next(f);
    m.color_[static_cast<size_t>(f)] = m1.white(f) ? 1 : 0;
  }
  for (Flag f = 0; f < m2.capacity(); ++f) {
    if (!m2.present(f)) continue;
    m.cross_[static_cast<size_t>(off + f)] = off + m2.cross(f);
    m.side_[static_cast<size_t>(off + f)] = off + m2.side(f);
    m.corner_[static_cast<size_t>(off + f)] = off + m2.corner_next(f);
    m.color_[static_cast<size_t>(off + f)] = m2.white(f) ? 0 : 1; // flipped
  }
  const Flag r = base, r2 = base + 1, q = base + 2, q2 = base + 3;
  m.side_[static_cast<size_t>(r)] = r2;
  m.side_[static_cast<size_t>(r2)] = r;
  m.side_[static_cast<size_t>(q)] = q2;
  m.side_[static_cast<size_t>(q2)] = q;
  m.cross_[static_cast<size_t>(r)] = q;
  m.cross_[static_cast<size_t>(q)] = r;
  m.cross_[static_cast<size_t>(r2)] = q2;
  m.cross_[static_cast<size_t>(q2)] = r2;
  if (m1.is_empty()) {
    m.corner_[static_cast<size_t>(r)] = r2;
    m.corner_[static_cast<size_t>(r2)] = r;
  } else {
    const Flag n1 = m1.root(), mm1 = m1.corner_next(n1);
    m.corner_[static_cast<size_t>(r)] = mm1;
    m.corner_[static_cast<size_t>(mm1)] = r;
    m.corner_[static_cast<size_t>(r2)] = n1;
    m.corner_[static_cast<size_t>(n1)] = r2;
  }
  if (m2.is_empty()) {
    m.corner_[static_cast<size_t>(q)] = q2;
    m.corner_[static_cast<size_t>(q2)] = q;
  } else {
    const Flag n2 = off + m2.root(), mm2 = off + m2.corner_next(m2.root());
    m.corner_[static_cast<size_t>(q)] = mm2;
    m.corner_[static_cast<size_t>(mm2)] = q;
    m.corner_[static_cast<size_t>(q2)] = n2;
    m.corner_[static_cast<size_t>(n2)] = q2;
  }
  m.color_[static_cast<size_t>(r)] = 0;
  m.color_[static_cast<size_t>(r2)] = 0;
  m.color_[static_cast<size_t>(q)] = 1;
  m.color_[static_cast<size_t>(q2)] = 1;
  m.root_ = r;
  m.edges_ = m1.edge_count() + m2.edge_count() + 1;
  return m;
}

RootedMap RootedMap::with_edge_twisted(Flag on_edge) const {
  if (!present(on_edge))
    throw std::invalid_argument("with_edge_twisted: no such flag");
  RootedMap m = *this;
  const Flag a = on_edge, a2 = side(a), b = cross(a), b2 = side(b);
  m.cross_[static_cast<size_t>(a)] = b2;
  m.cross_[static_cast<size_t>(b2)] = a;
  m.cross_[static_cast<size_t>(a2)] = b;
  m.cross_[static_cast<size_t>(b)] = a2;
  return m;
}

RootedMap RootedMap::with_edges_twisted(const std::vector<Flag>& edge_flags) const {
  RootedMap m = *this;
  for (Flag f : edge_flags) m = m.with_edge_twisted(f);
  return m;
}

RootedMap RootedMap::with_cross_pairs(
    const std::vector<std::pair<Flag, Flag>>& pairs) const {
  RootedMap m = *this;
  for (const auto& [a, b] : pairs) {
    const Flag a2 = side(a), b2 = side(b);
    m.cross_[static_cast<size_t>(a)] = b;
    m.cross_[static_cast<size_t>(b)] = a;
    m.cross_[static_cast<size_t>(a2)] = b2;
    m.cross_[static_cast<size_t>(b2)] = a2;
  }
  return m;
}

bool RootedMap::recolor_from_root() {
  if (is_empty()) return true;
  std::vector<signed char> col(static_cast<size_t>(capacity()), -1);
  std::vector<Flag> stack{root_};
  col[static_cast<size_t>(root_)] = 0;
  size_t visited = 1;
  while (!stack.empty()) {
    Flag f = stack.back();
    stack.pop_back();
    signed char here = col[static_cast<size_t>(f)];
    struct Step { Flag to; signed char color; };
    const Step steps[3] = {{cross(f), static_cast<signed char>(1 - here)},
                           {side(f), here},
                           {corner_next(f), here}};
    for (const Step& s : steps) {
      signed char& c = col[static_cast<size_t>(s.to)];
      if (c < 0) {
        c = s.color;
        ++visited;
        stack.push_back(s.to);
      } else if (c != s.color) {
        return false;
      }
    }
  }
  if (visited != static_cast<size_t>(4 * edges_)) return false;
  for (Flag f = 0; f < capacity(); ++f)
    if (cross_[static_cast<size_t>(f)] >= 0)
      color_[static_cast<size_t>(f)] = static_cast<std::uint8_t>(col[static_cast<size_t>(f)]);
  return true;
}

std::vector<Flag> RootedMap::canonical_order() const {
  std::vector<Flag> order;
  if (is_empty()) return order;
  std::vector<char> seen(static_cast<size_t>(capacity()), 0);
  std::queue<Flag> bfs;
  bfs.push(root_);
  seen[static_cast<size_t>(root_)] = 1;
  while (!bfs.empty()) {
    Flag f = bfs.front();
    bfs.pop();
    order.push_back(f);
    for (Flag g : {cross(f), side(f), corner_next(f)}) {
      if (!seen[static_cast<size_t>(g)]) {
        seen[static_cast<size_t>(g)] = 1;
        bfs.push(g);
      }
    }
  }
  return order;
}

std::vector<std::int32_t> RootedMap::canonical_key() const {
  std::vector<Flag> order = canonical_order();
  std::vector<Flag> pos(static_cast<size_t>(capacity()), -1);
  for (size_t i = 0; i < order.size(); ++i)
    pos[static_cast<size_t>(order[i])] = static_cast<Flag>(i);
  std::vector<std::int32_t> key;
  key.reserve(1 + 3 * order.size());
  key.push_back(edges_);
  for (Flag f : order) {
    key.push_back(pos[static_cast<size_t>(cross(f))]);
    key.push_back(pos[static_cast<size_t>(side(f))]);
    key.push_back(pos[static_cast<size_t>(corner_next(f))]);
  }
  return key;
}

RootedMap RootedMap::canonical_form() const {
  if (is_empty()) return empty_map();
  std::vector<Flag> order = canonical_order();
  std::vector<Flag> pos(static_cast<size_t>(capacity()), -1);
  for (size_t i = 0; i < order.size(); ++i)
    pos[static_cast<size_t>(order[i])] = static_cast<Flag>(i);
  RootedMap m;
  const size_t n = order.size();
  m.cross_.resize(n);
  m.side_.resize(n);
  m.corner_.resize(n);
  m.color_.resize(n);
  for (size_t i = 0; i < n; ++i) {
    Flag f = order[i];
    m.cross_[i] = pos[static_cast<size_t>(cross(f))];
    m.side_[i] = pos[static_cast<size_t>(side(f))];
    m.corner_[i] = pos[static_cast<size_t>(corner_next(f))];
    m.color_[i] = color_[static_cast<size_t>(f)];
  }
  m.root_ = 0;
  m.edges_ = edges_;
  return m;
}

std::uint64_t RootedMap::canonical_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (std::int32_t v : canonical_key()) {
    h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
    h *= 1099511628211ull;
  }
  return h;
}

void RootedMap::validate() const {
  if (is_empty()) {
    if (edges_ != 0) throw std::logic_error("empty map with edges");
    return;
  }
  std::vector<Flag> all = flags();
  if (static_cast<int>(all.size()) != 4 * edges_)
    throw std::logic_error("flag count != 4e");
  if (!present(root_)) throw std::logic_error("root flag absent");
  auto check_inv = [&](Flag (RootedMap::*g)(Flag) const, const char* name) {
    for (Flag f : all) {
      Flag im = (this->*g)(f);
      if (!present(im) || im == f || (this->*g)(im) != f)
        throw std::logic_error(std::string("broken involution: ") + name);
    }
  };
  check_inv(&RootedMap::cross, "cross");
  check_inv(&RootedMap::side, "side");
  check_inv(&RootedMap::corner_next, "corner_next");
  for (Flag f : all) {
    if (cross(side(f)) != side(cross(f)))
      throw std::logic_error("cross and side do not commute");
    if (cross(side(f)) == f)
      throw std::logic_error("cross*side has a fixed point");
    if (white(f) == white(cross(f)))
      throw std::logic_error("edge joins same-colored vertices");
    if (white(f) != white(side(f)) || white(f) != white(corner_next(f)))
      throw std::logic_error("vertex not monochromatic");
  }
  if (white(root_)) throw std::logic_error("root vertex is not black");
  if (component_of(root_).size() != all.size())
    throw std::logic_error("map not connected");
  for (const auto& f : faces())
    if (f.size() % 4 != 0)
      throw std::logic_error("odd face degree (bipartiteness violated)");
}

} // namespace bmaps
