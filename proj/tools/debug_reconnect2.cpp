// deep diagnostics for the first failing reconnection map at n = 6
#include "bmaps/mapstats.hpp"

#include <iostream>

using namespace bmaps;

namespace {
void dump_map(const char* tag, const RootedMap& m) {
  std::cout << tag << ": root=" << m.root() << " e=" << m.edge_count() << "\n  ";
  for (Flag f : m.flags())
    std::cout << f << ":(x" << m.cross(f) << ",s" << m.side(f) << ",c"
              << m.corner_next(f) << "," << (m.white(f) ? "W" : "B") << ") ";
  std::cout << "\n";
}

void dump_cp(const char* tag, const RootedMap& m) {
  std::cout << tag << " corner partition:\n";
  for (const auto& face : corner_partition(m)) {
    std::cout << "  { ";
    for (const auto& [a, b] : face) std::cout << "(" << a << "," << b << ") ";
    std::cout << "}\n";
  }
}
} // namespace

int main() {
  bool done = false;
  enumerate_maps(6, [&](const RootedMap& m) {
    if (done || m.face_count() != 1) return;
    Trace t = trace_types(m);
    if (t.handles != 2 || t.twisted != 0) return;
    int lj = 0, li = 0;
    Flag ej = -1;
    for (const auto& s : t.steps)
      if (s.type == EdgeType::Handle) {
        if (li == 0) li = s.label;
        else { lj = s.label; ej = s.edge; }
      }
    RootedMap mt = m.with_edge_twisted(ej);
    Trace tt = trace_types(mt);
    int k = 0;
    for (int lab = lj; lab >= 1; --lab)
      if (corner_partition(t.steps[lab - 1].submap) !=
          corner_partition(tt.steps[lab - 1].submap)) { k = lab; break; }
    if (k == 0) return;
    const Flag rk = t.steps[k - 1].submap.root();
    const Flag rj = t.steps[lj - 1].submap.root();
    const Flag bk = m.cross(rk), bj = m.cross(rj);
    bool paper_pairing_colors_ok = m.white(rk) != m.white(bj);
    if (paper_pairing_colors_ok) return; // only dissect a flipped-color case
    done = true;

    std::cout << "type " << m.map_type().to_string() << " i=" << li << " k=" << k
              << " j=" << lj << "\n";
    std::cout << "trace:";
    for (const auto& s : t.steps)
      std::cout << " " << s.label << ":" << edge_type_name(s.type) << "(e"
                << s.edge << ",root" << s.submap.root() << ")";
    std::cout << "\n";
    dump_map("M", m);
    std::cout << "rk=" << rk << "(" << (m.white(rk) ? "W" : "B") << ") rj=" << rj
              << "(" << (m.white(rj) ? "W" : "B") << ") bk=" << bk << "("
              << (m.white(bk) ? "W" : "B") << ") bj=" << bj << "("
              << (m.white(bj) ? "W" : "B") << ")\n";
    dump_cp("M^k", t.steps[k - 1].submap);
    dump_cp("(tau_j M)^k", tt.steps[k - 1].submap);
    if (k < lj) {
      dump_cp("M^{k+1}", t.steps[k].submap);
      dump_cp("(tau_j M)^{k+1}", tt.steps[k].submap);
    }

    // does the all-equal branch's candidate set contain a working partner?
    Flag ei = -1;
    for (const auto& s : t.steps)
      if (s.label == li) ei = s.edge;
    for (const auto& rule :
         {OrientationRule::canonical(), OrientationRule::seeded(1)}) {
      int em = eta(m, rule);
      RootedMap c1 = m.with_edge_twisted(ej);
      RootedMap c2 = m.with_edges_twisted({ei, ej});
      RootedMap c3 = m.with_edge_twisted(ei);
      std::cout << "rule " << rule.to_string() << ": eta(M)=" << em
                << " eta(tau_j M)=" << eta(c1, rule) << " faces(tau_j M)="
                << c1.face_count() << " eta(tau_i tau_j M)=" << eta(c2, rule)
                << " faces=" << c2.face_count() << " eta(tau_i M)="
                << eta(c3, rule) << " faces=" << c3.face_count() << "\n";
      Trace t1 = trace_types(c1);
      std::cout << "  tau_j M trace:";
      for (const auto& s : t1.steps) std::cout << " " << edge_type_name(s.type);
      std::cout << "\n";
    }
  });
  return 0;
}
