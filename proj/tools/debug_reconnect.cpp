// scratch diagnostics for the two-handle reconnection at n = 6
#include "bmaps/mapstats.hpp"

#include <iostream>

using namespace bmaps;

int main() {
  int n = 6, examined = 0, failures = 0;
  enumerate_maps(n, [&](const RootedMap& m) {
    if (m.face_count() != 1) return;
    Trace t = trace_types(m);
    if (t.handles != 2 || t.twisted != 0) return;
    ++examined;
    // does the reconnection case apply?
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
    if (k == 0) return; // twisting case, not reconnection
    try {
      RootedMap mp = reconnect_unique(m);
      (void)mp;
    } catch (const std::exception& e) {
      ++failures;
      if (failures > 1) return;
      std::cout << "FAILED: " << e.what() << "\n";
      std::cout << "type " << m.map_type().to_string() << " i=" << li
                << " k=" << k << " j=" << lj << "\n";
      std::cout << "trace:";
      for (const auto& s : t.steps) std::cout << " " << edge_type_name(s.type);
      std::cout << "\n";
      const Flag rk = t.steps[k - 1].submap.root();
      const Flag rj = t.steps[lj - 1].submap.root();
      const Flag bk = m.cross(rk), bj = m.cross(rj);
      std::cout << "rk=" << rk << " rj=" << rj << " bk=" << bk << " bj=" << bj
                << "\n";
      int combo = 0;
      for (Flag a : {bj, m.side(bj)})
        for (Flag b : {bk, m.side(bk)}) {
          RootedMap cand = m.with_cross_pairs({{rk, a}, {rj, b}});
          bool colored = cand.recolor_from_root();
          std::cout << "combo " << combo++ << ": recolor="
                    << (colored ? "ok" : "FAIL");
          if (colored) {
            Trace tc = trace_types(cand);
            std::cout << " steps=" << tc.steps.size() << " types:";
            for (const auto& s : tc.steps)
              std::cout << " " << edge_type_name(s.type);
            bool match =
                corner_partition(tc.steps[k - 1].submap) ==
                corner_partition(t.steps[k - 1].submap);
            std::cout << " C-match@" << k << "=" << match;
          }
          std::cout << "\n";
        }
    }
  });
  std::cout << examined << " two-handle maps examined, " << failures
            << " reconnect failures\n";
  return 0;
}
