#include "bmaps/harness.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

namespace bmaps {

using nlohmann::json;

bool SuiteReport::all_pass() const { return failure_count() == 0; }

int SuiteReport::failure_count() const {
  int n = 0;
  for (const auto& c : checks) n += c.pass ? 0 : 1;
  return n;
}

json SuiteReport::to_json() const {
  json out;
  out["suite"] = suite;
  out["n_max"] = n_max;
  out["rules"] = rules;
  out["seconds"] = seconds;
  out["failures"] = failure_count();
  json cs = json::array();
  for (const auto& c : checks) {
    json jc;
    jc["id"] = c.id;
    jc["pass"] = c.pass;
    if (!c.detail.empty()) jc["detail"] = c.detail;
    cs.push_back(std::move(jc));
  }
  out["checks"] = std::move(cs);
  if (!observations.empty()) out["observations"] = observations;
  return out;
}

void print_report(const SuiteReport& r, std::ostream& os) {
  for (const auto& c : r.checks) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << r.suite << "/" << c.id;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  os << "suite " << r.suite << ": " << (r.all_pass() ? "ok" : "FAILED") << ", "
     << r.checks.size() << " checks, " << r.failure_count() << " failures, "
     << r.seconds << " s\n";
}

namespace cache {

static const char* kVersion = "v1";

bool enabled() { return std::getenv("BMAPS_CACHE_DIR") != nullptr; }

static std::uint64_t json_checksum(const std::string& dump) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

static std::filesystem::path path_for(const std::string& key) {
  std::string name = std::string(kVersion) + "_" + key;
  for (char& c : name)
    if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
  return std::filesystem::path(std::getenv("BMAPS_CACHE_DIR")) / (name + ".json");
}

std::optional<json> load(const std::string& key) {
  if (!enabled()) return std::nullopt;
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  json wrapper;
  try {
    in >> wrapper;
    if (wrapper.at("key") != key) return std::nullopt;
    std::string dump = wrapper.at("body").dump();
    if (wrapper.at("checksum").get<std::uint64_t>() != json_checksum(dump))
      return std::nullopt;
    return wrapper.at("body");
  } catch (...) {
    return std::nullopt;
  }
}

void store(const std::string& key, const json& body) {
  if (!enabled()) return;
  std::filesystem::path p = path_for(key);
  std::filesystem::create_directories(p.parent_path());
  json wrapper;
  wrapper["key"] = key;
  wrapper["body"] = body;
  wrapper["checksum"] = json_checksum(body.dump());
  std::filesystem::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << wrapper.dump();
  }
  std::filesystem::rename(tmp, p);
}

std::uint64_t body_checksum(const json& body) { return json_checksum(body.dump()); }

} // namespace cache

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

std::string describe_keys(const std::vector<std::string>& offenders) {
  if (offenders.empty()) return "";
  std::string s = std::to_string(offenders.size()) + " offender(s): " + offenders[0];
  for (size_t i = 1; i < std::min<size_t>(offenders.size(), 3); ++i)
    s += "; " + offenders[i];
  if (offenders.size() > 3) s += "; ...";
  return s;
}

bool polys_equal(const Poly& a, const Poly& b) { return a == b; }

Poly one_plus_beta_power(int e, const Rat& scale) {
  Poly out = Poly::constant(Var::beta, scale);
  Poly xp1(Var::beta, {Rat(1), Rat(1)});
  for (int i = 0; i < e; ++i) out = out * xp1;
  return out;
}

} // namespace

HTable cached_htable(int n_max, std::string* note) {
  const std::string key = "htable_n" + std::to_string(n_max);
  if (auto body = cache::load(key)) {
    HTable h = htable_from_json(*body);
    // hit verification: rebuild a low-degree slice from scratch and compare
    const int probe = std::min(n_max, 3);
    HTable fresh = extract_h(probe);
    bool ok = h.max_degree == n_max;
    for (int n = 1; ok && n <= probe; ++n)
      ok = fresh.slice[static_cast<size_t>(n)] == h.slice[static_cast<size_t>(n)];
    if (ok) {
      if (note) *note = "cache hit (" + key + "), verified against degree<=" +
                        std::to_string(probe) + " rebuild";
      return h;
    }
    if (note) *note = "cache mismatch (" + key + "), recomputed";
  }
  HTable h = extract_h(n_max);
  cache::store(key, htable_to_json(h));
  return h;
}

EtaTable cached_eta_table(int n, const OrientationRule& rule, std::string* note) {
  const std::string key =
      "etatable_n" + std::to_string(n) + "_" + rule.to_string();
  if (auto body = cache::load(key)) {
    EtaTable t = eta_table_from_json(*body);
    bool ok = t.n == n && !t.entries.empty();
    if (ok) {
      // hit verification: re-enumerate one type picked from the checksum
      auto it = t.entries.begin();
      std::advance(it, static_cast<long>(cache::body_checksum(*body) %
                                         t.entries.size()));
      Poly fresh(Var::beta);
      long count = 0;
      for (const RootedMap& m : enumerate_by_type(it->first)) {
        fresh = fresh + Poly::monomial(Var::beta, eta(m, rule));
        ++count;
      }
      ok = polys_equal(fresh, it->second.h_eta) && count == it->second.count_all;
      if (ok && note)
        *note = "cache hit (" + key + "), re-derived type " +
                it->first.to_string();
    }
    if (ok) return t;
    if (note) *note = "cache mismatch (" + key + "), recomputed";
  }
  EtaTable t = h_eta_table(n, rule);
  cache::store(key, eta_table_to_json(t));
  return t;
}

SuiteReport suite_jack(int n_max) {
  Timer timer;
  SuiteReport r;
  r.suite = "jack";
  r.n_max = n_max;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<std::string> bad;
    for (const auto& f : check_jack_invariants(n))
      bad.push_back(f.check + " at (" + f.lambda.to_string() + "," +
                    f.mu.to_string() + "): " + f.detail);
    r.checks.push_back(
        {"invariants-C1-C3/n=" + std::to_string(n), bad.empty(), describe_keys(bad)});
    bad.clear();
    for (const auto& f : check_one_part_formulas(n))
      bad.push_back(f.check + " at " + f.lambda.to_string());
    r.checks.push_back(
        {"closed-forms/n=" + std::to_string(n), bad.empty(), describe_keys(bad)});
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteReport suite_map_series(int n_max) {
  Timer timer;
  SuiteReport r;
  r.suite = "map-series";
  r.n_max = n_max;
  std::string note;
  HTable h = cached_htable(n_max, &note);
  if (!note.empty()) r.checks.push_back({"htable-cache", true, note});

  for (int n = 1; n <= n_max; ++n) {
    std::map<MapType, std::pair<long, long>> census; // all, orientable
    enumerate_maps(n, [&](const RootedMap& m) {
      auto& c = census[m.map_type()];
      c.first += 1;
      if (m.is_orientable()) c.second += 1;
    });
    std::vector<std::string> bad_int, bad_census;
    const auto parts = all_partitions(n);
    for (const Partition& mu : parts)
      for (const Partition& nu : parts)
        for (const Partition& tau : parts) {
          const Poly& p = h.at(n, mu, nu, tau);
          Rat h0 = p.eval_at(Rat(0)), h1 = p.eval_at(Rat(1));
          std::string key = "(" + mu.to_string() + " | " + nu.to_string() +
                            " | " + tau.to_string() + ")";
          if (!rat_is_integer(h0) || h0 < 0 || !rat_is_integer(h1) || h1 < 0)
            bad_int.push_back(key + " h(0)=" + rat_str(h0) + " h(1)=" + rat_str(h1));
          auto it = census.find(MapType{mu, nu, tau});
          long all = it == census.end() ? 0 : it->second.first;
          long ori = it == census.end() ? 0 : it->second.second;
          if (h0 != ori || h1 != all)
            bad_census.push_back(key + " h(0)=" + rat_str(h0) + " vs orientable=" +
                                 std::to_string(ori) + ", h(1)=" + rat_str(h1) +
                                 " vs all=" + std::to_string(all));
        }
    r.checks.push_back({"h-values-integral/n=" + std::to_string(n),
                        bad_int.empty(), describe_keys(bad_int)});
    r.checks.push_back({"census-equals-h/n=" + std::to_string(n),
                        bad_census.empty(), describe_keys(bad_census)});
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteReport suite_unicellular(int n_max,
                              const std::vector<OrientationRule>& rules) {
  Timer timer;
  SuiteReport r;
  r.suite = "unicellular";
  r.n_max = n_max;
  for (const auto& rule : rules) r.rules.push_back(rule.to_string());
  std::string note;
  HTable h = cached_htable(n_max, &note);
  if (!note.empty()) r.checks.push_back({"htable-cache", true, note});

  for (int n = 1; n <= n_max; ++n) {
    const Partition full(std::vector<int>{n});
    std::vector<RootedMap> cells;
    enumerate_maps(n, [&](const RootedMap& m) {
      if (m.face_count() == 1) cells.push_back(m);
    });

    struct ClassStat {
      long unhandled = 0;
      std::vector<Poly> h_eta;              // per rule
      std::vector<std::map<int, Poly>> a;   // per rule: i -> a_i
    };
    std::map<std::pair<Partition, Partition>, ClassStat> classes;
    std::vector<std::vector<std::pair<size_t, int>>> per_rule_eta(rules.size());

    std::vector<Trace> type_traces;
    type_traces.reserve(cells.size());
    for (const RootedMap& m : cells) type_traces.push_back(trace_types(m));
    std::vector<std::vector<int>> eta_of(cells.size(),
                                         std::vector<int>(rules.size(), 0));
    for (size_t mi = 0; mi < cells.size(); ++mi)
      for (size_t ri = 0; ri < rules.size(); ++ri)
        eta_of[mi][ri] = eta(cells[mi], rules[ri]);

    for (size_t mi = 0; mi < cells.size(); ++mi) {
      MapType ty = cells[mi].map_type();
      auto key = std::make_pair(ty.mu, ty.nu);
      auto& cs = classes[key];
      if (cs.h_eta.empty()) {
        cs.h_eta.assign(rules.size(), Poly(Var::beta));
        cs.a.assign(rules.size(), {});
      }
      const int i = type_traces[mi].handles;
      const int g = n + 2 - ty.mu.length() - ty.nu.length() - 1;
      if (i == 0) cs.unhandled += 1;
      for (size_t ri = 0; ri < rules.size(); ++ri) {
        int e = eta_of[mi][ri];
        cs.h_eta[ri] = cs.h_eta[ri] + Poly::monomial(Var::beta, e);
        auto [it, fresh] = cs.a[ri].try_emplace(i, Poly(Var::beta));
        it->second = it->second + Poly::monomial(Var::beta, e + 2 * i - g);
      }
    }

    // (a) beta = -1 theorem: h(-1) = (-1)^{n+1-l(mu)-l(nu)} * #unhandled
    {
      std::vector<std::string> bad;
      const auto parts = all_partitions(n);
      for (const Partition& mu : parts)
        for (const Partition& nu : parts) {
          Rat lhs = h.at(n, mu, nu, full).eval_at(Rat(-1));
          auto it = classes.find(std::make_pair(mu, nu));
          long unh = it == classes.end() ? 0 : it->second.unhandled;
          int sign_exp = n + 1 - mu.length() - nu.length();
          Rat rhs = Rat(unh) * (sign_exp % 2 == 0 ? 1 : -1);
          if (lhs != rhs)
            bad.push_back("(" + mu.to_string() + " | " + nu.to_string() +
                          ") h(-1)=" + rat_str(lhs) + " vs " + rat_str(rhs));
        }
      r.checks.push_back({"beta=-1-unhandled/n=" + std::to_string(n), bad.empty(),
                          describe_keys(bad)});
    }

    // (b) low genera: full polynomial identity when l(mu)+l(nu) >= n-3
    // (c) a_i(-1) = 0 for i >= 1
    for (size_t ri = 0; ri < rules.size(); ++ri) {
      std::vector<std::string> bad_low, bad_a;
      const auto parts = all_partitions(n);
      for (const Partition& mu : parts)
        for (const Partition& nu : parts) {
          auto it = classes.find(std::make_pair(mu, nu));
          Poly heta =
              it == classes.end() ? Poly(Var::beta) : it->second.h_eta[ri];
          if (mu.length() + nu.length() >= n - 3) {
            if (!polys_equal(h.at(n, mu, nu, full), heta))
              bad_low.push_back("(" + mu.to_string() + " | " + nu.to_string() +
                                ") h=" + h.at(n, mu, nu, full).to_string() +
                                " vs H=" + heta.to_string());
          }
          if (it != classes.end())
            for (const auto& [i, a] : it->second.a[ri])
              if (i >= 1 && a.eval_at(Rat(-1)) != 0)
                bad_a.push_back("(" + mu.to_string() + " | " + nu.to_string() +
                                ") a_" + std::to_string(i) +
                                "(-1)=" + rat_str(a.eval_at(Rat(-1))));
        }
      r.checks.push_back({"low-genera-identity/n=" + std::to_string(n) + "/" +
                              rules[ri].to_string(),
                          bad_low.empty(), describe_keys(bad_low)});
      r.checks.push_back({"a_i(-1)=0/n=" + std::to_string(n) + "/" +
                              rules[ri].to_string(),
                          bad_a.empty(), describe_keys(bad_a)});
    }

    // sigma_eta involution on every handled unicellular map
    {
      std::vector<std::string> bad;
      std::map<std::pair<std::pair<Partition, Partition>, int>,
               std::vector<long>> signed_sums; // per rule
      for (size_t mi = 0; mi < cells.size(); ++mi) {
        const RootedMap& m = cells[mi];
        const int i = type_traces[mi].handles;
        MapType ty = m.map_type();
        if (i >= 1) {
          RootedMap s = sigma_eta(m);
          RootedMap ss = sigma_eta(s);
          if (!(ss == m))
            bad.push_back(ty.to_string() + ": sigma^2 != id");
          if (trace_types(s).handles != i)
            bad.push_back(ty.to_string() + ": handle count changed");
          if (!(s.map_type() == ty))
            bad.push_back(ty.to_string() + ": type changed");
          for (size_t ri = 0; ri < rules.size(); ++ri) {
            int em = eta_of[mi][ri], es = eta(s, rules[ri]);
            if ((em + es) % 2 == 0)
              bad.push_back(ty.to_string() + ": eta parity not flipped under " +
                            rules[ri].to_string());
          }
        }
        auto& sums = signed_sums[{{ty.mu, ty.nu}, i}];
        if (sums.empty()) sums.assign(rules.size(), 0);
        for (size_t ri = 0; ri < rules.size(); ++ri)
          sums[ri] += eta_of[mi][ri] % 2 == 0 ? 1 : -1;
      }
      for (const auto& [key, sums] : signed_sums) {
        if (key.second == 0) continue; // unhandled classes carry the survivors
        for (size_t ri = 0; ri < rules.size(); ++ri)
          if (sums[ri] != 0)
            bad.push_back("class (" + key.first.first.to_string() + " | " +
                          key.first.second.to_string() + "; i=" +
                          std::to_string(key.second) + ") signed sum " +
                          std::to_string(sums[ri]) + " under " +
                          rules[ri].to_string());
      }
      r.checks.push_back({"sigma-eta/n=" + std::to_string(n), bad.empty(),
                          describe_keys(bad)});
    }

    // two-handle involution on the i = 2, no-twist classes
    {
      std::vector<std::string> bad;
      std::map<std::pair<Partition, Partition>, std::vector<std::array<long, 3>>>
          hist; // per rule, eta histogram 0/1/2
      for (size_t mi = 0; mi < cells.size(); ++mi) {
        const RootedMap& m = cells[mi];
        if (type_traces[mi].handles != 2 || type_traces[mi].twisted != 0) continue;
        MapType ty = m.map_type();
        auto& hh = hist[{ty.mu, ty.nu}];
        if (hh.empty()) hh.assign(rules.size(), {0, 0, 0});
        for (size_t ri = 0; ri < rules.size(); ++ri) {
          int em = eta_of[mi][ri];
          if (em > 2) {
            bad.push_back(ty.to_string() + ": eta > 2 in a 2-handle class");
            continue;
          }
          hh[ri][static_cast<size_t>(em)] += 1;
          RootedMap s = sigma_two_handles(m, rules[ri]);
          if (eta(s, rules[ri]) != 2 - em)
            bad.push_back(ty.to_string() + ": eta not mapped to 2-eta under " +
                          rules[ri].to_string());
          if (!(sigma_two_handles(s, rules[ri]) == m))
            bad.push_back(ty.to_string() + ": sigma_O^2 != id under " +
                          rules[ri].to_string());
          if (!(s.map_type() == ty))
            bad.push_back(ty.to_string() + ": sigma_O changed the type");
        }
      }
      for (const auto& [key, hh] : hist)
        for (size_t ri = 0; ri < rules.size(); ++ri)
          if (hh[ri][0] != hh[ri][2])
            bad.push_back("class (" + key.first.to_string() + " | " +
                          key.second.to_string() + ") eta histogram not symmetric");
      // a_2 palindromic per class
      for (const auto& [key, cs] : classes)
        for (size_t ri = 0; ri < rules.size(); ++ri) {
          auto it = cs.a[ri].find(2);
          if (it == cs.a[ri].end()) continue;
          const Poly& a2 = it->second;
          if (a2.coeff(0) != a2.coeff(2))
            bad.push_back("class (" + key.first.to_string() + " | " +
                          key.second.to_string() + ") a_2 not palindromic: " +
                          a2.to_string());
        }
      r.checks.push_back({"two-handle-involution/n=" + std::to_string(n),
                          bad.empty(), describe_keys(bad)});
    }
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteReport suite_marginal(int n_max, const std::vector<OrientationRule>& rules,
                           int refined_n_max) {
  Timer timer;
  SuiteReport r;
  r.suite = "marginal";
  r.n_max = n_max;
  for (const auto& rule : rules) r.rules.push_back(rule.to_string());
  std::string note;
  HTable h = cached_htable(n_max, &note);
  if (!note.empty()) r.checks.push_back({"htable-cache", true, note});

  for (int n = 1; n <= n_max; ++n) {
    {
      std::vector<std::string> bad;
      for (const auto& f : marginal_sum_check(h, n))
        bad.push_back(triple_str(f.key) + ": " + f.detail);
      r.checks.push_back({"prop-form/n=" + std::to_string(n), bad.empty(),
                          describe_keys(bad)});
    }
    const auto parts = all_partitions(n);
    for (const auto& rule : rules) {
      std::string tnote;
      EtaTable t = cached_eta_table(n, rule, &tnote);
      if (!tnote.empty())
        r.checks.push_back({"etatable-cache/n=" + std::to_string(n) + "/" +
                                rule.to_string(),
                            true, tnote});
      std::vector<std::string> bad;
      for (const Partition& mu : parts)
        for (const Partition& nu : parts) {
          Poly lhs(Var::beta), rhs(Var::beta);
          for (const Partition& tau : parts) {
            lhs = lhs + h.at(n, mu, nu, tau);
            auto it = t.entries.find(MapType{mu, nu, tau});
            if (it != t.entries.end()) rhs = rhs + it->second.h_eta;
          }
          if (!polys_equal(lhs, rhs))
            bad.push_back("(" + mu.to_string() + " | " + nu.to_string() +
                          ") sum_tau h = " + lhs.to_string() +
                          " vs sum_tau H = " + rhs.to_string());
        }
      r.checks.push_back({"theorem/n=" + std::to_string(n) + "/" + rule.to_string(),
                          bad.empty(), describe_keys(bad)});

      if (n <= refined_n_max) {
        std::vector<std::string> bad_ref;
        for (const auto& [key, e] : t.refined) {
          int exp = n + 1 - key.mu.length() - key.nu.length();
          Poly expect = one_plus_beta_power(exp, Rat(e.orientable));
          if (!polys_equal(e.h, expect))
            bad_ref.push_back("(" + key.mu.to_string() + " | " +
                              key.nu.to_string() + "; root deg " +
                              std::to_string(key.root_degree) + ") " +
                              e.h.to_string() + " vs " + expect.to_string());
        }
        r.checks.push_back({"root-degree-refined/n=" + std::to_string(n) + "/" +
                                rule.to_string(),
                            bad_ref.empty(), describe_keys(bad_ref)});
      }
    }
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteReport suite_experimental(int n_max,
                               const std::vector<OrientationRule>& rules) {
  Timer timer;
  SuiteReport r;
  r.suite = "experimental";
  r.n_max = n_max;
  for (const auto& rule : rules) r.rules.push_back(rule.to_string());
  std::string note;
  HTable h = cached_htable(n_max, &note);
  if (!note.empty()) r.checks.push_back({"htable-cache", true, note});

  for (int n = 1; n <= n_max; ++n) {
    for (const auto& rule : rules) {
      EtaTable t = cached_eta_table(n, rule);
      for (const auto& [type, e] : t.entries) {
        const int g =
            n + 2 - type.mu.length() - type.nu.length() - type.tau.length();
        json obs;
        obs["n"] = n;
        obs["orientation"] = rule.to_string();
        obs["mu"] = type.mu.to_string();
        obs["nu"] = type.nu.to_string();
        obs["tau"] = type.tau.to_string();
        obs["g"] = g;
        Rat at_m1 = e.h_eta.eval_at(Rat(-1));
        obs["H_at_-1"] = rat_str(at_m1);
        obs["unhandled"] = e.count_unhandled;
        obs["signed_unhandled_match"] =
            at_m1 == Rat(e.count_unhandled) * (g % 2 == 0 ? 1 : -1);
        Rat h_m1 = h.at(n, type.mu, type.nu, type.tau).eval_at(Rat(-1));
        obs["h_at_-1"] = rat_str(h_m1);
        obs["H_matches_h_at_-1"] = at_m1 == h_m1;
        auto a = b_basis_decompose(e.h_eta, g);
        if (a) {
          json coeffs = json::array();
          bool two_pow_match = true;
          Rat two(1);
          for (size_t i = 0; i < a->size(); ++i) {
            coeffs.push_back(rat_str((*a)[i]));
            auto it = e.count_by_handles.find(static_cast<int>(i));
            long cnt = it == e.count_by_handles.end() ? 0 : it->second;
            if ((*a)[i] * two != cnt) two_pow_match = false;
            two *= 2;
          }
          obs["b_basis"] = std::move(coeffs);
          obs["two_pow_a_equals_handle_census"] = two_pow_match;
        } else {
          obs["b_basis"] = nullptr;
          obs["two_pow_a_equals_handle_census"] = false;
        }
        r.observations.push_back(std::move(obs));
      }
    }
  }
  r.checks.push_back({"report-generated", true,
                      std::to_string(r.observations.size()) + " observations"});
  r.seconds = timer.seconds();
  return r;
}

} // namespace bmaps
