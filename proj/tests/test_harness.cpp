#include "bmaps/harness.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

using namespace bmaps;

namespace {

// Independent oracle for the refined marginal identity: the bridge /
// non-bridge recursion counting orientable maps with a given root-vertex
// degree and vertex distributions. Exercises splits() and down() the way the
// marginal-sum proof does.
struct TildeKey {
  Partition mu, nu;
  int d;
  bool operator<(const TildeKey& o) const {
    if (!(mu == o.mu)) return mu < o.mu;
    if (!(nu == o.nu)) return nu < o.nu;
    return d < o.d;
  }
};

std::map<TildeKey, long>& tilde_memo() {
  static std::map<TildeKey, long> memo;
  return memo;
}

long orientable_rooted_count(const Partition& mu, const Partition& nu, int d) {
  if (mu.size() != nu.size()) return 0;
  const int n = mu.size();
  if (n == 0) return (d == 0 && mu.empty() && nu.empty()) ? 1 : 0;
  if (d < 1 || mu.multiplicity(d) == 0) return 0;
  TildeKey key{mu, nu, d};
  auto it = tilde_memo().find(key);
  if (it != tilde_memo().end()) return it->second;

  Partition mu_down = down(mu, d);
  long total = 0;
  // bridge: split into ordered components; the far component swaps roles
  for (int j = 1; j <= n; ++j) {
    if (nu.multiplicity(j) == 0) continue;
    Partition nu_down = down(nu, j);
    for (int l = 1; l <= n; ++l) {
      int r1 = l - 1, r2 = n - l;
      if (r1 + r2 != n - 1) continue;
      for (const auto& ms : splits(mu_down, {r1, r2}))
        for (const auto& ns : splits(nu_down, {r1, r2}))
          total += orientable_rooted_count(ms[0], ns[0], d - 1) *
                   orientable_rooted_count(ns[1], ms[1], j - 1);
    }
  }
  // non-bridge: one way per white corner keeps the map orientable
  for (int j = 2; j <= n; ++j) {
    if (nu.multiplicity(j) == 0) continue;
    total += static_cast<long>(j - 1) * (nu.multiplicity(j - 1) + 1) *
             orientable_rooted_count(mu_down, down(nu, j), d - 1);
  }
  tilde_memo()[key] = total;
  return total;
}

} // namespace

TEST_SUITE_BEGIN("harness");

TEST_CASE("orientable census matches the recursion oracle, to 4 edges") {
  for (int n = 1; n <= 4; ++n) {
    std::map<TildeKey, long> census;
    enumerate_maps(n, [&](const RootedMap& m) {
      if (!m.is_orientable()) return;
      MapType ty = m.map_type();
      census[TildeKey{ty.mu, ty.nu, m.root_vertex_degree()}] += 1;
    });
    for (const auto& mu : all_partitions(n))
      for (const auto& nu : all_partitions(n))
        for (int d = 1; d <= n; ++d) {
          auto it = census.find(TildeKey{mu, nu, d});
          long from_census = it == census.end() ? 0 : it->second;
          CHECK(from_census == orientable_rooted_count(mu, nu, d));
        }
  }
}

TEST_CASE("suites pass at small n") {
  auto rules = std::vector<OrientationRule>{OrientationRule::canonical(),
                                            OrientationRule::seeded(5)};
  SuiteReport jack = suite_jack(3);
  CHECK(jack.all_pass());
  SuiteReport series = suite_map_series(3);
  CHECK(series.all_pass());
  SuiteReport uni = suite_unicellular(3, rules);
  CHECK(uni.all_pass());
  SuiteReport marg = suite_marginal(3, rules, 3);
  CHECK(marg.all_pass());
  SuiteReport exp = suite_experimental(2, rules);
  CHECK(exp.all_pass());
  CHECK(!exp.observations.empty());

  // report JSON shape
  auto j = marg.to_json();
  CHECK(j.at("suite") == "marginal");
  CHECK(j.at("failures") == 0);
  CHECK(j.at("checks").is_array());
  for (const auto& obs : exp.observations) {
    CHECK(obs.contains("mu"));
    CHECK(obs.contains("H_at_-1"));
    CHECK(obs.contains("two_pow_a_equals_handle_census"));
  }
}

TEST_CASE("cache round trip with verification") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "bmaps_cache_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  setenv("BMAPS_CACHE_DIR", dir.c_str(), 1);

  std::string note1, note2;
  HTable first = cached_htable(3, &note1);
  CHECK(note1.empty()); // fresh computation
  HTable second = cached_htable(3, &note2);
  CHECK(note2.find("cache hit") != std::string::npos);
  for (int n = 1; n <= 3; ++n)
    CHECK(first.slice[static_cast<size_t>(n)] ==
          second.slice[static_cast<size_t>(n)]);

  EtaTable t1 = cached_eta_table(3, OrientationRule::canonical(), &note1);
  EtaTable t2 = cached_eta_table(3, OrientationRule::canonical(), &note2);
  CHECK(note2.find("cache hit") != std::string::npos);
  CHECK(t1.entries.size() == t2.entries.size());

  // corrupting the payload forces a recomputation: flip one digit
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::ifstream in(entry.path());
    std::stringstream buf;
    buf << in.rdbuf();
    std::string content = buf.str();
    for (size_t i = content.size() / 2; i < content.size(); ++i) {
      if (std::isdigit(static_cast<unsigned char>(content[i]))) {
        content[i] = content[i] == '0' ? '1' : '0';
        break;
      }
    }
    std::ofstream out(entry.path(), std::ios::trunc);
    out << content;
  }
  std::string note3;
  HTable third = cached_htable(3, &note3);
  CHECK(note3.empty()); // treated as a miss, recomputed silently
  for (int n = 1; n <= 3; ++n)
    CHECK(first.slice[static_cast<size_t>(n)] ==
          third.slice[static_cast<size_t>(n)]);

  unsetenv("BMAPS_CACHE_DIR");
  fs::remove_all(dir);
}

TEST_SUITE_END();
