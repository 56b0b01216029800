#include "bmaps/table_io.hpp"

#include <ostream>

namespace bmaps {

using nlohmann::json;

json poly_to_json(const Poly& p) {
  json arr = json::array();
  for (int i = 0; i <= p.degree(); ++i) arr.push_back(rat_str(p.coeff(i)));
  return arr;
}

Poly poly_from_json(Var var, const json& j) {
  std::vector<Rat> coeffs;
  for (const auto& c : j) coeffs.push_back(rat_parse(c.get<std::string>()));
  return Poly(var, std::move(coeffs));
}

json htable_to_json(const HTable& h) {
  json out;
  out["n"] = h.max_degree;
  json entries = json::array();
  for (int n = 1; n <= h.max_degree; ++n) {
    for (const auto& [key, p] : h.slice[static_cast<size_t>(n)]) {
      json e;
      e["mu"] = key[0].to_string();
      e["nu"] = key[1].to_string();
      e["tau"] = key[2].to_string();
      e["h"] = poly_to_json(p);
      entries.push_back(std::move(e));
    }
  }
  out["entries"] = std::move(entries);
  return out;
}

HTable htable_from_json(const json& j) {
  HTable h;
  h.max_degree = j.at("n").get<int>();
  h.slice.resize(static_cast<size_t>(h.max_degree) + 1);
  for (const auto& e : j.at("entries")) {
    Partition mu = Partition::parse(e.at("mu").get<std::string>());
    Partition nu = Partition::parse(e.at("nu").get<std::string>());
    Partition tau = Partition::parse(e.at("tau").get<std::string>());
    Poly p = poly_from_json(Var::beta, e.at("h"));
    h.slice[static_cast<size_t>(mu.size())].emplace(TripleKey{mu, nu, tau},
                                                    std::move(p));
  }
  return h;
}

void htable_to_csv(const HTable& h, std::ostream& os) {
  os << "n,mu,nu,tau,coeffs\n";
  for (int n = 1; n <= h.max_degree; ++n) {
    for (const auto& [key, p] : h.slice[static_cast<size_t>(n)]) {
      os << n << ",\"" << key[0].to_string() << "\",\"" << key[1].to_string()
         << "\",\"" << key[2].to_string() << "\",\"";
      for (int i = 0; i <= p.degree(); ++i) {
        if (i) os << ' ';
        os << rat_str(p.coeff(i));
      }
      os << "\"\n";
    }
  }
}

json eta_table_to_json(const EtaTable& t) {
  json out;
  out["n"] = t.n;
  out["orientation"] = t.rule.to_string();
  json entries = json::array();
  for (const auto& [type, e] : t.entries) {
    json je;
    je["mu"] = type.mu.to_string();
    je["nu"] = type.nu.to_string();
    je["tau"] = type.tau.to_string();
    je["h"] = poly_to_json(e.h_eta);
    json split = json::array();
    for (const auto& [i, a] : e.a_split) {
      json ja;
      ja["i"] = i;
      ja["a"] = poly_to_json(a);
      ja["count"] = e.count_by_handles.at(i);
      split.push_back(std::move(ja));
    }
    je["i_split"] = std::move(split);
    je["count_all"] = e.count_all;
    je["count_orientable"] = e.count_orientable;
    je["count_unhandled"] = e.count_unhandled;
    entries.push_back(std::move(je));
  }
  out["entries"] = std::move(entries);
  json refined = json::array();
  for (const auto& [key, e] : t.refined) {
    json jr;
    jr["mu"] = key.mu.to_string();
    jr["nu"] = key.nu.to_string();
    jr["root_degree"] = key.root_degree;
    jr["h"] = poly_to_json(e.h);
    jr["orientable"] = e.orientable;
    refined.push_back(std::move(jr));
  }
  out["refined"] = std::move(refined);
  return out;
}

EtaTable eta_table_from_json(const json& j) {
  EtaTable t;
  t.n = j.at("n").get<int>();
  t.rule = OrientationRule::parse(j.at("orientation").get<std::string>());
  for (const auto& je : j.at("entries")) {
    MapType type{Partition::parse(je.at("mu").get<std::string>()),
                 Partition::parse(je.at("nu").get<std::string>()),
                 Partition::parse(je.at("tau").get<std::string>())};
    EtaEntry e;
    e.h_eta = poly_from_json(Var::beta, je.at("h"));
    for (const auto& ja : je.at("i_split")) {
      int i = ja.at("i").get<int>();
      e.a_split.emplace(i, poly_from_json(Var::beta, ja.at("a")));
      e.count_by_handles[i] = ja.at("count").get<long>();
    }
    e.count_all = je.at("count_all").get<long>();
    e.count_orientable = je.at("count_orientable").get<long>();
    e.count_unhandled = je.at("count_unhandled").get<long>();
    t.entries.emplace(std::move(type), std::move(e));
  }
  for (const auto& jr : j.at("refined")) {
    EtaTable::RefinedKey key{Partition::parse(jr.at("mu").get<std::string>()),
                             Partition::parse(jr.at("nu").get<std::string>()),
                             jr.at("root_degree").get<int>()};
    EtaTable::RefinedEntry e;
    e.h = poly_from_json(Var::beta, jr.at("h"));
    e.orientable = jr.at("orientable").get<long>();
    t.refined.emplace(std::move(key), std::move(e));
  }
  return t;
}

namespace {
json ratfunc_to_json(const RatFunc& f) {
  json out;
  json num = json::array(), den = json::array();
  for (int i = 0; i <= f.num().degree(); ++i) num.push_back(rat_str(f.num().coeff(i)));
  for (int i = 0; i <= f.den().degree(); ++i) den.push_back(rat_str(f.den().coeff(i)));
  out["num"] = std::move(num);
  out["den"] = std::move(den);
  return out;
}

json symfunc_to_json(const SymFunc& f) {
  json out;
  out["basis"] = f.basis == Basis::p ? "p" : "m";
  json coeffs = json::object();
  for (const auto& [key, c] : f.coeff) coeffs[key.to_string()] = ratfunc_to_json(c);
  out["coeff"] = std::move(coeffs);
  return out;
}
} // namespace

json jack_table_to_json(int n) {
  const JackTable& jt = JackTable::get(n);
  json out;
  out["n"] = n;
  json entries = json::array();
  for (const JackEntry& e : jt.entries()) {
    json je;
    je["lambda"] = e.lambda.to_string();
    je["p_form"] = symfunc_to_json(e.p_form);
    je["m_form"] = symfunc_to_json(e.m_form);
    je["norm"] = ratfunc_to_json(e.norm);
    entries.push_back(std::move(je));
  }
  out["jack"] = std::move(entries);
  return out;
}

} // namespace bmaps
