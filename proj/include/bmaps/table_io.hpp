// JSON (and CSV) forms of the exact tables. Polynomial coefficients are
// emitted as exact "num/den" decimal strings, ascending by power.

#pragma once

#include "bmaps/hseries.hpp"
#include "bmaps/mapstats.hpp"

#include <json.hpp>

#include <iosfwd>

namespace bmaps {

nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(Var var, const nlohmann::json& j);

nlohmann::json htable_to_json(const HTable& h);
HTable htable_from_json(const nlohmann::json& j);
void htable_to_csv(const HTable& h, std::ostream& os);

nlohmann::json eta_table_to_json(const EtaTable& t);
EtaTable eta_table_from_json(const nlohmann::json& j);

nlohmann::json jack_table_to_json(int n);

} // namespace bmaps
