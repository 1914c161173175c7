#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "polycount/asymptotics.hpp"
#include "polycount/counts.hpp"

namespace polycount {

/// {"num": [int, ...], "den": d}: den is the LCM of the coefficient
/// denominators, num the den-scaled integer coefficients ascending.
nlohmann::json qpoly_to_json(const QPoly& p);
QPoly qpoly_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const CountReport& rep);

nlohmann::json bound_check_to_json(const BoundCheck& c);
nlohmann::json sweep_to_json(const std::vector<BoundCheck>& checks);
/// family,r,n,s,q,approx,exact,bound,margin,pass with rationals as "num/den".
std::string sweep_to_csv(const std::vector<BoundCheck>& checks);

std::string report_to_text(const CountReport& rep, const std::string& families);
std::string report_to_csv(const CountReport& rep, const std::string& families);

}  // namespace polycount
