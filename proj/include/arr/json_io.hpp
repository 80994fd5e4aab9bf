#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "arr/factor.hpp"
#include "arr/os_algebra.hpp"

namespace arr {

nlohmann::json lattice_to_json(const Lattice& lat);
nlohmann::json poincare_to_json(const IntPoly& p);
nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);
nlohmann::json table_to_json(const InductionTable& t);
nlohmann::json arrangement_to_json(const Arrangement& a);
nlohmann::json kappa_to_json(const KappaReport& rep);

Arrangement load_arrangement_file(const std::string& path);

}  // namespace arr
