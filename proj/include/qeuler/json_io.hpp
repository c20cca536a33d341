#pragma once

#include <json.hpp>

#include "qeuler/analytic.hpp"
#include "qeuler/padic.hpp"
#include "qeuler/tables.hpp"

namespace qeuler {

nlohmann::json to_json(const QEulerSpec& spec);
nlohmann::json to_json(const QEulerTable& table);
nlohmann::json to_json(const PadicResidue& residue);
nlohmann::json to_json(const AnalyticResult& result);

}  // namespace qeuler
