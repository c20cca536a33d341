#include "qeuler/json_io.hpp"

namespace qeuler {

nlohmann::json to_json(const QEulerSpec& spec) {
    return {{"r", spec.r},
            {"a", spec.a},
            {"b", spec.b},
            {"q", spec.q.str()},
            {"x", spec.x.str()}};
}

nlohmann::json to_json(const QEulerTable& table) {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : table.values) values.push_back(v.str());
    return {{"spec", to_json(table.spec)}, {"values", std::move(values)}};
}

nlohmann::json to_json(const PadicResidue& residue) {
    return {{"p", residue.p()},
            {"M", residue.precision()},
            {"value", residue.value().get_str()},
            {"digits", residue.digits()}};
}

nlohmann::json to_json(const AnalyticResult& result) {
    return {{"value", {result.value.real(), result.value.imag()}},
            {"tail_bound", result.certificate.tail_bound},
            {"terms", result.certificate.terms},
            {"cutoffs", result.certificate.cutoffs}};
}

}  // namespace qeuler
