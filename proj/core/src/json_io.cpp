#include <corona/json_io.hpp>

namespace corona {

nlohmann::json to_json(const Polynomial& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Rational& c : p.coeffs()) coeffs.push_back(to_string(c));
    return {{"var", "lambda"},
            {"degree", p.degree()},
            {"coeffs", std::move(coeffs)},
            {"pretty", p.str()}};
}

nlohmann::json to_json(const RationalFunction& f) {
    return {{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

nlohmann::json to_json(const ExactMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json to_json(const SpectrumDescription& s) {
    nlohmann::json inherited = nlohmann::json::array();
    for (const auto& [factor, multiplicity] : s.inherited)
        inherited.push_back({{"factor", to_json(factor)}, {"multiplicity", multiplicity}});
    nlohmann::json paired = nlohmann::json::array();
    for (const Polynomial& quad : s.paired) paired.push_back(to_json(quad));
    return {{"inherited", std::move(inherited)}, {"paired", std::move(paired)}};
}

nlohmann::json to_json(const std::vector<RootCluster>& roots) {
    nlohmann::json out = nlohmann::json::array();
    for (const RootCluster& r : roots)
        out.push_back({{"re", r.value.real()}, {"im", r.value.imag()}, {"multiplicity", r.multiplicity}});
    return out;
}

nlohmann::json to_json(const verify::Report& report) {
    return {{"suite", report.suite},       {"instance", report.instance},
            {"expected", report.expected}, {"actual", report.actual},
            {"verdict", std::string(verify::verdict_name(report.verdict))},
            {"seconds", report.seconds}};
}

nlohmann::json to_json(const verify::SweepSummary& summary) {
    nlohmann::json reports = nlohmann::json::array();
    for (const verify::Report& r : summary.reports) reports.push_back(to_json(r));
    return {{"reports", std::move(reports)},
            {"matches", summary.matches},
            {"mismatches", summary.mismatches},
            {"hypothesis_violations", summary.hypothesis_violations},
            {"skips", summary.skips},
            {"ok", summary.ok()}};
}

}  // namespace corona
