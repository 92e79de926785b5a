#pragma once

#include <nlohmann/json.hpp>

#include <corona/corona.hpp>
#include <corona/matrix.hpp>
#include <corona/polynomial.hpp>
#include <corona/rational_function.hpp>
#include <corona/roots.hpp>
#include <corona/verify.hpp>

namespace corona {

/// {"var": "lambda", "degree": d, "coeffs": ["c0", …], "pretty": "…"}
/// Coefficients ascend and are exact fraction strings.
nlohmann::json to_json(const Polynomial& p);

/// {"num": <polynomial>, "den": <polynomial>}
nlohmann::json to_json(const RationalFunction& f);

/// Nested row arrays of exact fraction strings.
nlohmann::json to_json(const ExactMatrix& m);

/// {"inherited": [{"factor": <polynomial>, "multiplicity": k}, …],
///  "paired": [<polynomial>, …]}
nlohmann::json to_json(const SpectrumDescription& s);

/// [{"re": x, "im": y, "multiplicity": k}, …]
nlohmann::json to_json(const std::vector<RootCluster>& roots);

/// {"suite": …, "instance": …, "expected": …, "actual": …,
///  "verdict": …, "seconds": …}
nlohmann::json to_json(const verify::Report& report);

/// {"reports": […], "matches": …, "mismatches": …,
///  "hypothesis_violations": …, "skips": …, "ok": bool}
nlohmann::json to_json(const verify::SweepSummary& summary);

}  // namespace corona
