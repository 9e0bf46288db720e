#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "padehyp/analysis.hpp"
#include "padehyp/pade.hpp"
#include "padehyp/rootloc.hpp"
#include "padehyp/suites.hpp"

namespace padehyp {

using Json = nlohmann::ordered_json;

// Exact scalars as "num/den", floats as "<decimal>@<bits>".
Json to_json(const Scalar& x);
// {"coeffs": [...]} in ascending powers.
Json to_json(const Polynomial& p);
// {"a", "c", "m", "n", "P", "Q"}
Json to_json(const HyParams& params, const PadePair& pair);
Json to_json(const ContactCertificate& cert);
// {"intervals", "roots", "real_count", "all_simple", "predicted_interval", ...}
Json to_json(const RootReport& report, const RegimeClass& regime, bool verified);
// Rows with 20-significant-digit decimals; an absent bound is null.
Json to_json(const ConvergenceTable& table);
Json to_json(const SuiteResult& result);

Polynomial polynomial_from_json(const Json& j);

// 20 significant digits, "d.ddddde+XX".
std::string decimal20(const BigFloat& x);

// Columns m,n,sup_error,remainder_bound,min_abs_q; absent bound is NA.
std::string to_csv(const ConvergenceTable& table);

}  // namespace padehyp
