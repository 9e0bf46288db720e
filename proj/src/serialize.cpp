#include "padehyp/serialize.hpp"

#include <sstream>

#include "padehyp/errors.hpp"

namespace padehyp {

Json to_json(const Scalar& x) { return x.to_string(); }

Json to_json(const Polynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  if (p.is_zero()) coeffs.push_back("0");
  return Json{{"coeffs", coeffs}};
}

Json to_json(const HyParams& params, const PadePair& pair) {
  return Json{{"a", to_json(params.a())}, {"c", to_json(params.c())}, {"m", pair.order().m()},
              {"n", pair.order().n()},    {"P", to_json(pair.P())},     {"Q", to_json(pair.Q())}};
}

Json to_json(const ContactCertificate& cert) {
  Json rem = Json::array();
  for (const auto& c : cert.remainder_coeffs) rem.push_back(to_json(c));
  return Json{{"verified_order", cert.verified_order}, {"leading_coeff", to_json(cert.leading_coeff)},
              {"s_constant", to_json(cert.s_constant)}, {"matched", cert.matched},
              {"tail_matched", cert.tail_matched},     {"tail_checked", cert.tail_checked},
              {"remainder_coeffs", rem}};
}

Json to_json(const RootReport& report, const RegimeClass& regime, bool verified) {
  Json intervals = Json::array(), roots = Json::array();
  for (const auto& iv : report.intervals) intervals.push_back(Json::array({to_string(iv.lo), to_string(iv.hi)}));
  for (const auto& r : report.refined_roots) roots.push_back(serialize(r));
  return Json{{"intervals", intervals},
              {"roots", roots},
              {"multiplicities", report.multiplicities},
              {"real_count", report.real_count},
              {"all_simple", report.all_simple},
              {"predicted_interval", predicted_interval(regime.case_id)},
              {"case", case_label(regime.case_id)},
              {"hypothesis_checked", regime.hypothesis_checked},
              {"verified", verified}};
}

std::string decimal20(const BigFloat& x) { return x.to_string(20); }

Json to_json(const ConvergenceTable& table) {
  Json rows = Json::array();
  for (const auto& r : table.rows) {
    rows.push_back(Json{{"m", r.m},
                        {"n", r.n},
                        {"sup_error", decimal20(r.sup_error)},
                        {"remainder_bound", r.remainder_bound ? Json(decimal20(*r.remainder_bound)) : Json(nullptr)},
                        {"min_abs_q", decimal20(r.min_abs_q)}});
  }
  return Json{{"rows", rows}};
}

Json to_json(const SuiteResult& result) {
  return Json{{"name", result.name},
              {"passed", result.passed},
              {"failed", result.failed},
              {"failures", result.failures}};
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw InvalidParameter("polynomial JSON needs a \"coeffs\" array");
  }
  std::vector<Scalar> cs;
  for (const auto& c : j["coeffs"]) {
    if (!c.is_string()) throw InvalidParameter("polynomial coefficients must be strings");
    cs.push_back(Scalar::parse(c.get<std::string>()));
  }
  return Polynomial(std::move(cs));
}

std::string to_csv(const ConvergenceTable& table) {
  std::ostringstream out;
  out << "m,n,sup_error,remainder_bound,min_abs_q\n";
  for (const auto& r : table.rows) {
    out << r.m << ',' << r.n << ',' << decimal20(r.sup_error) << ','
        << (r.remainder_bound ? decimal20(*r.remainder_bound) : std::string("NA")) << ',' << decimal20(r.min_abs_q)
        << '\n';
  }
  return out.str();
}

}  // namespace padehyp
