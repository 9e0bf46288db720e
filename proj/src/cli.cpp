#include "padehyp/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "padehyp/analysis.hpp"
#include "padehyp/errors.hpp"
#include "padehyp/serialize.hpp"
#include "padehyp/suites.hpp"

namespace padehyp {
namespace {

struct RunConfig {
  long precision_bits = kDefaultPrecisionBits;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::string out_path;
};

struct ParamArgs {
  std::string a, c;
  int m = 0, n = 0;
};

long default_precision() {
  if (const char* env = std::getenv("PADE_PRECISION_BITS")) {
    try {
      std::size_t used = 0;
      long bits = std::stol(env, &used);
      if (used == std::string(env).size()) return bits;
    } catch (const std::exception&) {
    }
    throw InvalidParameter(std::string("PADE_PRECISION_BITS is not an integer: ") + env);
  }
  return kDefaultPrecisionBits;
}

void add_config(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--precision-bits", cfg.precision_bits, "Working precision in bits (>= 64)");
  cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--seed", cfg.seed, "Seed for randomized sweeps");
  cmd->add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
}

void add_params(CLI::App* cmd, ParamArgs& p) {
  cmd->add_option("--a", p.a, "Parameter a (decimal or p/q, parsed exactly)")->required();
  cmd->add_option("--c", p.c, "Parameter c (decimal or p/q, parsed exactly)")->required();
  cmd->add_option("--m", p.m, "Numerator degree")->required();
  cmd->add_option("--n", p.n, "Denominator degree")->required();
}

Precision checked_precision(const RunConfig& cfg) {
  if (cfg.precision_bits < kMinPrecisionBits) {
    throw InvalidParameter("--precision-bits must be >= " + std::to_string(kMinPrecisionBits) + ", got " +
                           std::to_string(cfg.precision_bits));
  }
  return static_cast<Precision>(cfg.precision_bits);
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

std::string cmd_pade(const ParamArgs& p, const RunConfig& cfg, int& code) {
  checked_precision(cfg);
  HyParams params(Scalar::parse(p.a), Scalar::parse(p.c));
  PadeOrder order(p.m, p.n);
  PadePair pair = closed_form_pair(params, order);
  Scalar s = s_constant(params, order);
  ContactCertificate cert = contact_check(params, pair, 3);
  code = (cert.matched && cert.tail_matched) ? kExitPass : kExitPropertyFailure;
  if (cfg.format == "csv") {
    std::ostringstream o;
    o << "field,index,value\n";
    for (int k = 0; k <= pair.P().degree(); ++k) o << "P," << k << ',' << pair.P().coeff(k).to_string() << '\n';
    for (int k = 0; k <= pair.Q().degree(); ++k) o << "Q," << k << ',' << pair.Q().coeff(k).to_string() << '\n';
    o << "S,," << s.to_string() << '\n';
    o << "verified_order,," << cert.verified_order << '\n';
    o << "matched,," << (cert.matched ? "true" : "false") << '\n';
    o << "tail_matched,," << (cert.tail_matched ? "true" : "false") << '\n';
    return o.str();
  }
  Json j = to_json(params, pair);
  j["S"] = to_json(s);
  j["certificate"] = to_json(cert);
  return render(j);
}

std::string cmd_poles(const ParamArgs& p, const RunConfig& cfg, int& code) {
  const Precision bits = checked_precision(cfg);
  HyParams params(Scalar::parse(p.a), Scalar::parse(p.c));
  PadeOrder order(p.m, p.n);
  if (order.n() < 1) throw InvalidOrder("poles requires n >= 1, got n = 0");
  RegimeClass regime = classify_pole_regime(params, order);
  RootReport report;
  bool verified = false;
  if (regime.case_id == ZeroCase::Unclassified) {
    report = real_roots(denominator(params, order), bits);
  } else {
    RegimeEvidence ev = verify_pole_regime(params, order, bits);
    report = std::move(ev.report);
    verified = ev.verified;
  }
  code = kExitPass;
  if (cfg.format == "csv") {
    std::ostringstream o;
    o << "index,lo,hi,root,multiplicity,predicted_interval,case\n";
    for (std::size_t i = 0; i < report.intervals.size(); ++i) {
      o << i << ',' << to_string(report.intervals[i].lo) << ',' << to_string(report.intervals[i].hi) << ','
        << serialize(report.refined_roots[i]) << ',' << report.multiplicities[i] << ','
        << predicted_interval(regime.case_id) << ',' << case_label(regime.case_id) << '\n';
    }
    return o.str();
  }
  Json j = to_json(report, regime, verified);
  j["a"] = to_json(params.a());
  j["c"] = to_json(params.c());
  j["m"] = order.m();
  j["n"] = order.n();
  return render(j);
}

struct RayArgs {
  std::string a, c, rho = "1", radius = "0.6";
  int m_max = 14;
};

std::string cmd_ray(const RayArgs& r, const RunConfig& cfg, int& code) {
  const Precision bits = checked_precision(cfg);
  HyParams params(Scalar::parse(r.a), Scalar::parse(r.c));
  if (!params.normal_regime()) {
    throw InvalidParameter("ray requires c > a > 0, got a = " + params.a().to_string() +
                           ", c = " + params.c().to_string());
  }
  RaySpec ray = RaySpec::up_to(parse_rational(r.rho), r.m_max);
  CompactRegion region(parse_rational(r.radius));
  const BigFloat eval_error = ldexp(BigFloat(1L, bits), -static_cast<long>(bits) + 32);
  ConvergenceTable table = ray_experiment(params, ray, region, eval_error);
  code = kExitPass;
  if (cfg.format == "csv") return to_csv(table);
  Json j{{"a", to_json(params.a())}, {"c", to_json(params.c())}, {"rho", to_string(ray.rho)},
         {"radius", to_string(region.radius)}};
  j["rows"] = to_json(table)["rows"];
  return render(j);
}

std::string cmd_verify(const std::string& suite, const RunConfig& cfg, int& code, std::ostream& err) {
  SuiteConfig sc;
  sc.seed = cfg.seed;
  sc.bits = checked_precision(cfg);
  std::vector<SuiteResult> results = run_suites(suite, sc);
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.ok();
    for (const auto& f : r.failures) err << "FAIL " << r.name << " seed=" << cfg.seed << " " << f << '\n';
  }
  code = ok ? kExitPass : kExitPropertyFailure;
  if (cfg.format == "csv") {
    std::ostringstream o;
    o << "suite,passed,failed\n";
    for (const auto& r : results) o << r.name << ',' << r.passed << ',' << r.failed << '\n';
    return o.str();
  }
  Json arr = Json::array();
  for (const auto& r : results) arr.push_back(to_json(r));
  return render(Json{{"seed", cfg.seed}, {"precision_bits", cfg.precision_bits}, {"suites", arr}, {"ok", ok}});
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pade approximants of 2F1(a,1;c;z): construction, pole location and convergence"};
  app.name("padehyp");
  app.require_subcommand(1);

  RunConfig cfg;
  try {
    cfg.precision_bits = default_precision();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  ParamArgs pade_args, poles_args;
  RayArgs ray_args;
  std::string suite = "all";

  auto* pade = app.add_subcommand("pade", "Closed-form [m/n] approximant with contact certificate");
  add_params(pade, pade_args);
  add_config(pade, cfg);
  auto* poles = app.add_subcommand("poles", "Certified real pole locations of the [m/n] approximant");
  add_params(poles, poles_args);
  add_config(poles, cfg);
  auto* ray = app.add_subcommand("ray", "Convergence table along a ray of the Pade table");
  ray->add_option("--a", ray_args.a, "Parameter a")->required();
  ray->add_option("--c", ray_args.c, "Parameter c")->required();
  ray->add_option("--rho", ray_args.rho, "Ray slope n/m in (0,1]");
  ray->add_option("--m-max", ray_args.m_max, "Largest m on the ray");
  ray->add_option("--radius", ray_args.radius, "Radius of the sample disc, in (0,1)");
  add_config(ray, cfg);
  auto* verify = app.add_subcommand("verify", "Run seeded property suites");
  verify->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember({"all", "oracle", "contact", "regimes", "orthogonality", "rodrigues", "bounds"}));
  add_config(verify, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  int code = kExitPass;
  std::string text;
  try {
    if (*pade) text = cmd_pade(pade_args, cfg, code);
    else if (*poles) text = cmd_poles(poles_args, cfg, code);
    else if (*ray) text = cmd_ray(ray_args, cfg, code);
    else text = cmd_verify(suite, cfg, code, err);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ContactFailure& e) {
    err << "contact failure at coefficient " << e.index() << ": " << e.what() << '\n';
    return kExitPropertyFailure;
  } catch (const Error& e) {
    err << "failure: " << e.what() << '\n';
    return kExitPropertyFailure;
  }

  if (cfg.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file || !(file << text)) {
      err << "error: cannot write " << cfg.out_path << '\n';
      return kExitUsage;
    }
  }
  return code;
}

}  // namespace padehyp
