#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padehyp/bigfloat.hpp"
#include "padehyp/pade.hpp"
#include "padehyp/rootloc.hpp"
#include "padehyp/sampling.hpp"

namespace padehyp {

// Randomized property sweeps shared by `padehyp verify` and the acceptance
// binary. Every suite draws from Rng(seed), so a seed names a fixed list of
// instances and failures can be replayed from their printed parameters.

struct SuiteConfig {
  std::uint64_t seed = 0;
  Precision bits = kDefaultPrecisionBits;
  int oracle_tuples = 200;
  // Per pole-location case.
  int regime_tuples = 100;
  // Per interval case.
  int orthogonality_tuples = 50;
  int rodrigues_tuples = 50;
  int rodrigues_points = 10;
  // Per c - a regime.
  int bound_tuples = 50;
};

struct SuiteResult {
  std::string name;
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;
  bool ok() const { return failed == 0; }
};

struct PadeTuple {
  HyParams params;
  PadeOrder order;
};

struct ZeroTuple {
  int n = 1;
  Rational b;
  Rational d;
  ZeroCase which = ZeroCase::Unclassified;
};

std::string describe(const PadeTuple& t);
std::string describe(const ZeroTuple& t);

// c > a > 0 rational, 0 <= m <= max_m, n <= m+1.
PadeTuple sample_normal_tuple(Rng& rng, int max_m = 8);
// Pole-location case hypotheses enforced strictly; n in 1..8, m in max(0,n-1)..10.
PadeTuple sample_pole_tuple(Rng& rng, ZeroCase which);
// Zero-location case hypotheses enforced strictly; n in 1..max_n.
ZeroTuple sample_zero_tuple(Rng& rng, ZeroCase which, int max_n = 6);
// c > a > 0 with c - a in (1, 6) or (0, 1).
HyParams sample_bound_params(Rng& rng, bool above_one);

SuiteResult run_oracle_suite(const SuiteConfig& cfg);
SuiteResult run_contact_suite(const SuiteConfig& cfg);
SuiteResult run_regime_suite(const SuiteConfig& cfg);
SuiteResult run_orthogonality_suite(const SuiteConfig& cfg);
SuiteResult run_rodrigues_suite(const SuiteConfig& cfg);
SuiteResult run_bound_suite(const SuiteConfig& cfg);

// "oracle", "contact", "regimes", "orthogonality", "rodrigues", "bounds".
const std::vector<std::string>& suite_names();
// One result per suite; "all" runs every suite. Throws InvalidParameter for
// an unknown name.
std::vector<SuiteResult> run_suites(const std::string& name, const SuiteConfig& cfg);

}  // namespace padehyp
