#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "braids/regular.hpp"

namespace braids {

enum class TrialOutcome { CertifiedConjugate, Equal, Unknown, PreconditionFailed };
std::string to_string(TrialOutcome o);

struct DecompositionHints {
  TubularDecomposition alpha;
  TubularDecomposition beta;
};

struct PowersResult {
  TrialOutcome outcome = TrialOutcome::Unknown;
  std::optional<ConjugacyCertificate> certificate;
  std::string detail;  // offending normal forms on PreconditionFailed
};

// Decides alpha ~ beta given alpha^k = beta^k. The precondition is checked
// first; equal braids report Equal, periodic pairs go through their standard
// powers, decomposed pairs through the regular-form pipeline with recursion
// on interiors, anything else through the summit-set search. A definite
// refutation is impossible here, so failures surface as Unknown.
PowersResult conjugacy_via_powers(const BraidWord& alpha, const BraidWord& beta, long long k,
                                  const std::optional<DecompositionHints>& hints = std::nullopt,
                                  long long budget = 10000);

enum class InstanceFamily { F1PeriodicCentral, F2Equal, F3ReducibleOrbitSwap, F4Negative };
std::string to_string(InstanceFamily f);
std::optional<InstanceFamily> family_from_string(const std::string& s);

struct Instance {
  BraidWord alpha;
  BraidWord beta;
  long long k = 1;
  std::optional<DecompositionHints> hints;
};

struct InstanceParams {
  int max_strands = 10;
  int max_k = 6;
  int max_conjugator_letters = 20;
};

Instance generate_instance(InstanceFamily family, const InstanceParams& params, uint64_t seed);

// All roots of rho of index k representable by at most max_letters letters,
// deduplicated by normal form, in canonical order.
std::vector<BraidWord> brute_force_root(const BraidWord& rho, long long k, int max_letters);

struct TrialReport {
  int trial = 0;
  InstanceFamily family = InstanceFamily::F2Equal;
  uint64_t seed = 0;
  int n = 2;
  long long k = 1;
  BraidWord alpha;
  BraidWord beta;
  TrialOutcome outcome = TrialOutcome::Unknown;
  std::optional<BraidWord> witness;
  long long millis = 0;
};

struct RunConfig {
  std::vector<InstanceFamily> families{InstanceFamily::F1PeriodicCentral,
                                       InstanceFamily::F2Equal,
                                       InstanceFamily::F3ReducibleOrbitSwap};
  int trials = 200;
  uint64_t master_seed = 42;
  InstanceParams params;
  long long budget = 10000;
};

struct RunSummary {
  std::vector<TrialReport> reports;
  int certified = 0;
  int equal = 0;
  int unknown = 0;
  int precondition_failed = 0;
  bool ok = false;  // every outcome matched its family's expectation
};

RunSummary run_trials(const RunConfig& config);

// One JSON object per line plus a summary footer.
void write_report(std::ostream& os, const RunConfig& config, const RunSummary& summary);

}  // namespace braids
