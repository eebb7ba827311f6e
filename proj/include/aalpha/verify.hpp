#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "aalpha/graph.hpp"
#include "aalpha/predict.hpp"

namespace aalpha {

struct VerificationReport {
  std::string case_id;
  int n = 0;
  double alpha = 0.0;
  bool matched = false;
  double max_error = 0.0;
  int fixed_dim = 0;
  int aux_dim = 0;
  double wall_time_seconds = 0.0;  // measured, never part of pass/fail
  std::string note;                // structural failures etc., not serialized
};

// Direct eigensolve of A_alpha(g) against the assembled prediction.
// A dimension mismatch is reported as a structural failure, not a numeric one.
VerificationReport verify_prediction(const Graph& g, const SpectralPrediction& pred,
                                     Alpha a, double tol,
                                     const std::string& case_id);

struct SweepOptions {
  std::vector<double> alphas{0.0, 0.25, 0.5, 0.75, 1.0};
  double tol = kDefaultTol;
  std::uint64_t seed = 20230815;  // random joined-union suite
  int count = 50;                 // number of random specs
  // Family-specific instance parameters; empty selects the default grid.
  std::vector<std::vector<long long>> instances;
  double perturb = 0.0;  // fault injection into the first predicted eigenvalue
};

// One report per (instance, alpha), in deterministic order. Cases may be
// solved concurrently; collection order never depends on completion order.
std::vector<VerificationReport> run_sweep(const std::string& suite,
                                          const SweepOptions& opt);

std::vector<std::string> known_suites();

// Fixed field order, 17-significant-digit floats; wall time is excluded so
// two identical sweeps serialize byte-identically.
void write_report_json(const std::vector<VerificationReport>& reports,
                       std::ostream& out);
void write_report_csv(const std::vector<VerificationReport>& reports,
                      std::ostream& out);

// Seeded generator behind the random joined-union suite: connected base on
// 3-6 vertices, parts drawn from a fixed pool of small regular graphs.
struct RandomJoinedUnionCase {
  JoinedUnionSpec spec;
  std::vector<RegularPart> parts;
  std::string id;
};
RandomJoinedUnionCase random_joined_union_case(std::mt19937_64& rng, int index);

}  // namespace aalpha
