#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ohg/hypergraph.hpp"
#include "ohg/walks.hpp"

namespace ohg {

enum class CheckStatus { pass, fail, skipped };

const char* to_string(CheckStatus status);

struct CheckResult {
  std::string check_name;
  std::size_t trial = 0;
  std::string instance_summary;
  CheckStatus status = CheckStatus::pass;
  // Reported but never counted against the run (claims the theory does not
  // make, e.g. the walk-power oracle on non-simple instances).
  bool informational = false;
  std::string detail;
  // JSON document with the instance, the seed, and the offending matrices or
  // walk; present on every failure.
  std::optional<std::string> counterexample;
  std::uint64_t seed = 0;
};

struct VerificationReport {
  std::vector<CheckResult> results;
  // Set when a check was skipped because walk enumeration hit its ceiling.
  bool incomplete = false;

  bool all_passed() const;
  std::size_t failure_count() const;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  // Walks are enumerated up to this many incidences (k ≤ n/2).
  std::size_t max_walk_incidences = 8;
  std::size_t max_vertices = 8;
  std::size_t max_edges = 8;
  std::size_t max_edge_size = 4;
  // Random θ drawn per instance for the switching checks.
  std::size_t switchings = 20;
  // Share of trials whose mixed instance is non-simple.
  double non_simple_fraction = 0.3;
  // Corrupts one Laplacian entry so the harness must report a failure.
  bool self_test = false;
  // 0 = one worker per hardware thread.
  unsigned threads = 0;
  EnumerationLimits limits;
};

// Runs every applicable check on one instance. θ draws use options.seed.
VerificationReport verify_instance(const OrientedHypergraph& g, const VerifyOptions& options);

// Generates options.trials seeded trials, each with a mixed instance, a simple
// k-uniform instance and a simple 2-uniform instance, and checks them all.
// Results are sorted by check name, then trial, regardless of scheduling.
VerificationReport verify_family(const VerifyOptions& options);

std::string format_report_text(const VerificationReport& report);
std::string format_report_json(const VerificationReport& report);

}  // namespace ohg
