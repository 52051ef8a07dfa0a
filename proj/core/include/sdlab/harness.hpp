#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdlab/report.hpp"

namespace sdlab {

/// Stored golden values for the worked instances, keyed "instance.quantity".
json corpus_expectations();

/// Recomputes every golden quantity from scratch.
json corpus_observations();

struct GoldenCheck {
  std::string key;
  json expected;
  json observed;
  bool ok = false;
};

struct CorpusReport {
  std::vector<GoldenCheck> checks;
  double seconds = 0;

  bool ok() const;
  json to_json() const;
};

/// Compares observations with `expected`; keys missing on either side fail.
CorpusReport run_corpus(const json& expected);

struct FuzzConfig {
  int n = 6;           // instances use 3..n variables
  std::uint64_t count = 100;
  std::uint64_t seed = 1;
  /// Every `ml1_every`-th instance is drawn from the r = 2 surgery generator.
  std::uint64_t ml1_every = 4;
  SearchLimits limits{5'000'000};
};

struct FuzzSummary {
  std::uint64_t instances = 0;
  std::uint64_t skipped = 0;
  std::uint64_t inconsistent = 0;   // records with an applicable rule violated
  std::uint64_t audit_failures = 0;
  std::uint64_t findings = 0;
  std::uint64_t ml1_instances = 0;
  std::uint64_t ml1_certified = 0;
  std::uint64_t ml1_driver_failures = 0;
  std::uint64_t ml1_disjunction_confirmed = 0;  // among the driver failures
  double seconds = 0;

  bool ok() const;
  json to_json() const;
};

/// Seed of instance i, independent of every other instance.
std::uint64_t instance_seed(std::uint64_t master, std::uint64_t index);

/// One self-contained record; `findings` collects anything to log separately.
json fuzz_instance(const FuzzConfig& config, std::uint64_t index, std::vector<json>& findings);

/**
 * Runs the fuzzer, writing one JSON line per instance to `log_path` and
 * findings to findings.jsonl in the same directory.
 */
FuzzSummary run_fuzz(const FuzzConfig& config, const std::string& log_path);

/// Path of the findings log that accompanies `log_path`.
std::string findings_path(const std::string& log_path);

/**
 * The surgery lemma's conclusion checked without the driver: sdepth ≥ d+2, or
 * some nonzero I' ⊊ I generated by degree-d generators and B-elements with
 * sdepth(I'/J') ≤ d+1 and depth I/(J,I') ≥ d+1.
 */
bool ml1_disjunction_direct(const QuotientPair& q, const SearchLimits& limits = {});

}  // namespace sdlab
