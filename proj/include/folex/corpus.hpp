#ifndef FOLEX_CORPUS_HPP
#define FOLEX_CORPUS_HPP

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "folex/ops.hpp"

namespace folex::ops {

struct CorpusCase {
  std::string id;
  std::string op;
  json params;
  json expected;
  std::string anchor;
};

struct CaseResult {
  std::string id;
  bool passed = false;
  std::string detail;  // mismatch description or error message
  double millis = 0.0;
};

struct CorpusSummary {
  std::vector<CaseResult> results;
  int passed = 0;
  int failed = 0;
  bool empty_warning = false;
  bool ok() const { return failed == 0; }
};

// Loads every *.json case file from `dir`, sorted by case id.
std::vector<CorpusCase> load_corpus(const std::string& dir);

// Replays cases (parallel up to FOLEX_THREADS, default hardware concurrency)
// and compares each expected verdict as a JSON subset of the actual report.
// Results are reported in deterministic (id) order regardless of scheduling.
CorpusSummary run_corpus(const std::vector<CorpusCase>& cases);

}  // namespace folex::ops

#endif
