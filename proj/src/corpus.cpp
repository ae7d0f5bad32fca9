#include "folex/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <thread>

namespace folex::ops {

std::vector<CorpusCase> load_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<CorpusCase> cases;
  if (!fs::exists(dir)) return cases;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    std::ifstream in(entry.path());
    json doc = json::parse(in);
    // A file holds either one case object or an array of them.
    std::vector<json> docs;
    if (doc.is_array())
      docs.assign(doc.begin(), doc.end());
    else
      docs.push_back(doc);
    for (const json& c : docs) {
      CorpusCase cc;
      cc.id = c.at("id");
      cc.op = c.at("op");
      cc.params = c.at("params");
      cc.expected = c.at("expected");
      cc.anchor = c.value("paper_anchor", "");
      cases.push_back(std::move(cc));
    }
  }
  std::sort(cases.begin(), cases.end(),
            [](const CorpusCase& a, const CorpusCase& b) { return a.id < b.id; });
  return cases;
}

namespace {

CaseResult run_case(const CorpusCase& c) {
  CaseResult r;
  r.id = c.id;
  auto t0 = std::chrono::steady_clock::now();
  try {
    json actual = run_op(c.op, c.params);
    if (json_subset(c.expected, actual)) {
      r.passed = true;
    } else {
      r.detail = "expected " + c.expected.dump() + " within " + actual.dump();
    }
  } catch (const std::exception& e) {
    r.detail = std::string("error: ") + e.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  r.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return r;
}

unsigned thread_count(size_t n_cases) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("FOLEX_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(v));
  }
  return std::min<unsigned>(hw, static_cast<unsigned>(std::max<size_t>(n_cases, 1)));
}

}  // namespace

CorpusSummary run_corpus(const std::vector<CorpusCase>& cases) {
  CorpusSummary sum;
  if (cases.empty()) {
    sum.empty_warning = true;
    return sum;
  }
  sum.results.resize(cases.size());
  std::atomic<size_t> next{0};
  unsigned nt = thread_count(cases.size());
  auto worker = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= cases.size()) break;
      sum.results[i] = run_case(cases[i]);
    }
  };
  if (nt <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const CaseResult& r : sum.results) (r.passed ? sum.passed : sum.failed)++;
  return sum;
}

}  // namespace folex::ops
