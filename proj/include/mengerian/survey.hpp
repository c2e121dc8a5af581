#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mengerian/classify.hpp"
#include "mengerian/graph.hpp"

namespace mengerian {

/// One graph per isomorphism class of connected graphs on n vertices, ordered
/// by canonical label. Classes on n vertices are grown from those on n-1 by
/// attaching a new vertex to a nonempty neighbor set.
std::vector<Graph> enumerate_connected(std::size_t n, std::size_t cap = 7);

struct SurveyOptions {
  std::size_t min_n = 4;
  std::size_t max_n = 6;
  std::size_t cap = 7;
  int t = 3;
  std::size_t packing_max_n = 6;
  DecisionLimits limits;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct SurveyEntry {
  std::string canonical;
  DecisionReport report;
};

struct SurveyCounters {
  std::size_t total = 0;
  std::size_t mengerian = 0;
  std::size_t empty = 0;
  std::size_t tu = 0;
  std::size_t non_ideal = 0;
  std::size_t power_equality = 0;
  std::size_t incomplete = 0;
  friend bool operator==(const SurveyCounters&, const SurveyCounters&) = default;
};

struct SurveyReport {
  SurveyOptions options;
  std::vector<SurveyEntry> entries;
  SurveyCounters counters;
  std::map<std::size_t, SurveyCounters> per_n;
  std::vector<std::size_t> mismatches;             // classifier != pipeline
  std::vector<std::size_t> conjecture_violations;  // packing != Mengerian
  std::vector<std::size_t> dichotomy_exceptions;   // neither TU nor non-ideal
  std::vector<std::size_t> incomplete;

  /// No mismatches and no incomplete instance.
  bool verified() const;
};

SurveyReport cross_check(const SurveyOptions& options);

/// Runs the pipeline over an explicit list of graphs with the same bookkeeping.
SurveyReport cross_check_graphs(const std::vector<Graph>& graphs, const SurveyOptions& options);

}  // namespace mengerian
