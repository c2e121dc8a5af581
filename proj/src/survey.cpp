#include "mengerian/survey.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace mengerian {

std::vector<Graph> enumerate_connected(std::size_t n, std::size_t cap) {
  if (n < 1 || n > cap) {
    throw std::invalid_argument("enumerate_connected: n = " + std::to_string(n) + " outside 1.." + std::to_string(cap));
  }
  if (n == 1) return {Graph(1)};
  std::map<std::string, Graph> classes;
  for (const auto& base : enumerate_connected(n - 1, cap)) {
    const std::size_t v = n - 1;
    for (VertexSet nb = 1; nb < singleton(v); ++nb) {
      Graph g(n, base.edges());
      for (VertexSet s = nb; s != 0; s &= s - 1) g.add_edge(lowest(s), v);
      auto label = canonical_form(g);
      if (!classes.contains(label)) classes.emplace(label, parse_graph6(label));
    }
  }
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [label, g] : classes) out.push_back(std::move(g));
  return out;
}

bool SurveyReport::verified() const { return mismatches.empty() && incomplete.empty(); }

SurveyReport cross_check_graphs(const std::vector<Graph>& graphs, const SurveyOptions& options) {
  SurveyReport report;
  report.options = options;
  report.entries.resize(graphs.size());
  DecisionLimits limits = options.limits;
  limits.packing_max_n = options.packing_max_n;

  unsigned threads = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(graphs.size(), 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < graphs.size();) {
      try {
        const auto& g = graphs[i];
        auto& e = report.entries[i];
        e.canonical = g.num_vertices() <= 9 ? canonical_form(g) : to_graph6(g);
        e.report = decide_mengerian_exact(g, options.t, limits);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    const auto& d = report.entries[i].report;
    for (auto* c : {&report.counters, &report.per_n[d.graph.num_vertices()]}) {
      ++c->total;
      if (!d.complete) {
        ++c->incomplete;
        continue;
      }
      if (*d.mengerian) ++c->mengerian;
      switch (*d.trace) {
        case Trace::empty: ++c->empty; break;
        case Trace::tu_shortcut: ++c->tu; break;
        case Trace::non_ideal: ++c->non_ideal; break;
        case Trace::power_equality: ++c->power_equality; break;
      }
    }
    if (!d.complete) {
      report.incomplete.push_back(i);
      continue;
    }
    if (d.agreement && !*d.agreement) report.mismatches.push_back(i);
    if (d.packing && d.packing->holds != *d.mengerian) report.conjecture_violations.push_back(i);
    if (*d.trace == Trace::power_equality) report.dichotomy_exceptions.push_back(i);
  }
  return report;
}

SurveyReport cross_check(const SurveyOptions& options) {
  if (options.min_n < 1 || options.min_n > options.max_n) throw std::invalid_argument("survey: empty range of n");
  if (options.max_n > options.cap) {
    throw std::invalid_argument("survey: max n " + std::to_string(options.max_n) + " exceeds cap " +
                                std::to_string(options.cap));
  }
  std::vector<Graph> graphs;
  for (std::size_t n = options.min_n; n <= options.max_n; ++n) {
    auto level = enumerate_connected(n, options.cap);
    graphs.insert(graphs.end(), level.begin(), level.end());
  }
  return cross_check_graphs(graphs, options);
}

}  // namespace mengerian
