#pragma once

#include <string>

#include "json.hpp"
#include "mengerian/classify.hpp"
#include "mengerian/clutter.hpp"
#include "mengerian/covering_polyhedron.hpp"
#include "mengerian/survey.hpp"

namespace mengerian {

inline constexpr int kSchemaVersion = 1;

nlohmann::json graph_json(const Graph& g);
nlohmann::json clutter_json(const Clutter& c);
nlohmann::json vertex_json(const PolyhedronVertex& v, bool full);
nlohmann::json unimodularity_json(const UnimodularityResult& r);
nlohmann::json ideal_json(const IdealResult& r, bool full);
nlohmann::json packing_json(const PackingResult& r);
nlohmann::json konig_json(const KonigResult& r);
nlohmann::json ntf_json(const TorsionFreeResult& r, bool full);
nlohmann::json mfmc_json(const MfmcProbe& r);
nlohmann::json verdict_json(const ClassVerdict& v);

/// Full DecisionReport. `full` adds hyperedges, tight sets and transcripts.
nlohmann::json to_json(const DecisionReport& r, bool full);
nlohmann::json to_json(const SurveyReport& r, bool full);

/// One row per graph: n, canonical label, graph6, clause, trace, verdicts.
std::string to_csv(const SurveyReport& r);

}  // namespace mengerian
