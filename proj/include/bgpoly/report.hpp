#pragma once

#include <string>
#include <vector>

#include "bgpoly/budgets.hpp"
#include "bgpoly/graph.hpp"

#include "json.hpp"

namespace bgpoly {

struct AnalyzeOptions {
  int kmax = 3;
  bool run_geometry = true;  // facets, Ehrhart, reflexivity, IDP
  int geom_dim_max = 6;      // skip Ehrhart/IDP above this many vertices
  bool timings = false;      // opt-in: timing data breaks byte-determinism
  Budgets budgets;
};

// Aggregated analysis of one graph. All polynomials pass their integrity
// checks (palindromicity, gamma reconstruction, Ehrhart agreement) before the
// report is produced; coefficient values serialize as decimal strings.
nlohmann::ordered_json analyze_graph(const Graph& g, const AnalyzeOptions& opts);

std::string render_analysis_text(const nlohmann::ordered_json& report);

struct VerifyResult {
  bool pass = true;
  std::vector<std::string> lines;  // "ok: ..." / "MISMATCH: ..." / "note: ..."
};

// level fast: interior formula vs hypertree oracle, gamma identities.
// level full: adds Ehrhart triple agreement, the orthant volume identity,
// the edge-vector face property, and the reflexivity criterion.
VerifyResult verify_graph(const Graph& g, bool full, const Budgets& budgets,
                          int geom_dim_max = 6);

}  // namespace bgpoly
