#pragma once

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "racg/cayley.hpp"
#include "racg/families.hpp"
#include "racg/subgroup.hpp"
#include "racg/vkd.hpp"

namespace racg::io {

using Json = nlohmann::ordered_json;

// ---- documents (emit then re-parse round-trips) ----

// {"vertices": [names in canonical order], "edges": [[u,v], ...]}
Json graph_to_json(const DefiningGraph& g);
DefiningGraph graph_from_json(const Json& doc);

// {"graph": <graph doc>, "generators": ["a b", ...]}
Json subgroup_to_json(const FinGenSubgroup& h);

// a loaded subgroup owns its graph; keep the holder alive while using it
struct LoadedSubgroup {
  std::unique_ptr<DefiningGraph> graph;
  FinGenSubgroup subgroup;
};
LoadedSubgroup subgroup_from_json(const Json& doc);

// {"graph": ..., "boundary": "a b a b", "arcs": [[i,j], ...]}
Json diagram_to_json(const DualVanKampenDiagram& d);

struct LoadedDiagram {
  std::unique_ptr<DefiningGraph> graph;
  DualVanKampenDiagram diagram;
};
LoadedDiagram diagram_from_json(const Json& doc);

// diagram doc plus "blocks" (factor prefix ends) and "tags" per arc
Json reducing_to_json(const ReducingDiagram& d);

// ---- reports ----

std::string word_str(const DefiningGraph& g,
                     const std::vector<VertexId>& letters);
Json names_json(const DefiningGraph& g, VertexSet s);

Json scan_report_to_json(const ScanReport& r);
Json parabolic_flags_to_json(const DefiningGraph& g, const ParabolicFlags& f);
Json collection_flags_to_json(const CollectionFlags& f);
Json join_busting_to_json(const JoinBustingEstimate& e);
Json preconditions_to_json(const PreconditionReport& r);
Json free_basis_to_json(const FreeBasisReport& r);
Json divergence_to_json(const DivergenceEstimate& e);
Json corner_path_to_json(const CornerPath& p);
Json rank_to_json(const RankResult& r);

// ---- emitters ----

std::string graph_dot(const DefiningGraph& g);
// one node per four-cycle, labeled by corners, annotated with its
// component's support
std::string four_cycle_graph_dot(const FourCycleGraph& fcg);
// ball with highlighted vertices doubly circled (e.g. a sphere or the
// boundary of a subgroup neighborhood)
std::string ball_dot(const CayleyBall& ball,
                     const std::vector<char>& highlight);
// boundary cycle solid, chords dashed
std::string diagram_dot(const DualVanKampenDiagram& d);

std::string divergence_csv_header();
std::string divergence_csv_row(const DivergenceEstimate& e);

// ---- file helpers ----

Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);

}  // namespace racg::io
