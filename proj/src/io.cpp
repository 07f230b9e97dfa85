#include "racg/io.hpp"

#include <fstream>
#include <sstream>

namespace racg::io {

namespace {

Json require_field(const Json& doc, const char* field) {
  if (!doc.is_object() || !doc.contains(field))
    throw Error(std::string("document is missing field \"") + field + "\"");
  return doc.at(field);
}

std::string quote_dot(const std::string& s) {
  return "\"" + s + "\"";  // names exclude quotes by construction
}

}  // namespace

std::string word_str(const DefiningGraph& g,
                     const std::vector<VertexId>& letters) {
  std::string out;
  for (VertexId v : letters) {
    if (!out.empty()) out += ' ';
    out += g.name(v);
  }
  return out;
}

Json names_json(const DefiningGraph& g, VertexSet s) {
  Json arr = Json::array();
  for (VertexId v : s) arr.push_back(g.name(v));
  return arr;
}

Json graph_to_json(const DefiningGraph& g) {
  Json doc;
  Json vertices = Json::array();
  for (int r = 0; r < g.vertex_count(); ++r)
    vertices.push_back(g.name(g.by_rank(r)));
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges())
    edges.push_back(Json::array({g.name(u), g.name(v)}));
  doc["vertices"] = std::move(vertices);
  doc["edges"] = std::move(edges);
  return doc;
}

DefiningGraph graph_from_json(const Json& doc) {
  Json jverts = require_field(doc, "vertices");
  Json jedges = require_field(doc, "edges");
  if (!jverts.is_array()) throw Error("\"vertices\" must be an array");
  if (!jedges.is_array()) throw Error("\"edges\" must be an array");
  std::vector<std::string> vertices;
  for (const Json& v : jverts) {
    if (!v.is_string()) throw Error("vertex names must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const Json& e : jedges) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() ||
        !e[1].is_string())
      throw Error("each edge must be a two-name array");
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return DefiningGraph(std::move(vertices), edges);
}

Json subgroup_to_json(const FinGenSubgroup& h) {
  if (h.graph == nullptr) throw Error("subgroup has no graph");
  Json doc;
  doc["graph"] = graph_to_json(*h.graph);
  Json gens = Json::array();
  for (const NormalForm& t : h.generators) gens.push_back(t.str());
  doc["generators"] = std::move(gens);
  return doc;
}

LoadedSubgroup subgroup_from_json(const Json& doc) {
  LoadedSubgroup out;
  out.graph =
      std::make_unique<DefiningGraph>(graph_from_json(require_field(doc, "graph")));
  Json gens = require_field(doc, "generators");
  if (!gens.is_array() || gens.empty())
    throw Error("\"generators\" must be a nonempty array of words");
  std::vector<std::string> words;
  for (const Json& w : gens) {
    if (!w.is_string()) throw Error("generators must be word strings");
    words.push_back(w.get<std::string>());
  }
  out.subgroup = FinGenSubgroup::from_words(*out.graph, words);
  return out;
}

Json diagram_to_json(const DualVanKampenDiagram& d) {
  if (d.graph == nullptr) throw Error("diagram has no graph");
  Json doc;
  doc["graph"] = graph_to_json(*d.graph);
  doc["boundary"] = word_str(*d.graph, d.boundary);
  Json arcs = Json::array();
  for (const auto& [i, j] : d.arcs()) arcs.push_back(Json::array({i, j}));
  doc["arcs"] = std::move(arcs);
  return doc;
}

LoadedDiagram diagram_from_json(const Json& doc) {
  LoadedDiagram out;
  out.graph =
      std::make_unique<DefiningGraph>(graph_from_json(require_field(doc, "graph")));
  std::string boundary = require_field(doc, "boundary").get<std::string>();
  out.diagram.graph = out.graph.get();
  out.diagram.boundary = parse_word(*out.graph, boundary);
  out.diagram.partner.assign(out.diagram.boundary.size(), -1);
  Json arcs = require_field(doc, "arcs");
  if (!arcs.is_array()) throw Error("\"arcs\" must be an array");
  for (const Json& a : arcs) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() ||
        !a[1].is_number_integer())
      throw Error("each arc must be a two-index array");
    int i = a[0].get<int>();
    int j = a[1].get<int>();
    if (i < 0 || j < 0 || i >= out.diagram.size() || j >= out.diagram.size() ||
        i == j)
      throw Error("arc endpoints out of range");
    if (out.diagram.partner[i] != -1 || out.diagram.partner[j] != -1)
      throw Error("position appears in two arcs");
    out.diagram.partner[i] = j;
    out.diagram.partner[j] = i;
  }
  for (int i = 0; i < out.diagram.size(); ++i)
    if (out.diagram.partner[i] < 0)
      throw Error("position " + std::to_string(i) + " is unmatched");
  return out;
}

Json reducing_to_json(const ReducingDiagram& d) {
  Json doc = diagram_to_json(d.diagram);
  doc["blocks"] = d.block_ends;
  Json tags = Json::array();
  for (ArcTag t : d.tags)
    tags.push_back(t == ArcTag::contributing ? "contributing"
                                             : "noncontributing");
  doc["tags"] = std::move(tags);
  doc["reduced_length"] = d.w_length;
  return doc;
}

Json scan_report_to_json(const ScanReport& r) {
  Json doc;
  doc["verdict"] = std::string(verdict_name(r.verdict));
  if (r.witness) {
    Json w;
    w["element"] = r.witness->element.str();
    if (r.witness->conjugator)
      w["conjugator"] = r.witness->conjugator->str();
    w["explanation"] = r.witness->explanation;
    doc["witness"] = std::move(w);
  }
  doc["bound"] = r.bound;
  doc["caveats"] = r.caveats;
  return doc;
}

Json parabolic_flags_to_json(const DefiningGraph& g, const ParabolicFlags& f) {
  Json doc;
  doc["finite"] = f.finite;
  doc["join_free"] = std::string(tri_name(f.join_free));
  doc["star_free"] = std::string(tri_name(f.star_free));
  doc["almost_malnormal"] = f.almost_malnormal;
  doc["strongly_quasiconvex"] = f.strongly_quasiconvex;
  if (f.distance_two_pair)
    doc["distance_two_pair"] = Json::array(
        {g.name(f.distance_two_pair->first), g.name(f.distance_two_pair->second)});
  if (f.cone_vertex) doc["cone_vertex"] = g.name(*f.cone_vertex);
  if (f.coned_pair)
    doc["coned_pair"] = Json::array(
        {g.name(f.coned_pair->first), g.name(f.coned_pair->second)});
  if (f.squeezing_cycle) {
    Json corners = Json::array();
    for (VertexId v : f.squeezing_cycle->corners) corners.push_back(g.name(v));
    doc["squeezing_cycle"] = std::move(corners);
  }
  return doc;
}

Json collection_flags_to_json(const CollectionFlags& f) {
  Json doc;
  doc["almost_malnormal"] = f.almost_malnormal;
  doc["hyperbolically_embedded"] = f.hyperbolically_embedded;
  if (!f.reason.empty()) doc["reason"] = f.reason;
  return doc;
}

Json join_busting_to_json(const JoinBustingEstimate& e) {
  Json doc;
  doc["value"] = e.value;
  if (e.max_element) {
    doc["element"] = e.max_element->str();
    doc["window"] = Json::array({e.window.begin, e.window.end});
  }
  doc["depth"] = e.depth;
  doc["caveat"] = e.caveat;
  return doc;
}

Json preconditions_to_json(const PreconditionReport& r) {
  Json doc;
  doc["graph_connected"] = r.graph_connected;
  doc["graph_non_join"] = r.graph_non_join;
  doc["reflections"] = scan_report_to_json(r.reflections);
  doc["join_free"] = scan_report_to_json(r.join_free);
  doc["conclusive_failure"] = r.conclusive_failure;
  doc["summary"] = r.summary;
  return doc;
}

Json free_basis_to_json(const FreeBasisReport& r) {
  Json doc;
  doc["passed"] = r.passed;
  doc["depth"] = r.depth;
  doc["ratio"] = r.ratio;
  doc["words_checked"] = r.words_checked;
  if (r.failing_word) doc["failing_word"] = *r.failing_word;
  if (r.failing_element) doc["failing_element"] = r.failing_element->str();
  doc["reason"] = r.reason;
  return doc;
}

Json divergence_to_json(const DivergenceEstimate& e) {
  Json doc;
  if (e.params.n > 0) doc["n"] = e.params.n;
  doc["rho"] = e.params.rho.str();
  doc["r"] = e.params.r;
  doc["radius"] = e.params.radius;
  if (e.value)
    doc["value"] = *e.value;
  else
    doc["value"] = "inf";
  if (e.pair)
    doc["pair"] = Json::array({e.pair->first.str(), e.pair->second.str()});
  doc["truncated"] = e.truncated;
  doc["note"] = e.note;
  return doc;
}

Json corner_path_to_json(const CornerPath& p) {
  Json doc;
  Json verts = Json::array();
  for (const NormalForm& v : p.vertices) verts.push_back(v.str());
  doc["vertices"] = std::move(verts);
  doc["length"] = p.length();
  doc["segments"] = p.segments;
  return doc;
}

Json rank_to_json(const RankResult& r) {
  Json doc;
  doc["value"] = r.value;
  doc["capped"] = r.capped;
  return doc;
}

std::string graph_dot(const DefiningGraph& g) {
  std::ostringstream os;
  os << "graph defining {\n";
  for (int r = 0; r < g.vertex_count(); ++r)
    os << "  " << quote_dot(g.name(g.by_rank(r))) << ";\n";
  for (const auto& [u, v] : g.edges())
    os << "  " << quote_dot(g.name(u)) << " -- " << quote_dot(g.name(v))
       << ";\n";
  os << "}\n";
  return os.str();
}

std::string four_cycle_graph_dot(const FourCycleGraph& fcg) {
  std::ostringstream os;
  const DefiningGraph& g = *fcg.graph;
  os << "graph four_cycles {\n";
  for (std::size_t i = 0; i < fcg.nodes.size(); ++i) {
    const FourCycle& q = fcg.nodes[i];
    std::string label = g.name(q.corners[0]) + "-" + g.name(q.corners[1]) +
                        "-" + g.name(q.corners[2]) + "-" +
                        g.name(q.corners[3]);
    std::string support;
    for (VertexId v : fcg.supports[fcg.component[i]]) {
      if (!support.empty()) support += ' ';
      support += g.name(v);
    }
    os << "  q" << i << " [label=" << quote_dot(label)
       << " support=" << quote_dot(support) << "];\n";
  }
  for (const FourCycleGraph::Edge& e : fcg.edges)
    os << "  q" << e.a << " -- q" << e.b << " [label="
       << quote_dot(g.name(e.shared.first) + "," + g.name(e.shared.second))
       << "];\n";
  os << "}\n";
  return os.str();
}

std::string ball_dot(const CayleyBall& ball,
                     const std::vector<char>& highlight) {
  if (highlight.size() != ball.size())
    throw Error("highlight vector does not match the ball");
  std::ostringstream os;
  os << "graph ball {\n";
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const NormalForm& w = ball.elements[i];
    os << "  n" << i << " [label="
       << quote_dot(w.is_identity() ? std::string("e") : w.str());
    if (highlight[i]) os << " peripheries=2";
    os << "];\n";
  }
  for (std::size_t i = 0; i < ball.size(); ++i)
    for (int j : ball.neighbors[i])
      if (static_cast<std::size_t>(j) > i) os << "  n" << i << " -- n" << j << ";\n";
  os << "}\n";
  return os.str();
}

std::string diagram_dot(const DualVanKampenDiagram& d) {
  std::ostringstream os;
  const DefiningGraph& g = *d.graph;
  os << "graph chords {\n  layout=circo;\n";
  for (int i = 0; i < d.size(); ++i)
    os << "  p" << i << " [label=" << quote_dot(g.name(d.boundary[i]))
       << "];\n";
  for (int i = 0; i < d.size(); ++i)
    os << "  p" << i << " -- p" << (i + 1) % d.size() << ";\n";
  for (const auto& [i, j] : d.arcs())
    os << "  p" << i << " -- p" << j << " [style=dashed];\n";
  os << "}\n";
  return os.str();
}

std::string divergence_csv_header() { return "r,n,rho,R,sigma,truncated,pair"; }

std::string divergence_csv_row(const DivergenceEstimate& e) {
  std::ostringstream os;
  os << e.params.r << ',';
  if (e.params.n > 0) os << e.params.n;
  os << ',' << e.params.rho.str() << ',' << e.params.radius << ',';
  if (e.value)
    os << *e.value;
  else
    os << "inf";
  os << ',' << (e.truncated ? "yes" : "no") << ',';
  if (e.pair)
    os << '"' << e.pair->first.str() << " | " << e.pair->second.str() << '"';
  return os.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file " + path);
  Json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error("file " + path + " is not valid structured text: " + e.what());
  }
  return doc;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace racg::io
