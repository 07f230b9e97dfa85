#include "racg/families.hpp"

namespace racg {

namespace {

using Edges = std::vector<std::pair<std::string, std::string>>;

// right half shared by omega_graph(d) and gamma_graph(d-1): central square,
// b-chain b2..b_top, fan t_1..t_{top-2} with t_i over {a0,b0} and onto b_{i+2}
void add_right_half(std::vector<std::string>& vertices, Edges& edges,
                    int b_top) {
  vertices.insert(vertices.end(), {"a0", "a1", "b0", "b1"});
  edges.insert(edges.end(),
               {{"b1", "a0"}, {"a0", "a1"}, {"a1", "b0"}, {"b0", "b1"}});
  for (int j = 2; j <= b_top; ++j)
    vertices.push_back("b" + std::to_string(j));
  edges.push_back({"b1", "b2"});
  edges.push_back({"b2", "a1"});
  for (int j = 2; j < b_top; ++j)
    edges.push_back({"b" + std::to_string(j), "b" + std::to_string(j + 1)});
  for (int i = 1; i <= b_top - 2; ++i) {
    std::string t = "t" + std::to_string(i);
    vertices.push_back(t);
    edges.push_back({"a0", t});
    edges.push_back({"b0", t});
    edges.push_back({t, "b" + std::to_string(i + 2)});
  }
}

}  // namespace

DefiningGraph figure1_graph() {
  return DefiningGraph(
      {"a", "b", "c", "d", "t", "d1", "a1"},
      {{"a", "b"},
       {"b", "c"},
       {"c", "d"},
       {"d", "t"},
       {"t", "a"},
       {"a", "d1"},
       {"d1", "c"},
       {"b", "a1"},
       {"a1", "d"},
       {"b", "d1"},
       {"c", "a1"}});
}

FinGenSubgroup figure1_subgroup(const DefiningGraph& figure1) {
  return FinGenSubgroup::from_words(figure1,
                                    {"a a1 d d1 a a1", "d d1 a a1 d d1"});
}

DefiningGraph omega_graph(int d) {
  if (d < 3) throw Error("omega_graph needs d >= 3");
  std::vector<std::string> vertices;
  Edges edges;
  add_right_half(vertices, edges, d);
  vertices.push_back("c");
  edges.push_back({"c", "b1"});
  edges.push_back({"c", "a1"});
  for (int j = 3; j <= d; ++j) vertices.push_back("a" + std::to_string(j));
  edges.push_back({"a3", "b2"});
  for (int j = 3; j < d; ++j)
    edges.push_back({"a" + std::to_string(j), "a" + std::to_string(j + 1)});
  for (int i = 1; i <= d - 2; ++i) {
    std::string s = "s" + std::to_string(i);
    vertices.push_back(s);
    edges.push_back({"a0", s});
    edges.push_back({"b0", s});
    edges.push_back({s, "a" + std::to_string(i + 2)});
  }
  return DefiningGraph(vertices, edges);
}

DefiningGraph gamma_graph(int p) {
  if (p < 2) throw Error("gamma_graph needs p >= 2");
  std::vector<std::string> vertices;
  Edges edges;
  add_right_half(vertices, edges, p + 1);
  return DefiningGraph(vertices, edges);
}

FinGenSubgroup omega_subgroup(const DefiningGraph& omega, int m) {
  if (m < 2) throw Error("omega_subgroup needs m >= 2");
  if (m == 2) return FinGenSubgroup::from_words(omega, {"c", "s1", "t1"});
  std::string ms = std::to_string(m);
  return FinGenSubgroup::from_words(omega, {"c", "a" + ms, "b" + ms});
}

std::vector<std::string> gamma_vertex_names(int p) {
  if (p < 2) throw Error("gamma_graph needs p >= 2");
  std::vector<std::string> vertices;
  Edges edges;
  add_right_half(vertices, edges, p + 1);
  return vertices;
}

VertexSet gamma_inside_omega(const DefiningGraph& omega, int p) {
  VertexSet s;
  for (const std::string& name : gamma_vertex_names(p)) {
    std::optional<VertexId> v = omega.find(name);
    if (!v) throw Error("omega graph too small for gamma parameter " +
                        std::to_string(p));
    s.add(*v);
  }
  return s;
}

}  // namespace racg
