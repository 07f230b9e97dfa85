#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "racg/cli.hpp"
#include "racg/io.hpp"

namespace py = pybind11;

namespace {

racg::DefiningGraph graph_of(const std::string& graph_json) {
  return racg::io::graph_from_json(
      racg::io::Json::parse(graph_json));
}

std::string reduce_word(const std::string& graph_json,
                        const std::string& word) {
  racg::DefiningGraph g = graph_of(graph_json);
  return racg::NormalForm::parse(g, word).str();
}

py::object order_of(const std::string& graph_json, const std::string& word) {
  racg::DefiningGraph g = graph_of(graph_json);
  racg::NormalForm nf = racg::NormalForm::parse(g, word);
  if (nf.is_identity()) return py::int_(1);
  if (racg::is_finite_order(nf)) return py::int_(2);
  return py::str("infinite");
}

std::vector<std::string> csupp_of(const std::string& graph_json,
                                  const std::string& word) {
  racg::DefiningGraph g = graph_of(graph_json);
  racg::NormalForm nf = racg::NormalForm::parse(g, word);
  std::vector<std::string> out;
  for (racg::VertexId v : racg::csupp(nf).to_vector()) out.push_back(g.name(v));
  return out;
}

std::string classify_parabolic_json(const std::string& graph_json,
                                    const std::vector<std::string>& lambda) {
  racg::DefiningGraph g = graph_of(graph_json);
  racg::ParabolicSpec spec;
  for (const std::string& name : lambda) spec.lambda.add(g.require(name));
  racg::io::Json doc =
      racg::io::parabolic_flags_to_json(g, racg::classify_parabolic(g, spec));
  return doc.dump();
}

std::string build_diagram_json(const std::string& graph_json,
                               const std::string& word) {
  racg::DefiningGraph g = graph_of(graph_json);
  racg::DualVanKampenDiagram d =
      racg::build_diagram(g, racg::parse_word(g, word));
  return racg::io::diagram_to_json(d).dump();
}

std::vector<std::string> ball_elements(const std::string& graph_json,
                                       int radius) {
  racg::DefiningGraph g = graph_of(graph_json);
  racg::CayleyBall b = racg::enumerate_ball(g, radius);
  std::vector<std::string> out;
  for (const racg::NormalForm& e : b.elements) out.push_back(e.str());
  return out;
}

std::string family_json(const std::string& which, int param, int m) {
  std::ostringstream out, err;
  std::vector<std::string> args{"family", which};
  if (which == "omega") {
    args.push_back("--d");
    args.push_back(std::to_string(param));
    if (m > 0) {
      args.push_back("--m");
      args.push_back(std::to_string(m));
    }
  } else if (which == "gamma") {
    args.push_back("--p");
    args.push_back(std::to_string(param));
  }
  if (racg::run_cli(args, out, err) != 0) throw racg::Error(err.str());
  return out.str();
}

py::tuple run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = racg::run_cli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_racg, m) {
  m.doc() = "right-angled Coxeter group toolkit";
  m.def("run", &run, py::arg("args"),
        "invoke the command-line interface; returns (exit_code, stdout, "
        "stderr)");
  m.def("reduce", &reduce_word, py::arg("graph_json"), py::arg("word"),
        "canonical (shortlex) form of a word");
  m.def("order_of", &order_of, py::arg("graph_json"), py::arg("word"),
        "order of the element: 1, 2, or 'infinite'");
  m.def("csupp_of", &csupp_of, py::arg("graph_json"), py::arg("word"),
        "support of the cyclically reduced core");
  m.def("classify_parabolic", &classify_parabolic_json, py::arg("graph_json"),
        py::arg("lambda_vertices"),
        "graph-side flags of a parabolic subgroup, as a JSON string");
  m.def("build_diagram", &build_diagram_json, py::arg("graph_json"),
        py::arg("word"),
        "dual van Kampen diagram of an identity word, as a JSON string");
  m.def("ball", &ball_elements, py::arg("graph_json"), py::arg("radius"),
        "all canonical forms of length at most radius");
  m.def("family", &family_json, py::arg("which"), py::arg("param") = 0,
        py::arg("m") = 0, "named example graph documents");
  py::register_exception<racg::Error>(m, "RacgError");
}
