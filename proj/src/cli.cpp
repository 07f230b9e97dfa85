#include "racg/cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "racg/io.hpp"

namespace racg {

namespace {

using io::Json;

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

Json read_doc(const std::string& path) {
  if (path == "-") {
    Json doc;
    try {
      std::cin >> doc;
    } catch (const nlohmann::json::exception& e) {
      throw Error(std::string("standard input is not a document: ") +
                  e.what());
    }
    return doc;
  }
  return io::read_json_file(path);
}

// accept a graph document directly or any document carrying one
DefiningGraph load_graph(const std::string& path) {
  Json doc = read_doc(path);
  if (doc.is_object() && doc.contains("vertices"))
    return io::graph_from_json(doc);
  if (doc.is_object() && doc.contains("graph"))
    return io::graph_from_json(doc.at("graph"));
  throw Error("expected a graph document (fields \"vertices\", \"edges\")");
}

io::LoadedSubgroup load_subgroup(const std::string& path) {
  Json doc = read_doc(path);
  if (!doc.is_object() || !doc.contains("generators"))
    throw Error(
        "expected a subgroup document (fields \"graph\", \"generators\")");
  return io::subgroup_from_json(doc);
}

io::LoadedDiagram load_diagram(const std::string& path) {
  return io::diagram_from_json(read_doc(path));
}

// vertices named like a_3 in running text resolve to the declared a3
VertexId resolve_vertex(const DefiningGraph& g, const std::string& name) {
  if (auto v = g.find(name)) return *v;
  std::string stripped;
  for (char c : name)
    if (c != '_') stripped += c;
  if (stripped != name)
    if (auto v = g.find(stripped)) return *v;
  return g.require(name);  // throws, naming the unknown vertex
}

VertexSet parse_lambda(const DefiningGraph& g, const std::string& csv) {
  VertexSet out;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) out.add(resolve_vertex(g, token));
    token.clear();
  };
  for (char c : csv) {
    if (c == ',' || c == ' ')
      flush();
    else
      token += c;
  }
  flush();
  if (out.empty()) throw Error("empty vertex list '" + csv + "'");
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  std::size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw Error("range must look like lo:hi, got '" + text + "'");
  try {
    int lo = std::stoi(text.substr(0, colon));
    int hi = std::stoi(text.substr(colon + 1));
    return {lo, hi};
  } catch (const std::exception&) {
    throw Error("range must look like lo:hi, got '" + text + "'");
  }
}

std::pair<int, int> parse_r_sweep(const std::string& text) {
  if (text.find(':') != std::string::npos) return parse_range(text);
  try {
    int r = std::stoi(text);
    return {r, r};
  } catch (const std::exception&) {
    throw Error("--r takes N or lo:hi, got '" + text + "'");
  }
}

int scan_exit(const ScanReport& report) {
  return report.verdict == Verdict::certified_negative ? 2 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"toolkit for right-angled Coxeter groups: canonical words, "
               "subgroup classifiers, dual van Kampen diagrams, and "
               "divergence estimation"};
  app.name("racg");
  app.require_subcommand(1);

  std::string graph_path = "-";
  std::string subgroup_path = "-";
  std::string diagram_path = "-";
  std::string word;
  std::string lambda_arg;
  std::vector<std::string> lambda_list;
  std::string conjugator_arg;
  std::string format = "json";
  std::string range_arg;
  std::string r_arg = "1";
  std::string rho_arg = "1";
  std::string target_arg;
  std::vector<std::string> factor_args;
  std::vector<std::string> pair_arg;
  int depth = 3;
  int g_radius = 3;
  int h_depth = 3;
  int radius = 0;
  int n_param = 2;
  int cap = 16;
  int sphere = -1;
  int m_param = 0;
  int d_param = 3;
  int p_param = 2;
  int ratio = -1;
  long long ball_cap = 4'000'000;

  auto* reduce = app.add_subcommand("reduce", "canonical form of a word");
  reduce->add_option("--graph", graph_path, "graph document, - for stdin");
  reduce->add_option("--word", word, "whitespace-separated letters")
      ->required();

  auto* csupp_cmd =
      app.add_subcommand("csupp", "cyclic decomposition and cyclic support");
  csupp_cmd->add_option("--graph", graph_path, "graph document");
  csupp_cmd->add_option("--word", word, "word")->required();

  auto* order_cmd = app.add_subcommand("order", "order of the element");
  order_cmd->add_option("--graph", graph_path, "graph document");
  order_cmd->add_option("--word", word, "word")->required();

  auto* classify =
      app.add_subcommand("classify-parabolic",
                         "graph-side flags of one parabolic subgroup");
  classify->add_option("--graph", graph_path, "graph document");
  classify->add_option("--lambda", lambda_arg, "vertices, comma separated")
      ->required();
  classify->add_option("--conjugator", conjugator_arg,
                       "conjugating word (flags do not depend on it)");

  auto* collection =
      app.add_subcommand("classify-collection",
                         "almost-malnormal collection test");
  collection->add_option("--graph", graph_path, "graph document");
  collection
      ->add_option("--lambda", lambda_list,
                   "one vertex list per member, repeatable")
      ->required();

  auto* graph_cmd = app.add_subcommand("graph", "defining-graph reports");
  graph_cmd->require_subcommand(1);
  auto* joins = graph_cmd->add_subcommand("joins", "join decomposition");
  joins->add_option("--graph", graph_path, "graph document");
  auto* cfs = graph_cmd->add_subcommand("cfs", "four-cycle graph summary");
  cfs->add_option("--graph", graph_path, "graph document");
  auto* rank = graph_cmd->add_subcommand("rank", "rank of a non-adjacent pair");
  rank->add_option("--graph", graph_path, "graph document");
  rank->add_option("--pair", pair_arg, "the two vertices")
      ->required()
      ->expected(2);
  rank->add_option("--cap", cap, "iteration cap (default 16)");

  auto* scan = app.add_subcommand("scan", "searches over a subgroup ball");
  scan->require_subcommand(1);
  auto* scan_jf = scan->add_subcommand(
      "join-free", "look for an infinite-order element inside a join");
  auto* scan_sf = scan->add_subcommand(
      "star-free", "look for an infinite-order element inside a star");
  auto* scan_refl =
      scan->add_subcommand("reflections", "look for conjugated generators");
  for (CLI::App* s : {scan_jf, scan_sf, scan_refl}) {
    s->add_option("--subgroup", subgroup_path, "subgroup document");
    s->add_option("--depth", depth, "generator-ball depth (default 3)");
  }
  auto* scan_mal = scan->add_subcommand(
      "malnormal", "preconditions plus a conjugation witness search");
  scan_mal->add_option("--subgroup", subgroup_path, "subgroup document");
  scan_mal->add_option("--depth", depth,
                       "depth for the precondition scans (default 3)");
  scan_mal->add_option("--g-radius", g_radius,
                       "ambient radius for conjugators (default 3)");
  scan_mal->add_option("--h-depth", h_depth,
                       "subgroup ball depth (default 3)");
  auto* scan_jb = scan->add_subcommand(
      "join-busting", "largest join-contained window over the ball");
  scan_jb->add_option("--subgroup", subgroup_path, "subgroup document");
  scan_jb->add_option("--depth", depth, "generator-ball depth (default 3)");
  auto* scan_fb = scan->add_subcommand(
      "free-basis", "abstract free-basis and length-ratio verification");
  scan_fb->add_option("--subgroup", subgroup_path, "subgroup document");
  scan_fb->add_option("--depth", depth, "free-word length bound (default 3)");
  scan_fb->add_option("--ratio", ratio,
                      "expected group length per generator (default: "
                      "common generator length)");

  auto* vkd = app.add_subcommand("vkd", "dual van Kampen diagrams");
  vkd->require_subcommand(1);
  auto* vkd_build =
      vkd->add_subcommand("build", "diagram for an identity word");
  vkd_build->add_option("--graph", graph_path, "graph document");
  vkd_build->add_option("--word", word, "identity word")->required();
  vkd_build->add_option("--format", format, "json or dot");
  auto* vkd_validate = vkd->add_subcommand("validate", "check a diagram");
  vkd_validate->add_option("--diagram", diagram_path, "diagram document");
  auto* vkd_comb = vkd->add_subcommand("comb", "uncross a boundary range");
  vkd_comb->add_option("--diagram", diagram_path, "diagram document");
  vkd_comb->add_option("--range", range_arg, "positions lo:hi")->required();
  auto* vkd_prune =
      vkd->add_subcommand("prune", "comb, then drop range-internal arcs");
  vkd_prune->add_option("--diagram", diagram_path, "diagram document");
  vkd_prune->add_option("--range", range_arg, "positions lo:hi")->required();
  auto* vkd_reduce = vkd->add_subcommand(
      "reduce", "reducing diagram for a factorization of a reduced word");
  vkd_reduce->add_option("--graph", graph_path, "graph document");
  vkd_reduce->add_option("--target", target_arg, "the reduced word")
      ->required();
  vkd_reduce
      ->add_option("--factor", factor_args, "factor word, repeatable")
      ->required();
  vkd_reduce->add_option("--format", format, "json or dot");

  auto* ball_cmd = app.add_subcommand("ball", "word-metric ball");
  ball_cmd->add_option("--graph", graph_path, "graph document");
  ball_cmd->add_option("--radius", radius, "ball radius")->required();
  ball_cmd->add_option("--sphere", sphere,
                       "highlight elements at this distance");
  ball_cmd->add_option("--cap", ball_cap, "element cap (default 4000000)");
  ball_cmd->add_option("--format", format, "json or dot");

  auto* divergence = app.add_subcommand(
      "divergence", "empirical divergence estimates on a ball");
  divergence->add_option("--graph", graph_path, "graph document");
  divergence->add_option("--lambda", lambda_arg,
                         "parabolic subgroup vertices (subgroup divergence)");
  divergence->add_option("--conjugator", conjugator_arg,
                         "conjugating word for --lambda");
  divergence->add_option("--subgroup", subgroup_path,
                         "subgroup document (finitely generated case)")
      ->expected(1);
  divergence->add_option("--depth", depth,
                         "generator-ball depth for --subgroup (default 3)");
  divergence->add_option("--r", r_arg, "radius r, or a sweep lo:hi");
  divergence->add_option("--n", n_param, "separation multiplier (default 2)");
  divergence->add_option("--rho", rho_arg, "avoidance ratio p/q (default 1)");
  divergence->add_option("--radius", radius, "ball radius")->required();
  divergence->add_option("--cap", ball_cap, "ball element cap");
  divergence->add_option("--format", format, "json or csv");

  auto* family = app.add_subcommand("family", "named example graphs");
  family->require_subcommand(1);
  auto* fam_fig = family->add_subcommand(
      "figure1", "seven-vertex graph with its rank-two free subgroup");
  auto* fam_omega = family->add_subcommand(
      "omega", "fan family with climbing divergence degree");
  fam_omega->add_option("--d", d_param, "parameter d >= 3")->required();
  fam_omega->add_option("--m", m_param,
                        "also emit the three-generator subgroup (2 <= m <= d)");
  auto* fam_gamma =
      family->add_subcommand("gamma", "right-half family graph");
  fam_gamma->add_option("--p", p_param, "parameter p >= 2")->required();

  try {
    std::vector<std::string> reversed = args;
    std::reverse(reversed.begin(), reversed.end());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;  // usage problems are plain errors
  }

  try {
    if (reduce->parsed()) {
      DefiningGraph g = load_graph(graph_path);
      NormalForm nf = NormalForm::parse(g, word);
      Json doc;
      doc["word"] = nf.str();
      doc["length"] = nf.length();
      emit(out, doc);
      return 0;
    }

    if (csupp_cmd->parsed()) {
      DefiningGraph g = load_graph(graph_path);
      NormalForm nf = NormalForm::parse(g, word);
      CyclicDecomposition cd = cyclic_decompose(nf);
      Json doc;
      doc["word"] = nf.str();
      doc["conjugator"] = cd.conjugator.str();
      doc["core"] = cd.core.str();
      doc["csupp"] = io::names_json(g, support(cd.core));
      doc["finite_order"] = is_finite_order(nf);
      emit(out, doc);
      return 0;
    }

    if (order_cmd->parsed()) {
      DefiningGraph g = load_graph(graph_path);
      NormalForm nf = NormalForm::parse(g, word);
      Json doc;
      if (nf.is_identity())
        doc["order"] = 1;
      else if (is_finite_order(nf))
        doc["order"] = 2;
      else
        doc["order"] = "infinite";
      emit(out, doc);
      return 0;
    }

    if (classify->parsed()) {
      DefiningGraph g = load_graph(graph_path);
      ParabolicSpec spec;
      spec.lambda = parse_lambda(g, lambda_arg);
      if (!conjugator_arg.empty())
        spec.conjugator = NormalForm::parse(g, conjugator_arg);
      Json doc = io::parabolic_flags_to_json(g, classify_parabolic(g, spec));
      doc["lambda"] = io::names_json(g, spec.lambda);
      emit(out, doc);
      return 0;
    }

    if (collection->parsed()) {
      DefiningGraph g = load_graph(graph_path);
      std::vector<ParabolicSpec> specs;
      Json members = Json::array();
      for (const std::string& l : lambda_list) {
        ParabolicSpec spec;
        spec.lambda = parse_lambda(g, l);
        members.push_back(io::names_json(g, spec.lambda));
        specs.push_back(std::move(spec));
      }
      Json doc = io::collection_flags_to_json(classify_collection(g, specs));
      doc["members"] = std::move(members);
      emit(out, doc);
      return 0;
    }

    if (joins->parsed()) {
      DefiningGraph g = load_graph(graph_path);
      Json doc;
      doc["is_join"] = is_join(g);
      if (auto split = join_decomposition(g, g.all_vertices())) {
        doc["split"] = Json::array({io::names_json(g, split->first),
                                    io::names_json(g, split->second)});
      }
      doc["connected"] = g.connected();
      emit(out, doc);
      return 0;
    }

    if (cfs->parsed()) {
      DefiningGraph g = load_graph(graph_path);
      FourCycleGraph fcg = four_cycle_graph(g);
      Json doc;
      doc["cfs"] = is_cfs(g);
      doc["four_cycle_count"] = fcg.nodes.size();
      doc["component_count"] = fcg.component_count;
      Json supports = Json::array();
      for (const VertexSet& s : fcg.supports)
        supports.push_back(io::names_json(g, s));
      doc["supports"] = std::move(supports);
      emit(out, doc);
      return 0;
    }

    if (rank->parsed()) {
      DefiningGraph g = load_graph(graph_path);
      VertexId s = resolve_vertex(g, pair_arg[0]);
      VertexId t = resolve_vertex(g, pair_arg[1]);
      RankResult r = rank_of_pair(g, s, t, cap);
      Json doc = io::rank_to_json(r);
      doc["pair"] = Json::array({g.name(s), g.name(t)});
      doc["cap"] = cap;
      emit(out, doc);
      return 0;
    }

    if (scan_jf->parsed() || scan_sf->parsed() || scan_refl->parsed()) {
      io::LoadedSubgroup loaded = load_subgroup(subgroup_path);
      ScanReport report = scan_jf->parsed()
                              ? join_free_scan(loaded.subgroup, depth)
                              : scan_sf->parsed()
                                    ? star_free_scan(loaded.subgroup, depth)
                                    : reflection_scan(loaded.subgroup, depth);
      emit(out, io::scan_report_to_json(report));
      return scan_exit(report);
    }

    if (scan_mal->parsed()) {
      io::LoadedSubgroup loaded = load_subgroup(subgroup_path);
      PreconditionReport pre = malnormal_preconditions(loaded.subgroup, depth);
      ScanReport witness =
          malnormality_scan(loaded.subgroup, g_radius, h_depth);
      Json doc;
      doc["preconditions"] = io::preconditions_to_json(pre);
      doc["witness_scan"] = io::scan_report_to_json(witness);
      emit(out, doc);
      return scan_exit(witness);
    }

    if (scan_jb->parsed()) {
      io::LoadedSubgroup loaded = load_subgroup(subgroup_path);
      emit(out, io::join_busting_to_json(
                    join_busting_estimate(loaded.subgroup, depth)));
      return 0;
    }

    if (scan_fb->parsed()) {
      io::LoadedSubgroup loaded = load_subgroup(subgroup_path);
      std::optional<int> ratio_opt;
      if (ratio >= 0) ratio_opt = ratio;
      FreeBasisReport report =
          free_basis_check(loaded.subgroup, depth, ratio_opt);
      emit(out, io::free_basis_to_json(report));
      return report.passed ? 0 : 2;
    }

    if (vkd_build->parsed()) {
      DefiningGraph g = load_graph(graph_path);
      DualVanKampenDiagram d = build_diagram(g, parse_word(g, word));
      if (format == "dot")
        out << io::diagram_dot(d);
      else
        emit(out, io::diagram_to_json(d));
      return 0;
    }

    if (vkd_validate->parsed()) {
      io::LoadedDiagram loaded = load_diagram(diagram_path);
      DiagramCheck check = validate_diagram(loaded.diagram);
      Json doc;
      doc["ok"] = check.ok;
      if (!check.ok) doc["violation"] = check.violation;
      emit(out, doc);
      return check.ok ? 0 : 2;
    }

    if (vkd_comb->parsed() || vkd_prune->parsed()) {
      io::LoadedDiagram loaded = load_diagram(diagram_path);
      auto [lo, hi] = parse_range(range_arg);
      if (vkd_comb->parsed()) {
        CombResult combed = comb(loaded.diagram, lo, hi);
        Json doc = io::diagram_to_json(combed.diagram);
        doc["swaps"] = combed.swaps;
        emit(out, doc);
      } else {
        PruneResult pruned = prune(loaded.diagram, lo, hi);
        Json doc = io::diagram_to_json(pruned.diagram);
        doc["removed_letters"] = pruned.removed_letters;
        emit(out, doc);
      }
      return 0;
    }

    if (vkd_reduce->parsed()) {
      DefiningGraph g = load_graph(graph_path);
      std::vector<std::vector<VertexId>> hs;
      for (const std::string& f : factor_args)
        hs.push_back(parse_word(g, f));
      NormalForm target = NormalForm::parse(g, target_arg);
      ReducingDiagram rd = build_reducing_diagram(g, hs, target);
      if (format == "dot")
        out << io::diagram_dot(rd.diagram);
      else {
        Json doc = io::reducing_to_json(rd);
        doc["contributing"] = rd.contributing_count();
        emit(out, doc);
      }
      return 0;
    }

    if (ball_cmd->parsed()) {
      DefiningGraph g = load_graph(graph_path);
      CayleyBall b = enumerate_ball(g, radius,
                                    static_cast<std::size_t>(ball_cap));
      if (format == "dot") {
        std::vector<char> highlight(b.size(), 0);
        if (sphere >= 0)
          for (std::size_t i = 0; i < b.size(); ++i)
            highlight[i] = b.elements[i].length() == sphere;
        out << io::ball_dot(b, highlight);
      } else {
        Json doc;
        doc["radius"] = b.radius;
        doc["size"] = b.size();
        Json elems = Json::array();
        for (const NormalForm& e : b.elements) elems.push_back(e.str());
        doc["elements"] = std::move(elems);
        emit(out, doc);
      }
      return 0;
    }

    if (divergence->parsed()) {
      DefiningGraph g = load_graph(graph_path);
      auto [r_lo, r_hi] = parse_r_sweep(r_arg);
      if (r_lo < 1 || r_hi < r_lo) throw Error("bad --r sweep");
      Rational rho = Rational::parse(rho_arg);
      CayleyBall b = enumerate_ball(g, radius,
                                    static_cast<std::size_t>(ball_cap));

      std::optional<io::LoadedSubgroup> loaded;
      std::optional<DistanceField> field;
      if (!lambda_arg.empty()) {
        ParabolicSpec spec;
        spec.lambda = parse_lambda(g, lambda_arg);
        if (!conjugator_arg.empty())
          spec.conjugator = NormalForm::parse(g, conjugator_arg);
        field = distance_field(spec, r_hi);
      } else if (divergence->count("--subgroup") > 0) {
        loaded = load_subgroup(subgroup_path);
        if (loaded->graph->vertex_count() != g.vertex_count())
          throw Error("subgroup document graph differs from --graph");
        // rebuild the generators against the ambient graph object
        std::vector<std::string> words;
        for (const NormalForm& t : loaded->subgroup.generators)
          words.push_back(t.str());
        FinGenSubgroup h = FinGenSubgroup::from_words(g, words);
        field = distance_field(h, r_hi, depth);
      }

      std::vector<DivergenceEstimate> sweep;
      for (int r = r_lo; r <= r_hi; ++r) {
        if (field)
          sweep.push_back(subgroup_divergence(b, *field, n_param, rho, r));
        else
          sweep.push_back(group_divergence(b, rho, r));
      }
      if (format == "csv") {
        out << io::divergence_csv_header() << "\n";
        for (const DivergenceEstimate& e : sweep)
          out << io::divergence_csv_row(e) << "\n";
      } else {
        Json doc = Json::array();
        for (const DivergenceEstimate& e : sweep)
          doc.push_back(io::divergence_to_json(e));
        emit(out, doc);
      }
      return 0;
    }

    if (fam_fig->parsed()) {
      DefiningGraph g = figure1_graph();
      emit(out, io::subgroup_to_json(figure1_subgroup(g)));
      return 0;
    }

    if (fam_omega->parsed()) {
      DefiningGraph g = omega_graph(d_param);
      if (m_param > 0)
        emit(out, io::subgroup_to_json(omega_subgroup(g, m_param)));
      else
        emit(out, io::graph_to_json(g));
      return 0;
    }

    if (fam_gamma->parsed()) {
      emit(out, io::graph_to_json(gamma_graph(p_param)));
      return 0;
    }

    err << "error: no subcommand handled\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace racg
