#include "racg/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace racg {

namespace {

std::string set_names(const DefiningGraph& g, VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (VertexId v : s) {
    if (!first) out += ",";
    out += g.name(v);
    first = false;
  }
  out += "}";
  return out;
}

const DefiningGraph& require_graph(const FinGenSubgroup& h) {
  if (h.graph == nullptr || h.generators.empty())
    throw Error("subgroup has no generators");
  return *h.graph;
}

}  // namespace

FinGenSubgroup FinGenSubgroup::from_words(
    const DefiningGraph& g, const std::vector<std::string>& words) {
  if (words.empty()) throw Error("subgroup needs at least one generator");
  FinGenSubgroup h;
  h.graph = &g;
  for (const std::string& w : words) {
    NormalForm nf = NormalForm::parse(g, w);
    if (nf.is_identity())
      throw Error("generator '" + w + "' is trivial");
    h.generators.push_back(std::move(nf));
  }
  return h;
}

std::optional<VertexSet> FinGenSubgroup::as_special() const {
  VertexSet lambda;
  for (const NormalForm& t : generators) {
    if (t.length() != 1) return std::nullopt;
    lambda.add(t.letters()[0]);
  }
  return lambda;
}

std::string_view tri_name(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    case Tri::not_applicable: return "not-applicable";
  }
  return "?";
}

std::string_view verdict_name(Verdict v) {
  return v == Verdict::certified_negative ? "certified-negative"
                                          : "no-violation-up-to-bound";
}

ParabolicFlags classify_parabolic(const DefiningGraph& g,
                                  const ParabolicSpec& spec) {
  if (spec.lambda.empty()) throw Error("empty vertex set");
  if (!spec.lambda.subset_of(g.all_vertices()))
    throw Error("vertex set outside the graph");

  ParabolicFlags flags;
  flags.finite = g.is_clique(spec.lambda);

  const bool applicable = g.connected() && !is_join(g);
  if (!applicable) {
    flags.join_free = Tri::not_applicable;
    flags.star_free = Tri::not_applicable;
  } else if (flags.finite) {
    // no infinite-order elements to separate from joins
    flags.join_free = Tri::no;
    flags.star_free = Tri::no;
  } else {
    // an infinite-order element lands in a join exactly when two vertices
    // of lambda share a neighbor without being adjacent themselves
    std::optional<std::pair<VertexId, VertexId>> close_pair;
    std::vector<VertexId> verts = spec.lambda.to_vector();
    for (std::size_t i = 0; i < verts.size() && !close_pair; ++i)
      for (std::size_t j = i + 1; j < verts.size() && !close_pair; ++j)
        if (!g.adjacent(verts[i], verts[j]) &&
            g.common_neighbors(verts[i], verts[j]).size() > 0)
          close_pair = {verts[i], verts[j]};
    flags.distance_two_pair = close_pair;
    flags.join_free = close_pair ? Tri::no : Tri::yes;
    flags.star_free = flags.join_free;
  }

  // a vertex outside lambda coning a non-adjacent pair of lambda commutes
  // with the infinite group that pair generates
  flags.almost_malnormal = true;
  for (VertexId v : g.all_vertices()) {
    if (spec.lambda.contains(v)) continue;
    VertexSet linked = g.link(v) & spec.lambda;
    std::vector<VertexId> lv = linked.to_vector();
    std::optional<std::pair<VertexId, VertexId>> pair;
    for (std::size_t i = 0; i < lv.size() && !pair; ++i)
      for (std::size_t j = i + 1; j < lv.size() && !pair; ++j)
        if (!g.adjacent(lv[i], lv[j])) pair = {lv[i], lv[j]};
    if (pair) {
      flags.almost_malnormal = false;
      flags.cone_vertex = v;
      flags.coned_pair = pair;
      break;
    }
  }

  // an induced four-cycle with one diagonal inside lambda and a corner
  // outside it pushes flats through the subgroup's boundary
  flags.strongly_quasiconvex = true;
  for (const FourCycle& q : four_cycle_graph(g).nodes) {
    bool diag_in =
        (spec.lambda.contains(q.corners[0]) &&
         spec.lambda.contains(q.corners[2])) ||
        (spec.lambda.contains(q.corners[1]) && spec.lambda.contains(q.corners[3]));
    bool leaves = !q.vertex_set().subset_of(spec.lambda);
    if (diag_in && leaves) {
      flags.strongly_quasiconvex = false;
      flags.squeezing_cycle = q;
      break;
    }
  }
  return flags;
}

CollectionFlags classify_collection(const DefiningGraph& g,
                                    std::span<const ParabolicSpec> specs) {
  if (specs.empty()) throw Error("empty collection");
  CollectionFlags out;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    ParabolicFlags f = classify_parabolic(g, specs[i]);
    if (!f.almost_malnormal) {
      out.reason = "member " + std::to_string(i) + " " +
                   set_names(g, specs[i].lambda) + " has cone vertex " +
                   g.name(*f.cone_vertex);
      return out;
    }
  }
  for (std::size_t i = 0; i < specs.size(); ++i) {
    for (std::size_t j = i + 1; j < specs.size(); ++j) {
      VertexSet common = specs[i].lambda & specs[j].lambda;
      if (common.size() > 0 && !g.is_clique(common)) {
        out.reason = "members " + std::to_string(i) + " and " +
                     std::to_string(j) + " share the non-clique " +
                     set_names(g, common);
        return out;
      }
    }
  }
  out.almost_malnormal = true;
  out.hyperbolically_embedded = true;
  return out;
}

TBall enumerate_subgroup(const FinGenSubgroup& h, int depth,
                         std::size_t max_elements) {
  const DefiningGraph& g = require_graph(h);
  if (depth < 0) throw Error("negative depth");

  std::vector<NormalForm> alphabet;
  for (const NormalForm& t : h.generators) {
    alphabet.push_back(t);
    NormalForm ti = invert(t);
    if (ti != t) alphabet.push_back(ti);
  }

  TBall ball;
  std::unordered_map<NormalForm, int, NormalFormHash> seen;
  std::deque<NormalForm> frontier;
  NormalForm e = NormalForm::identity(g);
  seen.emplace(e, 0);
  frontier.push_back(e);
  while (!frontier.empty()) {
    NormalForm w = frontier.front();
    frontier.pop_front();
    int len = seen.at(w);
    if (len == depth) continue;
    for (const NormalForm& t : alphabet) {
      NormalForm next = multiply(w, t);
      if (seen.count(next)) continue;
      if (seen.size() >= max_elements) {
        ball.truncated = true;
        frontier.clear();
        break;
      }
      seen.emplace(next, len + 1);
      frontier.push_back(next);
    }
  }

  ball.entries.reserve(seen.size());
  for (auto& [w, len] : seen) {
    ball.index.insert(w);
    ball.entries.push_back({w, len});
  }
  std::sort(ball.entries.begin(), ball.entries.end(),
            [](const TBallEntry& a, const TBallEntry& b) {
              if (a.t_length != b.t_length) return a.t_length < b.t_length;
              return a.element < b.element;
            });
  return ball;
}

namespace {

// shared driver: scan the depth ball for elements matching `violation`,
// which fills in the explanation when it fires
ScanReport scan_ball(const FinGenSubgroup& h, int depth,
                     const std::function<std::optional<std::string>(
                         const DefiningGraph&, const NormalForm&)>& violation) {
  const DefiningGraph& g = require_graph(h);
  TBall ball = enumerate_subgroup(h, depth);
  ScanReport report;
  report.bound = depth;
  for (const TBallEntry& entry : ball.entries) {
    if (entry.element.is_identity()) continue;
    std::optional<std::string> why = violation(g, entry.element);
    if (!why) continue;
    report.verdict = Verdict::certified_negative;
    ScanWitness w{entry.element, std::nullopt, *why};
    CyclicDecomposition cd = cyclic_decompose(entry.element);
    if (!cd.conjugator.is_identity()) w.conjugator = cd.conjugator;
    report.witness = std::move(w);
    return report;
  }
  if (ball.truncated)
    report.caveats.push_back("enumeration hit the element cap; ball incomplete");
  report.caveats.push_back(
      "clean scan certifies only words of generator-length <= " +
      std::to_string(depth));
  return report;
}

}  // namespace

ScanReport join_free_scan(const FinGenSubgroup& h, int depth) {
  return scan_ball(
      h, depth,
      [](const DefiningGraph& g,
         const NormalForm& w) -> std::optional<std::string> {
        if (is_finite_order(w)) return std::nullopt;
        VertexSet cs = csupp(w);
        JoinContainment jc = contained_in_join(g, cs);
        if (!jc.contained) return std::nullopt;
        std::ostringstream os;
        os << "infinite-order element with cyclic support " << set_names(g, cs);
        if (jc.split)
          os << " spanning the join " << set_names(g, jc.split->first) << " * "
             << set_names(g, jc.split->second);
        else
          os << " inside the star of " << g.name(*jc.cone);
        return os.str();
      });
}

ScanReport star_free_scan(const FinGenSubgroup& h, int depth) {
  return scan_ball(
      h, depth,
      [](const DefiningGraph& g,
         const NormalForm& w) -> std::optional<std::string> {
        if (is_finite_order(w)) return std::nullopt;
        VertexSet cs = csupp(w);
        std::optional<VertexId> center = contained_in_star(g, cs);
        if (!center) return std::nullopt;
        return "infinite-order element with cyclic support " +
               set_names(g, cs) + " inside the star of " + g.name(*center);
      });
}

ScanReport reflection_scan(const FinGenSubgroup& h, int depth) {
  return scan_ball(
      h, depth,
      [](const DefiningGraph& g,
         const NormalForm& w) -> std::optional<std::string> {
        VertexSet cs = csupp(w);
        if (cs.size() != 1) return std::nullopt;
        return "conjugate of the generator " + g.name(cs.to_vector()[0]);
      });
}

JoinBustingEstimate join_busting_estimate(const FinGenSubgroup& h, int depth) {
  require_graph(h);
  TBall ball = enumerate_subgroup(h, depth);
  JoinBustingEstimate est;
  est.depth = depth;
  for (const TBallEntry& entry : ball.entries) {
    if (entry.element.is_identity()) continue;
    SubwordWindow w = max_join_subword(entry.element);
    if (w.length > est.value) {
      est.value = w.length;
      est.max_element = entry.element;
      est.window = w;
    }
  }
  est.caveat =
      "maximum over the depth-" + std::to_string(depth) +
      " ball only; a join-busting constant needs the bound for all elements";
  if (ball.truncated) est.caveat += " (ball truncated at the element cap)";
  return est;
}

PreconditionReport malnormal_preconditions(const FinGenSubgroup& h, int depth) {
  const DefiningGraph& g = require_graph(h);
  PreconditionReport report;
  report.graph_connected = g.connected();
  report.graph_non_join = !is_join(g);
  report.reflections = reflection_scan(h, depth);
  report.join_free = join_free_scan(h, depth);

  std::ostringstream os;
  if (!report.graph_connected) {
    report.conclusive_failure = true;
    os << "defining graph is disconnected; ";
  }
  if (!report.graph_non_join) {
    report.conclusive_failure = true;
    os << "defining graph is a join, so the whole group is a product; ";
  }
  if (report.join_free.verdict == Verdict::certified_negative) {
    report.conclusive_failure = true;
    os << "subgroup is not join-free (" +
              report.join_free.witness->explanation + "); ";
  }
  if (report.reflections.verdict == Verdict::certified_negative)
    os << "subgroup contains " + report.reflections.witness->explanation +
              ", which centralizes its star; ";
  if (os.str().empty())
    os << "no obstruction found up to generator-length " << depth;
  report.summary = os.str();
  return report;
}

ScanReport malnormality_scan(const FinGenSubgroup& h, int g_radius, int h_depth,
                             std::size_t max_elements) {
  const DefiningGraph& g = require_graph(h);
  if (g_radius < 0 || h_depth < 0) throw Error("negative radius");
  TBall ball = enumerate_subgroup(h, h_depth);
  std::optional<VertexSet> special = h.as_special();

  auto in_subgroup = [&](const NormalForm& w) {
    if (special) return special_membership(w, *special);
    return ball.contains(w);
  };

  ScanReport report;
  report.bound = g_radius;
  if (!special)
    report.caveats.push_back(
        "membership tested against the depth-" + std::to_string(h_depth) +
        " ball only; conjugators deep inside the subgroup may be missed");
  if (ball.truncated)
    report.caveats.push_back("subgroup ball truncated at the element cap");

  // BFS over the ambient group out to g_radius
  std::unordered_set<NormalForm, NormalFormHash> seen;
  std::deque<std::pair<NormalForm, int>> frontier;
  NormalForm e = NormalForm::identity(g);
  seen.insert(e);
  frontier.emplace_back(e, 0);
  bool truncated = false;
  while (!frontier.empty()) {
    auto [w, len] = frontier.front();
    frontier.pop_front();
    if (!w.is_identity() && !in_subgroup(w)) {
      for (const TBallEntry& entry : ball.entries) {
        // only an infinite intersection violates the almost-malnormal
        // property; torsion conjugations (reflections re-entering the
        // subgroup) are expected and reported by reflection_scan instead
        if (is_finite_order(entry.element)) continue;
        NormalForm moved = conjugate(w, entry.element);
        if (in_subgroup(moved)) {
          report.verdict = Verdict::certified_negative;
          ScanWitness wit{
              entry.element, w,
              "conjugating by " + w.str() + " keeps " + entry.element.str() +
                  " in the subgroup while the conjugator stays outside"};
          report.witness = std::move(wit);
          return report;
        }
      }
    }
    if (len == g_radius) continue;
    for (VertexId s : g.all_vertices()) {
      NormalForm next = w.append(s);
      if (seen.count(next)) continue;
      if (seen.size() >= max_elements) {
        truncated = true;
        frontier.clear();
        break;
      }
      seen.insert(next);
      frontier.emplace_back(next, len + 1);
    }
  }
  if (truncated)
    report.caveats.push_back("ambient ball truncated at the element cap");
  return report;
}

FreeBasisReport free_basis_check(const FinGenSubgroup& h, int depth,
                                 std::optional<int> ratio) {
  require_graph(h);
  if (depth < 1) throw Error("depth must be positive");
  FreeBasisReport report;
  report.depth = depth;

  const std::size_t k = h.generators.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (is_finite_order(h.generators[i])) {
      report.reason = "generator " + std::to_string(i) +
                      " has finite order, so no free basis is possible";
      return report;
    }
  }
  if (!ratio) {
    int len = h.generators[0].length();
    for (const NormalForm& t : h.generators)
      if (t.length() != len) {
        report.reason =
            "generators have different lengths; pass the ratio explicitly";
        return report;
      }
    ratio = len;
  }
  report.ratio = *ratio;

  std::vector<NormalForm> alphabet;       // t_0, t_0^-1, t_1, t_1^-1, ...
  std::vector<std::string> letter_names;  // for reporting
  for (std::size_t i = 0; i < k; ++i) {
    alphabet.push_back(h.generators[i]);
    alphabet.push_back(invert(h.generators[i]));
    letter_names.push_back("t" + std::to_string(i));
    letter_names.push_back("t" + std::to_string(i) + "^-1");
  }

  // depth-first over freely reduced abstract words
  struct Frame {
    NormalForm element;
    int last = -1;  // index into alphabet, -1 at the root
    int length = 0;
    std::string word;
  };
  std::vector<Frame> stack;
  stack.push_back({NormalForm::identity(*h.graph), -1, 0, ""});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.length > 0) {
      ++report.words_checked;
      bool bad_identity = f.element.is_identity();
      bool bad_length = f.element.length() != *ratio * f.length;
      if (bad_identity || bad_length) {
        report.failing_word = f.word;
        report.failing_element = f.element;
        report.reason =
            bad_identity
                ? "freely reduced word collapses to the identity"
                : "length " + std::to_string(f.element.length()) +
                      " instead of " + std::to_string(*ratio * f.length);
        return report;
      }
    }
    if (f.length == depth) continue;
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      if (f.last >= 0 && (static_cast<std::size_t>(f.last) ^ 1) == a)
        continue;  // immediate cancellation in the free group
      Frame next{multiply(f.element, alphabet[a]), static_cast<int>(a),
                 f.length + 1,
                 f.word.empty() ? letter_names[a]
                                : f.word + " " + letter_names[a]};
      stack.push_back(std::move(next));
    }
  }
  report.passed = true;
  report.reason = "all freely reduced words up to length " +
                  std::to_string(depth) + " are nontrivial with length ratio " +
                  std::to_string(*ratio);
  return report;
}

}  // namespace racg
