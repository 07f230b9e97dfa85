#include "racg/cayley.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <memory>

namespace racg {

namespace {

void check_same_graph(const NormalForm& a, const NormalForm& b) {
  if (&a.graph() != &b.graph())
    throw Error("elements come from different graphs");
}

}  // namespace

int CayleyBall::find(const NormalForm& w) const {
  auto it = index.find(w);
  return it == index.end() ? -1 : it->second;
}

int CayleyBall::require(const NormalForm& w) const {
  int i = find(w);
  if (i < 0)
    throw Error("element " + (w.is_identity() ? "e" : w.str()) +
                " lies outside the radius-" + std::to_string(radius) +
                " ball");
  return i;
}

CayleyBall enumerate_ball(const DefiningGraph& g, int radius,
                          std::size_t max_elements) {
  if (radius < 0) throw Error("negative radius");
  CayleyBall ball;
  ball.graph = &g;
  ball.radius = radius;

  std::deque<NormalForm> frontier;
  NormalForm e = NormalForm::identity(g);
  ball.index.emplace(e, 0);
  ball.elements.push_back(e);
  frontier.push_back(e);
  while (!frontier.empty()) {
    NormalForm w = frontier.front();
    frontier.pop_front();
    if (w.length() == radius) continue;
    for (VertexId s : g.all_vertices()) {
      NormalForm next = w.append(s);
      if (next.length() <= w.length()) continue;  // stepping back inward
      if (ball.index.count(next)) continue;
      if (ball.elements.size() >= max_elements)
        throw Error("ball cap of " + std::to_string(max_elements) +
                    " elements exceeded at radius " + std::to_string(radius));
      ball.index.emplace(next, 0);
      ball.elements.push_back(next);
      frontier.push_back(next);
    }
  }

  std::sort(ball.elements.begin(), ball.elements.end());
  ball.index.clear();
  for (std::size_t i = 0; i < ball.elements.size(); ++i)
    ball.index.emplace(ball.elements[i], static_cast<int>(i));

  ball.neighbors.resize(ball.elements.size());
  for (std::size_t i = 0; i < ball.elements.size(); ++i) {
    for (VertexId s : g.all_vertices()) {
      NormalForm next = ball.elements[i].append(s);
      int j = ball.find(next);
      if (j >= 0) ball.neighbors[i].push_back(j);
    }
    std::sort(ball.neighbors[i].begin(), ball.neighbors[i].end());
  }
  return ball;
}

Hyperplane Hyperplane::dual(const NormalForm& g, VertexId v) {
  const DefiningGraph& graph = g.graph();
  if (v < 0 || v >= graph.vertex_count()) throw Error("bad wall type vertex");
  return Hyperplane{min_double_coset(g, VertexSet(), graph.star(v)), v};
}

bool hyperplanes_intersect(const Hyperplane& a, const Hyperplane& b) {
  check_same_graph(a.base, b.base);
  const DefiningGraph& g = a.base.graph();
  if (!g.adjacent(a.type, b.type)) return false;
  NormalForm offset = multiply(invert(a.base), b.base);
  std::array<VertexSet, 2> factors = {g.star(a.type), g.star(b.type)};
  return product_membership(offset, factors);
}

bool common_transversal_exists(const Hyperplane& a, const Hyperplane& b,
                               std::optional<int> bound) {
  check_same_graph(a.base, b.base);
  const DefiningGraph& g = a.base.graph();
  NormalForm offset = multiply(invert(a.base), b.base);
  VertexSet both = g.star(a.type) & g.star(b.type);
  for (VertexId u : both) {
    std::array<VertexSet, 3> factors = {g.star(a.type), g.star(u),
                                        g.star(b.type)};
    if (product_membership(offset, factors, bound)) return true;
  }
  return false;
}

namespace {

// elements of the special subgroup on lambda, grown on demand and shared
// by the closures a distance field hands out
struct LambdaBall {
  const DefiningGraph* graph;
  VertexSet lambda;
  std::vector<NormalForm> elements;  // breadth-first, lengths nondecreasing
  std::unordered_set<NormalForm, NormalFormHash> seen;
  std::size_t next_unexpanded = 0;
  int expanded_radius = 0;

  explicit LambdaBall(const DefiningGraph& g, VertexSet l)
      : graph(&g), lambda(l) {
    NormalForm e = NormalForm::identity(g);
    elements.push_back(e);
    seen.insert(e);
  }

  void grow_to(int radius) {
    static constexpr std::size_t kCap = 2'000'000;
    while (expanded_radius < radius) {
      std::size_t end = elements.size();
      for (std::size_t i = next_unexpanded; i < end; ++i) {
        for (VertexId s : lambda) {
          NormalForm next = elements[i].append(s);
          if (next.length() <= elements[i].length()) continue;
          if (seen.count(next)) continue;
          if (elements.size() >= kCap)
            throw Error("special-subgroup ball cap exceeded");
          seen.insert(next);
          elements.push_back(next);
        }
      }
      next_unexpanded = end;
      ++expanded_radius;
      if (end == elements.size()) break;  // subgroup exhausted
    }
  }
};

int conjugated_parabolic_distance(const std::shared_ptr<LambdaBall>& lb,
                                  const NormalForm& conj, const NormalForm& x,
                                  int cutoff) {
  // min over h in G_lambda of |conj * h^-1 * conj^-1 * x|, scanned in order
  // of |h|; since that length is at least |h| - |conj| - |y|, elements past
  // the current horizon cannot improve the best value (nor beat the cutoff)
  NormalForm y = multiply(invert(conj), x);
  int best = x.length();  // the h = e term
  std::size_t i = 0;
  auto horizon = [&] {
    return std::min(best, cutoff + 1) + conj.length() + y.length();
  };
  for (;;) {
    lb->grow_to(horizon());
    if (i >= lb->elements.size()) break;  // subgroup exhausted
    const NormalForm& h = lb->elements[i];
    if (h.length() > horizon()) break;
    best = std::min(best, multiply(conj, multiply(invert(h), y)).length());
    ++i;
  }
  return best;
}

}  // namespace

SubgroupDistance distance_to_subgroup(const NormalForm& x,
                                      const ParabolicSpec& h, int bound) {
  if (bound < 0) throw Error("negative bound");
  const DefiningGraph& g = x.graph();
  if (!h.lambda.subset_of(g.all_vertices()))
    throw Error("vertex set outside the graph");
  SubgroupDistance out;
  if (!h.conjugator || h.conjugator->is_identity()) {
    out.value = min_double_coset(x, h.lambda, VertexSet()).length();
    out.exceeds_bound = out.value > bound;
    return out;
  }
  check_same_graph(x, *h.conjugator);
  auto lb = std::make_shared<LambdaBall>(g, h.lambda);
  int d = conjugated_parabolic_distance(lb, *h.conjugator, x, bound);
  out.value = d;
  out.exceeds_bound = d > bound;
  if (out.exceeds_bound)
    out.caveat = "above the bound the reported value is the best found, "
                 "not certified minimal";
  return out;
}

SubgroupDistance distance_to_subgroup(const NormalForm& x,
                                      const FinGenSubgroup& h, int bound,
                                      int depth) {
  if (bound < 0) throw Error("negative bound");
  if (auto lambda = h.as_special()) {
    ParabolicSpec spec{*lambda, std::nullopt};
    return distance_to_subgroup(x, spec, bound);
  }
  TBall ball = enumerate_subgroup(h, depth);
  SubgroupDistance out;
  int best = std::numeric_limits<int>::max();
  for (const TBallEntry& entry : ball.entries)
    best = std::min(best, multiply(invert(entry.element), x).length());
  out.value = best;
  out.exceeds_bound = best > bound;
  out.caveat = "distance certified only against the depth-" +
               std::to_string(depth) + " generator ball";
  return out;
}

DistanceField distance_field(const ParabolicSpec& h, int bound) {
  if (!h.conjugator || h.conjugator->is_identity()) {
    VertexSet lambda = h.lambda;
    return [lambda](const NormalForm& x) {
      return min_double_coset(x, lambda, VertexSet()).length();
    };
  }
  NormalForm conj = *h.conjugator;
  auto lb = std::make_shared<LambdaBall>(conj.graph(), h.lambda);
  return [lb, conj, bound](const NormalForm& x) {
    return conjugated_parabolic_distance(lb, conj, x, bound);
  };
}

DistanceField distance_field(const FinGenSubgroup& h, int bound, int depth) {
  if (auto lambda = h.as_special()) {
    ParabolicSpec spec{*lambda, std::nullopt};
    return distance_field(spec, bound);
  }
  auto ball = std::make_shared<TBall>(enumerate_subgroup(h, depth));
  return [ball](const NormalForm& x) {
    int best = std::numeric_limits<int>::max();
    for (const TBallEntry& entry : ball->entries)
      best = std::min(best, multiply(invert(entry.element), x).length());
    return best;
  };
}

DistanceField distance_to_identity() {
  return [](const NormalForm& x) { return x.length(); };
}

namespace {

constexpr int kUnreached = -1;

// BFS from `source` through vertices with region[i] true; -1 = unreached
std::vector<int> region_bfs(const CayleyBall& ball,
                            const std::vector<char>& region, int source) {
  std::vector<int> dist(ball.size(), kUnreached);
  if (!region[source]) return dist;
  std::deque<int> frontier;
  dist[source] = 0;
  frontier.push_back(source);
  while (!frontier.empty()) {
    int i = frontier.front();
    frontier.pop_front();
    for (int j : ball.neighbors[i]) {
      if (!region[j] || dist[j] != kUnreached) continue;
      dist[j] = dist[i] + 1;
      frontier.push_back(j);
    }
  }
  return dist;
}

std::vector<int> field_over_ball(const CayleyBall& ball,
                                 const DistanceField& dist) {
  std::vector<int> values(ball.size());
  for (std::size_t i = 0; i < ball.size(); ++i)
    values[i] = dist(ball.elements[i]);
  return values;
}

bool region_touches_sphere(const CayleyBall& ball,
                           const std::vector<char>& region) {
  for (std::size_t i = 0; i < ball.size(); ++i)
    if (region[i] && ball.elements[i].length() == ball.radius) return true;
  return false;
}

void check_rho(const Rational& rho) {
  if (rho.num < 1 || rho.den < 1 || rho.num > rho.den)
    throw Error("rho must satisfy 0 < rho <= 1");
}

}  // namespace

std::optional<int> avoidant_distance(const CayleyBall& ball,
                                     const NormalForm& x, const NormalForm& y,
                                     const DistanceField& dist, int r) {
  int ix = ball.require(x);
  int iy = ball.require(y);
  std::vector<char> region(ball.size(), 1);
  if (r > 0) {
    std::vector<int> values = field_over_ball(ball, dist);
    for (std::size_t i = 0; i < ball.size(); ++i)
      region[i] = values[i] >= r;
  }
  if (!region[ix] || !region[iy])
    throw Error("endpoint lies inside the avoided neighborhood");
  std::vector<int> d = region_bfs(ball, region, ix);
  if (d[iy] == kUnreached) return std::nullopt;
  return d[iy];
}

DivergenceEstimate subgroup_divergence(const CayleyBall& ball,
                                       const DistanceField& dist, int n,
                                       Rational rho, int r) {
  if (n < 2) throw Error("n must be at least 2");
  if (r < 1) throw Error("r must be at least 1");
  check_rho(rho);

  DivergenceEstimate est;
  est.params = {n, rho, r, ball.radius};
  if (ball.radius < (n + 2) * r)
    est.note = "ball radius below (n+2)r; admissible pairs may be missing. ";

  std::vector<int> values = field_over_ball(ball, dist);
  std::vector<char> region_r(ball.size()), region_rho(ball.size());
  int rho_r = rho.ceil_times(r);
  std::vector<int> boundary;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    region_r[i] = values[i] >= r;
    region_rho[i] = values[i] >= rho_r;
    if (values[i] == r) boundary.push_back(static_cast<int>(i));
  }
  if (boundary.empty()) {
    est.note += "boundary of the r-neighborhood is empty inside the ball";
    return est;
  }
  est.truncated = region_touches_sphere(ball, region_rho);

  // admissibility requires connectivity inside the r-avoidant region
  std::vector<int> r_component(ball.size(), -1);
  int comp = 0;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    if (!region_r[i] || r_component[i] >= 0) continue;
    std::vector<int> d = region_bfs(ball, region_r, static_cast<int>(i));
    for (std::size_t j = 0; j < ball.size(); ++j)
      if (d[j] != kUnreached) r_component[j] = comp;
    ++comp;
  }

  for (int i : boundary) {
    std::vector<int> d;
    bool have_bfs = false;
    for (int j : boundary) {
      if (j <= i) continue;
      if (r_component[i] != r_component[j]) continue;
      int ambient =
          multiply(invert(ball.elements[i]), ball.elements[j]).length();
      if (ambient < n * r) continue;
      if (!have_bfs) {
        d = region_bfs(ball, region_rho, i);
        have_bfs = true;
      }
      if (d[j] == kUnreached) continue;  // only within the truncated ball
      if (!est.value || d[j] < *est.value) {
        est.value = d[j];
        est.pair = {ball.elements[i], ball.elements[j]};
      }
    }
  }
  if (est.value)
    est.note += "within-ball avoidant length is an upper bound; far pairs "
                "outside the ball could lower the infimum";
  else
    est.note += "no admissible pair inside the ball";
  return est;
}

DivergenceEstimate group_divergence(const CayleyBall& ball, Rational rho,
                                    int r) {
  if (r < 1) throw Error("r must be at least 1");
  check_rho(rho);

  DivergenceEstimate est;
  est.params = {0, rho, r, ball.radius};
  if (ball.radius < r + 2)
    est.note = "ball radius below r+2; detour room may be missing. ";

  int rho_r = rho.ceil_times(r);
  std::vector<char> region_rho(ball.size());
  std::vector<int> sphere;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    int len = ball.elements[i].length();
    region_rho[i] = len >= rho_r;
    if (len == r) sphere.push_back(static_cast<int>(i));
  }
  if (sphere.empty()) {
    est.note += "sphere of radius r is empty";
    return est;
  }
  est.truncated = region_touches_sphere(ball, region_rho);

  bool disconnected = false;
  int best = -1;
  for (int i : sphere) {
    std::vector<int> d = region_bfs(ball, region_rho, i);
    for (int j : sphere) {
      if (j <= i) continue;
      if (d[j] == kUnreached) {
        disconnected = true;
        continue;
      }
      if (d[j] > best) {
        best = d[j];
        est.pair = {ball.elements[i], ball.elements[j]};
      }
    }
  }
  if (disconnected) {
    est.value = std::nullopt;
    est.pair = std::nullopt;
    est.note += "some sphere pair is disconnected in the avoidant region "
                "(within this ball); the supremum is unbounded here";
  } else {
    est.value = best;
    est.note += "within-ball avoidant length is an upper bound per pair, "
                "while a larger ball could add farther sphere pairs";
  }
  return est;
}

namespace {

using DiagPair = std::pair<VertexId, VertexId>;

bool same_pair(const DiagPair& a, const DiagPair& b) {
  return (a.first == b.first && a.second == b.second) ||
         (a.first == b.second && a.second == b.first);
}

}  // namespace

CornerPath corner_path(const FourCycleGraph& fcg, int q0, DiagPair diagonal,
                       int m, const NormalForm& h) {
  if (fcg.graph == nullptr) throw Error("four-cycle graph without a graph");
  const DefiningGraph& g = *fcg.graph;
  if (&h.graph() != &g) throw Error("element from a different graph");
  if (q0 < 0 || q0 >= static_cast<int>(fcg.nodes.size()))
    throw Error("four-cycle index out of range");
  if (m < 1) throw Error("power must be positive");
  if (!fcg.nodes[q0].has_diagonal(diagonal.first, diagonal.second))
    throw Error("chosen pair is not a diagonal of the chosen four-cycle");

  const int comp = fcg.component[q0];

  // orient every diagonal pair consistently: the caller's order for the
  // base pair, rank order elsewhere
  auto orient = [&](DiagPair p) -> DiagPair {
    if (same_pair(p, diagonal)) return diagonal;
    if (g.precedes(p.second, p.first)) return {p.second, p.first};
    return p;
  };

  // pick, per letter, the least-index four-cycle of the component with
  // that letter as a corner
  std::vector<int> stops;
  for (VertexId s : h.letters()) {
    int found = -1;
    for (std::size_t i = 0; i < fcg.nodes.size() && found < 0; ++i)
      if (fcg.component[i] == comp && fcg.nodes[i].vertex_set().contains(s))
        found = static_cast<int>(i);
    if (found < 0)
      throw Error("letter " + g.name(s) +
                  " is not a corner of any four-cycle in the component");
    stops.push_back(found);
  }

  CornerPath out;
  NormalForm cur = NormalForm::identity(g);
  for (int i = 0; i < m; ++i)
    cur = cur.append(diagonal.first).append(diagonal.second);
  out.vertices.push_back(cur);
  auto step = [&](VertexId s) {
    cur = cur.append(s);
    out.vertices.push_back(cur);
  };

  // one corner move: replace the m-th power of `from` by that of `to`,
  // both diagonals of the same four-cycle, raising then lowering
  auto corner_move = [&](DiagPair from, DiagPair to) {
    for (int i = 0; i < m; ++i) {
      step(to.first);
      step(to.second);
    }
    for (int i = 0; i < m; ++i) {
      step(from.second);
      step(from.first);
    }
    ++out.segments;
  };

  // shared diagonal of two adjacent four-cycle nodes
  auto shared_pair = [&](int a, int b) -> DiagPair {
    for (const FourCycleGraph::Edge& e : fcg.edges)
      if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return e.shared;
    throw Error("internal: four-cycle nodes not adjacent");
  };

  int cur_node = q0;
  DiagPair cur_pair = diagonal;

  // walk the four-cycle graph to `node`, ending on its diagonal `target`
  auto route = [&](int node, DiagPair target) {
    // BFS path cur_node -> node inside the component
    std::vector<int> parent(fcg.nodes.size(), -2);
    std::deque<int> frontier;
    parent[cur_node] = -1;
    frontier.push_back(cur_node);
    while (!frontier.empty() && parent[node] == -2) {
      int i = frontier.front();
      frontier.pop_front();
      for (int j : fcg.adjacency[i]) {
        if (parent[j] != -2) continue;
        parent[j] = i;
        frontier.push_back(j);
      }
    }
    if (parent[node] == -2)
      throw Error("internal: four-cycle nodes in different components");
    std::vector<int> path;
    for (int i = node; i != -1; i = parent[i]) path.push_back(i);
    std::reverse(path.begin(), path.end());

    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      DiagPair shared = orient(shared_pair(path[i], path[i + 1]));
      if (!same_pair(cur_pair, shared)) {
        corner_move(cur_pair, shared);
        cur_pair = shared;
      }
    }
    if (!same_pair(cur_pair, target)) {
      corner_move(cur_pair, target);
      cur_pair = target;
    }
    cur_node = node;
  };

  const std::vector<VertexId> letters = h.letters();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    DiagPair avoid =
        orient(fcg.nodes[stops[i]].opposite_diagonal(letters[i]));
    route(stops[i], avoid);
    step(letters[i]);
  }
  route(q0, diagonal);
  return out;
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

int Rational::ceil_times(int r) const {
  return (num * r + den - 1) / den;
}

Rational Rational::parse(const std::string& text) {
  auto parse_int = [&](const std::string& part) {
    if (part.empty() || part.size() > 6 ||
        part.find_first_not_of("0123456789") != std::string::npos)
      throw Error("bad ratio '" + text + "'; expected p or p/q");
    int value = std::stoi(part);
    if (value < 1) throw Error("ratio parts must be positive");
    return value;
  };
  Rational out;
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    out.num = parse_int(text);
    out.den = 1;
  } else {
    out.num = parse_int(text.substr(0, slash));
    out.den = parse_int(text.substr(slash + 1));
  }
  return out;
}

}  // namespace racg
