#include "racg/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace racg {

DefiningGraph::DefiningGraph(
    std::vector<std::string> vertices,
    const std::vector<std::pair<std::string, std::string>>& edges,
    std::optional<std::vector<std::string>> order)
    : names_(std::move(vertices)) {
  if (names_.empty()) throw Error("graph: vertex list is empty");
  if (names_.size() > 64)
    throw Error("graph: at most 64 vertices supported, got " +
                std::to_string(names_.size()));
  std::map<std::string, VertexId> index;
  for (VertexId v = 0; v < vertex_count(); ++v) {
    if (names_[v].empty()) throw Error("graph: empty vertex name");
    // names travel through whitespace-separated words, comma-separated
    // vertex lists, and quoted emitter output
    if (names_[v].find_first_of(" \t\r\n,\"") != std::string::npos)
      throw Error("graph: vertex name '" + names_[v] +
                  "' contains whitespace, a comma, or a quote");
    if (!index.emplace(names_[v], v).second)
      throw Error("graph: duplicate vertex '" + names_[v] + "'");
  }

  adj_.assign(names_.size(), VertexSet());
  for (const auto& [un, vn] : edges) {
    auto ui = index.find(un);
    if (ui == index.end())
      throw Error("graph: edge endpoint '" + un + "' is not a vertex");
    auto vi = index.find(vn);
    if (vi == index.end())
      throw Error("graph: edge endpoint '" + vn + "' is not a vertex");
    if (ui->second == vi->second)
      throw Error("graph: self-loop at '" + un + "'");
    adj_[ui->second].add(vi->second);  // re-listed edges collapse to a set
    adj_[vi->second].add(ui->second);
  }

  rank_.assign(names_.size(), 0);
  by_rank_.assign(names_.size(), 0);
  if (order) {
    if (order->size() != names_.size())
      throw Error("graph: order must list every vertex exactly once");
    std::set<VertexId> seen;
    for (int r = 0; r < static_cast<int>(order->size()); ++r) {
      auto it = index.find((*order)[r]);
      if (it == index.end())
        throw Error("graph: order entry '" + (*order)[r] +
                    "' is not a vertex");
      if (!seen.insert(it->second).second)
        throw Error("graph: order repeats '" + (*order)[r] + "'");
      rank_[it->second] = r;
      by_rank_[r] = it->second;
    }
  } else {
    for (VertexId v = 0; v < vertex_count(); ++v) {
      rank_[v] = v;
      by_rank_[v] = v;
    }
  }

  neighbors_.resize(names_.size());
  for (VertexId v = 0; v < vertex_count(); ++v) {
    neighbors_[v] = adj_[v].to_vector();
    std::sort(neighbors_[v].begin(), neighbors_[v].end(),
              [&](VertexId a, VertexId b) { return rank_[a] < rank_[b]; });
    all_.add(v);
  }

  for (int r = 0; r < vertex_count(); ++r) {
    VertexId u = by_rank_[r];
    for (VertexId v : neighbors_[u])
      if (rank_[v] > r) edges_.emplace_back(u, v);
  }
}

std::optional<VertexId> DefiningGraph::find(std::string_view name) const {
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (names_[v] == name) return v;
  return std::nullopt;
}

VertexId DefiningGraph::require(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw Error("unknown vertex '" + std::string(name) + "'");
}

std::optional<int> DefiningGraph::distance(VertexId u, VertexId v) const {
  if (u == v) return 0;
  std::vector<int> dist(names_.size(), -1);
  dist[u] = 0;
  std::deque<VertexId> queue{u};
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : neighbors_[x]) {
      if (dist[y] >= 0) continue;
      dist[y] = dist[x] + 1;
      if (y == v) return dist[y];
      queue.push_back(y);
    }
  }
  return std::nullopt;
}

bool DefiningGraph::connected() const {
  VertexSet seen = VertexSet::single(0);
  std::deque<VertexId> queue{0};
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : adj_[x]) {
      if (seen.contains(y)) continue;
      seen.add(y);
      queue.push_back(y);
    }
  }
  return seen == all_;
}

std::vector<VertexSet> DefiningGraph::complement_components(
    VertexSet within) const {
  std::vector<VertexSet> components;
  VertexSet unseen = within;
  while (!unseen.empty()) {
    VertexId start = *unseen.begin();
    VertexSet comp = VertexSet::single(start);
    unseen.remove(start);
    std::deque<VertexId> queue{start};
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      // complement neighbors inside `within`: non-adjacent, distinct
      VertexSet next = (within - adj_[x]) - comp;
      next.remove(x);
      for (VertexId y : next) {
        comp.add(y);
        unseen.remove(y);
        queue.push_back(y);
      }
    }
    components.push_back(comp);
  }
  // BFS above already emits by least unseen vertex, but make it explicit
  std::sort(components.begin(), components.end());
  return components;
}

bool DefiningGraph::complement_connected(VertexSet within) const {
  return complement_components(within).size() <= 1;
}

bool DefiningGraph::is_clique(VertexSet s) const {
  for (VertexId v : s) {
    VertexSet rest = s - VertexSet::single(v);
    if (!rest.subset_of(adj_[v])) return false;
  }
  return true;
}

std::string DefiningGraph::set_names(VertexSet s, std::string_view sep) const {
  std::string out;
  bool first = true;
  for (int r = 0; r < vertex_count(); ++r) {
    VertexId v = by_rank_[r];
    if (!s.contains(v)) continue;
    if (!first) out += sep;
    out += names_[v];
    first = false;
  }
  return out;
}

std::optional<JoinSplit> join_decomposition(const DefiningGraph& g,
                                            VertexSet a) {
  if (a.empty()) throw Error("join_decomposition: empty vertex set");
  auto components = g.complement_components(a);
  if (components.size() < 2) return std::nullopt;
  // least component (by least vertex) vs. the rest
  std::vector<std::pair<int, VertexSet>> ranked;
  for (const auto& c : components) {
    int least = g.vertex_count();
    for (VertexId v : c) least = std::min(least, g.order_rank(v));
    ranked.emplace_back(least, c);
  }
  std::sort(ranked.begin(), ranked.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  JoinSplit split;
  split.first = ranked[0].second;
  for (std::size_t i = 1; i < ranked.size(); ++i)
    split.second = split.second | ranked[i].second;
  return split;
}

bool is_join(const DefiningGraph& g) {
  return !g.complement_connected(g.all_vertices());
}

JoinContainment contained_in_join(const DefiningGraph& g, VertexSet a) {
  if (a.empty()) throw Error("contained_in_join: empty vertex set");
  JoinContainment result;
  if (auto split = join_decomposition(g, a)) {
    result.contained = true;
    result.split = split;
    return result;
  }
  for (int r = 0; r < g.vertex_count(); ++r) {
    VertexId v = g.by_rank(r);
    if (a.contains(v)) continue;
    if (a.subset_of(g.link(v))) {
      result.contained = true;
      result.cone = v;
      return result;
    }
  }
  return result;
}

std::optional<VertexId> contained_in_star(const DefiningGraph& g,
                                          VertexSet a) {
  if (a.empty()) throw Error("contained_in_star: empty vertex set");
  for (int r = 0; r < g.vertex_count(); ++r) {
    VertexId v = g.by_rank(r);
    if (a.subset_of(g.star(v))) return v;
  }
  return std::nullopt;
}

bool FourCycle::has_diagonal(VertexId p, VertexId q) const {
  auto match = [&](std::pair<VertexId, VertexId> d) {
    return (d.first == p && d.second == q) || (d.first == q && d.second == p);
  };
  return match(diagonal_a()) || match(diagonal_b());
}

std::pair<VertexId, VertexId> FourCycle::opposite_diagonal(VertexId v) const {
  if (corners[0] == v || corners[2] == v) return diagonal_b();
  if (corners[1] == v || corners[3] == v) return diagonal_a();
  throw Error("opposite_diagonal: vertex is not a corner of the 4-cycle");
}

std::optional<int> FourCycleGraph::find_node(VertexSet corners) const {
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
    if (nodes[i].vertex_set() == corners) return i;
  return std::nullopt;
}

namespace {

// rank-sorted pair
std::pair<VertexId, VertexId> ordered_pair(const DefiningGraph& g, VertexId a,
                                           VertexId b) {
  if (g.order_rank(a) > g.order_rank(b)) std::swap(a, b);
  return {a, b};
}

bool pair_less(const DefiningGraph& g, std::pair<VertexId, VertexId> a,
               std::pair<VertexId, VertexId> b) {
  int a1 = g.order_rank(a.first), a2 = g.order_rank(a.second);
  int b1 = g.order_rank(b.first), b2 = g.order_rank(b.second);
  return std::tie(a1, a2) < std::tie(b1, b2);
}

}  // namespace

FourCycleGraph four_cycle_graph(const DefiningGraph& g) {
  FourCycleGraph fc;
  fc.graph = &g;

  // Enumerate by diagonal: a non-adjacent pair (p,q) plus a non-adjacent
  // pair (x,y) of their common neighbors gives the induced cycle p-x-q-y.
  // Each cycle arises from both of its diagonals; keep the one where (p,q)
  // is the lesser diagonal.
  const int n = g.vertex_count();
  for (int rp = 0; rp < n; ++rp) {
    for (int rq = rp + 1; rq < n; ++rq) {
      VertexId p = g.by_rank(rp), q = g.by_rank(rq);
      if (g.adjacent(p, q)) continue;
      auto common = g.common_neighbors(p, q).to_vector();
      std::sort(common.begin(), common.end(), [&](VertexId a, VertexId b) {
        return g.order_rank(a) < g.order_rank(b);
      });
      for (std::size_t i = 0; i < common.size(); ++i) {
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          VertexId x = common[i], y = common[j];
          if (g.adjacent(x, y)) continue;
          if (!pair_less(g, {p, q}, ordered_pair(g, x, y))) continue;
          fc.nodes.push_back(FourCycle{{p, x, q, y}});
        }
      }
    }
  }
  std::sort(fc.nodes.begin(), fc.nodes.end(),
            [&](const FourCycle& a, const FourCycle& b) {
              auto key = [&](const FourCycle& c) {
                return std::array<int, 4>{
                    g.order_rank(c.corners[0]), g.order_rank(c.corners[1]),
                    g.order_rank(c.corners[2]), g.order_rank(c.corners[3])};
              };
              return key(a) < key(b);
            });

  const int m = static_cast<int>(fc.nodes.size());
  fc.adjacency.resize(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      std::optional<std::pair<VertexId, VertexId>> shared;
      for (auto d : {fc.nodes[i].diagonal_a(), fc.nodes[i].diagonal_b()}) {
        if (fc.nodes[j].has_diagonal(d.first, d.second)) shared = d;
      }
      if (!shared) continue;
      fc.edges.push_back({i, j, ordered_pair(g, shared->first, shared->second)});
      fc.adjacency[i].push_back(j);
      fc.adjacency[j].push_back(i);
    }
  }

  fc.component.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    if (fc.component[i] >= 0) continue;
    int id = fc.component_count++;
    fc.component[i] = id;
    std::deque<int> queue{i};
    VertexSet support = fc.nodes[i].vertex_set();
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      support = support | fc.nodes[x].vertex_set();
      for (int y : fc.adjacency[x]) {
        if (fc.component[y] >= 0) continue;
        fc.component[y] = id;
        queue.push_back(y);
      }
    }
    fc.supports.push_back(support);
  }
  return fc;
}

bool is_cfs(const DefiningGraph& g) {
  auto fc = four_cycle_graph(g);
  for (const auto& support : fc.supports)
    if (support == g.all_vertices()) return true;
  return false;
}

RankResult rank_of_pair(const DefiningGraph& g, VertexId s, VertexId t,
                        int cap) {
  if (s == t) throw Error("rank_of_pair: vertices coincide");
  if (g.adjacent(s, t)) throw Error("rank_of_pair: vertices are adjacent");
  if (cap < 1) throw Error("rank_of_pair: cap must be at least 1");

  const int n = g.vertex_count();
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
  for (int ru = 0; ru < n; ++ru) {
    for (int rv = ru + 1; rv < n; ++rv) {
      VertexId u = g.by_rank(ru), v = g.by_rank(rv);
      if (g.adjacent(u, v)) continue;
      pair_index[u][v] = pair_index[v][u] = static_cast<int>(pairs.size());
      pairs.emplace_back(u, v);
    }
  }

  // level 1: not a diagonal of any induced 4-cycle
  std::vector<char> level(pairs.size(), 0);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [u, v] = pairs[i];
    bool in_cycle = false;
    auto common = g.common_neighbors(u, v).to_vector();
    for (std::size_t a = 0; a < common.size() && !in_cycle; ++a)
      for (std::size_t b = a + 1; b < common.size() && !in_cycle; ++b)
        if (!g.adjacent(common[a], common[b])) in_cycle = true;
    level[i] = in_cycle ? 0 : 1;
  }

  auto holds_all_in_link = [&](VertexId center,
                               const std::vector<char>& prev) {
    VertexSet lk = g.link(center);
    for (VertexId u : lk)
      for (VertexId v : lk) {
        if (g.order_rank(u) >= g.order_rank(v)) continue;
        if (g.adjacent(u, v)) continue;
        if (!prev[pair_index[u][v]]) return false;
      }
    return true;  // vacuously true when the link has no non-adjacent pair
  };

  const int target = pair_index[s][t];
  RankResult result;
  result.value = level[target] ? 1 : 0;
  if (!level[target]) {
    // level 1 already fails; by induction every level fails
    return result;
  }
  std::vector<char> cur = level;
  for (int depth = 2; depth <= cap; ++depth) {
    std::vector<char> next(pairs.size(), 0);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto [u, v] = pairs[i];
      next[i] = holds_all_in_link(u, cur) || holds_all_in_link(v, cur);
    }
    if (next[target]) result.value = depth;
    if (next == cur) {
      // fixpoint: surviving pairs hold at every later level
      if (next[target]) {
        result.value = cap;
        result.capped = true;
      }
      return result;
    }
    cur = std::move(next);
    if (!cur[target]) return result;  // levels are antitone; it stays false
  }
  result.capped = cur[target] != 0;
  return result;
}

}  // namespace racg
