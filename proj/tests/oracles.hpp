#pragma once

// Independent cross-check models used by the tests. Everything here avoids
// the library's own word machinery: elements are tracked as exact integer
// matrices, graph searches are brute force over subsets, the square group is
// modeled as a grid of integer pairs, and walls are equivalence classes of
// ball edges under a union-find closure. Agreement between these models and
// the library is what the acceptance checks certify.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "racg/cayley.hpp"
#include "racg/graph.hpp"
#include "racg/word.hpp"

namespace oracle {

using racg::DefiningGraph;
using racg::VertexId;
using racg::VertexSet;

// ---- exact linear model of the group ----
//
// Each generator s acts on Z^n by  e_s -> -e_s,  e_t -> e_t for t adjacent
// to s, and e_t -> e_t + 2 e_s otherwise. This preserves the defining
// relations (s^2 = 1, st = ts for adjacent pairs) and is a faithful
// representation, so two words spell the same group element exactly when
// their matrices coincide. Entries stay far inside int64 at test scales.

struct Mat {
  int n = 0;
  std::vector<std::int64_t> a;  // row-major

  std::int64_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
  std::int64_t at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * n + c];
  }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.n == y.n && x.a == y.a;
  }
  friend bool operator<(const Mat& x, const Mat& y) { return x.a < y.a; }
};

inline Mat mat_identity(int n) {
  Mat m;
  m.n = n;
  m.a.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

inline Mat mat_mul(const Mat& x, const Mat& y) {
  Mat m;
  m.n = x.n;
  m.a.assign(x.a.size(), 0);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      std::int64_t v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < x.n; ++j) m.at(i, j) += v * y.at(k, j);
    }
  return m;
}

// column-convention action on basis vectors: column t of gen(s) is the image
// of e_t
inline Mat gen_matrix(const DefiningGraph& g, VertexId s) {
  const int n = g.vertex_count();
  Mat m = mat_identity(n);
  for (VertexId t = 0; t < n; ++t) {
    if (t == s)
      m.at(s, s) = -1;
    else if (!g.adjacent(s, t))
      m.at(s, t) = 2;  // e_t + 2 e_s
  }
  return m;
}

inline Mat word_matrix(const DefiningGraph& g,
                       const std::vector<VertexId>& letters) {
  Mat m = mat_identity(g.vertex_count());
  for (VertexId s : letters) m = mat_mul(m, gen_matrix(g, s));
  return m;
}

// Breadth-first model of the radius-R ball: for every element (= matrix)
// the minimal word length and the shortlex-least word of that length, built
// layer by layer without consulting the library's normal forms. The least
// word of an element always extends the least word of a shorter element, so
// the layer DP below is exact.
struct MatrixBall {
  std::map<Mat, int> min_length;
  std::map<Mat, std::vector<VertexId>> least_word;  // letters by rank order
  std::vector<std::size_t> count_by_length;         // index = length
};

inline MatrixBall matrix_ball(const DefiningGraph& g, int radius) {
  const int n = g.vertex_count();
  std::vector<Mat> gens;
  for (VertexId s = 0; s < n; ++s) gens.push_back(gen_matrix(g, s));
  std::vector<VertexId> by_rank;
  for (int r = 0; r < n; ++r) by_rank.push_back(g.by_rank(r));

  MatrixBall ball;
  ball.min_length[mat_identity(n)] = 0;
  ball.least_word[mat_identity(n)] = {};
  ball.count_by_length.assign(static_cast<std::size_t>(radius) + 1, 0);
  ball.count_by_length[0] = 1;

  std::vector<Mat> layer{mat_identity(n)};
  for (int len = 0; len < radius; ++len) {
    // candidates for the next layer: least extension per new matrix
    std::map<Mat, std::vector<VertexId>> next;
    for (const Mat& m : layer) {
      const std::vector<VertexId>& w = ball.least_word[m];
      for (VertexId s : by_rank) {
        Mat prod = mat_mul(m, gens[s]);
        if (ball.min_length.count(prod)) continue;  // shorter or same length
        std::vector<VertexId> cand = w;
        cand.push_back(s);
        auto it = next.find(prod);
        if (it == next.end())
          next.emplace(std::move(prod), std::move(cand));
        else {
          // compare by rank sequence (shortlex within the fixed length)
          auto rank_less = [&](const std::vector<VertexId>& x,
                               const std::vector<VertexId>& y) {
            for (std::size_t i = 0; i < x.size(); ++i) {
              if (g.order_rank(x[i]) != g.order_rank(y[i]))
                return g.order_rank(x[i]) < g.order_rank(y[i]);
            }
            return false;
          };
          if (rank_less(cand, it->second)) it->second = std::move(cand);
        }
      }
    }
    std::vector<Mat> next_layer;
    for (auto& [m, w] : next) {
      ball.min_length[m] = len + 1;
      ball.least_word[m] = std::move(w);
      next_layer.push_back(m);
    }
    ball.count_by_length[static_cast<std::size_t>(len) + 1] = next_layer.size();
    layer = std::move(next_layer);
    if (layer.empty()) break;
  }
  return ball;
}

// ---- brute-force graph-side searches ----

// Is `set` inside some vertex subset whose induced subgraph is a join
// (splits into two nonempty parts with every cross edge present)?
inline bool join_contained(const DefiningGraph& g, VertexSet set) {
  const int n = g.vertex_count();
  const std::uint64_t all = (n == 64) ? ~0ull : ((1ull << n) - 1);
  const std::uint64_t need = set.bits();
  for (std::uint64_t sup = 0; sup <= all; ++sup) {
    if ((need & ~sup) != 0) continue;  // does not contain the set
    // try every split of sup into a | b
    std::uint64_t rest = sup;
    for (std::uint64_t a = (sup - 1) & sup;; a = (a - 1) & sup) {
      std::uint64_t b = sup & ~a;
      if (a != 0 && b != 0) {
        bool complete = true;
        for (VertexId u = 0; u < n && complete; ++u) {
          if (!((a >> u) & 1)) continue;
          for (VertexId v = 0; v < n && complete; ++v) {
            if (!((b >> v) & 1)) continue;
            if (!g.adjacent(u, v)) complete = false;
          }
        }
        if (complete) return true;
      }
      if (a == 0) break;
    }
    (void)rest;
    if (sup == all) break;  // avoid wraparound when n == 64
  }
  return false;
}

// Is `set` inside the star of some vertex?
inline bool star_contained(const DefiningGraph& g, VertexSet set) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (set.subset_of(g.star(v))) return true;
  return false;
}

// ---- grid model of the square group ----
//
// The group of the 4-cycle a-b-c-d is the direct product of two infinite
// dihedral groups, and its Cayley graph is the integer grid: the first
// coordinate tracks the <a,c> factor, the second the <b,d> factor, and the
// subgroup generated by {b, d} is the vertical axis x = 0. Distances are
// L1, the distance to the subgroup is |x|, and the distance to the identity
// is |x| + |y|. The estimators below mirror the library's definitions
// point for point on this model.

struct GridDivergence {
  int radius;                       // ambient ball |x| + |y| <= radius
  std::vector<std::pair<int, int>> cells;
  std::map<std::pair<int, int>, int> index;

  explicit GridDivergence(int R) : radius(R) {
    for (int x = -R; x <= R; ++x)
      for (int y = -R + std::abs(x); y <= R - std::abs(x); ++y) {
        index[{x, y}] = static_cast<int>(cells.size());
        cells.push_back({x, y});
      }
  }

  std::vector<int> bfs(const std::vector<char>& region, int source) const {
    std::vector<int> dist(cells.size(), -1);
    if (!region[source]) return dist;
    std::deque<int> q{source};
    dist[source] = 0;
    while (!q.empty()) {
      int i = q.front();
      q.pop_front();
      auto [x, y] = cells[i];
      const int dx[4] = {1, -1, 0, 0}, dy[4] = {0, 0, 1, -1};
      for (int k = 0; k < 4; ++k) {
        auto it = index.find({x + dx[k], y + dy[k]});
        if (it == index.end()) continue;
        int j = it->second;
        if (!region[j] || dist[j] >= 0) continue;
        dist[j] = dist[i] + 1;
        q.push_back(j);
      }
    }
    return dist;
  }

  // subgroup divergence against the axis x = 0, parameters as in the
  // library: pairs on {|x| = r}, same component of {|x| >= r}, L1 distance
  // at least n*r, minimized avoidant length inside {|x| >= ceil(rho*r)}
  std::optional<int> sigma(int n, int rho_num, int rho_den, int r) const {
    int rho_r = (rho_num * r + rho_den - 1) / rho_den;
    std::vector<char> region_r(cells.size()), region_rho(cells.size());
    std::vector<int> boundary;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      int d = std::abs(cells[i].first);
      region_r[i] = d >= r;
      region_rho[i] = d >= rho_r;
      if (d == r) boundary.push_back(static_cast<int>(i));
    }
    std::vector<int> comp(cells.size(), -1);
    int c = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (!region_r[i] || comp[i] >= 0) continue;
      std::vector<int> d = bfs(region_r, static_cast<int>(i));
      for (std::size_t j = 0; j < cells.size(); ++j)
        if (d[j] >= 0) comp[j] = c;
      ++c;
    }
    std::optional<int> best;
    for (int i : boundary) {
      std::vector<int> d = bfs(region_rho, i);
      for (int j : boundary) {
        if (j <= i) continue;
        if (comp[i] != comp[j]) continue;
        int ambient = std::abs(cells[i].first - cells[j].first) +
                      std::abs(cells[i].second - cells[j].second);
        if (ambient < n * r) continue;
        if (d[j] < 0) continue;
        if (!best || d[j] < *best) best = d[j];
      }
    }
    return best;
  }

  // group divergence: supremum of avoidant lengths over sphere pairs;
  // nullopt when some pair is disconnected inside the ball
  std::optional<int> delta(int rho_num, int rho_den, int r) const {
    int rho_r = (rho_num * r + rho_den - 1) / rho_den;
    std::vector<char> region(cells.size());
    std::vector<int> sphere;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      int len = std::abs(cells[i].first) + std::abs(cells[i].second);
      region[i] = len >= rho_r;
      if (len == r) sphere.push_back(static_cast<int>(i));
    }
    int best = -1;
    for (int i : sphere) {
      std::vector<int> d = bfs(region, i);
      for (int j : sphere) {
        if (j <= i) continue;
        if (d[j] < 0) return std::nullopt;
        best = std::max(best, d[j]);
      }
    }
    return best;
  }
};

// ---- geometric wall model ----
//
// Edges of the ball graph, glued across squares: the two parallel sides of
// any unit square lie on the same wall. Classes of that closure are the
// walls; two walls cross when one square contributes a side pair to each.
// A wall with no endpoint on the outer sphere is fully represented: every
// square extending it lies inside the ball, so its class and its crossings
// are complete.

struct WallModel {
  const racg::CayleyBall* ball = nullptr;
  // edge key: (ball index of shorter endpoint, letter)
  std::vector<std::pair<int, VertexId>> edges;
  std::map<std::pair<int, VertexId>, int> edge_index;
  std::vector<int> parent;  // union-find over edges
  std::set<std::pair<int, int>> crossing_classes;
  std::vector<char> touches_sphere;  // per edge

  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }

  explicit WallModel(const racg::CayleyBall& b) : ball(&b) {
    const DefiningGraph& g = *b.graph;
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (VertexId s : g.all_vertices()) {
        racg::NormalForm next = b.elements[i].append(s);
        if (next.length() <= b.elements[i].length()) continue;
        if (b.find(next) < 0) continue;
        edge_index[{static_cast<int>(i), s}] =
            static_cast<int>(edges.size());
        edges.push_back({static_cast<int>(i), s});
      }
    }
    parent.resize(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e)
      parent[e] = static_cast<int>(e);
    touches_sphere.assign(edges.size(), 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [i, s] = edges[e];
      if (b.elements[i].append(s).length() == b.radius) touches_sphere[e] = 1;
    }

    // glue parallel sides of every square x, xs, xt, xst
    struct Square {
      int es1, es2, et1, et2;
    };
    std::vector<Square> squares;
    for (std::size_t i = 0; i < b.size(); ++i) {
      const racg::NormalForm& x = b.elements[i];
      for (VertexId s : g.all_vertices()) {
        for (VertexId t : g.all_vertices()) {
          if (t <= s || !g.adjacent(s, t)) continue;
          racg::NormalForm xs = x.append(s);
          racg::NormalForm xt = x.append(t);
          racg::NormalForm xst = xs.append(t);
          int is = ball->find(xs), it = ball->find(xt), ist = ball->find(xst);
          if (is < 0 || it < 0 || ist < 0) continue;
          auto edge_of = [&](const racg::NormalForm& u,
                             const racg::NormalForm& v,
                             VertexId letter) -> int {
            const racg::NormalForm& lo = u.length() < v.length() ? u : v;
            auto found = edge_index.find({ball->find(lo), letter});
            return found == edge_index.end() ? -1 : found->second;
          };
          int s1 = edge_of(x, xs, s), s2 = edge_of(xt, xst, s);
          int t1 = edge_of(x, xt, t), t2 = edge_of(xs, xst, t);
          if (s1 < 0 || s2 < 0 || t1 < 0 || t2 < 0) continue;
          unite(s1, s2);
          unite(t1, t2);
          squares.push_back({s1, s2, t1, t2});
        }
      }
    }
    for (const Square& q : squares) {
      int ws = find(q.es1), wt = find(q.et1);
      crossing_classes.insert({std::min(ws, wt), std::max(ws, wt)});
    }
  }

  int wall_of(int elem_index, VertexId letter) {
    auto it = edge_index.find({elem_index, letter});
    return it == edge_index.end() ? -1 : find(it->second);
  }

  bool cross(int wall_a, int wall_b) const {
    return crossing_classes.count(
               {std::min(wall_a, wall_b), std::max(wall_a, wall_b)}) > 0;
  }

  // class members, and whether the class stays off the outer sphere
  std::map<int, std::vector<int>> classes() {
    std::map<int, std::vector<int>> out;
    for (std::size_t e = 0; e < edges.size(); ++e)
      out[find(static_cast<int>(e))].push_back(static_cast<int>(e));
    return out;
  }

  bool fully_represented(const std::vector<int>& member_edges) const {
    for (int e : member_edges)
      if (touches_sphere[e]) return false;
    return true;
  }
};

// ---- seeded random instances ----

inline DefiningGraph random_connected_graph(std::mt19937_64& rng, int max_n,
                                            bool require_non_join = false) {
  static const char* kNames[] = {"a", "b", "c", "d", "e", "f"};
  for (;;) {
    int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_n - 1));
    double p = 0.25 + 0.5 * (static_cast<double>(rng() % 1000) / 1000.0);
    std::vector<std::string> names(kNames, kNames + n);
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (static_cast<double>(rng() % 1000) / 1000.0 < p)
          edges.push_back({names[i], names[j]});
    DefiningGraph g(names, edges);
    if (!g.connected()) continue;
    if (require_non_join && racg::is_join(g)) continue;
    return g;
  }
}

inline std::vector<VertexId> random_word(std::mt19937_64& rng,
                                         const DefiningGraph& g, int length) {
  std::vector<VertexId> w;
  for (int i = 0; i < length; ++i)
    w.push_back(static_cast<VertexId>(rng() % g.vertex_count()));
  return w;
}

// apply `count` random commuting swaps of adjacent letters (each preserves
// the group element)
inline void random_commuting_swaps(std::mt19937_64& rng,
                                   const DefiningGraph& g,
                                   std::vector<VertexId>& w, int count) {
  if (w.size() < 2) return;
  for (int i = 0; i < count; ++i) {
    std::size_t p = rng() % (w.size() - 1);
    if (w[p] != w[p + 1] && g.adjacent(w[p], w[p + 1]))
      std::swap(w[p], w[p + 1]);
  }
}

}  // namespace oracle
