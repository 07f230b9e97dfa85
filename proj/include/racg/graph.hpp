#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace racg {

// All user-facing failures (bad documents, violated preconditions, resource
// caps) are thrown as racg::Error with a message naming the offending input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using VertexId = int;

// Subset of the vertices of one defining graph, stored as a bitmask.
// Graphs are capped at 64 vertices so a word fits; the loader enforces this.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(VertexId v) {
    return VertexSet(std::uint64_t{1} << v);
  }

  constexpr bool contains(VertexId v) const {
    return (bits_ >> v) & std::uint64_t{1};
  }
  constexpr void add(VertexId v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void remove(VertexId v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr bool subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & b.bits_);
  }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ | b.bits_);
  }
  // set difference
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(VertexSet a, VertexSet b) {
    return a.bits_ == b.bits_;
  }
  friend constexpr bool operator!=(VertexSet a, VertexSet b) {
    return a.bits_ != b.bits_;
  }
  // by lowest member, for deterministic orderings of disjoint sets
  friend constexpr bool operator<(VertexSet a, VertexSet b) {
    return a.bits_ < b.bits_;
  }

  // iterates members in increasing VertexId order
  class iterator {
   public:
    constexpr explicit iterator(std::uint64_t bits) : bits_(bits) {}
    constexpr VertexId operator*() const { return std::countr_zero(bits_); }
    constexpr iterator& operator++() {
      bits_ &= bits_ - 1;
      return *this;
    }
    constexpr bool operator!=(iterator other) const {
      return bits_ != other.bits_;
    }

   private:
    std::uint64_t bits_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<VertexId> to_vector() const {
    std::vector<VertexId> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (VertexId v : *this) out.push_back(v);
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

// Finite simplicial defining graph of a right-angled Coxeter group, plus the
// fixed total order on vertices used by canonical forms. The order defaults
// to declaration order; an explicit order must be a permutation of the
// vertex names. Vertex ids are indices into the declaration list.
class DefiningGraph {
 public:
  DefiningGraph(std::vector<std::string> vertices,
                const std::vector<std::pair<std::string, std::string>>& edges,
                std::optional<std::vector<std::string>> order = std::nullopt);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  const std::string& name(VertexId v) const { return names_[v]; }
  std::optional<VertexId> find(std::string_view name) const;
  // like find, but throws Error naming the unknown vertex
  VertexId require(std::string_view name) const;

  bool adjacent(VertexId u, VertexId v) const {
    return adj_[u].contains(v);
  }
  VertexSet link(VertexId v) const { return adj_[v]; }
  VertexSet star(VertexId v) const { return adj_[v] | VertexSet::single(v); }
  VertexSet all_vertices() const { return all_; }

  // neighbors sorted by order rank
  const std::vector<VertexId>& neighbors(VertexId v) const {
    return neighbors_[v];
  }

  int order_rank(VertexId v) const { return rank_[v]; }
  VertexId by_rank(int r) const { return by_rank_[r]; }
  // true iff u precedes v in the total order
  bool precedes(VertexId u, VertexId v) const { return rank_[u] < rank_[v]; }

  // edges as (u,v) with rank(u) < rank(v), sorted
  const std::vector<std::pair<VertexId, VertexId>>& edges() const {
    return edges_;
  }

  // path-length distance in the defining graph; nullopt when disconnected
  std::optional<int> distance(VertexId u, VertexId v) const;

  bool connected() const;
  // complement of the induced subgraph on `within` is connected
  bool complement_connected(VertexSet within) const;
  // connected components of the complement of induced(within),
  // sorted by their least-ranked vertex
  std::vector<VertexSet> complement_components(VertexSet within) const;

  bool is_clique(VertexSet s) const;
  VertexSet common_neighbors(VertexId u, VertexId v) const {
    return adj_[u] & adj_[v];
  }

  std::string set_names(VertexSet s, std::string_view sep = " ") const;

 private:
  std::vector<std::string> names_;
  std::vector<VertexSet> adj_;
  std::vector<int> rank_;
  std::vector<VertexId> by_rank_;
  std::vector<std::vector<VertexId>> neighbors_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  VertexSet all_;
};

// A join split of a vertex set: every vertex of `first` is adjacent to every
// vertex of `second`; both parts nonempty.
struct JoinSplit {
  VertexSet first;
  VertexSet second;
};

// Canonical join decomposition of induced(A): complement components grouped
// deterministically (component containing the least-ranked vertex vs. the
// rest). nullopt when induced(A) is not a join.
std::optional<JoinSplit> join_decomposition(const DefiningGraph& g,
                                            VertexSet a);

// Is the whole graph a join?
bool is_join(const DefiningGraph& g);

struct JoinContainment {
  bool contained = false;
  // exactly one of these is set when contained:
  std::optional<JoinSplit> split;  // induced(A) itself is a join
  std::optional<VertexId> cone;    // some vertex outside A cones A
};

// A lies inside some join subgraph: induced(A) is a join, or some vertex
// v outside A has A ⊆ Lk(v). Throws on empty A.
JoinContainment contained_in_join(const DefiningGraph& g, VertexSet a);

// least-ranked v with A ⊆ St(v), if any. Throws on empty A.
std::optional<VertexId> contained_in_star(const DefiningGraph& g, VertexSet a);

// Induced four-cycle, stored in cycle order: corners[0]-corners[1]-corners[2]-
// corners[3]-corners[0] are edges; diagonals are {corners[0],corners[2]} and
// {corners[1],corners[3]}. Normalized so corners[0] is the least-ranked
// vertex of the least diagonal and diagonals are rank-sorted pairs.
struct FourCycle {
  std::array<VertexId, 4> corners;

  VertexSet vertex_set() const {
    VertexSet s;
    for (VertexId v : corners) s.add(v);
    return s;
  }
  std::pair<VertexId, VertexId> diagonal_a() const {
    return {corners[0], corners[2]};
  }
  std::pair<VertexId, VertexId> diagonal_b() const {
    return {corners[1], corners[3]};
  }
  bool has_diagonal(VertexId p, VertexId q) const;
  // the diagonal pair not containing v; v must be a corner
  std::pair<VertexId, VertexId> opposite_diagonal(VertexId v) const;
};

// The four-cycle graph: one node per induced 4-cycle, an edge when two
// cycles share a diagonal (non-adjacent) pair. Distinct cycles share at most
// one diagonal pair, so edges carry that pair as a label.
struct FourCycleGraph {
  const DefiningGraph* graph = nullptr;
  std::vector<FourCycle> nodes;  // sorted by corner ranks, deterministic
  struct Edge {
    int a;
    int b;
    std::pair<VertexId, VertexId> shared;  // rank-sorted diagonal pair
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> adjacency;  // node -> sorted neighbor nodes
  std::vector<int> component;               // node -> component id
  int component_count = 0;
  std::vector<VertexSet> supports;  // component id -> union of corner sets

  // node containing this cycle's exact vertex set, if present
  std::optional<int> find_node(VertexSet corners) const;
};

FourCycleGraph four_cycle_graph(const DefiningGraph& g);

// CFS: some four-cycle-graph component's support is the whole vertex set.
bool is_cfs(const DefiningGraph& g);

struct RankResult {
  int value = 0;
  // the pair still satisfies the level-`cap` predicate, so its rank is at
  // least cap and may exceed it
  bool capped = false;
};

// Rank of a non-adjacent pair (s,t), by least-fixpoint iteration of the
// level predicates: level 1 = the pair lies in no induced 4-cycle; level n =
// every non-adjacent pair inside Lk(s) has level n-1, or every non-adjacent
// pair inside Lk(t) does (vacuously true for links without non-adjacent
// pairs). Throws if s == t or s,t are adjacent.
RankResult rank_of_pair(const DefiningGraph& g, VertexId s, VertexId t,
                        int cap);

}  // namespace racg
