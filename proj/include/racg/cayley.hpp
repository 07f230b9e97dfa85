#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "racg/graph.hpp"
#include "racg/subgroup.hpp"
#include "racg/word.hpp"

namespace racg {

// Radius-R ball in the group's word metric: the vertices of the Davis
// complex 1-skeleton within R of the identity, with the induced edges.
struct CayleyBall {
  const DefiningGraph* graph = nullptr;
  int radius = 0;
  // breadth-first layer order: sorted by (length, shortlex)
  std::vector<NormalForm> elements;
  std::vector<std::vector<int>> neighbors;  // indices into elements

  int find(const NormalForm& w) const;  // -1 when outside the ball
  int require(const NormalForm& w) const;
  std::size_t size() const { return elements.size(); }

  std::unordered_map<NormalForm, int, NormalFormHash> index;
};

CayleyBall enumerate_ball(const DefiningGraph& g, int radius,
                          std::size_t max_elements = 4'000'000);

// Wall of the Davis complex, written g·H_v: the wall dual to the edge
// (g, g·v) and to every edge (gh, ghv) with h in the star subgroup of v.
// Canonical: g is the shortlex-minimal element of the coset g·G_St(v).
struct Hyperplane {
  NormalForm base;
  VertexId type = 0;

  static Hyperplane dual(const NormalForm& g, VertexId v);

  friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
    return a.type == b.type && a.base == b.base;
  }
  friend bool operator!=(const Hyperplane& a, const Hyperplane& b) {
    return !(a == b);
  }
};

// the two walls cross: types adjacent and base offset in G_St(v)·G_St(w)
bool hyperplanes_intersect(const Hyperplane& a, const Hyperplane& b);

// some wall of type u in St(v) ∩ St(w) could cross both: base offset in a
// triple product of star subgroups. The three-factor membership test is
// bounded-search, so `true` is certain and `false` is up-to-the-bound.
bool common_transversal_exists(const Hyperplane& a, const Hyperplane& b,
                               std::optional<int> bound = std::nullopt);

struct SubgroupDistance {
  int value = 0;          // exact when exceeds_bound is false
  bool exceeds_bound = false;
  std::string caveat;     // empty when the value is exact
};

// distance from x to the parabolic conjugator·G_lambda·conjugator^-1;
// exact for special parabolics, enumeration-backed otherwise
SubgroupDistance distance_to_subgroup(const NormalForm& x,
                                      const ParabolicSpec& h, int bound);
// distance to a finitely generated subgroup, certified only against its
// depth-`depth` generator ball
SubgroupDistance distance_to_subgroup(const NormalForm& x,
                                      const FinGenSubgroup& h, int bound,
                                      int depth);

using DistanceField = std::function<int(const NormalForm&)>;

// distance evaluator usable for every ball vertex (values above `bound`
// may be reported as bound+1; callers only compare against r <= bound)
DistanceField distance_field(const ParabolicSpec& h, int bound);
DistanceField distance_field(const FinGenSubgroup& h, int bound, int depth);
DistanceField distance_to_identity();

// Length of the shortest ball path from x to y through vertices at
// distance >= r from the avoided set; nullopt when no such path exists
// inside the ball. Throws when an endpoint violates the constraint.
std::optional<int> avoidant_distance(const CayleyBall& ball,
                                     const NormalForm& x, const NormalForm& y,
                                     const DistanceField& dist, int r);

// positive rational p/q, parsed from "p", "p/q"
struct Rational {
  int num = 1;
  int den = 1;

  static Rational parse(const std::string& text);
  std::string str() const;
  // ceil(num*r/den)
  int ceil_times(int r) const;
};

struct DivergenceParams {
  int n = 2;
  Rational rho;
  int r = 1;
  int radius = 0;
};

struct DivergenceEstimate {
  DivergenceParams params;
  std::optional<int> value;  // nullopt: no admissible pair / all disconnected
  std::optional<std::pair<NormalForm, NormalForm>> pair;
  bool truncated = false;  // search touched the ball sphere
  std::string note;
};

// inf over boundary pairs (distance exactly r from the subgroup, ambient
// distance >= n*r, r-avoidantly connected) of the ceil(rho*r)-avoidant
// path length
DivergenceEstimate subgroup_divergence(const CayleyBall& ball,
                                       const DistanceField& dist, int n,
                                       Rational rho, int r);

// sup over sphere pairs around the identity of the ceil(rho*r)-avoidant
// path length
DivergenceEstimate group_divergence(const CayleyBall& ball, Rational rho,
                                    int r);

struct CornerPath {
  std::vector<NormalForm> vertices;  // consecutive entries differ by a letter
  int segments = 0;  // corner moves of 4m edges each, the recorded M
  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

// Explicit path from u^m to h·u^m staying on powers of four-cycle
// diagonals, where u is the product of the chosen diagonal of cycle q0.
// Every letter of h must be a corner of some cycle in q0's component of
// the four-cycle graph. The path: for the i-th letter of h, walk to the
// m-th power of a diagonal avoiding that letter (corner moves along a
// four-cycle-graph path), then append the letter as one commuting edge.
CornerPath corner_path(const FourCycleGraph& fcg, int q0,
                       std::pair<VertexId, VertexId> diagonal, int m,
                       const NormalForm& h);

}  // namespace racg
