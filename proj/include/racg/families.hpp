#pragma once

#include <vector>

#include "racg/subgroup.hpp"

namespace racg {

// Seven-vertex graph hosting a rank-two free subgroup that is join-free
// although every parabolic subgroup of the ambient group fails to be.
DefiningGraph figure1_graph();

// The free subgroup ⟨(a a1)(d d1)(a a1), (d d1)(a a1)(d d1)⟩; the graph
// must outlive the returned subgroup.
FinGenSubgroup figure1_subgroup(const DefiningGraph& figure1);

// Family with divergence degree climbing along the b-chain: a central
// square a0-a1-b0-b1, an apex c over {a1,b1}, and two symmetric fans of
// 4-cycles (t_i on the right over the b-chain, s_i on the left over the
// a-chain). 4d-2 vertices. Requires d >= 3.
DefiningGraph omega_graph(int d);

// Right half of the family graph (no apex, no left fan): central square,
// b-chain up to b_{p+1}, fan vertices t_1..t_{p-1}. 2p+3 vertices.
// Requires p >= 2. Induced in omega_graph(d) for every d > p.
DefiningGraph gamma_graph(int p);

// Distinguished three-generator special subgroup of omega_graph(d):
// {c, a_m, b_m} for 3 <= m <= d, and {c, s1, t1} for m == 2.
FinGenSubgroup omega_subgroup(const DefiningGraph& omega, int m);

// Vertex names of the gamma_graph(p) copy sitting inside omega_graph(d).
std::vector<std::string> gamma_vertex_names(int p);

// Same copy as a vertex set of the given omega graph; requires p < d.
VertexSet gamma_inside_omega(const DefiningGraph& omega, int p);

}  // namespace racg
