#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "racg/graph.hpp"

namespace racg {

// Canonical form of a group element: the lexicographically least reduced
// word under the graph's total vertex order (shortlex normal form). Holds a
// pointer to its defining graph; the graph must outlive the form.
class NormalForm {
 public:
  static NormalForm identity(const DefiningGraph& g) { return NormalForm(g); }

  // normalize an arbitrary word
  static NormalForm from_letters(const DefiningGraph& g,
                                 std::span<const VertexId> word);

  // wire format: whitespace-separated vertex names; empty = identity
  static NormalForm parse(const DefiningGraph& g, std::string_view text);

  const DefiningGraph& graph() const { return *graph_; }
  const std::vector<VertexId>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool is_identity() const { return letters_.empty(); }

  std::string str() const;  // wire format

  // right-multiply by one generator
  NormalForm append(VertexId s) const;
  // left-multiply by one generator
  NormalForm prepend(VertexId s) const;

  friend bool operator==(const NormalForm& a, const NormalForm& b) {
    return a.graph_ == b.graph_ && a.letters_ == b.letters_;
  }
  friend bool operator!=(const NormalForm& a, const NormalForm& b) {
    return !(a == b);
  }
  // shortlex on canonical letters (by order rank); total within one graph,
  // used for deterministic minimal witnesses
  friend bool operator<(const NormalForm& a, const NormalForm& b);

 private:
  explicit NormalForm(const DefiningGraph& g) : graph_(&g) {}
  NormalForm(const DefiningGraph& g, std::vector<VertexId> letters)
      : graph_(&g), letters_(std::move(letters)) {}

  const DefiningGraph* graph_;
  std::vector<VertexId> letters_;
};

struct NormalFormHash {
  std::size_t operator()(const NormalForm& w) const;
};

NormalForm multiply(const NormalForm& a, const NormalForm& b);
NormalForm invert(const NormalForm& a);
// g h g^-1
NormalForm conjugate(const NormalForm& g, const NormalForm& h);
NormalForm power(const NormalForm& a, int k);

VertexSet support(const NormalForm& w);

// w = conjugator * core * conjugator^-1 with the core cyclically reduced and
// the concatenation reduced (lengths add: |w| = 2|conjugator| + |core|).
struct CyclicDecomposition {
  NormalForm conjugator;
  NormalForm core;
};

CyclicDecomposition cyclic_decompose(const NormalForm& w);

// support of the cyclically reduced core
VertexSet csupp(const NormalForm& w);

// finite order <=> csupp spans a clique (then the order is 1 or 2)
bool is_finite_order(const NormalForm& w);

// membership in the special subgroup on lambda <=> support ⊆ lambda
bool special_membership(const NormalForm& w, VertexSet lambda);

// image under the retraction that fixes lambda letterwise and kills every
// other generator (always a homomorphism onto the special subgroup)
NormalForm special_retract(const NormalForm& w, VertexSet lambda);

// minimal-length representative of the double coset G_A · w · G_B, by
// greedy length reduction (scans generators in rank order; deterministic)
NormalForm min_double_coset(const NormalForm& w, VertexSet a, VertexSet b);

// is w a product g1·g2·...·gk with gi in the special subgroup on factors[i]?
// Exact for up to two factors; for three the orbit search caps intermediate
// lengths at `bound` (default |w|), a heuristic documented with the result.
bool product_membership(const NormalForm& w,
                        std::span<const VertexSet> factors,
                        std::optional<int> bound = std::nullopt);

struct SubwordWindow {
  int length = 0;
  int begin = 0;  // window [begin, end) into the canonical letters
  int end = 0;
};

// longest contiguous subword of the canonical form whose support lies in
// some join subgraph (first maximal window reported)
SubwordWindow max_join_subword(const NormalForm& w);
// same with star subgraphs
SubwordWindow max_star_subword(const NormalForm& w);

}  // namespace racg
