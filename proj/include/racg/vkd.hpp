#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "racg/word.hpp"

namespace racg {

// split a whitespace-separated word into letters without normalizing
std::vector<VertexId> parse_word(const DefiningGraph& g,
                                 std::string_view text);

// Dual van Kampen diagram as an abstract chord diagram: the boundary word of
// an identity element plus a perfect matching of its positions into arcs.
// Valid diagrams match equal letters, cross only with adjacent labels, and
// satisfy the star-subgroup property: the subword strictly enclosed by an
// arc represents an element of the star subgroup of the arc's label.
struct DualVanKampenDiagram {
  const DefiningGraph* graph = nullptr;
  std::vector<VertexId> boundary;
  std::vector<int> partner;  // fixed-point-free involution on positions

  int size() const { return static_cast<int>(boundary.size()); }
  int arc_count() const { return size() / 2; }
  // arcs as (i, j) with i < j, sorted by i
  std::vector<std::pair<int, int>> arcs() const;

  static bool crossing(std::pair<int, int> a, std::pair<int, int> b);
};

// Greedy innermost-first construction: repeatedly match the cancellable pair
// with the smallest right end (largest left end for that right end) in the
// current word and delete it. Throws when the word is not the identity,
// reporting the canonical form it reduces to.
DualVanKampenDiagram build_diagram(const DefiningGraph& g,
                                   std::span<const VertexId> word);

struct DiagramCheck {
  bool ok = true;
  std::string violation;  // first failed condition, for reporting
};

DiagramCheck validate_diagram(const DualVanKampenDiagram& d);

struct CombResult {
  DualVanKampenDiagram diagram;
  // crossings among range-emanating arcs that were removed
  int swaps = 0;
};

// Rearranges the letters of boundary[lo, hi) so that no two arcs with an
// endpoint in the range cross, preserving the group element of the range
// word, the outside endpoints of arcs leaving the range, and all arcs lying
// entirely outside. Arcs with both endpoints inside become adjacent pairs.
CombResult comb(const DualVanKampenDiagram& d, int lo, int hi);

struct PruneResult {
  DualVanKampenDiagram diagram;
  int removed_letters = 0;
};

// Combs the range, then deletes every arc with both endpoints inside it
// (each is a contiguous identity block after combing, so validity and the
// element of the surrounding word survive).
PruneResult prune(const DualVanKampenDiagram& d, int lo, int hi);

// Label word read along a cut isolating positions [gap_from, gap_to), where
// gap k lies just before boundary position k. The arcs crossing the cut are
// read in the order of their endpoint inside the interval. The result spells
// the same group element as the cut-off subword.
std::vector<VertexId> label_read(const DualVanKampenDiagram& d, int gap_from,
                                 int gap_to);

enum class ArcTag { contributing, noncontributing };

// Reducing diagram for a factorization: boundary = concat(hs) followed by
// the reversal of the reduced target w. Arcs with both endpoints in the h
// part are noncontributing; w is reduced, so no arc has both endpoints in
// the w part, and the contributing arcs biject with the letters of w.
struct ReducingDiagram {
  DualVanKampenDiagram diagram;
  int h_length = 0;
  int w_length = 0;
  std::vector<int> block_ends;  // prefix lengths after each factor of hs
  std::vector<ArcTag> tags;     // indexed like diagram.arcs()

  int contributing_count() const;
};

ReducingDiagram build_reducing_diagram(
    const DefiningGraph& g, std::span<const std::vector<VertexId>> hs,
    const NormalForm& w);

}  // namespace racg
