#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "racg/word.hpp"

namespace racg {

// Parabolic subgroup: conjugate of the special subgroup on lambda. The
// graph-side classifiers are conjugation-invariant, so the conjugator only
// matters for coset-level computations.
struct ParabolicSpec {
  VertexSet lambda;
  std::optional<NormalForm> conjugator;
};

// Finitely generated subgroup with an ordered generating tuple T.
struct FinGenSubgroup {
  const DefiningGraph* graph = nullptr;
  std::vector<NormalForm> generators;

  static FinGenSubgroup from_words(const DefiningGraph& g,
                                   const std::vector<std::string>& words);

  // lambda when every generator is a distinct single letter
  std::optional<VertexSet> as_special() const;
};

enum class Tri { yes, no, not_applicable };

std::string_view tri_name(Tri t);

struct ParabolicFlags {
  bool finite = false;
  // join-free and star-free coincide for parabolics; both are reported and
  // are not-applicable when the ambient graph is disconnected or a join
  Tri join_free = Tri::not_applicable;
  Tri star_free = Tri::not_applicable;
  bool almost_malnormal = false;
  // equivalently: finite height / hyperbolically embedded on its own
  bool strongly_quasiconvex = false;

  // witnesses for the negative cases, when they exist
  std::optional<std::pair<VertexId, VertexId>> distance_two_pair;
  std::optional<VertexId> cone_vertex;  // refutes almost_malnormal
  // the non-adjacent pair inside lambda that cone_vertex commutes with
  std::optional<std::pair<VertexId, VertexId>> coned_pair;
  std::optional<FourCycle> squeezing_cycle;  // refutes strongly_quasiconvex
};

ParabolicFlags classify_parabolic(const DefiningGraph& g,
                                  const ParabolicSpec& spec);

struct CollectionFlags {
  bool almost_malnormal = false;
  bool hyperbolically_embedded = false;
  std::string reason;  // which condition failed, if any
};

CollectionFlags classify_collection(const DefiningGraph& g,
                                    std::span<const ParabolicSpec> specs);

struct TBallEntry {
  NormalForm element;
  int t_length = 0;  // word length over the generating tuple
};

// Ball in the subgroup's own word metric, enumerated breadth-first over
// generators and their inverses; entries sorted by (t_length, shortlex).
struct TBall {
  std::vector<TBallEntry> entries;
  bool truncated = false;
  std::unordered_set<NormalForm, NormalFormHash> index;

  bool contains(const NormalForm& w) const { return index.count(w) > 0; }
};

TBall enumerate_subgroup(const FinGenSubgroup& h, int depth,
                         std::size_t max_elements = 2'000'000);

enum class Verdict { certified_negative, no_violation_up_to_bound };

std::string_view verdict_name(Verdict v);

struct ScanWitness {
  NormalForm element;
  std::optional<NormalForm> conjugator;
  std::string explanation;
};

struct ScanReport {
  Verdict verdict = Verdict::no_violation_up_to_bound;
  std::optional<ScanWitness> witness;
  int bound = 0;
  std::vector<std::string> caveats;
};

// searches the depth-L ball of H for an infinite-order element conjugate
// into a join subgroup; finding one certifies H is not join-free
ScanReport join_free_scan(const FinGenSubgroup& h, int depth);
// same against star subgroups
ScanReport star_free_scan(const FinGenSubgroup& h, int depth);
// searches for a conjugate of a generator (an element with singleton csupp)
ScanReport reflection_scan(const FinGenSubgroup& h, int depth);

struct JoinBustingEstimate {
  int value = 0;  // largest join-contained window over the scanned ball
  std::optional<NormalForm> max_element;
  SubwordWindow window;
  int depth = 0;
  std::string caveat;
};

JoinBustingEstimate join_busting_estimate(const FinGenSubgroup& h, int depth);

struct PreconditionReport {
  bool graph_connected = false;
  bool graph_non_join = false;
  ScanReport reflections;
  ScanReport join_free;
  // some precondition for malnormality is certifiably violated
  bool conclusive_failure = false;
  std::string summary;
};

PreconditionReport malnormal_preconditions(const FinGenSubgroup& h, int depth);

// searches group elements g (|g| <= g_radius, g outside the subgroup) and
// infinite-order h in the depth-h_depth ball of H with g h g^-1 back inside
// H; such a pair generates an infinite intersection H ∩ gHg^-1, violating
// almost-malnormality (torsion conjugations are deliberately ignored; they
// are the business of reflection_scan)
ScanReport malnormality_scan(const FinGenSubgroup& h, int g_radius,
                             int h_depth, std::size_t max_elements = 500'000);

struct FreeBasisReport {
  bool passed = false;
  int depth = 0;
  int ratio = 0;
  long long words_checked = 0;
  std::optional<std::string> failing_word;  // over the abstract basis
  std::optional<NormalForm> failing_element;
  std::string reason;
};

// Treats the generating tuple as a basis of a free group: every freely
// reduced word over it of length up to `depth` must be nontrivial and have
// group length exactly ratio * (word length). `ratio` defaults to the
// common generator length and must be supplied when lengths differ.
FreeBasisReport free_basis_check(const FinGenSubgroup& h, int depth,
                                 std::optional<int> ratio = std::nullopt);

}  // namespace racg
