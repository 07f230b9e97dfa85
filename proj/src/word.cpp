#include "racg/word.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <unordered_set>

namespace racg {

namespace {

// Place a letter into a canonical word, keeping it canonical (assuming no
// cancellation). The letter may travel left through its maximal commuting
// suffix window; the least position is just before the first larger-ranked
// letter of that window. Stopping at the nearest smaller commuting letter
// would be wrong: a larger letter deeper in the window still wants s first.
void insert_letter(const DefiningGraph& g, std::vector<VertexId>& nf,
                   VertexId s) {
  std::size_t window = nf.size();
  while (window > 0 && g.adjacent(nf[window - 1], s)) --window;
  std::size_t j = window;
  while (j < nf.size() && g.order_rank(nf[j]) < g.order_rank(s)) ++j;
  nf.insert(nf.begin() + static_cast<std::ptrdiff_t>(j), s);
}

// Append one letter to a canonical word, keeping it canonical. A letter
// cancels when a matching earlier letter sees only commuting letters in
// between (there is at most one such position in a reduced word). Deleting
// it can break lexicographic leastness elsewhere, so the survivor word is
// refolded; being reduced, the refold is insertion-only.
void fold_letter(const DefiningGraph& g, std::vector<VertexId>& nf,
                 VertexId s) {
  for (int i = static_cast<int>(nf.size()) - 1; i >= 0; --i) {
    if (nf[i] == s) {
      nf.erase(nf.begin() + i);
      std::vector<VertexId> rebuilt;
      rebuilt.reserve(nf.size());
      for (VertexId t : nf) insert_letter(g, rebuilt, t);
      nf = std::move(rebuilt);
      return;
    }
    if (!g.adjacent(nf[i], s)) break;
  }
  insert_letter(g, nf, s);
}

// first index holding s with only s-commuting letters before it
std::optional<int> initial_occurrence(const DefiningGraph& g,
                                      const std::vector<VertexId>& w,
                                      VertexId s) {
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    if (w[i] == s) return i;
    if (!g.adjacent(w[i], s)) return std::nullopt;
  }
  return std::nullopt;
}

// last index holding s with only s-commuting letters after it
std::optional<int> final_occurrence(const DefiningGraph& g,
                                    const std::vector<VertexId>& w,
                                    VertexId s) {
  for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i) {
    if (w[i] == s) return i;
    if (!g.adjacent(w[i], s)) return std::nullopt;
  }
  return std::nullopt;
}

void check_same_graph(const NormalForm& a, const NormalForm& b,
                      const char* op) {
  if (&a.graph() != &b.graph())
    throw Error(std::string(op) + ": operands live over different graphs");
}

}  // namespace

NormalForm NormalForm::from_letters(const DefiningGraph& g,
                                    std::span<const VertexId> word) {
  NormalForm out = identity(g);
  for (VertexId s : word) {
    if (s < 0 || s >= g.vertex_count())
      throw Error("word: letter index out of range");
    fold_letter(g, out.letters_, s);
  }
  return out;
}

NormalForm NormalForm::parse(const DefiningGraph& g, std::string_view text) {
  std::vector<VertexId> word;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::size_t j = i;
    while (j < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[j])))
      ++j;
    if (j > i) word.push_back(g.require(text.substr(i, j - i)));
    i = j;
  }
  return from_letters(g, word);
}

std::string NormalForm::str() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += graph_->name(letters_[i]);
  }
  return out;
}

NormalForm NormalForm::append(VertexId s) const {
  NormalForm out = *this;
  fold_letter(*graph_, out.letters_, s);
  return out;
}

NormalForm NormalForm::prepend(VertexId s) const {
  std::vector<VertexId> word;
  word.reserve(letters_.size() + 1);
  word.push_back(s);
  word.insert(word.end(), letters_.begin(), letters_.end());
  return from_letters(*graph_, word);
}

bool operator<(const NormalForm& a, const NormalForm& b) {
  if (a.letters_.size() != b.letters_.size())
    return a.letters_.size() < b.letters_.size();
  for (std::size_t i = 0; i < a.letters_.size(); ++i) {
    int ra = a.graph_->order_rank(a.letters_[i]);
    int rb = b.graph_->order_rank(b.letters_[i]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

std::size_t NormalFormHash::operator()(const NormalForm& w) const {
  std::size_t h = std::hash<const void*>()(&w.graph());
  for (VertexId v : w.letters())
    h = h * 1099511628211ULL + static_cast<std::size_t>(v) + 0x9e3779b9;
  return h;
}

NormalForm multiply(const NormalForm& a, const NormalForm& b) {
  check_same_graph(a, b, "multiply");
  NormalForm out = a;
  for (VertexId s : b.letters()) out = out.append(s);
  return out;
}

NormalForm invert(const NormalForm& a) {
  std::vector<VertexId> reversed(a.letters().rbegin(), a.letters().rend());
  return NormalForm::from_letters(a.graph(), reversed);
}

NormalForm conjugate(const NormalForm& g, const NormalForm& h) {
  check_same_graph(g, h, "conjugate");
  return multiply(multiply(g, h), invert(g));
}

NormalForm power(const NormalForm& a, int k) {
  NormalForm base = k < 0 ? invert(a) : a;
  int reps = k < 0 ? -k : k;
  NormalForm out = NormalForm::identity(a.graph());
  for (int i = 0; i < reps; ++i) out = multiply(out, base);
  return out;
}

VertexSet support(const NormalForm& w) {
  VertexSet s;
  for (VertexId v : w.letters()) s.add(v);
  return s;
}

CyclicDecomposition cyclic_decompose(const NormalForm& w) {
  const DefiningGraph& g = w.graph();
  std::vector<VertexId> peeled;
  NormalForm core = w;
  bool again = true;
  while (again) {
    again = false;
    for (int r = 0; r < g.vertex_count(); ++r) {
      VertexId s = g.by_rank(r);
      auto head = initial_occurrence(g, core.letters(), s);
      if (!head) continue;
      auto tail = final_occurrence(g, core.letters(), s);
      if (!tail || *tail == *head) continue;
      // core = s * shorter * s; conjugating by s strips both occurrences
      std::vector<VertexId> word;
      word.push_back(s);
      word.insert(word.end(), core.letters().begin(), core.letters().end());
      word.push_back(s);
      NormalForm next = NormalForm::from_letters(g, word);
      if (next.length() != core.length() - 2)
        throw Error("cyclic_decompose: internal peel accounting failed");
      peeled.push_back(s);
      core = next;
      again = true;
      break;
    }
  }
  CyclicDecomposition out{NormalForm::from_letters(g, peeled), core};
  if (out.conjugator.length() != static_cast<int>(peeled.size()))
    throw Error("cyclic_decompose: conjugator failed to stay reduced");
  return out;
}

VertexSet csupp(const NormalForm& w) {
  return support(cyclic_decompose(w).core);
}

bool is_finite_order(const NormalForm& w) {
  return w.graph().is_clique(csupp(w));
}

bool special_membership(const NormalForm& w, VertexSet lambda) {
  return support(w).subset_of(lambda);
}

NormalForm special_retract(const NormalForm& w, VertexSet lambda) {
  NormalForm out = NormalForm::identity(w.graph());
  for (VertexId s : w.letters())
    if (lambda.contains(s)) out = out.append(s);
  return out;
}

NormalForm min_double_coset(const NormalForm& w, VertexSet a, VertexSet b) {
  const DefiningGraph& g = w.graph();
  NormalForm cur = w;
  bool improved = true;
  while (improved) {
    improved = false;
    for (int r = 0; r < g.vertex_count(); ++r) {
      VertexId s = g.by_rank(r);
      if (a.contains(s) && initial_occurrence(g, cur.letters(), s)) {
        cur = cur.prepend(s);
        improved = true;
      }
      if (b.contains(s) && final_occurrence(g, cur.letters(), s)) {
        cur = cur.append(s);
        improved = true;
      }
    }
  }
  return cur;
}

bool product_membership(const NormalForm& w,
                        std::span<const VertexSet> factors,
                        std::optional<int> bound) {
  if (factors.empty() || factors.size() > 3)
    throw Error("product_membership: need between 1 and 3 factors");
  if (factors.size() == 1) return special_membership(w, factors[0]);
  if (factors.size() == 2)
    return min_double_coset(w, factors[0], factors[1]).is_identity();

  // three factors: search the two-sided orbit a^-1 · w · c^-1 for an element
  // of the middle special subgroup, capping lengths (heuristic; the cap is
  // never below |w|, which suffices at the scales cross-checked in tests)
  const DefiningGraph& g = w.graph();
  const int cap = std::max(bound.value_or(w.length()), w.length());
  std::unordered_set<NormalForm, NormalFormHash> seen;
  std::deque<NormalForm> queue;
  auto push = [&](const NormalForm& x) {
    if (x.length() > cap) return;
    if (seen.insert(x).second) queue.push_back(x);
  };
  push(w);
  while (!queue.empty()) {
    NormalForm x = queue.front();
    queue.pop_front();
    if (special_membership(x, factors[1])) return true;
    for (VertexId s : factors[0]) push(x.prepend(s));
    for (VertexId s : factors[2]) push(x.append(s));
  }
  return false;
}

namespace {

template <typename Contained>
SubwordWindow max_window(const NormalForm& w, Contained&& contained) {
  const auto& letters = w.letters();
  const int n = static_cast<int>(letters.size());
  SubwordWindow best;
  for (int i = 0; i < n; ++i) {
    if (n - i <= best.length) break;
    VertexSet s;
    for (int j = i; j < n; ++j) {
      s.add(letters[j]);
      if (!contained(s)) break;  // containment is monotone under extension
      if (j - i + 1 > best.length) best = {j - i + 1, i, j + 1};
    }
  }
  return best;
}

}  // namespace

SubwordWindow max_join_subword(const NormalForm& w) {
  const DefiningGraph& g = w.graph();
  return max_window(
      w, [&](VertexSet s) { return contained_in_join(g, s).contained; });
}

SubwordWindow max_star_subword(const NormalForm& w) {
  const DefiningGraph& g = w.graph();
  return max_window(
      w, [&](VertexSet s) { return contained_in_star(g, s).has_value(); });
}

}  // namespace racg
