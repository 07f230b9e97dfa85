#include "racg/vkd.hpp"

#include <algorithm>
#include <cctype>

namespace racg {

std::vector<VertexId> parse_word(const DefiningGraph& g,
                                 std::string_view text) {
  std::vector<VertexId> word;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::size_t j = i;
    while (j < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[j])))
      ++j;
    if (j > i) word.push_back(g.require(text.substr(i, j - i)));
    i = j;
  }
  return word;
}

std::vector<std::pair<int, int>> DualVanKampenDiagram::arcs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(arc_count()));
  for (int i = 0; i < size(); ++i)
    if (partner[i] > i) out.emplace_back(i, partner[i]);
  return out;
}

bool DualVanKampenDiagram::crossing(std::pair<int, int> a,
                                    std::pair<int, int> b) {
  auto inside = [](int x, std::pair<int, int> arc) {
    return arc.first < x && x < arc.second;
  };
  return inside(b.first, a) != inside(b.second, a);
}

DualVanKampenDiagram build_diagram(const DefiningGraph& g,
                                   std::span<const VertexId> word) {
  for (VertexId v : word)
    if (v < 0 || v >= g.vertex_count())
      throw Error("build_diagram: letter index out of range");

  DualVanKampenDiagram d;
  d.graph = &g;
  d.boundary.assign(word.begin(), word.end());
  d.partner.assign(word.size(), -1);

  // current word as (original position, letter)
  std::vector<std::pair<int, VertexId>> cur;
  cur.reserve(word.size());
  for (int i = 0; i < static_cast<int>(word.size()); ++i)
    cur.emplace_back(i, word[i]);

  while (!cur.empty()) {
    bool matched = false;
    for (int j = 1; j < static_cast<int>(cur.size()) && !matched; ++j) {
      VertexId vj = cur[j].second;
      for (int i = j - 1; i >= 0; --i) {
        if (cur[i].second == vj) {
          d.partner[cur[i].first] = cur[j].first;
          d.partner[cur[j].first] = cur[i].first;
          cur.erase(cur.begin() + j);
          cur.erase(cur.begin() + i);
          matched = true;
          break;
        }
        if (!g.adjacent(cur[i].second, vj)) break;
      }
    }
    if (!matched) {
      std::vector<VertexId> rest;
      for (auto& [pos, letter] : cur) rest.push_back(letter);
      throw Error("build_diagram: word is not the identity (reduces to '" +
                  NormalForm::from_letters(g, rest).str() + "')");
    }
  }
  return d;
}

DiagramCheck validate_diagram(const DualVanKampenDiagram& d) {
  const DefiningGraph& g = *d.graph;
  const int n = d.size();
  auto fail = [](std::string msg) {
    return DiagramCheck{false, std::move(msg)};
  };

  if (static_cast<int>(d.partner.size()) != n)
    return fail("matching size differs from boundary length");
  if (n % 2 != 0) return fail("odd boundary length cannot be fully matched");
  for (int i = 0; i < n; ++i) {
    int p = d.partner[i];
    if (p < 0 || p >= n) return fail("matching leaves position " +
                                     std::to_string(i) + " unpaired");
    if (p == i) return fail("position matched to itself");
    if (d.partner[p] != i) return fail("matching is not an involution");
    if (d.boundary[i] != d.boundary[p])
      return fail("arc at positions " + std::to_string(i) + "," +
                  std::to_string(p) + " joins different letters");
  }

  auto arcs = d.arcs();
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    for (std::size_t b = a + 1; b < arcs.size(); ++b) {
      if (!DualVanKampenDiagram::crossing(arcs[a], arcs[b])) continue;
      VertexId va = d.boundary[arcs[a].first];
      VertexId vb = d.boundary[arcs[b].first];
      if (!g.adjacent(va, vb))
        return fail("crossing arcs carry non-adjacent labels " + g.name(va) +
                    "," + g.name(vb));
    }
  }

  NormalForm whole = NormalForm::from_letters(g, d.boundary);
  if (!whole.is_identity())
    return fail("boundary word does not represent the identity");

  for (auto [i, j] : arcs) {
    std::vector<VertexId> enclosed(d.boundary.begin() + i + 1,
                                   d.boundary.begin() + j);
    NormalForm element = NormalForm::from_letters(g, enclosed);
    if (!special_membership(element, g.star(d.boundary[i])))
      return fail("subword enclosed by the " + g.name(d.boundary[i]) +
                  "-arc at " + std::to_string(i) + "," + std::to_string(j) +
                  " leaves its star subgroup");
  }
  return {};
}

namespace {

struct ThroughArc {
  int outside;   // fixed endpoint outside the range
  int key;       // circular distance of `outside` from hi
  VertexId label;
};

}  // namespace

CombResult comb(const DualVanKampenDiagram& d, int lo, int hi) {
  const int n = d.size();
  if (lo < 0 || hi > n || lo > hi) throw Error("comb: bad range");
  auto check = validate_diagram(d);
  if (!check.ok) throw Error("comb: input diagram invalid: " + check.violation);

  auto in_range = [&](int p) { return lo <= p && p < hi; };

  // count crossings among range-emanating arcs (removed by combing)
  auto arcs = d.arcs();
  int removed = 0;
  for (std::size_t a = 0; a < arcs.size(); ++a)
    for (std::size_t b = a + 1; b < arcs.size(); ++b) {
      bool ea = in_range(arcs[a].first) || in_range(arcs[a].second);
      bool eb = in_range(arcs[b].first) || in_range(arcs[b].second);
      if (ea && eb && DualVanKampenDiagram::crossing(arcs[a], arcs[b]))
        ++removed;
    }

  // Through arcs must leave the range in the unique non-crossing order
  // determined by their outside endpoints: walking the range left to right,
  // outside endpoints appear in decreasing circular distance from hi. Every
  // pair whose relative order flips crossed in the input, so its labels are
  // adjacent and commute: the range word keeps its group element.
  std::vector<ThroughArc> through;
  std::vector<VertexId> internal;  // labels, by left endpoint order
  for (int p = lo; p < hi; ++p) {
    int q = d.partner[p];
    if (!in_range(q)) {
      through.push_back({q, (q - hi + n) % n, d.boundary[p]});
    } else if (p < q) {
      internal.push_back(d.boundary[p]);
    }
  }
  std::sort(through.begin(), through.end(),
            [](const ThroughArc& a, const ThroughArc& b) {
              return a.key > b.key;
            });

  // Rebuild the range: internal arcs collapse to adjacent-position pairs at
  // the slot of their original left endpoint (identity blocks, transparent
  // to the element); through labels fill remaining slots in forced order.
  CombResult result;
  result.diagram.graph = d.graph;
  result.diagram.boundary = d.boundary;
  result.diagram.partner = d.partner;
  result.swaps = removed;

  std::vector<VertexId> new_letters;
  std::vector<int> new_partner_hint;  // outside endpoint, or -2 - blockid
  std::size_t next_through = 0;
  std::size_t next_internal = 0;
  for (int p = lo; p < hi; ++p) {
    int q = d.partner[p];
    if (in_range(q) && p < q) {
      VertexId label = internal[next_internal++];
      new_letters.push_back(label);
      new_letters.push_back(label);
      new_partner_hint.push_back(-2 - static_cast<int>(next_internal - 1));
      new_partner_hint.push_back(-2 - static_cast<int>(next_internal - 1));
    } else if (!in_range(q)) {
      const ThroughArc& t = through[next_through++];
      new_letters.push_back(t.label);
      new_partner_hint.push_back(t.outside);
    }
    // second endpoints of internal arcs contribute no slot of their own
  }

  for (int k = 0; k < static_cast<int>(new_letters.size()); ++k) {
    int p = lo + k;
    result.diagram.boundary[p] = new_letters[k];
    int hint = new_partner_hint[k];
    if (hint >= 0) {
      result.diagram.partner[p] = hint;
      result.diagram.partner[hint] = p;
    } else if (k > 0 && new_partner_hint[k - 1] == hint) {
      result.diagram.partner[p] = p - 1;
      result.diagram.partner[p - 1] = p;
    }
  }

  auto out = validate_diagram(result.diagram);
  if (!out.ok)
    throw Error("comb: internal construction failure: " + out.violation);
  return result;
}

PruneResult prune(const DualVanKampenDiagram& d, int lo, int hi) {
  CombResult combed = comb(d, lo, hi);
  const DualVanKampenDiagram& c = combed.diagram;
  const int n = c.size();

  std::vector<char> drop(n, 0);
  int removed = 0;
  for (int p = lo; p < hi; ++p) {
    int q = c.partner[p];
    if (lo <= q && q < hi) {
      drop[p] = 1;
      ++removed;
    }
  }

  PruneResult result;
  result.diagram.graph = c.graph;
  result.removed_letters = removed;
  std::vector<int> new_index(n, -1);
  for (int p = 0; p < n; ++p) {
    if (drop[p]) continue;
    new_index[p] = static_cast<int>(result.diagram.boundary.size());
    result.diagram.boundary.push_back(c.boundary[p]);
  }
  result.diagram.partner.assign(result.diagram.boundary.size(), -1);
  for (int p = 0; p < n; ++p) {
    if (drop[p]) continue;
    result.diagram.partner[new_index[p]] = new_index[c.partner[p]];
  }

  auto check = validate_diagram(result.diagram);
  if (!check.ok)
    throw Error("prune: internal construction failure: " + check.violation);
  return result;
}

std::vector<VertexId> label_read(const DualVanKampenDiagram& d, int gap_from,
                                 int gap_to) {
  const int n = d.size();
  if (gap_from < 0 || gap_to > n || gap_from > gap_to)
    throw Error("label_read: bad cut gaps");
  std::vector<VertexId> out;
  for (int p = gap_from; p < gap_to; ++p) {
    int q = d.partner[p];
    if (q < gap_from || q >= gap_to) out.push_back(d.boundary[p]);
  }
  return out;
}

int ReducingDiagram::contributing_count() const {
  int count = 0;
  for (ArcTag t : tags)
    if (t == ArcTag::contributing) ++count;
  return count;
}

ReducingDiagram build_reducing_diagram(
    const DefiningGraph& g, std::span<const std::vector<VertexId>> hs,
    const NormalForm& w) {
  if (&w.graph() != &g)
    throw Error("build_reducing_diagram: target lives over a different graph");

  ReducingDiagram out;
  std::vector<VertexId> boundary;
  NormalForm product = NormalForm::identity(g);
  for (const auto& h : hs) {
    for (VertexId v : h) {
      if (v < 0 || v >= g.vertex_count())
        throw Error("build_reducing_diagram: letter index out of range");
      boundary.push_back(v);
    }
    product = multiply(product, NormalForm::from_letters(g, h));
    out.block_ends.push_back(static_cast<int>(boundary.size()));
  }
  if (product != w)
    throw Error("build_reducing_diagram: factors multiply to '" +
                product.str() + "', not the stated target");

  out.h_length = static_cast<int>(boundary.size());
  out.w_length = w.length();
  boundary.insert(boundary.end(), w.letters().rbegin(), w.letters().rend());

  out.diagram = build_diagram(g, boundary);
  for (auto [i, j] : out.diagram.arcs()) {
    if (j < out.h_length) {
      out.tags.push_back(ArcTag::noncontributing);
    } else if (i < out.h_length) {
      out.tags.push_back(ArcTag::contributing);
    } else {
      // the target is reduced, so no arc can live entirely on its side
      throw Error(
          "build_reducing_diagram: arc with both endpoints on the reduced "
          "side; target was not reduced");
    }
  }
  return out;
}

}  // namespace racg
