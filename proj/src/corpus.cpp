#include "fg/corpus.hpp"

#include <algorithm>
#include <map>

#include "fg/errors.hpp"

namespace fg {

namespace {

/// An edge species: an unordered compatible pair of half-edge types.
/// Asymmetric species distinguish the two orientations between a
/// vertex pair.
struct Species {
  int ta, tb;  // ta <= tb
};

struct Enumerator {
  const Theory& theory;
  const CorpusBounds& bounds;
  std::vector<VertexKind> kinds;                // all (vtype, mark) combinations
  std::vector<Species> species;
  std::map<CanonKey, SpecifiedGraph> found;

  explicit Enumerator(const Theory& t, const CorpusBounds& b) : theory(t), bounds(b) {
    for (size_t vt = 0; vt < t.vertex_types().size(); ++vt)
      for (int s : t.vertex_types()[vt].allowed_specs)
        kinds.push_back(VertexKind{static_cast<int>(vt), s});
    const int n = static_cast<int>(t.half_edge_types().size());
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b)
        if (t.sigma_compatible(a, b)) species.push_back({a, b});
  }

  void run() {
    std::vector<int> multiset;
    choose_kinds(0, multiset);
  }

  // nondecreasing kind multisets up to max_vertices
  void choose_kinds(int from, std::vector<int>& multiset) {
    if (!multiset.empty()) enumerate_edges(multiset);
    if (static_cast<int>(multiset.size()) == bounds.max_vertices) return;
    for (int k = from; k < static_cast<int>(kinds.size()); ++k) {
      multiset.push_back(k);
      choose_kinds(k, multiset);
      multiset.pop_back();
    }
  }

  struct Cell {
    int i, j;        // i <= j (i == j only when self-loops are allowed)
    int type_at_i;   // species orientation
    int type_at_j;
  };

  void enumerate_edges(const std::vector<int>& kind_idx) {
    const int nv = static_cast<int>(kind_idx.size());
    int total_half_edges = 0;
    std::vector<std::vector<int>> cap(nv);  // remaining slots per type
    for (int v = 0; v < nv; ++v) {
      cap[v].assign(theory.half_edge_types().size(), 0);
      const auto& sig = theory.vertex_types()[kinds[kind_idx[v]].vtype].signature;
      for (int t : sig) cap[v][t]++;
      total_half_edges += static_cast<int>(sig.size());
    }
    if (total_half_edges > bounds.max_half_edges) return;

    // distinct multiplicity cells, lexicographic
    std::vector<Cell> cells;
    for (int i = 0; i < nv; ++i)
      for (int j = i; j < nv; ++j) {
        if (i == j && !bounds.allow_self_loops) continue;
        for (const auto& sp : species) {
          cells.push_back({i, j, sp.ta, sp.tb});
          if (sp.ta != sp.tb && i != j) cells.push_back({i, j, sp.tb, sp.ta});
        }
      }

    const int max_pairs = bounds.max_loops + nv - 1;
    std::vector<std::array<int, 4>> edges;  // (i, j, type_at_i, type_at_j)
    fill_cells(kind_idx, cap, cells, 0, 0, max_pairs, edges);
  }

  void fill_cells(const std::vector<int>& kind_idx, std::vector<std::vector<int>>& cap,
                  const std::vector<Cell>& cells, size_t cell, int pairs, int max_pairs,
                  std::vector<std::array<int, 4>>& edges) {
    if (cell == cells.size()) {
      emit(kind_idx, cap, edges);
      return;
    }
    const Cell& c = cells[cell];
    fill_cells(kind_idx, cap, cells, cell + 1, pairs, max_pairs, edges);  // multiplicity 0
    int added = 0;
    while (pairs + added < max_pairs) {
      // one more edge in this cell
      if (c.i == c.j) {
        if (cap[c.i][c.type_at_i] < 1 || cap[c.j][c.type_at_j] < 1) break;
        if (c.type_at_i == c.type_at_j && cap[c.i][c.type_at_i] < 2) break;
      } else if (cap[c.i][c.type_at_i] < 1 || cap[c.j][c.type_at_j] < 1) {
        break;
      }
      cap[c.i][c.type_at_i]--;
      cap[c.j][c.type_at_j]--;
      edges.push_back({c.i, c.j, c.type_at_i, c.type_at_j});
      ++added;
      fill_cells(kind_idx, cap, cells, cell + 1, pairs + added, max_pairs, edges);
    }
    for (; added > 0; --added) {
      const auto& e = edges.back();
      cap[e[0]][e[2]]++;
      cap[e[1]][e[3]]++;
      edges.pop_back();
    }
  }

  void emit(const std::vector<int>& kind_idx, const std::vector<std::vector<int>>& cap,
            const std::vector<std::array<int, 4>>& edges) {
    const int nv = static_cast<int>(kind_idx.size());
    Graph g;
    for (int v = 0; v < nv; ++v) g.vertex_kind.push_back(kinds[kind_idx[v]]);
    for (const auto& e : edges) {
      int h1 = g.num_half_edges();
      g.half_edge_type.push_back(e[2]);
      g.at_vertex.push_back(e[0]);
      int h2 = g.num_half_edges();
      g.half_edge_type.push_back(e[3]);
      g.at_vertex.push_back(e[1]);
      g.sigma.push_back(h2);
      g.sigma.push_back(h1);
    }
    for (int v = 0; v < nv; ++v)
      for (size_t t = 0; t < cap[v].size(); ++t)
        for (int k = 0; k < cap[v][static_cast<int>(t)]; ++k) {
          g.sigma.push_back(g.num_half_edges());
          g.half_edge_type.push_back(static_cast<int>(t));
          g.at_vertex.push_back(v);
        }

    if (!is_connected(g)) return;
    if (loop_number(g) > bounds.max_loops) return;
    if (!is_1pi(g)) return;
    auto sig = residue_signature(g);
    auto vt = theory.vertex_type_for_signature(sig);
    if (!vt) return;  // superficially convergent

    for (int spec : theory.vertex_types()[*vt].allowed_specs) {
      if (edges.empty() && spec != g.vertex_kind[0].mark) continue;
      SpecifiedGraph sg = make_specified(theory, g, {spec});
      found.emplace(sg.canon_key(), std::move(sg));
    }
  }
};

}  // namespace

Corpus gen_corpus(const Theory& theory, const CorpusBounds& bounds, uint64_t seed) {
  Corpus corpus;
  corpus.theory_name = theory.name();
  corpus.bounds = bounds;
  corpus.seed = seed;

  Enumerator en(theory, bounds);
  en.run();
  for (auto& [k, sg] : en.found) corpus.graphs.push_back(std::move(sg));

  std::map<CanonKey, GraphPair> pairs;
  for (const auto& sg : corpus.graphs) {
    for (const auto& sub : specified_subgraphs(theory, sg)) {
      try {
        contract_specified(theory, sg, sub);  // membership filter
      } catch (const NotInTheoryError&) {
        continue;
      }
      GraphPair p = make_pair(theory, sg, sub.cover.kept, sub.spec);
      pairs.emplace(p.canon_key(), std::move(p));
    }
  }
  for (auto& [k, p] : pairs) corpus.pairs.push_back(std::move(p));
  return corpus;
}

}  // namespace fg
