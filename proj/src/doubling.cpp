#include "fg/doubling.hpp"

#include <algorithm>

#include "fg/errors.hpp"

namespace fg {

namespace {

std::vector<int> vertex_component_index(const Graph& g) {
  auto comps = connected_components(g);
  std::vector<int> of(g.num_vertices(), -1);
  for (size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) of[v] = static_cast<int>(c);
  return of;
}

}  // namespace

SpecifiedSubgraph GraphPair::inner_subgraph() const {
  SpecifiedSubgraph sub;
  sub.cover.parent = std::make_shared<const Graph>(outer.graph);
  sub.cover.kept = inner_kept;
  sub.spec = inner_spec;
  return sub;
}

const CanonKey& GraphPair::canon_key() const {
  if (!key_) {
    const Graph& g = outer.graph;
    CanonColoring coloring;
    coloring.vertex_colors.resize(g.num_vertices());
    auto outer_comp = vertex_component_index(g);
    Graph inner = realize(inner_subgraph().cover);
    auto inner_comp = vertex_component_index(inner);
    for (int v = 0; v < g.num_vertices(); ++v)
      coloring.vertex_colors[v] = {outer.spec[outer_comp[v]], inner_spec[inner_comp[v]]};
    coloring.pair_flags.assign(g.internal_pairs().size(), 0);
    for (int i : inner_kept) coloring.pair_flags[i] = 1;
    key_ = canon(g, coloring);
  }
  return *key_;
}

GraphPair make_pair(const Theory& theory, SpecifiedGraph outer, std::vector<int> inner_kept,
                    std::vector<int> inner_spec) {
  std::sort(inner_kept.begin(), inner_kept.end());
  GraphPair p;
  p.outer = std::move(outer);
  p.inner_kept = std::move(inner_kept);
  p.inner_spec = std::move(inner_spec);
  auto check = check_specified_subgraph(theory, p.outer, p.inner_subgraph());
  if (!check.holds) throw GraphError("invalid pair: " + check.reason);
  return p;
}

int outer_degree(const GraphPair& p) { return p.outer.loops(); }

int inner_degree(const GraphPair& p) {
  return loop_number(realize(p.inner_subgraph().cover));
}

int inner_degree(const PairMonomial& m) {
  int d = 0;
  for (const auto& f : m.factors()) d += inner_degree(f);
  return d;
}

SpecifiedGraph inner_graph(const Theory& theory, const GraphPair& p) {
  return make_specified(theory, realize(p.inner_subgraph().cover), p.inner_spec);
}

GraphMonomial p2(const Theory& theory, const GraphPair& p) {
  return GraphMonomial(components_of(theory, inner_graph(theory, p)));
}

HopfElement p2(const Theory& theory, const PairLin& x) {
  HopfElement out;
  for (const auto& [k, t] : x.terms()) out.add(p2(theory, t.first), t.second);
  return out;
}

HopfElement p2(const Theory& theory, const DoublingElement& x) {
  HopfElement out;
  for (const auto& [k, t] : x.terms()) {
    GraphMonomial acc;
    for (const auto& f : t.first.factors()) acc = acc.times(p2(theory, f));
    out.add(std::move(acc), t.second);
  }
  return out;
}

std::vector<int> free_vertices(const GraphPair& p) {
  const Graph& g = p.outer.graph;
  auto pairs = g.internal_pairs();
  std::vector<char> in_inner(g.num_vertices(), 0);
  for (int i : p.inner_kept) {
    in_inner[g.at_vertex[pairs[i][0]]] = 1;
    in_inner[g.at_vertex[pairs[i][1]]] = 1;
  }
  std::vector<int> out;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!in_inner[v]) out.push_back(v);
  return out;
}

std::vector<int> inner_vertices(const GraphPair& p) {
  const Graph& g = p.outer.graph;
  auto pairs = g.internal_pairs();
  std::vector<char> in_inner(g.num_vertices(), 0);
  for (int i : p.inner_kept) {
    in_inner[g.at_vertex[pairs[i][0]]] = 1;
    in_inner[g.at_vertex[pairs[i][1]]] = 1;
  }
  std::vector<int> out;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (in_inner[v]) out.push_back(v);
  return out;
}

DoublingTensor doubling_coproduct(const Theory& theory, const GraphPair& p) {
  DoublingTensor out;
  SpecifiedGraph gamma = inner_graph(theory, p);
  for (const auto& delta : specified_subgraphs(theory, gamma)) {
    // Out-of-theory contractions of the inner drop the term; the outer
    // contraction by the same subgraph shares its component stars and
    // succeeds or fails together with it.
    SpecifiedGraph gamma_over_delta;
    try {
      gamma_over_delta = contract_specified(theory, gamma, delta);
    } catch (const NotInTheoryError&) {
      continue;
    }

    // delta's kept indices enumerate gamma's internal pairs, which are
    // exactly p's kept pairs of the outer (order preserved).
    std::vector<int> delta_kept_outer;
    for (int k : delta.cover.kept) delta_kept_outer.push_back(p.inner_kept[k]);

    GraphPair left = make_pair(theory, p.outer, delta_kept_outer, delta.spec);

    SpecifiedSubgraph delta_outer;
    delta_outer.cover.parent = std::make_shared<const Graph>(p.outer.graph);
    delta_outer.cover.kept = delta_kept_outer;
    delta_outer.spec = delta.spec;
    auto contraction = contract(theory, p.outer.graph, delta_outer.cover, delta_outer.spec);
    SpecifiedGraph contracted_outer;
    contracted_outer.graph = std::move(contraction.graph);
    contracted_outer.spec = p.outer.spec;

    std::vector<int> inner_rest;
    for (int i : p.inner_kept) {
      int mapped = contraction.pair_map[i];
      if (mapped >= 0) inner_rest.push_back(mapped);
    }
    GraphPair right =
        make_pair(theory, std::move(contracted_outer), std::move(inner_rest), p.inner_spec);

    out.add(PairMonomial(std::move(left)), PairMonomial(std::move(right)), 1);
  }
  return out;
}

DoublingTensor doubling_coproduct(const Theory& theory, const PairMonomial& m) {
  DoublingTensor acc;
  acc.add(PairMonomial{}, PairMonomial{}, 1);
  for (const auto& f : m.factors()) {
    DoublingTensor step = doubling_coproduct(theory, f);
    DoublingTensor next;
    for (const auto& [ka, ta] : acc.terms())
      for (const auto& [kb, tb] : step.terms())
        next.add(std::get<0>(ta).times(std::get<0>(tb)),
                 std::get<1>(ta).times(std::get<1>(tb)),
                 std::get<2>(ta) * std::get<2>(tb));
    acc = std::move(next);
  }
  return acc;
}

DoublingTensor doubling_coproduct(const Theory& theory, const DoublingElement& x) {
  DoublingTensor out;
  for (const auto& [k, t] : x.terms()) out.add(doubling_coproduct(theory, t.first), t.second);
  return out;
}

Rat counit_doubling(const DoublingElement& x) {
  Rat out = 0;
  for (const auto& [k, t] : x.terms()) {
    bool trivial = true;
    for (const auto& f : t.first.factors())
      if (!f.inner_kept.empty()) trivial = false;
    if (trivial) out += t.second;
  }
  return out;
}

namespace {

/// Spec values for the components of a freshly glued inner subgraph.
/// Each loop-carrying component inherits the spec of the (unique)
/// source component its kept edges came from.
std::vector<int> assemble_inner_spec(
    const Theory& theory, const Graph& glued, const std::vector<int>& kept,
    const std::vector<std::pair<int, int>>& kept_provenance /* (pair idx, spec) */) {
  CoveringSubgraph cover;
  cover.parent = std::make_shared<const Graph>(glued);
  cover.kept = kept;
  Graph inner = realize(cover);
  auto comps = connected_components(inner);
  auto comp_of = vertex_component_index(inner);
  std::vector<int> spec(comps.size(), -1);
  auto pairs = glued.internal_pairs();
  for (const auto& [pair_idx, sp] : kept_provenance) {
    int c = comp_of[glued.at_vertex[pairs[pair_idx][0]]];
    if (spec[c] >= 0 && spec[c] != sp)
      throw GraphError("conflicting inner specs after gluing");
    spec[c] = sp;
  }
  for (size_t c = 0; c < comps.size(); ++c)
    if (spec[c] < 0) spec[c] = glued.vertex_kind[comps[c][0]].mark;  // bare vertex
  return spec;
}

}  // namespace

PairLin odot(const Theory& theory, const GraphPair& p, const GraphPair& q) {
  if (p.outer.spec.size() != 1 || q.outer.spec.size() != 1)
    throw GraphError("doubling product operands must have connected outers");
  PairLin out;
  VertexKind rk = residue_kind(theory, p.outer);
  Graph q_inner = realize(q.inner_subgraph().cover);
  auto q_inner_comp = vertex_component_index(q_inner);
  Graph p_inner = realize(p.inner_subgraph().cover);
  auto p_inner_comp = vertex_component_index(p_inner);

  for (int v : free_vertices(q)) {
    if (!(q.outer.graph.vertex_kind[v] == rk)) continue;
    for (auto& glue : glue_all(p.outer.graph, q.outer.graph, v)) {
      std::vector<int> kept;
      std::vector<std::pair<int, int>> provenance;
      for (int i : p.inner_kept) {
        int mapped = glue.piece_pair_map[i];
        kept.push_back(mapped);
        provenance.emplace_back(
            mapped,
            p.inner_spec[p_inner_comp[p.outer.graph.at_vertex[p.outer.graph.internal_pairs()[i][0]]]]);
      }
      for (int i : q.inner_kept) {
        int mapped = glue.host_pair_map[i];
        kept.push_back(mapped);
        provenance.emplace_back(
            mapped,
            q.inner_spec[q_inner_comp[q.outer.graph.at_vertex[q.outer.graph.internal_pairs()[i][0]]]]);
      }
      std::sort(kept.begin(), kept.end());
      SpecifiedGraph new_outer = make_specified(theory, glue.graph, {q.outer.spec[0]});
      std::vector<int> spec = assemble_inner_spec(theory, new_outer.graph, kept, provenance);
      out.add(make_pair(theory, std::move(new_outer), std::move(kept), std::move(spec)), 1);
    }
  }
  return out;
}

PairLin odot(const Theory& theory, const PairLin& a, const PairLin& b) {
  PairLin out;
  for (const auto& [ka, ta] : a.terms())
    for (const auto& [kb, tb] : b.terms())
      out.add(odot(theory, ta.first, tb.first).scaled(ta.second * tb.second));
  return out;
}

PairLin act(const Theory& theory, const SpecifiedGraph& g1, const GraphPair& q) {
  if (g1.spec.size() != 1 || q.outer.spec.size() != 1)
    throw GraphError("action operands must be connected");
  PairLin out;
  VertexKind rk = residue_kind(theory, g1);
  Graph q_inner = realize(q.inner_subgraph().cover);
  auto q_inner_comp = vertex_component_index(q_inner);

  for (int v : inner_vertices(q)) {
    if (!(q.outer.graph.vertex_kind[v] == rk)) continue;
    for (auto& glue : glue_all(g1.graph, q.outer.graph, v)) {
      std::vector<int> kept;
      std::vector<std::pair<int, int>> provenance;
      // the inserted copy joins the inner in full
      const int v_comp_spec = q.inner_spec[q_inner_comp[v]];
      for (size_t i = 0; i < g1.graph.internal_pairs().size(); ++i) {
        int mapped = glue.piece_pair_map[i];
        kept.push_back(mapped);
        provenance.emplace_back(mapped, v_comp_spec);
      }
      for (int i : q.inner_kept) {
        int mapped = glue.host_pair_map[i];
        kept.push_back(mapped);
        provenance.emplace_back(
            mapped,
            q.inner_spec[q_inner_comp[q.outer.graph.at_vertex[q.outer.graph.internal_pairs()[i][0]]]]);
      }
      std::sort(kept.begin(), kept.end());
      SpecifiedGraph new_outer = make_specified(theory, glue.graph, {q.outer.spec[0]});
      std::vector<int> spec = assemble_inner_spec(theory, new_outer.graph, kept, provenance);
      out.add(make_pair(theory, std::move(new_outer), std::move(kept), std::move(spec)), 1);
    }
  }
  return out;
}

PairLin act(const Theory& theory, const GraphLin& a, const PairLin& b) {
  PairLin out;
  for (const auto& [ka, ta] : a.terms())
    for (const auto& [kb, tb] : b.terms())
      out.add(act(theory, ta.first, tb.first).scaled(ta.second * tb.second));
  return out;
}

bool check_module(const Theory& theory, const SpecifiedGraph& g1, const SpecifiedGraph& g2,
                  const GraphPair& q) {
  auto l1 = GraphLin::of(g1);
  auto l2 = GraphLin::of(g2);
  auto lq = PairLin::of(q);
  PairLin lhs = act(theory, l1, act(theory, l2, lq))
                    .minus(act(theory, insert(theory, l1, l2), lq));
  PairLin rhs = act(theory, l2, act(theory, l1, lq))
                    .minus(act(theory, insert(theory, l2, l1), lq));
  return lhs == rhs;
}

bool check_derivation(const Theory& theory, const SpecifiedGraph& g1, const GraphPair& p,
                      const GraphPair& q) {
  auto l1 = GraphLin::of(g1);
  auto lp = PairLin::of(p);
  auto lq = PairLin::of(q);
  PairLin lhs = act(theory, l1, odot(theory, lp, lq));
  PairLin rhs = odot(theory, act(theory, l1, lp), lq).plus(odot(theory, lp, act(theory, l1, lq)));
  return lhs == rhs;
}

bool check_p2_prelie_module(const Theory& theory, const SpecifiedGraph& g1,
                            const GraphPair& q) {
  HopfElement lhs = reduce_mod_j(p2(theory, act(theory, g1, q)));
  HopfElement rhs = reduce_mod_j(insert_mon(theory, g1, reduce_mod_j(p2(theory, q))));
  return lhs == rhs;
}

bool check_p2_bialgebra(const Theory& theory, const GraphPair& p, const GraphPair& q) {
  // algebra morphism
  GraphMonomial prod_image = p2(theory, p).times(p2(theory, q));
  PairMonomial pq = PairMonomial(p).times(PairMonomial(q));
  GraphMonomial image_prod = [&] {
    GraphMonomial acc;
    for (const auto& f : pq.factors()) acc = acc.times(p2(theory, f));
    return acc;
  }();
  if (!(prod_image.canon_key() == image_prod.canon_key())) return false;

  // coalgebra morphism: (P2 x P2) Delta_D = Delta P2
  HopfTensor lhs;
  for (const auto& [k, t] : doubling_coproduct(theory, p).terms()) {
    GraphMonomial a, b;
    for (const auto& f : std::get<0>(t).factors()) a = a.times(p2(theory, f));
    for (const auto& f : std::get<1>(t).factors()) b = b.times(p2(theory, f));
    lhs.add(std::move(a), std::move(b), std::get<2>(t));
  }
  HopfTensor rhs = coproduct_full(theory, p2(theory, p));
  return lhs == rhs;
}

}  // namespace fg
