#include "fg/specified.hpp"

#include <algorithm>

#include "fg/errors.hpp"

namespace fg {

namespace {

/// Index of the component (in smallest-vertex order) containing each vertex.
std::vector<int> component_index(const Graph& g) {
  auto comps = connected_components(g);
  std::vector<int> of(g.num_vertices(), -1);
  for (size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) of[v] = static_cast<int>(c);
  return of;
}

std::vector<int> component_residue_signature(const Graph& g, const std::vector<int>& comp) {
  std::vector<int> sig;
  for (int v : comp)
    for (int e : g.star(v))
      if (g.sigma[e] == e) sig.push_back(g.half_edge_type[e]);
  std::sort(sig.begin(), sig.end());
  return sig;
}

bool component_has_internal(const Graph& g, const std::vector<int>& comp) {
  for (int v : comp)
    for (int e : g.star(v))
      if (g.sigma[e] != e) return true;
  return false;
}

}  // namespace

const CanonKey& SpecifiedGraph::canon_key() const {
  if (!key_) {
    CanonColoring coloring;
    coloring.vertex_colors.resize(graph.num_vertices());
    auto of = component_index(graph);
    for (int v = 0; v < graph.num_vertices(); ++v)
      coloring.vertex_colors[v] = {spec[of[v]]};
    key_ = canon(graph, coloring);
  }
  return *key_;
}

int SpecifiedGraph::loops() const {
  if (!loops_) loops_ = loop_number(graph);
  return *loops_;
}

CanonKey canon_specified(const SpecifiedGraph& sg) { return sg.canon_key(); }

SpecifiedGraph make_specified(const Theory& theory, Graph g, std::vector<int> spec) {
  validate(g, theory);
  if (!is_locally_1pi(g)) throw GraphError("graph is not locally 1PI");
  auto comps = connected_components(g);
  if (spec.size() != comps.size())
    throw GraphError("specification size does not match the number of components");
  for (size_t c = 0; c < comps.size(); ++c) {
    auto sig = component_residue_signature(g, comps[c]);
    auto vt = theory.vertex_type_for(sig, spec[c]);
    if (!vt)
      throw GraphError("component " + std::to_string(c) +
                       ": no vertex type admits its residue star with spec " +
                       std::to_string(spec[c]));
    if (!component_has_internal(g, comps[c]) &&
        spec[c] != g.vertex_kind[comps[c][0]].mark)
      throw GraphError("single-vertex component spec must equal the vertex mark");
  }
  SpecifiedGraph sg;
  sg.graph = std::move(g);
  sg.spec = std::move(spec);
  return sg;
}

std::vector<SpecifiedSubgraph> specified_subgraphs(const Theory& theory,
                                                   const SpecifiedGraph& sg) {
  const Graph& g = sg.graph;
  auto parent_comp_of = component_index(g);

  std::vector<SpecifiedSubgraph> out;
  for (auto& cover : covering_subgraphs(g)) {
    Graph inner = realize(cover);
    if (!is_locally_1pi(inner)) continue;
    auto comps = connected_components(inner);

    // Per component: the set of admissible spec values. Loop-carrying
    // components range over the allowed specs of their residue type;
    // full components are pinned to the parent's value; bare vertices
    // are pinned to their mark.
    std::vector<std::vector<int>> choices(comps.size());
    bool ok = true;
    for (size_t c = 0; c < comps.size() && ok; ++c) {
      const bool nontrivial = component_has_internal(inner, comps[c]);
      const bool full = [&] {
        // a full component of the subgraph is also a component of the parent
        for (int v : comps[c])
          for (int e : g.star(v))
            if (g.sigma[e] != e && inner.sigma[e] == e) return false;
        return true;
      }();
      if (!nontrivial) {
        choices[c] = {g.vertex_kind[comps[c][0]].mark};
        continue;
      }
      auto sig = component_residue_signature(inner, comps[c]);
      auto vt = theory.vertex_type_for_signature(sig);
      if (!vt) {
        ok = false;  // not superficially divergent
        break;
      }
      if (full)
        choices[c] = {sg.spec[parent_comp_of[comps[c][0]]]};
      else
        choices[c] = theory.vertex_types()[*vt].allowed_specs;
    }
    if (!ok) continue;

    std::vector<int> pick(comps.size(), 0);
    for (;;) {
      SpecifiedSubgraph sub;
      sub.cover = cover;
      for (size_t c = 0; c < comps.size(); ++c) sub.spec.push_back(choices[c][pick[c]]);
      out.push_back(std::move(sub));
      size_t c = 0;
      while (c < comps.size() && ++pick[c] == static_cast<int>(choices[c].size())) {
        pick[c] = 0;
        ++c;
      }
      if (c == comps.size()) break;
    }
  }
  return out;
}

RelationCheck check_specified_subgraph(const Theory& theory, const SpecifiedGraph& sg,
                                       const SpecifiedSubgraph& sub) {
  const Graph& g = sg.graph;
  const auto pairs = g.internal_pairs();
  for (int i : sub.cover.kept)
    if (i < 0 || i >= static_cast<int>(pairs.size()))
      return {false, "kept edge index out of range"};
  Graph inner = realize(sub.cover);
  if (!is_locally_1pi(inner)) return {false, "subgraph is not locally 1PI"};
  auto comps = connected_components(inner);
  if (sub.spec.size() != comps.size())
    return {false, "subgraph spec size does not match its component count"};
  auto parent_comp_of = component_index(g);
  for (size_t c = 0; c < comps.size(); ++c) {
    const bool nontrivial = component_has_internal(inner, comps[c]);
    if (!nontrivial) {
      if (sub.spec[c] != g.vertex_kind[comps[c][0]].mark)
        return {false, "bare vertex component spec differs from the vertex mark"};
      continue;
    }
    auto sig = component_residue_signature(inner, comps[c]);
    auto vt = theory.vertex_type_for(sig, sub.spec[c]);
    if (!vt) return {false, "component residue star admits no vertex type with this spec"};
    bool full = true;
    for (int v : comps[c])
      for (int e : g.star(v))
        if (g.sigma[e] != e && inner.sigma[e] == e) full = false;
    if (full && sub.spec[c] != sg.spec[parent_comp_of[comps[c][0]]])
      return {false, "full component spec must equal the parent's spec"};
  }
  return {true, ""};
}

SpecifiedGraph contract_specified(const Theory& theory, const SpecifiedGraph& sg,
                                  const SpecifiedSubgraph& sub) {
  auto res = contract(theory, sg.graph, sub.cover, sub.spec);
  // Components correspond one-to-one under contraction, in order.
  SpecifiedGraph out;
  out.graph = std::move(res.graph);
  auto comps_before = connected_components(sg.graph);
  auto comps_after = connected_components(out.graph);
  if (comps_before.size() != comps_after.size())
    throw GraphError("contraction changed the component count");
  out.spec = sg.spec;
  return out;
}

SpecifiedGraph residue_specified(const Theory& theory, const SpecifiedGraph& sg) {
  SpecifiedSubgraph sub;
  sub.cover = full_covering(sg.graph);
  Graph inner = realize(sub.cover);
  auto comps = connected_components(inner);
  auto parent_comp_of = component_index(sg.graph);
  for (const auto& comp : comps) sub.spec.push_back(sg.spec[parent_comp_of[comp[0]]]);
  return contract_specified(theory, sg, sub);
}

std::vector<SpecifiedGraph> components_of(const Theory& theory, const SpecifiedGraph& sg) {
  auto comps = connected_components(sg.graph);
  std::vector<SpecifiedGraph> out;
  for (size_t c = 0; c < comps.size(); ++c) {
    Graph piece;
    std::vector<int> vmap(sg.graph.num_vertices(), -1);
    for (int v : comps[c]) {
      vmap[v] = piece.num_vertices();
      piece.vertex_kind.push_back(sg.graph.vertex_kind[v]);
    }
    std::vector<int> hmap(sg.graph.num_half_edges(), -1);
    for (int e = 0; e < sg.graph.num_half_edges(); ++e) {
      if (vmap[sg.graph.at_vertex[e]] < 0) continue;
      hmap[e] = static_cast<int>(piece.half_edge_type.size());
      piece.half_edge_type.push_back(sg.graph.half_edge_type[e]);
      piece.at_vertex.push_back(vmap[sg.graph.at_vertex[e]]);
    }
    piece.sigma.resize(piece.half_edge_type.size());
    for (int e = 0; e < sg.graph.num_half_edges(); ++e)
      if (hmap[e] >= 0) piece.sigma[hmap[e]] = hmap[sg.graph.sigma[e]];
    out.push_back(make_specified(theory, std::move(piece), {sg.spec[c]}));
  }
  return out;
}

SpecifiedGraph subgraph_component(const Theory& theory, const SpecifiedGraph& sg,
                                  const SpecifiedSubgraph& sub, int component) {
  Graph inner = realize(sub.cover);
  auto comps = connected_components(inner);
  const auto& comp = comps.at(component);
  Graph piece;
  std::vector<int> vmap(inner.num_vertices(), -1);
  for (int v : comp) {
    vmap[v] = piece.num_vertices();
    piece.vertex_kind.push_back(inner.vertex_kind[v]);
  }
  std::vector<int> hmap(inner.num_half_edges(), -1);
  for (int e = 0; e < inner.num_half_edges(); ++e) {
    if (vmap[inner.at_vertex[e]] < 0) continue;
    hmap[e] = static_cast<int>(piece.half_edge_type.size());
    piece.half_edge_type.push_back(inner.half_edge_type[e]);
    piece.at_vertex.push_back(vmap[inner.at_vertex[e]]);
  }
  piece.sigma.resize(piece.half_edge_type.size());
  for (int e = 0; e < inner.num_half_edges(); ++e)
    if (hmap[e] >= 0) piece.sigma[hmap[e]] = hmap[inner.sigma[e]];
  return make_specified(theory, std::move(piece), {sub.spec[component]});
}

VertexKind residue_kind(const Theory& theory, const SpecifiedGraph& sg) {
  if (sg.spec.size() != 1) throw GraphError("residue kind requires a connected graph");
  auto sig = residue_signature(sg.graph);
  auto vt = theory.vertex_type_for(sig, sg.spec[0]);
  if (!vt) throw NotInTheoryError("residue star admits no vertex type");
  return VertexKind{*vt, sg.spec[0]};
}

}  // namespace fg
