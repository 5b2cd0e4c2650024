#include "fg/graph.hpp"

#include <algorithm>
#include <numeric>

#include "fg/errors.hpp"

namespace fg {

std::vector<int> Graph::star(int v) const {
  std::vector<int> out;
  for (int e = 0; e < num_half_edges(); ++e)
    if (at_vertex[e] == v) out.push_back(e);
  return out;
}

std::vector<std::array<int, 2>> Graph::internal_pairs() const {
  std::vector<std::array<int, 2>> out;
  for (int e = 0; e < num_half_edges(); ++e)
    if (sigma[e] > e) out.push_back({e, sigma[e]});
  return out;
}

std::vector<int> Graph::external_half_edges() const {
  std::vector<int> out;
  for (int e = 0; e < num_half_edges(); ++e)
    if (sigma[e] == e) out.push_back(e);
  return out;
}

std::vector<int> Graph::external_types_at(int v) const {
  std::vector<int> out;
  for (int e : star(v))
    if (sigma[e] == e) out.push_back(half_edge_type[e]);
  std::sort(out.begin(), out.end());
  return out;
}

void validate(const Graph& g, const Theory& theory) {
  const int nv = g.num_vertices();
  const int nh = g.num_half_edges();
  if (static_cast<int>(g.sigma.size()) != nh || static_cast<int>(g.at_vertex.size()) != nh)
    throw GraphError("sigma/incidence size mismatch");
  const int ntypes = static_cast<int>(theory.half_edge_types().size());
  for (int e = 0; e < nh; ++e) {
    if (g.half_edge_type[e] < 0 || g.half_edge_type[e] >= ntypes)
      throw GraphError("half-edge with unknown type");
    if (g.sigma[e] < 0 || g.sigma[e] >= nh || g.sigma[g.sigma[e]] != e)
      throw GraphError("sigma is not an involution");
    if (g.at_vertex[e] < 0 || g.at_vertex[e] >= nv)
      throw GraphError("half-edge attached to unknown vertex");
    if (g.sigma[e] != e &&
        !theory.sigma_compatible(g.half_edge_type[e], g.half_edge_type[g.sigma[e]]))
      throw GraphError("sigma joins incompatible half-edge types");
  }
  for (int v = 0; v < nv; ++v) {
    const VertexKind k = g.vertex_kind[v];
    if (k.vtype < 0 || k.vtype >= static_cast<int>(theory.vertex_types().size()))
      throw GraphError("vertex with unknown type");
    if (!theory.spec_allowed(k.vtype, k.mark))
      throw GraphError("vertex mark outside the allowed specs of its type");
    std::vector<int> sig;
    for (int e : g.star(v)) sig.push_back(g.half_edge_type[e]);
    std::sort(sig.begin(), sig.end());
    if (sig != theory.vertex_types()[k.vtype].signature)
      throw GraphError("star of vertex " + std::to_string(v) +
                       " does not match its declared type " +
                       theory.vertex_types()[k.vtype].name);
  }
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<std::vector<int>> components_from_pairs(
    int num_vertices, const std::vector<int>& at_vertex,
    const std::vector<std::array<int, 2>>& pairs) {
  UnionFind uf(num_vertices);
  for (const auto& p : pairs) uf.unite(at_vertex[p[0]], at_vertex[p[1]]);
  std::vector<std::vector<int>> comps;
  std::vector<int> comp_id(num_vertices, -1);
  for (int v = 0; v < num_vertices; ++v) {
    int r = uf.find(v);
    if (comp_id[r] < 0) {
      comp_id[r] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[comp_id[r]].push_back(v);
  }
  return comps;
}

}  // namespace

std::vector<std::vector<int>> connected_components(const Graph& g) {
  return components_from_pairs(g.num_vertices(), g.at_vertex, g.internal_pairs());
}

int loop_number(const Graph& g) {
  return static_cast<int>(g.internal_pairs().size()) - g.num_vertices() +
         static_cast<int>(connected_components(g).size());
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

bool is_1pi(const Graph& g) { return is_connected(g) && is_locally_1pi(g); }

bool is_locally_1pi(const Graph& g) {
  auto pairs = g.internal_pairs();
  const size_t base = components_from_pairs(g.num_vertices(), g.at_vertex, pairs).size();
  for (size_t cut = 0; cut < pairs.size(); ++cut) {
    std::vector<std::array<int, 2>> rest;
    rest.reserve(pairs.size() - 1);
    for (size_t i = 0; i < pairs.size(); ++i)
      if (i != cut) rest.push_back(pairs[i]);
    if (components_from_pairs(g.num_vertices(), g.at_vertex, rest).size() != base)
      return false;
  }
  return true;
}

std::vector<CoveringSubgraph> covering_subgraphs(const Graph& g, int bound) {
  const int np = static_cast<int>(g.internal_pairs().size());
  if (np > bound)
    throw BoundError("covering-subgraph enumeration bound exceeded: " + std::to_string(np) +
                     " internal edges (bound " + std::to_string(bound) + ")");
  auto parent = std::make_shared<const Graph>(g);
  std::vector<CoveringSubgraph> out;
  out.reserve(static_cast<size_t>(1) << np);
  for (unsigned mask = 0; mask < (1u << np); ++mask) {
    CoveringSubgraph sub;
    sub.parent = parent;
    for (int i = 0; i < np; ++i)
      if (mask & (1u << i)) sub.kept.push_back(i);
    out.push_back(std::move(sub));
  }
  return out;
}

CoveringSubgraph full_covering(const Graph& g) {
  CoveringSubgraph sub;
  sub.parent = std::make_shared<const Graph>(g);
  sub.kept.resize(g.internal_pairs().size());
  std::iota(sub.kept.begin(), sub.kept.end(), 0);
  return sub;
}

CoveringSubgraph empty_covering(const Graph& g) {
  CoveringSubgraph sub;
  sub.parent = std::make_shared<const Graph>(g);
  return sub;
}

Graph realize(const CoveringSubgraph& sub) {
  Graph g = *sub.parent;
  auto pairs = g.internal_pairs();
  std::vector<char> keep(pairs.size(), 0);
  for (int i : sub.kept) keep.at(i) = 1;
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (!keep[i]) {
      g.sigma[pairs[i][0]] = pairs[i][0];
      g.sigma[pairs[i][1]] = pairs[i][1];
    }
  }
  return g;
}

ContractionResult contract(const Theory& theory, const Graph& g,
                           const CoveringSubgraph& sub,
                           const std::vector<int>& component_marks) {
  const Graph inner = realize(sub);
  const auto comps = connected_components(inner);
  if (component_marks.size() != comps.size())
    throw GraphError("contraction marks count does not match subgraph components");

  const auto inner_pairs = inner.internal_pairs();
  std::vector<char> removed(g.num_half_edges(), 0);
  for (const auto& p : inner_pairs) removed[p[0]] = removed[p[1]] = 1;

  std::vector<int> comp_of(g.num_vertices(), -1);
  for (size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) comp_of[v] = static_cast<int>(c);

  ContractionResult res;
  res.component_of_vertex = comp_of;
  res.component_vertex.resize(comps.size());

  std::vector<char> has_kept(comps.size(), 0);
  for (const auto& p : inner_pairs) has_kept[comp_of[inner.at_vertex[p[0]]]] = 1;

  // One vertex per component; components with kept edges are typed by
  // their external star and the requested mark, bare vertices keep
  // their kind.
  for (size_t c = 0; c < comps.size(); ++c) {
    res.component_vertex[c] = static_cast<int>(c);
    const bool trivial = !has_kept[c];
    VertexKind kind;
    if (trivial) {
      kind = g.vertex_kind[comps[c][0]];
    } else {
      std::vector<int> star_types;
      for (int v : comps[c])
        for (int e : g.star(v))
          if (!removed[e]) star_types.push_back(g.half_edge_type[e]);
      std::sort(star_types.begin(), star_types.end());
      auto vt = theory.vertex_type_for(star_types, component_marks[c]);
      if (!vt)
        throw NotInTheoryError("contracted component has a star admitted by no vertex type");
      kind = VertexKind{*vt, component_marks[c]};
    }
    res.graph.vertex_kind.push_back(kind);
  }

  res.half_edge_map.assign(g.num_half_edges(), -1);
  for (int e = 0; e < g.num_half_edges(); ++e) {
    if (removed[e]) continue;
    res.half_edge_map[e] = static_cast<int>(res.graph.half_edge_type.size());
    res.graph.half_edge_type.push_back(g.half_edge_type[e]);
    res.graph.at_vertex.push_back(comp_of[g.at_vertex[e]]);
  }
  res.graph.sigma.resize(res.graph.half_edge_type.size());
  for (int e = 0; e < g.num_half_edges(); ++e) {
    if (removed[e]) continue;
    int se = g.sigma[e];
    res.graph.sigma[res.half_edge_map[e]] = res.half_edge_map[se];  // se survives too
  }

  const auto old_pairs = g.internal_pairs();
  const auto new_pairs = res.graph.internal_pairs();
  auto pair_index = [&](int e0, int e1) {
    std::array<int, 2> key{std::min(e0, e1), std::max(e0, e1)};
    auto it = std::lower_bound(new_pairs.begin(), new_pairs.end(), key);
    return static_cast<int>(it - new_pairs.begin());
  };
  res.pair_map.assign(old_pairs.size(), -1);
  for (size_t i = 0; i < old_pairs.size(); ++i)
    if (!removed[old_pairs[i][0]])
      res.pair_map[i] =
          pair_index(res.half_edge_map[old_pairs[i][0]], res.half_edge_map[old_pairs[i][1]]);
  return res;
}

Graph residue(const Theory& theory, const Graph& g) {
  auto sub = full_covering(g);
  const auto comps = connected_components(g);
  std::vector<int> marks;
  for (const auto& comp : comps) {
    // Smallest allowed mark for the component's external star; single
    // vertices keep their kind regardless.
    std::vector<int> star_types;
    for (int v : comp)
      for (int e : g.star(v))
        if (g.sigma[e] == e) star_types.push_back(g.half_edge_type[e]);
    std::sort(star_types.begin(), star_types.end());
    auto vt = theory.vertex_type_for_signature(star_types);
    if (!vt) throw NotInTheoryError("residue star admitted by no vertex type");
    marks.push_back(theory.vertex_types()[*vt].allowed_specs.front());
  }
  return contract(theory, g, sub, marks).graph;
}

Graph skeleton(const Graph& g) { return realize(empty_covering(g)); }

std::vector<int> residue_signature(const Graph& g) {
  std::vector<int> out;
  for (int e : g.external_half_edges()) out.push_back(g.half_edge_type[e]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fg
