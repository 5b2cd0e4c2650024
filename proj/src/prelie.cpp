#include "fg/prelie.hpp"

#include <algorithm>
#include <map>

#include "fg/errors.hpp"

namespace fg {

namespace {

/// Enumerates all bijections legs -> slots with equal types, as
/// vectors `match` with match[i] = slot index for legs[i].
void bijections(const Graph& piece, const std::vector<int>& legs, const Graph& host,
                const std::vector<int>& slots, std::vector<std::vector<int>>& out) {
  std::vector<int> match(legs.size(), -1);
  std::vector<char> used(slots.size(), 0);
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == legs.size()) {
      out.push_back(match);
      return;
    }
    for (size_t s = 0; s < slots.size(); ++s) {
      if (used[s]) continue;
      if (piece.half_edge_type[legs[i]] != host.half_edge_type[slots[s]]) continue;
      used[s] = 1;
      match[i] = static_cast<int>(s);
      self(self, i + 1);
      used[s] = 0;
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<Gluing> glue_all(const Graph& piece, const Graph& host, int v) {
  const std::vector<int> legs = piece.external_half_edges();
  const std::vector<int> slots = host.star(v);
  if (legs.size() != slots.size()) return {};

  std::vector<std::vector<int>> matches;
  bijections(piece, legs, host, slots, matches);

  std::vector<char> is_slot(host.num_half_edges(), 0);
  for (int s : slots) is_slot[s] = 1;

  std::vector<Gluing> out;
  out.reserve(matches.size());
  for (const auto& match : matches) {
    Gluing glue;
    // host vertices except v first, then the piece's vertices
    glue.host_vertex_map.assign(host.num_vertices(), -1);
    int nv = 0;
    for (int w = 0; w < host.num_vertices(); ++w)
      if (w != v) glue.host_vertex_map[w] = nv++;
    glue.piece_vertex_map.resize(piece.num_vertices());
    for (int w = 0; w < piece.num_vertices(); ++w) glue.piece_vertex_map[w] = nv++;
    glue.graph.vertex_kind.resize(nv);
    for (int w = 0; w < host.num_vertices(); ++w)
      if (w != v) glue.graph.vertex_kind[glue.host_vertex_map[w]] = host.vertex_kind[w];
    for (int w = 0; w < piece.num_vertices(); ++w)
      glue.graph.vertex_kind[glue.piece_vertex_map[w]] = piece.vertex_kind[w];

    glue.host_half_map.assign(host.num_half_edges(), -1);
    int nh = 0;
    for (int e = 0; e < host.num_half_edges(); ++e)
      if (!is_slot[e]) glue.host_half_map[e] = nh++;
    glue.piece_half_map.resize(piece.num_half_edges());
    for (int e = 0; e < piece.num_half_edges(); ++e) glue.piece_half_map[e] = nh++;

    glue.graph.half_edge_type.resize(nh);
    glue.graph.at_vertex.resize(nh);
    glue.graph.sigma.resize(nh);
    for (int e = 0; e < host.num_half_edges(); ++e) {
      if (is_slot[e]) continue;
      glue.graph.half_edge_type[glue.host_half_map[e]] = host.half_edge_type[e];
      glue.graph.at_vertex[glue.host_half_map[e]] = glue.host_vertex_map[host.at_vertex[e]];
    }
    for (int e = 0; e < piece.num_half_edges(); ++e) {
      glue.graph.half_edge_type[glue.piece_half_map[e]] = piece.half_edge_type[e];
      glue.graph.at_vertex[glue.piece_half_map[e]] = glue.piece_vertex_map[piece.at_vertex[e]];
    }

    // slot -> the piece leg plugged into it
    std::vector<int> leg_of_slot(slots.size(), -1);
    for (size_t i = 0; i < legs.size(); ++i) leg_of_slot[match[i]] = legs[i];
    auto replacement = [&](int host_half) {
      // new index carrying the role of this host half-edge
      if (!is_slot[host_half]) return glue.host_half_map[host_half];
      int s = static_cast<int>(std::find(slots.begin(), slots.end(), host_half) -
                               slots.begin());
      return glue.piece_half_map[leg_of_slot[s]];
    };

    // host sigma transported; edges that met v now end on piece legs
    for (int e = 0; e < host.num_half_edges(); ++e) {
      if (is_slot[e]) continue;
      int se = host.sigma[e];
      glue.graph.sigma[glue.host_half_map[e]] =
          (se == e) ? glue.host_half_map[e] : replacement(se);
    }
    // piece sigma: internal pairs intact, legs bond to their slot's partner
    for (int e = 0; e < piece.num_half_edges(); ++e) {
      int se = piece.sigma[e];
      if (se != e) {
        glue.graph.sigma[glue.piece_half_map[e]] = glue.piece_half_map[se];
        continue;
      }
      int s = match[static_cast<int>(std::find(legs.begin(), legs.end(), e) - legs.begin())];
      int partner = host.sigma[slots[s]];
      glue.graph.sigma[glue.piece_half_map[e]] =
          (partner == slots[s]) ? glue.piece_half_map[e] : replacement(partner);
    }

    // pair index maps
    const auto new_pairs = glue.graph.internal_pairs();
    auto pair_index = [&](int e0, int e1) {
      std::array<int, 2> key{std::min(e0, e1), std::max(e0, e1)};
      auto it = std::lower_bound(new_pairs.begin(), new_pairs.end(), key);
      return static_cast<int>(it - new_pairs.begin());
    };
    const auto piece_pairs = piece.internal_pairs();
    glue.piece_pair_map.resize(piece_pairs.size());
    for (size_t i = 0; i < piece_pairs.size(); ++i)
      glue.piece_pair_map[i] = pair_index(glue.piece_half_map[piece_pairs[i][0]],
                                          glue.piece_half_map[piece_pairs[i][1]]);
    const auto host_pairs = host.internal_pairs();
    glue.host_pair_map.assign(host_pairs.size(), -1);
    for (size_t i = 0; i < host_pairs.size(); ++i) {
      int a = replacement(host_pairs[i][0]);
      int b = replacement(host_pairs[i][1]);
      if (glue.graph.sigma[a] == b) glue.host_pair_map[i] = pair_index(a, b);
    }
    out.push_back(std::move(glue));
  }
  return out;
}

GraphLin insert_at(const Theory& theory, const SpecifiedGraph& g1, int v,
                   const SpecifiedGraph& g2) {
  if (g1.spec.size() != 1 || g2.spec.size() != 1)
    throw GraphError("insertion operands must be connected");
  if (v < 0 || v >= g2.graph.num_vertices()) throw GraphError("insertion vertex out of range");
  GraphLin out;
  VertexKind rk;
  try {
    rk = residue_kind(theory, g1);
  } catch (const NotInTheoryError&) {
    return out;
  }
  if (!(g2.graph.vertex_kind[v] == rk)) return out;
  for (auto& glue : glue_all(g1.graph, g2.graph, v))
    out.add(make_specified(theory, std::move(glue.graph), {g2.spec[0]}), 1);
  return out;
}

GraphLin insert(const Theory& theory, const SpecifiedGraph& g1, const SpecifiedGraph& g2) {
  GraphLin out;
  for (int v = 0; v < g2.graph.num_vertices(); ++v) out.add(insert_at(theory, g1, v, g2));
  return out;
}

GraphLin insert(const Theory& theory, const GraphLin& a, const GraphLin& b) {
  GraphLin out;
  for (const auto& [ka, ta] : a.terms())
    for (const auto& [kb, tb] : b.terms())
      out.add(insert(theory, ta.first, tb.first).scaled(ta.second * tb.second));
  return out;
}

HopfElement insert_mon(const Theory& theory, const SpecifiedGraph& g1,
                       const GraphMonomial& m) {
  HopfElement out;
  for (int i = 0; i < m.size(); ++i) {
    GraphMonomial rest = m.without(i);
    for (const auto& [k, t] : insert(theory, g1, m.factor(i)).terms())
      out.add(rest.times(GraphMonomial(t.first)), t.second);
  }
  return out;
}

GraphLin bracket(const Theory& theory, const GraphLin& a, const GraphLin& b) {
  return insert(theory, a, b).minus(insert(theory, b, a));
}

bool check_prelie(const Theory& theory, const SpecifiedGraph& a, const SpecifiedGraph& b,
                  const SpecifiedGraph& c) {
  auto la = GraphLin::of(a);
  auto lb = GraphLin::of(b);
  auto lc = GraphLin::of(c);
  GraphLin lhs = insert(theory, insert(theory, la, lb), lc)
                     .minus(insert(theory, la, insert(theory, lb, lc)));
  GraphLin rhs = insert(theory, insert(theory, lb, la), lc)
                     .minus(insert(theory, lb, insert(theory, la, lc)));
  return lhs == rhs;
}

bool check_jacobi(const Theory& theory, const SpecifiedGraph& a, const SpecifiedGraph& b,
                  const SpecifiedGraph& c) {
  auto la = GraphLin::of(a);
  auto lb = GraphLin::of(b);
  auto lc = GraphLin::of(c);
  GraphLin sum = bracket(theory, la, bracket(theory, lb, lc));
  sum.add(bracket(theory, lb, bracket(theory, lc, la)));
  sum.add(bracket(theory, lc, bracket(theory, la, lb)));
  return sum.is_zero();
}

}  // namespace fg
