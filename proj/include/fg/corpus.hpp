#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fg/doubling.hpp"
#include "fg/specified.hpp"

namespace fg {

struct CorpusBounds {
  int max_loops = 2;
  int max_vertices = 6;
  int max_half_edges = 16;
  bool allow_self_loops = false;
};

/// A generated, deduplicated test universe: every connected 1PI
/// superficially divergent specified graph of the theory within the
/// bounds, and every doubling pair built from them.
struct Corpus {
  std::string theory_name;
  CorpusBounds bounds;
  uint64_t seed = 0;
  std::vector<SpecifiedGraph> graphs;  // sorted by canonical key
  std::vector<GraphPair> pairs;        // sorted by canonical key
};

/// Exhaustive enumeration by gluing typed vertex stars, deduplicated by
/// canonical form. Pairs are derived through the covering-subgraph
/// enumeration, keeping those whose contraction stays in the theory.
Corpus gen_corpus(const Theory& theory, const CorpusBounds& bounds, uint64_t seed = 0);

}  // namespace fg
