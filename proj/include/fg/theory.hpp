#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fg/errors.hpp"

namespace fg {

struct HalfEdgeType {
  std::string name;
};

/// A vertex species of the theory. `signature` is the multiset of
/// half-edge type ids forming the star (kept sorted); `allowed_specs`
/// are the admissible specification indices for vertices of this
/// species (e.g. {0,1} for two-point counterterm vertices).
struct VertexType {
  std::string name;
  std::vector<int> signature;
  std::vector<int> allowed_specs;
};

/// A physical theory: the admissible half-edge types, the pairing the
/// involution may use to join them, and the vertex species. Immutable
/// after construction; safe to share across threads.
class Theory {
 public:
  Theory(std::string name, std::vector<HalfEdgeType> half_edge_types,
         std::vector<VertexType> vertex_types,
         std::vector<std::pair<int, int>> pairing);

  /// Built-in presets: "phi3" and "qed".
  static Theory preset(std::string_view name);

  const std::string& name() const { return name_; }
  const std::vector<HalfEdgeType>& half_edge_types() const { return half_edge_types_; }
  const std::vector<VertexType>& vertex_types() const { return vertex_types_; }

  std::optional<int> half_edge_type_index(std::string_view name) const;
  std::optional<int> vertex_type_index(std::string_view name) const;

  /// Whether the involution may join half-edges of these two types.
  bool sigma_compatible(int t1, int t2) const;

  /// The unique vertex type whose signature equals `signature_sorted`
  /// and whose allowed specs contain `spec`; absent if none.
  std::optional<int> vertex_type_for(const std::vector<int>& signature_sorted,
                                     int spec) const;

  /// Signature lookup ignoring the spec value.
  std::optional<int> vertex_type_for_signature(
      const std::vector<int>& signature_sorted) const;

  bool spec_allowed(int vtype, int spec) const;

 private:
  std::string name_;
  std::vector<HalfEdgeType> half_edge_types_;
  std::vector<VertexType> vertex_types_;
  std::vector<std::vector<char>> compat_;
};

/// Parses and validates a theory document (JSON text; format described
/// in the README). Throws TheoryError on duplicate names, signatures
/// referencing unknown half-edge types, or empty spec sets.
Theory load_theory(std::string_view json_text);

}  // namespace fg
