#ifndef GMI_STANLEY_REISNER_HPP
#define GMI_STANLEY_REISNER_HPP

#include "gmi/monomial.hpp"

namespace gmi {

/// A simplicial complex stored by its minimal non-faces (an antichain of
/// vertex subsets).  Faces are exactly the subsets containing no minimal
/// non-face, so the complex is downward closed by construction.
struct SimplicialComplex {
  int vertex_count = 0;
  std::vector<std::vector<int>> minimal_non_faces;  // sorted sets, 1-based

  void canonicalize();
  bool operator==(const SimplicialComplex&) const = default;
};

/// Canonical bijection vertices -> variables: the even block first (one
/// vertex per even variable, in table order), then one vertex per odd
/// variable.
struct VertexLabeling {
  std::size_t even_count = 0;
  std::size_t odd_count = 0;

  static VertexLabeling for_table(const VariableTable& table) {
    return {table.even_count(), table.odd_count()};
  }
  int vertex_count() const { return static_cast<int>(even_count + odd_count); }
  bool is_even_vertex(int v) const {
    return v >= 1 && v <= static_cast<int>(even_count);
  }

  bool operator==(const VertexLabeling&) const = default;
};

/// Minimal non-faces = supports of the minimal generators.  Requires a
/// square-free ideal.
SimplicialComplex complex_from_ideal(const MonomialIdeal& ideal,
                                     const VertexLabeling& labeling);

/// Generators = products of the variables over each minimal non-face.
MonomialIdeal ideal_from_complex(const SimplicialComplex& k,
                                 const VertexLabeling& labeling,
                                 const VariableTable& table);

bool is_face(const SimplicialComplex& k, const std::vector<int>& sigma);

/// Generalized Stanley-Reisner ideal for multi-generator vertex spaces.
/// Even vertex v carries block_sizes[v-1] generators laid out contiguously
/// in the table's even block; each odd vertex carries the matching odd
/// variable.  For every minimal non-face, one generator is chosen per even
/// vertex in all possible ways.
MonomialIdeal generalized_sr_ideal(const SimplicialComplex& k,
                                   const VertexLabeling& labeling,
                                   const std::vector<int>& block_sizes,
                                   const VariableTable& block_table);

}  // namespace gmi

#endif
