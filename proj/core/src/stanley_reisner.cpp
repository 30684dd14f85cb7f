#include "gmi/stanley_reisner.hpp"

#include <algorithm>

namespace gmi {

void SimplicialComplex::canonicalize() {
  for (auto& s : minimal_non_faces) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  std::sort(minimal_non_faces.begin(), minimal_non_faces.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  minimal_non_faces.erase(
      std::unique(minimal_non_faces.begin(), minimal_non_faces.end()),
      minimal_non_faces.end());
}

SimplicialComplex complex_from_ideal(const MonomialIdeal& ideal,
                                     const VertexLabeling& labeling) {
  if (!is_square_free(ideal))
    throw std::invalid_argument("ideal is not square-free");
  SimplicialComplex k;
  k.vertex_count = labeling.vertex_count();
  for (const auto& g : ideal.generators) {
    std::vector<int> sigma;
    for (std::size_t i = 0; i < g.even_exponents.size(); ++i)
      if (g.even_exponents[i] == 1) sigma.push_back(static_cast<int>(i) + 1);
    for (int s : g.odd_support)
      sigma.push_back(static_cast<int>(labeling.even_count) + s);
    k.minimal_non_faces.push_back(std::move(sigma));
  }
  k.canonicalize();
  return k;
}

MonomialIdeal ideal_from_complex(const SimplicialComplex& k,
                                 const VertexLabeling& labeling,
                                 const VariableTable& table) {
  if (labeling.even_count != table.even_count() ||
      labeling.odd_count != table.odd_count())
    throw std::invalid_argument("labeling inconsistent with variable table");
  std::vector<Monomial> gens;
  for (const auto& sigma : k.minimal_non_faces) {
    Monomial m = Monomial::unit(table.even_count());
    for (int v : sigma) {
      if (labeling.is_even_vertex(v))
        m.even_exponents[v - 1] = 1;
      else
        m.odd_support.push_back(v - static_cast<int>(labeling.even_count));
    }
    std::sort(m.odd_support.begin(), m.odd_support.end());
    gens.push_back(std::move(m));
  }
  return minimalize(std::move(gens), table);
}

bool is_face(const SimplicialComplex& k, const std::vector<int>& sigma) {
  std::vector<int> sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& nf : k.minimal_non_faces)
    if (std::includes(sorted.begin(), sorted.end(), nf.begin(), nf.end()))
      return false;
  return true;
}

MonomialIdeal generalized_sr_ideal(const SimplicialComplex& k,
                                   const VertexLabeling& labeling,
                                   const std::vector<int>& block_sizes,
                                   const VariableTable& block_table) {
  if (block_sizes.size() != labeling.even_count)
    throw std::invalid_argument("one block size per even vertex required");
  for (int c : block_sizes)
    if (c <= 0) throw std::invalid_argument("block sizes must be positive");
  std::vector<int> base(block_sizes.size());
  int total = 0;
  for (std::size_t v = 0; v < block_sizes.size(); ++v) {
    base[v] = total;
    total += block_sizes[v];
  }
  if (static_cast<std::size_t>(total) != block_table.even_count() ||
      labeling.odd_count != block_table.odd_count())
    throw std::invalid_argument("block table inconsistent with block sizes");

  std::vector<Monomial> gens;
  for (const auto& sigma : k.minimal_non_faces) {
    std::vector<int> even_vertices;
    std::vector<int> odd_support;
    for (int v : sigma) {
      if (labeling.is_even_vertex(v))
        even_vertices.push_back(v - 1);
      else
        odd_support.push_back(v - static_cast<int>(labeling.even_count));
    }
    // One z-generator per even vertex, all choices (odometer).
    std::vector<int> choice(even_vertices.size(), 0);
    while (true) {
      Monomial m = Monomial::unit(block_table.even_count());
      for (std::size_t t = 0; t < even_vertices.size(); ++t)
        m.even_exponents[base[even_vertices[t]] + choice[t]] = 1;
      m.odd_support = odd_support;
      gens.push_back(std::move(m));
      std::size_t t = 0;
      for (; t < choice.size(); ++t) {
        if (++choice[t] < block_sizes[even_vertices[t]]) break;
        choice[t] = 0;
      }
      if (t == choice.size()) break;
    }
  }
  return minimalize(std::move(gens), block_table);
}

}  // namespace gmi
