#include <random>

#include "doctest.h"
#include "gmi/stanley_reisner.hpp"
#include "oracles.hpp"

using namespace gmi;

namespace {

// x'_1, x'_2 of degree 4 and odd y: the polarized worked example.
MonomialRing boundary_example() {
  VariableTable t;
  t.even_vars.push_back({"x'_1", 4});
  t.even_vars.push_back({"x'_2", 4});
  t.odd_vars.push_back({"y", 1});
  return MonomialRing(t, {Monomial({1, 1}, {1})});
}

// Number of standard monomials of degree d whose support is exactly the
// face sigma; summed over faces this is an independent rank oracle.
long long exact_support_count(const MonomialRing& ring,
                              const VertexLabeling& labeling,
                              const std::vector<int>& sigma, int d) {
  std::vector<int> even, odd;
  for (int v : sigma) {
    if (labeling.is_even_vertex(v))
      even.push_back(v - 1);
    else
      odd.push_back(v - static_cast<int>(labeling.even_count));
  }
  int rest = d;
  for (int k : odd) rest -= ring.table.odd_vars[k - 1].degree;
  if (rest < 0) return 0;
  // Count tuples with every exponent >= 1 weighted by variable degrees.
  std::vector<long long> dp(rest + 1, 0);
  dp[0] = 1;
  std::vector<long long> next(rest + 1);
  for (int col : even) {
    int deg = ring.table.even_vars[col].degree;
    std::fill(next.begin(), next.end(), 0);
    for (int s = 0; s + deg <= rest; ++s) {
      if (dp[s] == 0) continue;
      for (int e = 1; s + e * deg <= rest; ++e) next[s + e * deg] += dp[s];
    }
    dp.swap(next);
  }
  return dp[rest];
}

}  // namespace

TEST_CASE("complex of the boundary example") {
  MonomialRing ring = boundary_example();
  VertexLabeling labeling = VertexLabeling::for_table(ring.table);
  SimplicialComplex k = complex_from_ideal(ring.ideal, labeling);
  CHECK(k.vertex_count == 3);
  REQUIRE(k.minimal_non_faces.size() == 1);
  CHECK(k.minimal_non_faces[0] == std::vector<int>{1, 2, 3});

  CHECK(is_face(k, {}));
  CHECK(is_face(k, {1, 2}));
  CHECK(is_face(k, {2, 3}));
  CHECK_FALSE(is_face(k, {1, 2, 3}));

  CHECK(ideal_from_complex(k, labeling, ring.table) == ring.ideal);
}

TEST_CASE("complex from a two-generator ideal") {
  VariableTable t;
  t.even_vars.push_back({"x'_1", 2});
  t.even_vars.push_back({"x'_2", 2});
  t.odd_vars.push_back({"y1", 1});
  t.odd_vars.push_back({"y2", 1});
  MonomialRing ring(t, {Monomial({1, 0}, {1}), Monomial({0, 1}, {2})});
  SimplicialComplex k =
      complex_from_ideal(ring.ideal, VertexLabeling::for_table(t));
  REQUIRE(k.minimal_non_faces.size() == 2);
  CHECK(k.minimal_non_faces[0] == std::vector<int>{1, 3});
  CHECK(k.minimal_non_faces[1] == std::vector<int>{2, 4});
}

TEST_CASE("non-square-free ideals are rejected") {
  VariableTable t;
  t.even_vars.push_back({"x", 2});
  MonomialRing ring(t, {Monomial({2}, {})});
  CHECK_THROWS_AS(
      complex_from_ideal(ring.ideal, VertexLabeling::for_table(t)),
      std::invalid_argument);
}

TEST_CASE("zero ideal gives the full simplex") {
  VariableTable t;
  t.even_vars.push_back({"x", 2});
  t.odd_vars.push_back({"y", 1});
  SimplicialComplex k =
      complex_from_ideal(MonomialIdeal{}, VertexLabeling::for_table(t));
  CHECK(k.minimal_non_faces.empty());
  CHECK(is_face(k, {1, 2}));
  CHECK(ideal_from_complex(k, VertexLabeling::for_table(t), t).generators.empty());
}

TEST_CASE("round trip on random square-free ideals") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> evens(0, 6), odds(0, 4);
  for (int trial = 0; trial < 50; ++trial) {
    int e = evens(rng), o = odds(rng);
    if (e + o == 0) e = 1;
    MonomialRing ring = oracles::random_square_free_ring(rng, e, o, 6);
    VertexLabeling labeling = VertexLabeling::for_table(ring.table);
    SimplicialComplex k = complex_from_ideal(ring.ideal, labeling);
    CHECK(ideal_from_complex(k, labeling, ring.table) == ring.ideal);
    // Reverse round trip on the complex.
    CHECK(complex_from_ideal(ideal_from_complex(k, labeling, ring.table),
                             labeling) == k);
  }
}

TEST_CASE("face ring ranks match the face-by-face count") {
  std::mt19937 rng(515151);
  for (int trial = 0; trial < 20; ++trial) {
    MonomialRing ring = oracles::random_square_free_ring(rng, 4, 2, 5);
    VertexLabeling labeling = VertexLabeling::for_table(ring.table);
    SimplicialComplex k = complex_from_ideal(ring.ideal, labeling);
    HilbertFunction h = hilbert_function(ring, 10);
    for (int d = 0; d <= 10; ++d) {
      long long total = 0;
      int n = k.vertex_count;
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> sigma;
        for (int v = 1; v <= n; ++v)
          if (mask & (1u << (v - 1))) sigma.push_back(v);
        if (!is_face(k, sigma)) continue;
        total += exact_support_count(ring, labeling, sigma, d);
      }
      CHECK(h.rank(d) == total);
    }
  }
}

TEST_CASE("generalized Stanley-Reisner ideal of the worked example") {
  SimplicialComplex k;
  k.vertex_count = 3;
  k.minimal_non_faces = {{1, 2, 3}};
  VertexLabeling labeling{2, 1};
  VariableTable blocks;
  blocks.even_vars = {{"z'_1_1_1", 2}, {"z'_1_1_2", 2},
                      {"z'_1_2_1", 2}, {"z'_1_2_2", 2}};
  blocks.odd_vars = {{"y", 1}};
  MonomialIdeal l_prime = generalized_sr_ideal(k, labeling, {2, 2}, blocks);
  REQUIRE(l_prime.generators.size() == 4);
  for (const auto& g : l_prime.generators) {
    CHECK(g.odd_support == std::vector<int>{1});
    // One factor from each block of two.
    CHECK(g.even_exponents[0] + g.even_exponents[1] == 1);
    CHECK(g.even_exponents[2] + g.even_exponents[3] == 1);
  }
}

TEST_CASE("generalized SR ideal with unit blocks is the plain SR ideal") {
  std::mt19937 rng(90210);
  for (int trial = 0; trial < 10; ++trial) {
    MonomialRing ring = oracles::random_square_free_ring(rng, 5, 2, 5);
    VertexLabeling labeling = VertexLabeling::for_table(ring.table);
    SimplicialComplex k = complex_from_ideal(ring.ideal, labeling);
    std::vector<int> ones(labeling.even_count, 1);
    CHECK(generalized_sr_ideal(k, labeling, ones, ring.table) ==
          ideal_from_complex(k, labeling, ring.table));
  }
}

TEST_CASE("generalized SR generator count is the product of block sizes") {
  SimplicialComplex k;
  k.vertex_count = 3;
  k.minimal_non_faces = {{1, 2}, {2, 3}};
  VertexLabeling labeling{3, 0};
  VariableTable blocks;
  blocks.even_vars = {{"a1", 2}, {"a2", 2}, {"b1", 2}, {"c1", 2}, {"c2", 2},
                      {"c3", 2}};
  MonomialIdeal l = generalized_sr_ideal(k, labeling, {2, 1, 3}, blocks);
  // {1,2}: 2*1 choices; {2,3}: 1*3 choices, no divisibility collapses.
  CHECK(l.generators.size() == 5);
}
