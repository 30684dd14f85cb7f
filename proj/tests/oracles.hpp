// Independent oracles and random-instance generators shared by the unit and
// acceptance suites.  The oracles deliberately avoid the library's own
// enumeration and reduction code paths.
#ifndef GMI_TESTS_ORACLES_HPP
#define GMI_TESTS_ORACLES_HPP

#include <random>
#include <set>
#include <vector>

#include "gmi/monomial.hpp"

namespace gmi::oracles {

/// Brute-force Hilbert ranks via flat mixed-radix iteration over even
/// exponent tuples and bitmask iteration over odd subsets, counting
/// monomials divisible by no generator.
inline std::vector<long long> hilbert(const MonomialRing& ring, int d_max) {
  std::vector<long long> ranks(d_max + 1, 0);
  const auto& even = ring.table.even_vars;
  const auto& odd = ring.table.odd_vars;
  std::vector<int> bound(even.size());
  for (std::size_t i = 0; i < even.size(); ++i)
    bound[i] = d_max / even[i].degree;
  std::vector<int> exps(even.size(), 0);
  while (true) {
    int even_degree = 0;
    for (std::size_t i = 0; i < even.size(); ++i)
      even_degree += exps[i] * even[i].degree;
    if (even_degree <= d_max) {
      for (unsigned mask = 0; mask < (1u << odd.size()); ++mask) {
        int d = even_degree;
        std::vector<int> support;
        for (std::size_t k = 0; k < odd.size(); ++k)
          if (mask & (1u << k)) {
            d += odd[k].degree;
            support.push_back(static_cast<int>(k) + 1);
          }
        if (d > d_max) continue;
        Monomial m(exps, support);
        bool in_ideal = false;
        for (const auto& g : ring.ideal.generators)
          if (divides(g, m)) {
            in_ideal = true;
            break;
          }
        if (!in_ideal) ++ranks[d];
      }
    }
    // Odometer step over the exponent tuple.
    std::size_t i = 0;
    for (; i < exps.size(); ++i) {
      if (++exps[i] <= bound[i]) break;
      exps[i] = 0;
    }
    if (i == exps.size()) break;
  }
  return ranks;
}

struct RingParams {
  int max_even = 4;
  int max_odd = 3;
  int min_even_degree = 2;   // drawn from even values in [min, max]
  int max_even_degree = 6;
  int max_odd_degree = 5;    // drawn from odd values >= 1
  int max_generators = 5;
  int max_exponent = 3;
};

/// Random graded monomial ideal ring.  Generators are drawn coordinatewise
/// and unit draws are discarded, so the ideal may end up smaller than
/// max_generators after minimalization.
inline MonomialRing random_ring(std::mt19937& rng, const RingParams& params) {
  std::uniform_int_distribution<int> even_count(0, params.max_even);
  std::uniform_int_distribution<int> odd_count(0, params.max_odd);
  VariableTable table;
  int m = even_count(rng);
  int n = odd_count(rng);
  if (m == 0 && n == 0) m = 1;
  std::uniform_int_distribution<int> even_degree(params.min_even_degree / 2,
                                                 params.max_even_degree / 2);
  std::uniform_int_distribution<int> odd_degree(0, (params.max_odd_degree - 1) / 2);
  for (int i = 0; i < m; ++i)
    table.even_vars.push_back({"x" + std::to_string(i + 1), 2 * even_degree(rng)});
  for (int k = 0; k < n; ++k)
    table.odd_vars.push_back({"y" + std::to_string(k + 1), 2 * odd_degree(rng) + 1});

  std::uniform_int_distribution<int> gen_count(0, params.max_generators);
  std::uniform_int_distribution<int> exponent(0, params.max_exponent);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<Monomial> gens;
  int wanted = gen_count(rng);
  for (int g = 0; g < wanted; ++g) {
    Monomial mon = Monomial::unit(table.even_count());
    for (int i = 0; i < m; ++i) mon.even_exponents[i] = exponent(rng);
    for (int k = 0; k < n; ++k)
      if (coin(rng)) mon.odd_support.push_back(k + 1);
    if (!mon.is_unit()) gens.push_back(std::move(mon));
  }
  return MonomialRing(std::move(table), std::move(gens));
}

/// Random square-free ideal over a table with the given variable split.
inline MonomialRing random_square_free_ring(std::mt19937& rng, int even,
                                            int odd, int max_generators) {
  VariableTable table;
  for (int i = 0; i < even; ++i)
    table.even_vars.push_back({"v" + std::to_string(i + 1), 2});
  for (int k = 0; k < odd; ++k)
    table.odd_vars.push_back({"u" + std::to_string(k + 1), 1});
  std::uniform_int_distribution<int> gen_count(0, max_generators);
  std::uniform_int_distribution<int> coin(0, 3);  // sparse supports
  std::vector<Monomial> gens;
  int wanted = gen_count(rng);
  for (int g = 0; g < wanted; ++g) {
    Monomial mon = Monomial::unit(table.even_count());
    for (int i = 0; i < even; ++i)
      if (coin(rng) == 0) mon.even_exponents[i] = 1;
    for (int k = 0; k < odd; ++k)
      if (coin(rng) == 0) mon.odd_support.push_back(k + 1);
    if (!mon.is_unit()) gens.push_back(std::move(mon));
  }
  return MonomialRing(std::move(table), std::move(gens));
}

}  // namespace gmi::oracles

#endif
