#include "gmi/polarization.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gmi {

std::size_t PolarizationData::polar_index(int i, int j) const {
  std::size_t idx = 0;
  for (int s = 1; s < i; ++s) idx += static_cast<std::size_t>(a_max[s - 1]);
  return idx + static_cast<std::size_t>(j - 1);
}

int PolarizationData::w_degree(std::size_t omega_bar_index) const {
  int i = omega_bar[omega_bar_index].first;
  return source.table.even_vars[i - 1].degree;
}

PolarizationData polarize(const MonomialRing& ring) {
  PolarizationData data;
  data.source = ring;
  std::size_t m = ring.table.even_count();
  data.a_max.assign(m, 1);
  for (const auto& g : ring.ideal.generators)
    for (std::size_t i = 0; i < m; ++i)
      data.a_max[i] = std::max(data.a_max[i], g.even_exponents[i]);

  VariableTable ptable;
  for (std::size_t i = 0; i < m; ++i) {
    for (int j = 1; j <= data.a_max[i]; ++j) {
      data.omega.pairs.emplace_back(static_cast<int>(i) + 1, j);
      if (j >= 2) data.omega_bar.emplace_back(static_cast<int>(i) + 1, j);
      ptable.even_vars.push_back({ring.table.even_vars[i].name + "'_" +
                                      std::to_string(j),
                                  ring.table.even_vars[i].degree});
    }
  }
  ptable.odd_vars = ring.table.odd_vars;

  std::vector<Monomial> gens;
  for (const auto& g : ring.ideal.generators) {
    Monomial pg = Monomial::unit(ptable.even_count());
    for (std::size_t i = 0; i < m; ++i)
      for (int j = 1; j <= g.even_exponents[i]; ++j)
        pg.even_exponents[data.polar_index(static_cast<int>(i) + 1, j)] = 1;
    pg.odd_support = g.odd_support;
    gens.push_back(std::move(pg));
  }
  data.polarized = MonomialRing(std::move(ptable), std::move(gens));
  return data;
}

Monomial depolarize(const PolarizationData& data, const Monomial& mon) {
  if (!mon.conforms(data.polarized.table))
    throw std::invalid_argument("monomial does not conform to polarized table");
  Monomial out = Monomial::unit(data.source.table.even_count());
  for (std::size_t p = 0; p < data.omega.pairs.size(); ++p)
    out.even_exponents[data.omega.pairs[p].first - 1] += mon.even_exponents[p];
  out.odd_support = mon.odd_support;
  return out;
}

IdentifiedRing identify_prefix(const PolarizationData& data, std::size_t steps) {
  if (steps > data.omega_bar.size())
    throw std::invalid_argument("identification prefix too long");
  std::size_t m = data.source.table.even_count();

  // Surviving columns: (i,1) for every i, plus omega_bar entries past the
  // prefix.  Keep the Omega order.
  std::vector<bool> merged(data.omega.pairs.size(), false);
  for (std::size_t k = 0; k < steps; ++k) {
    auto [i, j] = data.omega_bar[k];
    merged[data.polar_index(i, j)] = true;
  }
  IdentifiedRing out;
  VariableTable table;
  std::vector<std::size_t> survivor_of(data.omega.pairs.size());
  std::size_t next = 0;
  for (std::size_t p = 0; p < data.omega.pairs.size(); ++p) {
    if (merged[p]) continue;
    survivor_of[p] = next++;
    table.even_vars.push_back(data.polarized.table.even_vars[p]);
  }
  out.column_map.resize(data.omega.pairs.size());
  for (std::size_t p = 0; p < data.omega.pairs.size(); ++p) {
    int i = data.omega.pairs[p].first;
    out.column_map[p] = merged[p] ? survivor_of[data.polar_index(i, 1)]
                                  : survivor_of[p];
  }
  table.odd_vars = data.source.table.odd_vars;
  (void)m;

  std::vector<Monomial> gens;
  for (const auto& g : data.polarized.ideal.generators) {
    Monomial ng = Monomial::unit(table.even_count());
    for (std::size_t p = 0; p < data.omega.pairs.size(); ++p)
      ng.even_exponents[out.column_map[p]] += g.even_exponents[p];
    ng.odd_support = g.odd_support;
    gens.push_back(std::move(ng));
  }
  out.ring = MonomialRing(std::move(table), std::move(gens));
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  /// Returns false when x and y were already connected (a cycle).
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[x] = y;
    return true;
  }
};

}  // namespace

RegularSequenceReport check_difference_injectivity(const MonomialRing& ring,
                                                   std::size_t u_col,
                                                   std::size_t v_col,
                                                   int d_max) {
  RegularSequenceReport report;
  int shift = ring.table.even_vars.at(u_col).degree;
  if (ring.table.even_vars.at(v_col).degree != shift)
    throw std::invalid_argument("difference of variables of unequal degree");
  for (int d = 0; d <= d_max; ++d) {
    auto source = standard_monomials(ring, d);
    if (source.empty()) {
      report.vacuous.push_back({0, d});
      continue;
    }
    auto target = standard_monomials(ring, d + shift);
    std::map<Monomial, int, MonomialKeyLess> index;
    for (std::size_t t = 0; t < target.size(); ++t) index[target[t]] = (int)t;
    const int ground = static_cast<int>(target.size());
    UnionFind uf(target.size() + 1);
    long long kernel_rank = 0;
    for (const auto& mon : source) {
      auto image_node = [&](std::size_t col) {
        Monomial im = mon;
        im.even_exponents[col] += 1;
        auto it = index.find(im);
        return it == index.end() ? ground : it->second;
      };
      int a = image_node(u_col);
      int b = image_node(v_col);
      // Columns u*m - v*m form a signed incidence matrix; a repeated edge or
      // a loop is exactly a rank drop, hence a kernel element over Z.
      if (a == b || !uf.unite(a, b)) ++kernel_rank;
    }
    if (kernel_rank > 0) report.kernels.push_back({0, d, kernel_rank});
  }
  report.pass = report.kernels.empty();
  return report;
}

RegularSequenceReport check_regular_sequence(const PolarizationData& data,
                                             int d_max) {
  RegularSequenceReport report;
  for (std::size_t k = 0; k < data.omega_bar.size(); ++k) {
    IdentifiedRing ident = identify_prefix(data, k);
    auto [i, j] = data.omega_bar[k];
    std::size_t u_col = ident.column_map[data.polar_index(i, j)];
    std::size_t v_col = ident.column_map[data.polar_index(i, 1)];
    RegularSequenceReport step =
        check_difference_injectivity(ident.ring, u_col, v_col, d_max);
    for (auto w : step.kernels) {
      w.step = k;
      report.kernels.push_back(w);
    }
    for (auto v : step.vacuous) {
      v.step = k;
      report.vacuous.push_back(v);
    }
  }
  report.pass = report.kernels.empty();
  return report;
}

RankIdentityReport check_rank_identity(const PolarizationData& data, int d_max) {
  RankIdentityReport report;
  std::vector<Monomial> gens;
  for (const auto& g : data.polarized.ideal.generators)
    gens.push_back(depolarize(data, g));
  MonomialRing identified(data.source.table, std::move(gens));
  report.source_ranks = hilbert_function(data.source, d_max);
  report.identified_ranks = hilbert_function(identified, d_max);
  for (int d = 0; d <= d_max; ++d) {
    if (report.source_ranks.rank(d) != report.identified_ranks.rank(d)) {
      report.pass = false;
      report.first_mismatch = d;
      break;
    }
  }
  return report;
}

}  // namespace gmi
