#include "gmi/homology.hpp"

#include <algorithm>
#include <bit>

#include "gmi/stanley_reisner.hpp"

namespace gmi {

ModuleAction build_action(const PolarizationData& data) {
  ModuleAction action;
  action.module = data.polarized;
  for (std::size_t k = 0; k < data.omega_bar.size(); ++k) {
    auto [i, j] = data.omega_bar[k];
    ModuleAction::Generator gen;
    gen.name = "w_" + std::to_string(i) + "_" + std::to_string(j);
    gen.degree = data.w_degree(k);
    std::size_t m = data.polarized.table.even_count();
    Polynomial image =
        poly_add(poly_from(Monomial::even_variable(data.polar_index(i, j), m)),
                 poly_scale(poly_from(Monomial::even_variable(
                                data.polar_index(i, 1), m)),
                            -1));
    gen.image = poly_reduce(image, data.polarized.ideal);
    action.generators.push_back(std::move(gen));
  }
  return action;
}

IntegerMatrix multiplication_matrix(const MonomialRing& ring, const Polynomial& p,
                                    int d, int shift) {
  auto source = standard_monomials(ring, d);
  auto target = standard_monomials(ring, d + shift);
  std::map<Monomial, std::size_t, MonomialKeyLess> index;
  for (std::size_t t = 0; t < target.size(); ++t) index[target[t]] = t;
  IntegerMatrix m(target.size(), source.size());
  for (std::size_t c = 0; c < source.size(); ++c) {
    Polynomial image = poly_reduce(poly_mul(p, poly_from(source[c])), ring.ideal);
    for (const auto& [mon, coeff] : image) {
      auto it = index.find(mon);
      if (it == index.end())
        throw std::logic_error("multiplication image escapes target basis");
      m.at(it->second, c) = static_cast<long>(coeff);
    }
  }
  return m;
}

bool actions_commute(const ModuleAction& action, int d_max) {
  for (std::size_t s = 0; s < action.generators.size(); ++s)
    for (std::size_t t = s + 1; t < action.generators.size(); ++t) {
      int es = action.generators[s].degree;
      int et = action.generators[t].degree;
      for (int d = 0; d + es + et <= d_max; ++d) {
        IntegerMatrix st =
            multiplication_matrix(action.module, action.generators[t].image,
                                  d + es, et) *
            multiplication_matrix(action.module, action.generators[s].image, d, es);
        IntegerMatrix ts =
            multiplication_matrix(action.module, action.generators[s].image,
                                  d + et, es) *
            multiplication_matrix(action.module, action.generators[t].image, d, et);
        if (!(st == ts)) return false;
      }
    }
  return true;
}

namespace {

struct KoszulBasis {
  // (subset bitmask over W-generators, module monomial), deterministic order.
  std::vector<std::pair<unsigned, Monomial>> elems;
  std::map<std::pair<unsigned, Monomial>, std::size_t,
           bool (*)(const std::pair<unsigned, Monomial>&,
                    const std::pair<unsigned, Monomial>&)>
      index;

  KoszulBasis() : index(&less) {}

  static bool less(const std::pair<unsigned, Monomial>& a,
                   const std::pair<unsigned, Monomial>& b) {
    if (a.first != b.first) return a.first < b.first;
    return MonomialKeyLess{}(a.second, b.second);
  }

  void push(unsigned mask, const Monomial& m) {
    index[{mask, m}] = elems.size();
    elems.emplace_back(mask, m);
  }
};

int subset_degree(const ModuleAction& action, unsigned mask) {
  int d = 0;
  for (std::size_t s = 0; s < action.generators.size(); ++s)
    if (mask & (1u << s)) d += action.generators[s].degree;
  return d;
}

KoszulBasis koszul_basis(const ModuleAction& action,
                         std::map<int, std::vector<Monomial>>& monomial_cache,
                         int p, int q) {
  KoszulBasis basis;
  std::size_t n = action.generators.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != p) continue;
    int rest = q - subset_degree(action, mask);
    if (rest < 0) continue;
    auto [it, inserted] = monomial_cache.try_emplace(rest);
    if (inserted) it->second = standard_monomials(action.module, rest);
    for (const auto& m : it->second) basis.push(mask, m);
  }
  return basis;
}

IntegerMatrix koszul_differential(const ModuleAction& action,
                                  const KoszulBasis& from,
                                  const KoszulBasis& to) {
  IntegerMatrix d(to.elems.size(), from.elems.size());
  for (std::size_t c = 0; c < from.elems.size(); ++c) {
    const auto& [mask, mon] = from.elems[c];
    int pos = 0;
    for (std::size_t s = 0; s < action.generators.size(); ++s) {
      if (!(mask & (1u << s))) continue;
      int sign = pos % 2 == 0 ? 1 : -1;
      ++pos;
      Polynomial image = poly_reduce(
          poly_mul(action.generators[s].image, poly_from(mon)),
          action.module.ideal);
      for (const auto& [m2, coeff] : image) {
        auto it = to.index.find({mask & ~(1u << s), m2});
        if (it == to.index.end())
          throw std::logic_error("Koszul image escapes target basis");
        d.at(it->second, c) += static_cast<long>(sign * coeff);
      }
    }
  }
  return d;
}

}  // namespace

TorTable koszul_tor(const ModuleAction& action, int d_max) {
  TorTable table;
  int n = static_cast<int>(action.generators.size());
  table.p_max = n;
  table.d_max = d_max;
  table.valid_p_max = n;  // the Koszul complex is finite, nothing truncated
  std::map<int, std::vector<Monomial>> cache;
  for (int q = 0; q <= d_max; ++q) {
    std::vector<KoszulBasis> bases;
    for (int p = 0; p <= n; ++p)
      bases.push_back(koszul_basis(action, cache, p, q));
    for (int p = 0; p <= n; ++p) {
      IntegerMatrix d_in =
          p == n ? IntegerMatrix(bases[p].elems.size(), 0)
                 : koszul_differential(action, bases[p + 1], bases[p]);
      IntegerMatrix d_out =
          p == 0 ? IntegerMatrix(0, bases[p].elems.size())
                 : koszul_differential(action, bases[p], bases[p - 1]);
      FgAbelianGroup h = homology_at(d_in, d_out);
      if (!h.is_trivial()) table.entries[{p, q}] = std::move(h);
    }
  }
  return table;
}

long long koszul_term_rank(const ModuleAction& action, int p, int q) {
  std::map<int, std::vector<Monomial>> cache;
  return static_cast<long long>(koszul_basis(action, cache, p, q).elems.size());
}

TorConcentrationReport check_tor_concentration(const TorTable& table,
                                               const HilbertFunction& expected) {
  TorConcentrationReport report;
  for (const auto& [pq, group] : table.entries) {
    auto [p, q] = pq;
    if (p >= 1) {
      report.pass = false;
      report.witnesses.push_back("nonzero Tor at p=" + std::to_string(p) +
                                 ", q=" + std::to_string(q) + ": " +
                                 to_string(group));
    } else if (!group.is_free()) {
      report.pass = false;
      report.witnesses.push_back("torsion in Tor^0 at q=" + std::to_string(q) +
                                 ": " + to_string(group));
    }
  }
  for (int q = 0; q <= std::min(table.d_max, expected.d_max()); ++q) {
    long long got = table.at(0, q).free_rank;
    if (got != expected.rank(q)) {
      report.pass = false;
      report.witnesses.push_back(
          "Tor^0 rank " + std::to_string(got) + " at q=" + std::to_string(q) +
          ", expected " + std::to_string(expected.rank(q)));
    }
  }
  return report;
}

bool BarWord::operator<(const BarWord& o) const {
  MonomialKeyLess less;
  if (!(x == o.x)) return less(x, o.x);
  if (args.size() != o.args.size()) return args.size() < o.args.size();
  for (std::size_t i = 0; i < args.size(); ++i)
    if (!(args[i] == o.args[i])) return less(args[i], o.args[i]);
  return false;
}

namespace {

MonomialRing w_ring(const ModuleAction& action) {
  VariableTable table;
  for (const auto& g : action.generators)
    table.even_vars.push_back({g.name, g.degree});
  return MonomialRing(std::move(table), {});
}

/// delta(a) acting on the module: the product of generator images.
Polynomial action_of(const ModuleAction& action, const Monomial& w_monomial) {
  Polynomial p = poly_from(Monomial::unit(action.module.table.even_count()));
  for (std::size_t s = 0; s < action.generators.size(); ++s)
    for (int e = 0; e < w_monomial.even_exponents[s]; ++e)
      p = poly_reduce(poly_mul(p, action.generators[s].image),
                      action.module.ideal);
  return p;
}

}  // namespace

int bar_word_degree(const ModuleAction& action, const BarWord& word) {
  MonomialRing w = w_ring(action);
  int d = degree(word.x, action.module.table);
  for (const auto& a : word.args) d += degree(a, w.table);
  return d;
}

BarElement bar_differential(const ModuleAction& action, const BarWord& word) {
  BarElement out;
  std::size_t p = word.args.size();
  if (p == 0) return out;
  MonomialRing w = w_ring(action);
  int deg_x = degree(word.x, action.module.table);

  auto add = [&out](BarWord key, long long coeff) {
    if (coeff == 0) return;
    long long& v = out[key];
    v += coeff;
    if (v == 0) out.erase(key);
  };

  // (-1)^{|x|} (x a_1)[a_2|...|a_p]
  int sign = deg_x % 2 == 0 ? 1 : -1;
  Polynomial xa = poly_reduce(
      poly_mul(poly_from(word.x), action_of(action, word.args[0])),
      action.module.ideal);
  for (const auto& [m, c] : xa) {
    BarWord next{m, {word.args.begin() + 1, word.args.end()}};
    add(next, sign * c);
  }

  // sum_j (-1)^{eps_j} x[a_1|...|a_j a_{j+1}|...|a_p]
  int eps = deg_x;  // eps_j = j + |x| + sum_{l<=j} |a_l|, built incrementally
  for (std::size_t j = 1; j < p; ++j) {
    eps += 1 + degree(word.args[j - 1], w.table);
    auto prod = multiply(word.args[j - 1], word.args[j]);
    BarWord next{word.x, {}};
    next.args.assign(word.args.begin(), word.args.begin() + (j - 1));
    next.args.push_back(prod->second);
    next.args.insert(next.args.end(), word.args.begin() + j + 1,
                     word.args.end());
    add(next, (eps % 2 == 0 ? 1 : -1) * prod->first);
  }

  // The final term (-1)^{eps_{p-1}} x[a_1|...|a_{p-1}](a_p y) factors
  // through the augmentation W -> Z and vanishes: |a_p| > 0.
  return out;
}

std::vector<BarWord> bar_basis(const ModuleAction& action, int p, int q) {
  MonomialRing w = w_ring(action);
  // Monomials of the augmentation ideal of W by degree.
  std::map<int, std::vector<Monomial>> wbar;
  for (int e = 1; e <= q; ++e) {
    auto ms = standard_monomials(w, e);
    if (!ms.empty()) wbar[e] = std::move(ms);
  }
  std::vector<BarWord> out;
  std::vector<Monomial> args;
  auto rec = [&](auto&& self, int slot, int rest) -> void {
    if (slot == p) {
      for (const auto& x : standard_monomials(action.module, rest))
        out.push_back({x, args});
      return;
    }
    for (const auto& [e, ms] : wbar) {
      if (e > rest) break;
      for (const auto& a : ms) {
        args.push_back(a);
        self(self, slot + 1, rest - e);
        args.pop_back();
      }
    }
  };
  rec(rec, 0, q);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

IntegerMatrix bar_matrix(const ModuleAction& action,
                         const std::vector<BarWord>& from,
                         const std::vector<BarWord>& to) {
  std::map<BarWord, std::size_t> index;
  for (std::size_t t = 0; t < to.size(); ++t) index[to[t]] = t;
  IntegerMatrix d(to.size(), from.size());
  for (std::size_t c = 0; c < from.size(); ++c) {
    for (const auto& [word, coeff] : bar_differential(action, from[c])) {
      auto it = index.find(word);
      if (it == index.end())
        throw std::logic_error("bar image escapes target basis");
      d.at(it->second, c) += static_cast<long>(coeff);
    }
  }
  return d;
}

}  // namespace

TorTable bar_tor(const ModuleAction& action, int p_max, int d_max) {
  TorTable table;
  table.p_max = p_max;
  table.d_max = d_max;
  table.valid_p_max = p_max - 1;
  for (int q = 0; q <= d_max; ++q) {
    std::vector<std::vector<BarWord>> bases;
    for (int p = 0; p <= p_max; ++p) bases.push_back(bar_basis(action, p, q));
    for (int p = 0; p < p_max; ++p) {
      IntegerMatrix d_in = bar_matrix(action, bases[p + 1], bases[p]);
      IntegerMatrix d_out =
          p == 0 ? IntegerMatrix(0, bases[p].size())
                 : bar_matrix(action, bases[p], bases[p - 1]);
      FgAbelianGroup h = homology_at(d_in, d_out);
      if (!h.is_trivial()) table.entries[{p, q}] = std::move(h);
    }
  }
  return table;
}

std::size_t ZModel::q_prime_col(const PolarizationData& data,
                                std::size_t omega_pos, int k) const {
  std::size_t col = 0;
  for (std::size_t p = 0; p < omega_pos; ++p)
    col += static_cast<std::size_t>(c[data.omega.pairs[p].first - 1]);
  return col + static_cast<std::size_t>(k - 1);
}

std::size_t ZModel::q_direct_col(int i, int k) const {
  std::size_t col = 0;
  for (int s = 1; s < i; ++s) col += static_cast<std::size_t>(c[s - 1]);
  return col + static_cast<std::size_t>(k - 1);
}

ZModel build_z_model(const PolarizationData& data) {
  ZModel model;
  for (const auto& v : data.source.table.even_vars)
    model.c.push_back(v.degree / 2);

  // Q' = Z[z'_{ijk}] (x) Lambda, one degree-2 block of size c_i per (i,j).
  VariableTable qp_table;
  std::vector<int> block_sizes;
  for (auto [i, j] : data.omega.pairs) {
    block_sizes.push_back(model.c[i - 1]);
    for (int k = 1; k <= model.c[i - 1]; ++k)
      qp_table.even_vars.push_back({"z'_" + std::to_string(i) + "_" +
                                        std::to_string(j) + "_" +
                                        std::to_string(k),
                                    2});
  }
  qp_table.odd_vars = data.source.table.odd_vars;

  VertexLabeling labeling = VertexLabeling::for_table(data.polarized.table);
  SimplicialComplex k_complex =
      complex_from_ideal(data.polarized.ideal, labeling);
  MonomialIdeal l_prime =
      generalized_sr_ideal(k_complex, labeling, block_sizes, qp_table);
  model.q_prime = MonomialRing(qp_table, l_prime.generators);

  // Q = Z[z_{ik}] (x) Lambda.
  VariableTable q_table;
  for (std::size_t i = 0; i < data.source.table.even_count(); ++i)
    for (int k = 1; k <= model.c[i]; ++k)
      q_table.even_vars.push_back(
          {"z_" + std::to_string(i + 1) + "_" + std::to_string(k), 2});
  q_table.odd_vars = data.source.table.odd_vars;

  // L: one generator per source generator and per choice of one z-factor
  // for every copy of every x_i it contains.
  std::vector<Monomial> l_gens;
  for (const auto& g : data.source.ideal.generators) {
    std::vector<int> slots;  // variable index i, one slot per power
    for (std::size_t i = 0; i < g.even_exponents.size(); ++i)
      for (int t = 0; t < g.even_exponents[i]; ++t)
        slots.push_back(static_cast<int>(i) + 1);
    std::vector<int> choice(slots.size(), 1);
    while (true) {
      Monomial m = Monomial::unit(q_table.even_count());
      for (std::size_t t = 0; t < slots.size(); ++t)
        m.even_exponents[model.q_direct_col(slots[t], choice[t])] += 1;
      m.odd_support = g.odd_support;
      l_gens.push_back(std::move(m));
      std::size_t t = 0;
      for (; t < slots.size(); ++t) {
        if (++choice[t] <= model.c[slots[t] - 1]) break;
        choice[t] = 1;
      }
      if (t == slots.size()) break;
    }
  }
  model.q_direct = MonomialRing(q_table, std::move(l_gens));
  return model;
}

ZModelReport z_model_compare(const PolarizationData& data, const ZModel& model,
                             int d_max) {
  ZModelReport report;

  // Generator map x'_{ij} -> prod_k z'_{ijk} must send I' into L'.
  for (const auto& g : data.polarized.ideal.generators) {
    Monomial image = Monomial::unit(model.q_prime.table.even_count());
    for (std::size_t p = 0; p < data.omega.pairs.size(); ++p) {
      if (g.even_exponents[p] == 0) continue;
      int ci = model.c[data.omega.pairs[p].first - 1];
      for (int k = 1; k <= ci; ++k)
        image.even_exponents[model.q_prime_col(data, p, k)] = 1;
    }
    image.odd_support = g.odd_support;
    if (!contains(model.q_prime.ideal, image)) {
      report.pass = false;
      report.bad_generator_images.push_back(
          to_string(image, model.q_prime.table));
    }
  }

  // Identify z'_{ijk} with z_{ik} and compare ranks with the direct Q/L.
  std::vector<Monomial> subst_gens;
  for (const auto& g : model.q_prime.ideal.generators) {
    Monomial m = Monomial::unit(model.q_direct.table.even_count());
    for (std::size_t p = 0; p < data.omega.pairs.size(); ++p) {
      int i = data.omega.pairs[p].first;
      for (int k = 1; k <= model.c[i - 1]; ++k)
        m.even_exponents[model.q_direct_col(i, k)] +=
            g.even_exponents[model.q_prime_col(data, p, k)];
    }
    m.odd_support = g.odd_support;
    subst_gens.push_back(std::move(m));
  }
  MonomialRing identified(model.q_direct.table, std::move(subst_gens));
  HilbertFunction lhs = hilbert_function(identified, d_max);
  HilbertFunction rhs = hilbert_function(model.q_direct, d_max);
  for (int d = 0; d <= d_max; ++d) {
    if (lhs.rank(d) != rhs.rank(d)) {
      report.pass = false;
      report.first_rank_mismatch = d;
      break;
    }
  }
  return report;
}

}  // namespace gmi
