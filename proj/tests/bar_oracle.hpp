// Independent transcription of the external bar differential, kept separate
// from the library implementation so the two can be compared symbolically.
#ifndef GMI_TESTS_BAR_ORACLE_HPP
#define GMI_TESTS_BAR_ORACLE_HPP

#include "gmi/homology.hpp"

namespace gmi::oracles {

/// d_E(x[a_1|...|a_p]y) = (-1)^{|x|} (x a_1)[a_2|...|a_p] y
///   + sum_{k=1}^{p-1} (-1)^{eps_k} x[a_1|...|a_k a_{k+1}|...|a_p] y
///   + (-1)^{eps_p} x[a_1|...|a_{p-1}] (a_p y),
/// eps_k = k + |x| + sum_{j<=k} |a_j|; evaluated with y in Z, so the last
/// term factors through the augmentation and vanishes (|a_p| > 0).
inline BarElement bar_differential_oracle(const ModuleAction& action,
                                          const BarWord& word) {
  VariableTable w_table;
  for (const auto& g : action.generators)
    w_table.even_vars.push_back({g.name, g.degree});
  BarElement out;
  int p = static_cast<int>(word.args.size());
  for (int term = 0; term < p; ++term) {
    int eps = term + degree(word.x, action.module.table);
    for (int j = 0; j < term; ++j) eps += degree(word.args[j], w_table);
    int sign = eps % 2 == 0 ? 1 : -1;
    if (term == 0) {
      Polynomial act =
          poly_from(Monomial::unit(action.module.table.even_count()));
      for (std::size_t s = 0; s < action.generators.size(); ++s)
        for (int e = 0; e < word.args[0].even_exponents[s]; ++e)
          act = poly_reduce(poly_mul(act, action.generators[s].image),
                            action.module.ideal);
      Polynomial xa =
          poly_reduce(poly_mul(poly_from(word.x), act), action.module.ideal);
      for (const auto& [m, c] : xa) {
        BarWord next{m, {word.args.begin() + 1, word.args.end()}};
        out[next] += sign * c;
        if (out[next] == 0) out.erase(next);
      }
    } else {
      // Merge a_k and a_{k+1} for k = term (1-based).
      auto prod = multiply(word.args[term - 1], word.args[term]);
      BarWord next{word.x, {}};
      next.args.assign(word.args.begin(), word.args.begin() + (term - 1));
      next.args.push_back(prod->second);
      next.args.insert(next.args.end(), word.args.begin() + term + 1,
                       word.args.end());
      out[next] += sign * prod->first;
      if (out[next] == 0) out.erase(next);
    }
  }
  return out;
}

inline BarElement apply_bar_differential(const ModuleAction& action,
                                         const BarElement& element) {
  BarElement out;
  for (const auto& [word, c] : element)
    for (const auto& [w2, c2] : bar_differential(action, word)) {
      out[w2] += c * c2;
      if (out[w2] == 0) out.erase(w2);
    }
  return out;
}

}  // namespace gmi::oracles

#endif
