#ifndef GMI_HOMOLOGY_HPP
#define GMI_HOMOLOGY_HPP

#include "gmi/graded_abelian.hpp"
#include "gmi/monomial.hpp"
#include "gmi/polarization.hpp"

namespace gmi {

/// A graded module over a polynomial ring W, presented as a monomial
/// quotient ring together with the acting polynomial of every W-generator.
/// For a polarization this is A' with w_{ij} acting as x'_{ij} - x'_{i1}.
struct ModuleAction {
  struct Generator {
    std::string name;
    int degree = 0;
    Polynomial image;  // in the module ring, reduced mod its ideal
  };
  MonomialRing module;
  std::vector<Generator> generators;
};

ModuleAction build_action(const PolarizationData& data);

/// Matrix of multiplication by a homogeneous polynomial of degree `shift`
/// from the degree-d standard basis to the degree-(d+shift) basis.
IntegerMatrix multiplication_matrix(const MonomialRing& ring, const Polynomial& p,
                                    int d, int shift);

/// Pairwise commutation of the action matrices up to total degree d_max.
bool actions_commute(const ModuleAction& action, int d_max);

struct TorTable {
  std::map<std::pair<int, int>, FgAbelianGroup> entries;  // (p, q)
  int p_max = 0;
  int d_max = 0;
  /// Entries with p > valid_p_max are truncation-contaminated.
  int valid_p_max = 0;

  FgAbelianGroup at(int p, int q) const {
    auto it = entries.find({p, q});
    return it == entries.end() ? FgAbelianGroup{} : it->second;
  }
  bool is_valid(int p, int q) const {
    return p >= 0 && p <= valid_p_max && q >= 0 && q <= d_max;
  }
};

/// Tor_W(module, Z) from the Koszul complex module (x) Lambda^*(e_s),
/// d(e_S (x) m) = sum_s (-1)^{pos(s,S)} e_{S\s} (x) (w_s . m).
TorTable koszul_tor(const ModuleAction& action, int d_max);

/// Koszul chain dimension at (p, q); Euler-characteristic cross checks.
long long koszul_term_rank(const ModuleAction& action, int p, int q);

struct TorConcentrationReport {
  bool pass = true;
  std::vector<std::string> witnesses;
};

/// Freeness verdict: Tor^{-p,q} = 0 for p >= 1 and Tor^{0,q} torsion-free of
/// the expected rank.
TorConcentrationReport check_tor_concentration(const TorTable& table,
                                               const HilbertFunction& expected);

/// Truncated bar complex B(module, W, Z): basis words x[a_1|...|a_p] with x
/// a standard monomial of the module and a_i monomials in the augmentation
/// ideal of W.
struct BarWord {
  Monomial x;                  // module monomial
  std::vector<Monomial> args;  // monomials over the W table, all non-unit

  bool operator==(const BarWord&) const = default;
  bool operator<(const BarWord& o) const;
};

using BarElement = std::map<BarWord, long long>;

/// Total differential d_I + d_E.  The inputs here have trivial internal
/// differentials, so d_I = 0 and only the external part with signs
/// eps_k = k + |x| + sum_{j<=k} |a_j| contributes.  The right module is Z,
/// so the final term factors through the augmentation and vanishes.
BarElement bar_differential(const ModuleAction& action, const BarWord& word);

int bar_word_degree(const ModuleAction& action, const BarWord& word);

/// All bar words with p arguments and total degree q.
std::vector<BarWord> bar_basis(const ModuleAction& action, int p, int q);

/// Homology of the truncated bar complex.  Entries at p = p_max lack the
/// incoming differential and are marked invalid (valid_p_max = p_max - 1);
/// the external differential preserves internal degree, so every q <= d_max
/// is complete.
TorTable bar_tor(const ModuleAction& action, int p_max, int d_max);

/// Comparison model over degree-2 generators: Q'/L' from the generalized
/// Stanley-Reisner ideal of K with c_i = |x_i|/2 generators per vertex, and
/// the direct presentation Q/L.
struct ZModel {
  MonomialRing q_prime;   // Q'/L'
  MonomialRing q_direct;  // Q/L
  std::vector<int> c;     // |x_i| / 2 per source even variable

  std::size_t q_prime_col(const PolarizationData& data, std::size_t omega_pos,
                          int k) const;
  std::size_t q_direct_col(int i, int k) const;
};

ZModel build_z_model(const PolarizationData& data);

struct ZModelReport {
  bool pass = true;
  int first_rank_mismatch = -1;
  std::vector<std::string> bad_generator_images;
};

/// Ranks of (Q'/L')/(z'_{ijk} - z'_{i1k}-style identifications) versus the
/// direct Q/L presentation, plus the check that the generator map
/// x'_{ij} -> prod_k z'_{ijk} sends I'-generators into L'.
ZModelReport z_model_compare(const PolarizationData& data, const ZModel& model,
                             int d_max);

}  // namespace gmi

#endif
