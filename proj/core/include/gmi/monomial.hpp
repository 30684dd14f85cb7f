#ifndef GMI_MONOMIAL_HPP
#define GMI_MONOMIAL_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gmi {

/// Variable table of a graded ring Z[x_1..x_m] (x) Lambda[y_1..y_n].
/// Even variables carry positive even degrees, odd variables positive odd
/// degrees; names are unique across both blocks.
struct VariableTable {
  struct Var {
    std::string name;
    int degree = 0;

    bool operator==(const Var&) const = default;
  };
  std::vector<Var> even_vars;
  std::vector<Var> odd_vars;

  std::size_t even_count() const { return even_vars.size(); }
  std::size_t odd_count() const { return odd_vars.size(); }

  /// Throws std::invalid_argument on parity violations or duplicate names.
  void validate() const;

  bool operator==(const VariableTable&) const = default;
};

/// A monomial x_1^{a_1}...x_m^{a_m} (x) y_{s_1}...y_{s_k}.  Even exponents are
/// stored densely; the odd part is a sorted list of 1-based indices (exterior
/// variables square to zero).
struct Monomial {
  std::vector<int> even_exponents;
  std::vector<int> odd_support;

  Monomial() = default;
  Monomial(std::vector<int> even, std::vector<int> odd);

  static Monomial unit(std::size_t even_count);
  static Monomial even_variable(std::size_t index, std::size_t even_count);

  bool is_unit() const;
  bool conforms(const VariableTable& table) const;

  bool operator==(const Monomial&) const = default;
};

int degree(const Monomial& mon, const VariableTable& table);
bool divides(const Monomial& a, const Monomial& b);

/// Graded-lex order: total degree first, then the even exponent vector
/// lexicographically, then the sorted odd support.  Deterministic output
/// order for generator lists and standard monomial bases.
bool monomial_less(const Monomial& a, const Monomial& b, const VariableTable& table);

/// Table-free key order for associative containers.
struct MonomialKeyLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

struct MonomialIdeal {
  std::vector<Monomial> generators;

  bool operator==(const MonomialIdeal&) const = default;
};

/// Unique minimal generating antichain under divisibility, sorted graded-lex.
MonomialIdeal minimalize(std::vector<Monomial> gens, const VariableTable& table);

bool contains(const MonomialIdeal& ideal, const Monomial& mon);
bool is_square_free(const MonomialIdeal& ideal);

/// A = P/I.  The constructor validates conformance, rejects degree-0
/// generators and minimalizes the ideal.
struct MonomialRing {
  VariableTable table;
  MonomialIdeal ideal;

  MonomialRing() = default;
  MonomialRing(VariableTable t, std::vector<Monomial> gens);

  bool operator==(const MonomialRing&) const = default;
};

struct HilbertFunction {
  std::vector<long long> ranks;  // ranks[d] for 0 <= d <= d_max

  int d_max() const { return static_cast<int>(ranks.size()) - 1; }
  long long rank(int d) const {
    return (d >= 0 && d <= d_max()) ? ranks[d] : 0;
  }

  bool operator==(const HilbertFunction&) const = default;
};

/// All monomials of degree exactly d outside the ideal, in graded-lex order.
std::vector<Monomial> standard_monomials(const MonomialRing& ring, int d);

HilbertFunction hilbert_function(const MonomialRing& ring, int d_max);

/// rank_d = sum_{i+j=d} rank_i(h1) * rank_j(h2), up to min(d_max, d_max).
HilbertFunction hilbert_convolution(const HilbertFunction& h1, const HilbertFunction& h2);

/// Signed product in P.  Returns nullopt when the odd supports intersect
/// (the product vanishes); the sign counts odd-variable transpositions.
std::optional<std::pair<int, Monomial>> multiply(const Monomial& a, const Monomial& b);

/// Integer combination of monomials; used for module actions and
/// differentials.  Kept reduced (no zero coefficients).
using Polynomial = std::map<Monomial, long long, MonomialKeyLess>;

Polynomial poly_from(const Monomial& m, long long c = 1);
Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_scale(const Polynomial& p, long long c);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
/// Drops every monomial that lies in the ideal.
Polynomial poly_reduce(const Polynomial& p, const MonomialIdeal& ideal);

std::string to_string(const Monomial& mon, const VariableTable& table);
std::string to_string(const MonomialRing& ring);

}  // namespace gmi

#endif
