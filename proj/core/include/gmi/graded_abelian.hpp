#ifndef GMI_GRADED_ABELIAN_HPP
#define GMI_GRADED_ABELIAN_HPP

#include <gmpxx.h>

#include <map>
#include <vector>

namespace gmi {

/// Dense matrix over Z with exact arithmetic.  Intermediate entries of the
/// Smith reduction overflow fixed width even on small inputs.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool is_zero() const;
  IntegerMatrix operator*(const IntegerMatrix& other) const;
  bool operator==(const IntegerMatrix&) const = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row a += c * row b
  void add_row(std::size_t a, std::size_t b, const mpz_class& c);
  void add_col(std::size_t a, std::size_t b, const mpz_class& c);
  void negate_row(std::size_t a);
  void negate_col(std::size_t a);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

struct SmithNormalForm {
  IntegerMatrix u;  // unimodular, rows x rows
  IntegerMatrix d;  // diagonal, non-negative, divisibility chain
  IntegerMatrix v;  // unimodular, cols x cols
  std::size_t rank = 0;

  std::vector<mpz_class> diagonal() const;
};

/// U * M * V = D with smallest-pivot selection.
SmithNormalForm smith_normal_form(const IntegerMatrix& m);

/// Bareiss fraction-free determinant (square matrices).
mpz_class determinant(const IntegerMatrix& m);

std::size_t rank(const IntegerMatrix& m);

/// Z-basis of ker(M) as matrix columns.  The kernel lattice of an integer
/// matrix is saturated, so the zero-diagonal columns of V form a basis.
IntegerMatrix kernel_basis(const IntegerMatrix& m);

/// Solves K * X = B over Z.  Throws std::domain_error when no integral
/// solution exists.
IntegerMatrix solve(const IntegerMatrix& k, const IntegerMatrix& b);

/// Canonical form of a finitely generated abelian group: free rank plus
/// torsion coefficients d_1 | d_2 | ... with every d_i >= 2.
struct FgAbelianGroup {
  long long free_rank = 0;
  std::vector<mpz_class> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_free() const { return torsion.empty(); }

  static FgAbelianGroup free(long long rank) { return {rank, {}}; }
  /// Canonicalizes an arbitrary list of cyclic orders (0 meaning Z).
  static FgAbelianGroup from_cyclic_orders(long long extra_free_rank,
                                           const std::vector<mpz_class>& orders);

  bool operator==(const FgAbelianGroup&) const = default;
};

/// Z^rows / column-span(M).
FgAbelianGroup cokernel(const IntegerMatrix& m);

/// ker(d_out) / im(d_in); requires d_out * d_in = 0.
FgAbelianGroup homology_at(const IntegerMatrix& d_in, const IntegerMatrix& d_out);

struct GradedGroup {
  std::map<int, FgAbelianGroup> by_degree;

  FgAbelianGroup at(int d) const {
    auto it = by_degree.find(d);
    return it == by_degree.end() ? FgAbelianGroup{} : it->second;
  }
  void set(int d, FgAbelianGroup g);

  bool operator==(const GradedGroup&) const = default;
};

/// Degreewise tensor product with Z/a (x) Z/b = Z/gcd(a,b).
GradedGroup tensor_graded(const GradedGroup& g1, const GradedGroup& g2);

GradedGroup torsion_free_quotient(const GradedGroup& g);

std::string to_string(const FgAbelianGroup& g);

}  // namespace gmi

#endif
