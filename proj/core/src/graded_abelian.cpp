#include "gmi/graded_abelian.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gmi {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const mpz_class& v) { return v == 0; });
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("dimension mismatch");
  IntegerMatrix r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpz_class& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        r.at(i, j) += a * other.at(k, j);
    }
  return r;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntegerMatrix::add_row(std::size_t a, std::size_t b, const mpz_class& c) {
  for (std::size_t j = 0; j < cols_; ++j) at(a, j) += c * at(b, j);
}

void IntegerMatrix::add_col(std::size_t a, std::size_t b, const mpz_class& c) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, a) += c * at(i, b);
}

void IntegerMatrix::negate_row(std::size_t a) {
  for (std::size_t j = 0; j < cols_; ++j) at(a, j) = -at(a, j);
}

void IntegerMatrix::negate_col(std::size_t a) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, a) = -at(i, a);
}

std::vector<mpz_class> SmithNormalForm::diagonal() const {
  std::vector<mpz_class> diag;
  std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < n; ++i) diag.push_back(d.at(i, i));
  return diag;
}

namespace {

// Smallest nonzero |entry| in the submatrix starting at (t, t).
bool find_pivot(const IntegerMatrix& r, std::size_t t, std::size_t& pi,
                std::size_t& pj) {
  bool found = false;
  mpz_class best;
  for (std::size_t i = t; i < r.rows(); ++i)
    for (std::size_t j = t; j < r.cols(); ++j) {
      const mpz_class& v = r.at(i, j);
      if (v == 0) continue;
      mpz_class a = abs(v);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

void diagonalize(IntegerMatrix& r, IntegerMatrix& u, IntegerMatrix& v) {
  std::size_t n = std::min(r.rows(), r.cols());
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t pi, pj;
    if (!find_pivot(r, t, pi, pj)) break;
    while (true) {
      find_pivot(r, t, pi, pj);
      r.swap_rows(t, pi);
      u.swap_rows(t, pi);
      r.swap_cols(t, pj);
      v.swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < r.rows(); ++i) {
        if (r.at(i, t) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), r.at(i, t).get_mpz_t(), r.at(t, t).get_mpz_t());
        r.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (r.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < r.cols(); ++j) {
        if (r.at(t, j) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), r.at(t, j).get_mpz_t(), r.at(t, t).get_mpz_t());
        r.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (r.at(t, j) != 0) clean = false;
      }
      if (clean) {
        bool zeroed = true;
        for (std::size_t i = t + 1; i < r.rows() && zeroed; ++i)
          if (r.at(i, t) != 0) zeroed = false;
        for (std::size_t j = t + 1; j < r.cols() && zeroed; ++j)
          if (r.at(t, j) != 0) zeroed = false;
        if (zeroed) break;
      }
    }
  }
}

}  // namespace

SmithNormalForm smith_normal_form(const IntegerMatrix& m) {
  SmithNormalForm s;
  IntegerMatrix r = m;
  s.u = IntegerMatrix::identity(m.rows());
  s.v = IntegerMatrix::identity(m.cols());
  diagonalize(r, s.u, s.v);

  std::size_t n = std::min(r.rows(), r.cols());
  // Enforce the divisibility chain: folding column t+1 into column t puts
  // both entries in one 2x2 block, and re-diagonalizing replaces the pair
  // by (gcd, lcm).
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t t = 0; t + 1 < n; ++t) {
      const mpz_class& a = r.at(t, t);
      const mpz_class& b = r.at(t + 1, t + 1);
      if (a != 0 && b % a != 0) {
        r.add_col(t, t + 1, 1);
        s.v.add_col(t, t + 1, 1);
        diagonalize(r, s.u, s.v);
        again = true;
      }
    }
  }
  for (std::size_t t = 0; t < n; ++t) {
    if (r.at(t, t) < 0) {
      r.negate_row(t);
      s.u.negate_row(t);
    }
    if (r.at(t, t) != 0) s.rank = t + 1;
  }
  s.d = std::move(r);
  return s;
}

mpz_class determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("not square");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        a.at(i, j) = q;
      }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

std::size_t rank(const IntegerMatrix& m) { return smith_normal_form(m).rank; }

IntegerMatrix kernel_basis(const IntegerMatrix& m) {
  if (m.rows() == 0) return IntegerMatrix::identity(m.cols());
  SmithNormalForm s = smith_normal_form(m);
  std::size_t k = m.cols() - s.rank;
  IntegerMatrix basis(m.cols(), k);
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = 0; j < k; ++j)
      basis.at(i, j) = s.v.at(i, s.rank + j);
  return basis;
}

IntegerMatrix solve(const IntegerMatrix& k, const IntegerMatrix& b) {
  if (k.rows() != b.rows()) throw std::invalid_argument("dimension mismatch");
  SmithNormalForm s = smith_normal_form(k);
  IntegerMatrix ub = s.u * b;
  IntegerMatrix y(k.cols(), b.cols());
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (i < s.rank) {
        const mpz_class& d = s.d.at(i, i);
        if (ub.at(i, j) % d != 0)
          throw std::domain_error("no integral solution");
        y.at(i, j) = ub.at(i, j) / d;
      } else if (ub.at(i, j) != 0) {
        throw std::domain_error("no integral solution");
      }
    }
  return s.v * y;
}

FgAbelianGroup FgAbelianGroup::from_cyclic_orders(
    long long extra_free_rank, const std::vector<mpz_class>& orders) {
  FgAbelianGroup g;
  g.free_rank = extra_free_rank;
  std::vector<mpz_class> torsion;
  for (const mpz_class& c : orders) {
    mpz_class a = abs(c);
    if (a == 0)
      ++g.free_rank;
    else if (a > 1)
      torsion.push_back(a);
  }
  // Normalize to a divisibility chain by repeated (gcd, lcm) replacement.
  bool again = true;
  while (again) {
    again = false;
    std::sort(torsion.begin(), torsion.end());
    for (std::size_t i = 0; i + 1 < torsion.size(); ++i) {
      if (torsion[i + 1] % torsion[i] != 0) {
        mpz_class g1 = gcd(torsion[i], torsion[i + 1]);
        mpz_class l = torsion[i] / g1 * torsion[i + 1];
        torsion[i] = g1;
        torsion[i + 1] = l;
        again = true;
      }
    }
  }
  std::erase_if(torsion, [](const mpz_class& c) { return c == 1; });
  g.torsion = std::move(torsion);
  return g;
}

FgAbelianGroup cokernel(const IntegerMatrix& m) {
  SmithNormalForm s = smith_normal_form(m);
  FgAbelianGroup g;
  g.free_rank = static_cast<long long>(m.rows() - s.rank);
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.d.at(i, i) > 1) g.torsion.push_back(s.d.at(i, i));
  return g;
}

FgAbelianGroup homology_at(const IntegerMatrix& d_in, const IntegerMatrix& d_out) {
  if (d_in.cols() > 0 && d_out.rows() > 0) {
    if (!(d_out * d_in).is_zero())
      throw std::invalid_argument("d_out * d_in != 0: complex is broken");
  }
  std::size_t n = d_in.rows();
  if (d_out.cols() != n && d_out.cols() > 0)
    throw std::invalid_argument("chain dimension mismatch");
  IntegerMatrix k =
      d_out.rows() == 0 ? IntegerMatrix::identity(n) : kernel_basis(d_out);
  if (d_in.cols() == 0)
    return FgAbelianGroup::free(static_cast<long long>(k.cols()));
  IntegerMatrix x = solve(k, d_in);
  return cokernel(x);
}

void GradedGroup::set(int d, FgAbelianGroup g) {
  if (g.is_trivial())
    by_degree.erase(d);
  else
    by_degree[d] = std::move(g);
}

GradedGroup tensor_graded(const GradedGroup& g1, const GradedGroup& g2) {
  std::map<int, std::pair<long long, std::vector<mpz_class>>> acc;
  for (const auto& [d1, a] : g1.by_degree)
    for (const auto& [d2, b] : g2.by_degree) {
      auto& [free_rank, orders] = acc[d1 + d2];
      free_rank += a.free_rank * b.free_rank;
      for (const mpz_class& t : b.torsion)
        for (long long i = 0; i < a.free_rank; ++i) orders.push_back(t);
      for (const mpz_class& t : a.torsion)
        for (long long i = 0; i < b.free_rank; ++i) orders.push_back(t);
      for (const mpz_class& ta : a.torsion)
        for (const mpz_class& tb : b.torsion) orders.push_back(gcd(ta, tb));
    }
  GradedGroup out;
  for (const auto& [d, fr] : acc)
    out.set(d, FgAbelianGroup::from_cyclic_orders(fr.first, fr.second));
  return out;
}

GradedGroup torsion_free_quotient(const GradedGroup& g) {
  GradedGroup out;
  for (const auto& [d, grp] : g.by_degree)
    out.set(d, FgAbelianGroup::free(grp.free_rank));
  return out;
}

std::string to_string(const FgAbelianGroup& g) {
  std::ostringstream os;
  bool first = true;
  if (g.free_rank > 0) {
    os << "Z";
    if (g.free_rank > 1) os << "^" << g.free_rank;
    first = false;
  }
  for (const mpz_class& t : g.torsion) {
    if (!first) os << " + ";
    os << "Z/" << t.get_str();
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace gmi
