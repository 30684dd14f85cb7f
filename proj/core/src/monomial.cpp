#include "gmi/monomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gmi {

void VariableTable::validate() const {
  std::set<std::string> names;
  for (const auto& v : even_vars) {
    if (v.degree < 2 || v.degree % 2 != 0)
      throw std::invalid_argument("even variable '" + v.name +
                                  "' must have positive even degree");
    if (!names.insert(v.name).second)
      throw std::invalid_argument("duplicate variable name '" + v.name + "'");
  }
  for (const auto& v : odd_vars) {
    if (v.degree < 1 || v.degree % 2 != 1)
      throw std::invalid_argument("odd variable '" + v.name +
                                  "' must have positive odd degree");
    if (!names.insert(v.name).second)
      throw std::invalid_argument("duplicate variable name '" + v.name + "'");
  }
}

Monomial::Monomial(std::vector<int> even, std::vector<int> odd)
    : even_exponents(std::move(even)), odd_support(std::move(odd)) {
  std::sort(odd_support.begin(), odd_support.end());
  for (int e : even_exponents)
    if (e < 0) throw std::invalid_argument("negative exponent");
  for (std::size_t i = 1; i < odd_support.size(); ++i)
    if (odd_support[i] == odd_support[i - 1])
      throw std::invalid_argument("repeated odd variable");
}

Monomial Monomial::unit(std::size_t even_count) {
  Monomial m;
  m.even_exponents.assign(even_count, 0);
  return m;
}

Monomial Monomial::even_variable(std::size_t index, std::size_t even_count) {
  Monomial m = unit(even_count);
  m.even_exponents.at(index) = 1;
  return m;
}

bool Monomial::is_unit() const {
  if (!odd_support.empty()) return false;
  return std::all_of(even_exponents.begin(), even_exponents.end(),
                     [](int e) { return e == 0; });
}

bool Monomial::conforms(const VariableTable& table) const {
  if (even_exponents.size() != table.even_count()) return false;
  for (int s : odd_support)
    if (s < 1 || s > static_cast<int>(table.odd_count())) return false;
  return true;
}

int degree(const Monomial& mon, const VariableTable& table) {
  if (!mon.conforms(table))
    throw std::invalid_argument("monomial does not conform to variable table");
  int d = 0;
  for (std::size_t i = 0; i < mon.even_exponents.size(); ++i)
    d += mon.even_exponents[i] * table.even_vars[i].degree;
  for (int s : mon.odd_support) d += table.odd_vars[s - 1].degree;
  return d;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.even_exponents.size() != b.even_exponents.size())
    throw std::invalid_argument("monomials over different tables");
  for (std::size_t i = 0; i < a.even_exponents.size(); ++i)
    if (a.even_exponents[i] > b.even_exponents[i]) return false;
  return std::includes(b.odd_support.begin(), b.odd_support.end(),
                       a.odd_support.begin(), a.odd_support.end());
}

bool monomial_less(const Monomial& a, const Monomial& b, const VariableTable& table) {
  int da = degree(a, table), db = degree(b, table);
  if (da != db) return da < db;
  if (a.even_exponents != b.even_exponents)
    return a.even_exponents < b.even_exponents;
  return a.odd_support < b.odd_support;
}

bool MonomialKeyLess::operator()(const Monomial& a, const Monomial& b) const {
  if (a.even_exponents != b.even_exponents)
    return a.even_exponents < b.even_exponents;
  return a.odd_support < b.odd_support;
}

MonomialIdeal minimalize(std::vector<Monomial> gens, const VariableTable& table) {
  for (const auto& g : gens)
    if (!g.conforms(table))
      throw std::invalid_argument("generator does not conform to variable table");
  std::sort(gens.begin(), gens.end(), [&](const Monomial& a, const Monomial& b) {
    return monomial_less(a, b, table);
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> minimal;
  for (const auto& g : gens) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                 [&](const Monomial& m) { return divides(m, g); });
    if (!redundant) minimal.push_back(g);
  }
  return MonomialIdeal{std::move(minimal)};
}

bool contains(const MonomialIdeal& ideal, const Monomial& mon) {
  return std::any_of(ideal.generators.begin(), ideal.generators.end(),
                     [&](const Monomial& g) { return divides(g, mon); });
}

bool is_square_free(const MonomialIdeal& ideal) {
  for (const auto& g : ideal.generators)
    for (int e : g.even_exponents)
      if (e > 1) return false;
  return true;
}

MonomialRing::MonomialRing(VariableTable t, std::vector<Monomial> gens)
    : table(std::move(t)) {
  table.validate();
  for (const auto& g : gens)
    if (g.is_unit())
      throw std::invalid_argument("ideal generated in degree 0");
  ideal = minimalize(std::move(gens), table);
}

namespace {

// Enumerates monomials of degree exactly d outside the ideal.  All variable
// degrees are positive, so exponents are bounded by d / |x_i|.
void enumerate(const MonomialRing& ring, int d, std::size_t even_index,
               int odd_index, Monomial& current, int remaining,
               std::vector<Monomial>& out) {
  if (even_index < ring.table.even_count()) {
    int vdeg = ring.table.even_vars[even_index].degree;
    for (int e = 0; e * vdeg <= remaining; ++e) {
      current.even_exponents[even_index] = e;
      enumerate(ring, d, even_index + 1, 1, current, remaining - e * vdeg, out);
    }
    current.even_exponents[even_index] = 0;
    return;
  }
  if (remaining == 0) {
    if (!contains(ring.ideal, current)) out.push_back(current);
    return;
  }
  for (int k = odd_index; k <= static_cast<int>(ring.table.odd_count()); ++k) {
    int vdeg = ring.table.odd_vars[k - 1].degree;
    if (vdeg > remaining) continue;
    current.odd_support.push_back(k);
    enumerate(ring, d, even_index, k + 1, current, remaining - vdeg, out);
    current.odd_support.pop_back();
  }
}

}  // namespace

std::vector<Monomial> standard_monomials(const MonomialRing& ring, int d) {
  if (d < 0) throw std::invalid_argument("negative degree");
  std::vector<Monomial> out;
  Monomial current = Monomial::unit(ring.table.even_count());
  enumerate(ring, d, 0, 1, current, d, out);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return monomial_less(a, b, ring.table);
  });
  return out;
}

HilbertFunction hilbert_function(const MonomialRing& ring, int d_max) {
  if (d_max < 0) throw std::invalid_argument("negative degree bound");
  HilbertFunction h;
  h.ranks.resize(d_max + 1);
  for (int d = 0; d <= d_max; ++d)
    h.ranks[d] = static_cast<long long>(standard_monomials(ring, d).size());
  return h;
}

HilbertFunction hilbert_convolution(const HilbertFunction& h1, const HilbertFunction& h2) {
  int d_max = std::min(h1.d_max(), h2.d_max());
  HilbertFunction h;
  h.ranks.assign(d_max + 1, 0);
  for (int d = 0; d <= d_max; ++d)
    for (int i = 0; i <= d; ++i) h.ranks[d] += h1.rank(i) * h2.rank(d - i);
  return h;
}

std::optional<std::pair<int, Monomial>> multiply(const Monomial& a, const Monomial& b) {
  if (a.even_exponents.size() != b.even_exponents.size())
    throw std::invalid_argument("monomials over different tables");
  Monomial prod;
  prod.even_exponents.resize(a.even_exponents.size());
  for (std::size_t i = 0; i < a.even_exponents.size(); ++i)
    prod.even_exponents[i] = a.even_exponents[i] + b.even_exponents[i];
  // Merge odd supports; count transpositions of odd generators past each
  // other.  A shared index kills the product.
  int sign_flips = 0;
  std::size_t i = 0, j = 0;
  int pending_a = static_cast<int>(a.odd_support.size());
  while (i < a.odd_support.size() || j < b.odd_support.size()) {
    if (j == b.odd_support.size() ||
        (i < a.odd_support.size() && a.odd_support[i] < b.odd_support[j])) {
      prod.odd_support.push_back(a.odd_support[i++]);
      --pending_a;
    } else if (i < a.odd_support.size() && a.odd_support[i] == b.odd_support[j]) {
      return std::nullopt;
    } else {
      prod.odd_support.push_back(b.odd_support[j++]);
      sign_flips += pending_a;
    }
  }
  return std::make_pair(sign_flips % 2 == 0 ? 1 : -1, std::move(prod));
}

Polynomial poly_from(const Monomial& m, long long c) {
  Polynomial p;
  if (c != 0) p[m] = c;
  return p;
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) {
  Polynomial r = p;
  for (const auto& [m, c] : q) {
    long long& v = r[m];
    v += c;
    if (v == 0) r.erase(m);
  }
  return r;
}

Polynomial poly_scale(const Polynomial& p, long long c) {
  Polynomial r;
  if (c == 0) return r;
  for (const auto& [m, v] : p) r[m] = v * c;
  return r;
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) {
  Polynomial r;
  for (const auto& [mp, cp] : p)
    for (const auto& [mq, cq] : q) {
      auto prod = multiply(mp, mq);
      if (!prod) continue;
      long long& v = r[prod->second];
      v += static_cast<long long>(prod->first) * cp * cq;
      if (v == 0) r.erase(prod->second);
    }
  return r;
}

Polynomial poly_reduce(const Polynomial& p, const MonomialIdeal& ideal) {
  Polynomial r;
  for (const auto& [m, c] : p)
    if (!contains(ideal, m)) r[m] = c;
  return r;
}

std::string to_string(const Monomial& mon, const VariableTable& table) {
  if (!mon.conforms(table))
    throw std::invalid_argument("monomial does not conform to variable table");
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < mon.even_exponents.size(); ++i) {
    int e = mon.even_exponents[i];
    if (e == 0) continue;
    if (!first) os << "*";
    os << table.even_vars[i].name;
    if (e > 1) os << "^" << e;
    first = false;
  }
  for (int s : mon.odd_support) {
    if (!first) os << "*";
    os << table.odd_vars[s - 1].name;
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

std::string to_string(const MonomialRing& ring) {
  std::ostringstream os;
  os << "ring { ";
  if (!ring.table.even_vars.empty()) {
    os << "even: ";
    for (std::size_t i = 0; i < ring.table.even_vars.size(); ++i) {
      if (i) os << ", ";
      os << ring.table.even_vars[i].name << ":" << ring.table.even_vars[i].degree;
    }
    if (!ring.table.odd_vars.empty()) os << "; ";
  }
  if (!ring.table.odd_vars.empty()) {
    os << "odd: ";
    for (std::size_t i = 0; i < ring.table.odd_vars.size(); ++i) {
      if (i) os << ", ";
      os << ring.table.odd_vars[i].name << ":" << ring.table.odd_vars[i].degree;
    }
  }
  os << " } ideal { ";
  for (std::size_t i = 0; i < ring.ideal.generators.size(); ++i) {
    if (i) os << "; ";
    os << to_string(ring.ideal.generators[i], ring.table);
  }
  os << " }";
  return os.str();
}

}  // namespace gmi
