#include "doctest.h"
#include "gmi/monomial.hpp"
#include "oracles.hpp"

using namespace gmi;

namespace {

VariableTable xy_table() {
  VariableTable t;
  t.even_vars.push_back({"x", 4});
  t.odd_vars.push_back({"y", 1});
  return t;
}

MonomialRing section5_ring() {
  // Z[x] (x) Lambda[y] / (x^2 y), |x| = 4, |y| = 1.
  Monomial gen({2}, {1});
  return MonomialRing(xy_table(), {gen});
}

}  // namespace

TEST_CASE("variable table validation") {
  VariableTable t;
  t.even_vars.push_back({"x", 3});
  CHECK_THROWS_AS(t.validate(), std::invalid_argument);
  t.even_vars[0].degree = 4;
  CHECK_NOTHROW(t.validate());
  t.odd_vars.push_back({"x", 1});
  CHECK_THROWS_AS(t.validate(), std::invalid_argument);  // duplicate name
  t.odd_vars[0].name = "y";
  t.odd_vars[0].degree = 2;
  CHECK_THROWS_AS(t.validate(), std::invalid_argument);  // odd var, even degree
}

TEST_CASE("degree and divisibility") {
  VariableTable t = xy_table();
  Monomial m({2}, {1});
  CHECK(degree(m, t) == 9);
  CHECK(degree(Monomial::unit(1), t) == 0);
  CHECK(divides(Monomial({1}, {}), m));
  CHECK(divides(Monomial({0}, {1}), m));
  CHECK_FALSE(divides(Monomial({3}, {}), m));
  CHECK_FALSE(divides(m, Monomial({2}, {})));
}

TEST_CASE("signed multiplication of odd variables") {
  // y1*y2 = -(y2*y1); y*y = 0.
  Monomial y1({}, {1}), y2({}, {2});
  auto p12 = multiply(y1, y2);
  auto p21 = multiply(y2, y1);
  REQUIRE(p12.has_value());
  REQUIRE(p21.has_value());
  CHECK(p12->second == p21->second);
  CHECK(p12->first == 1);
  CHECK(p21->first == -1);
  CHECK_FALSE(multiply(y1, y1).has_value());

  // (y1 y3) * y2 moves y2 past one pending generator: sign -1.
  auto p = multiply(Monomial({}, {1, 3}), y2);
  REQUIRE(p.has_value());
  CHECK(p->first == -1);
  CHECK(p->second == Monomial({}, {1, 2, 3}));
}

TEST_CASE("minimalize produces a sorted antichain") {
  VariableTable t;
  t.even_vars.push_back({"a", 2});
  t.even_vars.push_back({"b", 2});
  Monomial a2({2, 0}, {}), a2b({2, 1}, {}), b({0, 1}, {});
  MonomialIdeal ideal = minimalize({a2b, a2, b, a2}, t);
  REQUIRE(ideal.generators.size() == 2);
  CHECK(ideal.generators[0] == b);
  CHECK(ideal.generators[1] == a2);
  CHECK(contains(ideal, a2b));
  CHECK_FALSE(contains(ideal, Monomial({1, 0}, {})));
}

TEST_CASE("ring constructor rejects unit generators") {
  CHECK_THROWS_AS(MonomialRing(xy_table(), {Monomial::unit(1)}),
                  std::invalid_argument);
}

TEST_CASE("standard monomials of the worked example") {
  MonomialRing ring = section5_ring();
  CHECK(standard_monomials(ring, 0).size() == 1);
  CHECK(standard_monomials(ring, 1) ==
        std::vector<Monomial>{Monomial({0}, {1})});
  CHECK(standard_monomials(ring, 2).empty());
  CHECK(standard_monomials(ring, 4) == std::vector<Monomial>{Monomial({1}, {})});
  CHECK(standard_monomials(ring, 5) ==
        std::vector<Monomial>{Monomial({1}, {1})});
  // x^2 y is killed but x^2 survives.
  CHECK(standard_monomials(ring, 8) == std::vector<Monomial>{Monomial({2}, {})});
  CHECK(standard_monomials(ring, 9).empty());

  HilbertFunction h = hilbert_function(ring, 9);
  CHECK(h.ranks == std::vector<long long>{1, 1, 0, 0, 1, 1, 0, 0, 1, 0});
}

TEST_CASE("hilbert function matches the brute-force oracle") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 25; ++trial) {
    MonomialRing ring = oracles::random_ring(rng, {});
    HilbertFunction h = hilbert_function(ring, 14);
    CHECK(h.ranks == oracles::hilbert(ring, 14));
  }
}

TEST_CASE("hilbert convolution equals the Hilbert function of a product") {
  VariableTable tx, ty, txy;
  tx.even_vars.push_back({"x", 2});
  ty.odd_vars.push_back({"y", 3});
  txy.even_vars.push_back({"x", 2});
  txy.odd_vars.push_back({"y", 3});
  HilbertFunction hx = hilbert_function(MonomialRing(tx, {}), 12);
  HilbertFunction hy = hilbert_function(MonomialRing(ty, {}), 12);
  CHECK(hilbert_convolution(hx, hy) ==
        hilbert_function(MonomialRing(txy, {}), 12));
}

TEST_CASE("polynomial arithmetic reduces modulo the ideal") {
  MonomialRing ring = section5_ring();
  Polynomial x = poly_from(Monomial({1}, {}));
  Polynomial y = poly_from(Monomial({0}, {1}));
  Polynomial xy = poly_mul(x, y);
  REQUIRE(xy.size() == 1);
  CHECK(xy.begin()->first == Monomial({1}, {1}));
  // x * (x y) = x^2 y lies in the ideal.
  CHECK(poly_reduce(poly_mul(x, xy), ring.ideal).empty());
  // y * y = 0 before any reduction.
  CHECK(poly_mul(y, y).empty());
  CHECK(poly_add(x, poly_scale(x, -1)).empty());
}

TEST_CASE("monomial printing") {
  VariableTable t = xy_table();
  CHECK(to_string(Monomial({2}, {1}), t) == "x^2*y");
  CHECK(to_string(Monomial::unit(1), t) == "1");
  MonomialRing ring = section5_ring();
  CHECK(to_string(ring) == "ring { even: x:4; odd: y:1 } ideal { x^2*y }");
}
