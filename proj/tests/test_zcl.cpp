#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "polyzcl/census.hpp"
#include "polyzcl/errors.hpp"
#include "polyzcl/zcl.hpp"

using namespace polyzcl;

TEST_CASE("tensor multiplication signs") {
  auto [ring, exact] = build_canonical_ring(parse_code("9421,95", 9));
  (void)exact;
  const int one = ring.unit_index();
  int v1 = *ring.find_v(IndexSubset({1}));
  int v2 = *ring.find_v(IndexSubset({2}));

  TensorElement unit = TensorElement::unit(ring);
  TensorElement x = TensorElement::term(ring, v1, v2, Rational(5, 3));
  CHECK(tensor_multiply(unit, x) == x);
  CHECK(tensor_multiply(x, unit) == x);

  // (V1 @ 1)(1 @ V2) = V1 @ V2, no sign
  CHECK(tensor_multiply(TensorElement::term(ring, v1, one), TensorElement::term(ring, one, v2)) ==
        TensorElement::term(ring, v1, v2));
  // (1 @ V1)(V2 @ 1) = -(V2 @ V1)
  CHECK(tensor_multiply(TensorElement::term(ring, one, v1), TensorElement::term(ring, v2, one)) ==
        TensorElement::term(ring, v2, v1, Rational(-1)));
}

TEST_CASE("tensor multiplication is associative and bidegree additive") {
  auto [ring, exact] = build_canonical_ring(parse_code("632", 6));
  (void)exact;
  std::mt19937 rng(97);
  std::uniform_int_distribution<int> idx(0, ring.dim() - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int trial = 0; trial < 60; ++trial) {
    auto random_element = [&] {
      TensorElement e(ring);
      for (int t = 0; t < 3; ++t) e.add(idx(rng), idx(rng), Rational(coeff(rng)));
      return e;
    };
    TensorElement x = random_element(), y = random_element(), z = random_element();
    CHECK(tensor_multiply(tensor_multiply(x, y), z) == tensor_multiply(x, tensor_multiply(y, z)));
  }
}

TEST_CASE("bar and mult_map") {
  auto [ring, exact] = build_canonical_ring(parse_code("9421,95", 9));
  (void)exact;
  const int one = ring.unit_index();
  int v1 = *ring.find_v(IndexSubset({1}));
  int v2 = *ring.find_v(IndexSubset({2}));
  int w5 = *ring.find_w(IndexSubset({5}));

  TensorElement b = bar(ring, v1);
  CHECK(b.coeff(v1, one) == Rational(1));
  CHECK(b.coeff(one, v1) == Rational(-1));

  for (int i = 0; i < ring.dim(); ++i) CHECK(mult_map(bar(ring, i)).is_zero());

  // V1 @ V2 |-> V1.V2 = +V_12
  CHECK(mult_map(TensorElement::term(ring, v1, v2)) ==
        RingElement::basis_term(*ring.find_v(IndexSubset({1, 2}))));

  // W_S @ 1 + 1 @ W_S maps to 2 W_S: not a zero divisor over Q
  TensorElement plus = TensorElement::term(ring, w5, one);
  plus.add(one, w5, Rational(1));
  CHECK(mult_map(plus) == RingElement::basis_term(w5, Rational(2)));
}

TEST_CASE("certificate products") {
  {
    GeneticCode code = parse_code("9421,95", 9);
    auto [ring, exact] = build_canonical_ring(code);
    (void)exact;
    std::vector<std::string> factors;
    TensorElement cert = certificate_product(ring, code, 4, &factors);
    CHECK_FALSE(cert.is_zero());
    CHECK(factors.size() == 6);  // k=4 matches m=6 in parity: k+2 factors
  }
  {
    GeneticCode code = parse_code("8", 8);
    auto [ring, exact] = build_canonical_ring(code);
    (void)exact;
    std::vector<std::string> factors;
    TensorElement cert = certificate_product(ring, code, 0, &factors);
    CHECK_FALSE(cert.is_zero());
    CHECK(factors == std::vector<std::string>{"bar(W_{})"});  // m = 5 odd: single factor
  }
  {
    GeneticCode code = parse_code("632", 6);
    auto [ring, exact] = build_canonical_ring(code);
    (void)exact;
    std::vector<std::string> factors;
    TensorElement cert = certificate_product(ring, code, 3, &factors);
    CHECK_FALSE(cert.is_zero());
    CHECK(factors.size() == 5);  // k=3 matches m=3: k+2 factors
    try {
      certificate_product(ring, code, 4);
      FAIL("expected NoPartition");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::no_partition);
    }
  }
}

TEST_CASE("zcl bounds") {
  {
    ZclBounds b = zcl_bounds(parse_code("9421,95", 9));
    CHECK(b.exact);
    CHECK(*b.exact == 6);
    CHECK(b.lower == 6);
    CHECK(b.upper == 6);
    CHECK(b.certificate);
    CHECK(b.warnings.empty());
  }
  {
    ZclBounds b = zcl_bounds(parse_code("8321", 8));
    CHECK(b.lower == 5);
    CHECK(b.upper == 8);  // min(2s+2, 2m) = min(8, 10)
    CHECK_FALSE(b.exact);
  }
  {
    ZclBounds b = zcl_bounds(parse_code("765", 7));
    CHECK(b.exact);
    CHECK(*b.exact == 6);
  }
  {
    ZclBounds b = zcl_bounds(parse_code("632", 6));
    CHECK(b.lower == 5);
    CHECK(b.upper == 6);
    CHECK_FALSE(b.exact);
  }
}

TEST_CASE("zero-divisor search") {
  {
    GradedRing g2 = build_genus2_ring();
    // The six-fold product of the barred degree-one classes cancels: its two
    // surviving terms are (tau @ tau) with opposite Koszul signs, and both top
    // products are glued to the same tau. Any product of six degree-one zero
    // divisors is a multiple of this one, so the longest nonzero product of
    // barred generators has five factors.
    TensorElement six = TensorElement::unit(g2);
    for (const std::string& name : {"a1", "a2", "a3", "b1", "b2", "b3"})
      six = tensor_multiply(six, bar(g2, *g2.find_named(name)));
    CHECK(six.is_zero());
    CHECK(search_zcl(g2, barred_generators(g2), 7) == 5);
    CHECK(search_zcl(g2, barred_generators(g2), 4) == 4);  // cap respected
    CHECK_THROWS_AS(search_zcl(g2, barred_generators(g2), 7, 3), Error);
  }
  {
    auto [ring, exact] = build_canonical_ring(parse_code("8", 8));
    (void)exact;
    CHECK(search_zcl(ring, barred_generators(ring), 10) == 1);
  }
  {
    auto [ring, exact] = build_canonical_ring(parse_code("632", 6));
    (void)exact;
    CHECK(search_zcl(ring, barred_generators(ring), 6) == 5);
  }
}

TEST_CASE("parity criterion on <632>") {
  GeneticCode code = parse_code("632", 6);
  auto [ring, exact] = build_canonical_ring(code);
  (void)exact;
  const int m = ring.m();
  std::vector<IndexSubset> subs = subgees(code);
  std::set<IndexSubset> subgee_set(subs.begin(), subs.end());
  int cases = 0;
  for (const auto& d1 : subs)
    for (const auto& d2 : subs)
      for (const auto& d3 : subs) {
        if (!d1.disjoint_with(d2) || !d1.disjoint_with(d3) || !d2.disjoint_with(d3)) continue;
        IndexSubset w1 = d1.set_union(d3), w2 = d2.set_union(d3);
        if (!subgee_set.count(w1) || !subgee_set.count(w2)) continue;
        TensorElement p = TensorElement::unit(ring);
        for (const auto& d : {d1, d2, d3})
          for (int i : d.elements()) p = tensor_multiply(p, bar(ring, *ring.find_v(IndexSubset({i}))));
        p = tensor_multiply(p, bar(ring, *ring.find_w(w1)));
        p = tensor_multiply(p, bar(ring, *ring.find_w(w2)));
        bool expected = ((d1.size() + d2.size() + d3.size()) % 2) == (m % 2);
        CHECK(p.is_zero() != expected);
        ++cases;
      }
  CHECK(cases > 0);
}

TEST_CASE("tc bounds") {
  CHECK(tc_bounds(parse_code("9421,95", 9)) == std::pair<int, int>(7, 13));
  CHECK(tc_bounds(parse_code("8", 8)) == std::pair<int, int>(2, 11));
  CHECK(tc_bounds(parse_code("632", 6)) == std::pair<int, int>(6, 7));
}
