#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polyzcl/errors.hpp"
#include "polyzcl/genetics.hpp"

using namespace polyzcl;

namespace {

LengthVector lv(std::vector<int> sides) {
  std::vector<Rational> r;
  for (int s : sides) r.emplace_back(s);
  return LengthVector(std::move(r));
}

bool has_code(const Error& e, Errc c) { return e.code() == c; }

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational(" -2 ") == Rational(-2));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational("1e3"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK(to_string(Rational(10, 4)) == "5/2");
}

TEST_CASE("is_generic") {
  CHECK(is_generic(lv({1, 1, 1, 3, 3, 4})));
  CHECK_FALSE(is_generic(lv({1, 1, 1, 1})));
  CHECK(is_generic(lv({1, 1, 1, 1, 1, 1, 1, 6})));
  std::vector<Rational> big(13, Rational(1));
  big[12] = Rational(100, 7);
  CHECK_THROWS_WITH_AS(static_cast<void>(is_generic(LengthVector(big))), doctest::Contains("n <= 12"),
                       Error);
}

TEST_CASE("is_short") {
  LengthVector l = lv({1, 1, 1, 3, 3, 4});
  CHECK(is_short(l, IndexSubset({6, 3, 2})));
  CHECK_FALSE(is_short(l, IndexSubset({6, 4})));
  CHECK(is_short(l, IndexSubset{}));
}

TEST_CASE("genetic_code examples") {
  CHECK(genetic_code(lv({1, 1, 1, 3, 3, 4})) == parse_code("632", 6));
  CHECK(genetic_code(lv({1, 1, 1, 1, 1, 1, 1})) == parse_code("765", 7));
  CHECK(genetic_code(lv({1, 1, 1, 1, 1, 1, 1, 6})) == parse_code("8", 8));

  CHECK_THROWS_AS(static_cast<void>(genetic_code(lv({1, 1, 1, 1}))), Error);
  try {
    static_cast<void>(genetic_code(lv({1, 1, 1, 9})));
    FAIL("expected EmptySpace");
  } catch (const Error& e) {
    CHECK(has_code(e, Errc::empty_space));
  }
}

TEST_CASE("subgees") {
  GeneticCode example = parse_code("9421,95", 9);
  std::vector<IndexSubset> size2;
  for (const auto& s : subgees(example))
    if (s.size() == 2) size2.push_back(s);
  CHECK(size2 == std::vector<IndexSubset>{IndexSubset({1, 2}), IndexSubset({1, 3}), IndexSubset({1, 4}),
                                          IndexSubset({2, 3}), IndexSubset({2, 4})});
  CHECK(subgee_counts(example) == std::vector<int>{1, 5, 5, 2});

  CHECK(subgee_counts(parse_code("632", 6)) == std::vector<int>{1, 3, 3});
  CHECK(subgees(parse_code("8", 8)) == std::vector<IndexSubset>{IndexSubset{}});
}

TEST_CASE("is_connected") {
  CHECK_FALSE(is_connected(parse_code("854321", 8)));
  CHECK(is_connected(parse_code("632", 6)));
  CHECK(is_connected(parse_code("8", 8)));
  CHECK_FALSE(is_connected(parse_code("3", 3)));  // two oriented triangles
}

TEST_CASE("parse and format") {
  GeneticCode example = parse_code("9421,95", 9);
  CHECK(example.genes() == std::vector<IndexSubset>{IndexSubset({9, 4, 2, 1}), IndexSubset({9, 5})});
  CHECK(format_code(example) == "9421,95");
  CHECK(format_code(parse_code("95 , 9421", 9)) == "9421,95");  // canonical order, spaces ignored
  CHECK(format_code(parse_code("9421;95", 9)) == "9421,95");

  GeneticCode wide = parse_code("{10,4,2,1}", 10);
  CHECK(wide.genes() == std::vector<IndexSubset>{IndexSubset({10, 4, 2, 1})});
  CHECK(format_code(wide) == "{10,4,2,1}");

  CHECK(parse_code("632", 6).gees() == std::vector<IndexSubset>{IndexSubset({3, 2})});

  CHECK_THROWS_AS(parse_code("95", 8), Error);      // no 8 in the gene
  CHECK_THROWS_AS(parse_code("9401", 9), Error);    // zero element
  CHECK_THROWS_AS(parse_code("9421,,95", 9), Error);
  CHECK_THROWS_AS(parse_code("", 9), Error);
  try {
    parse_code("9421,94", 9);  // {9,4} <= {9,4,2,1}
    FAIL("expected NotAntichain");
  } catch (const Error& e) {
    CHECK(has_code(e, Errc::not_antichain));
  }
}

TEST_CASE("shortness is down-closed under dominance") {
  std::mt19937 rng(20230817);
  std::uniform_int_distribution<int> num(1, 12), den(1, 4);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 4 + trial % 5;  // 4..8
    std::vector<Rational> sides;
    for (int i = 0; i < n; ++i) sides.emplace_back(num(rng), den(rng));
    LengthVector l{sides};
    if (!is_generic(l)) continue;
    std::vector<IndexSubset> subsets;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
      subsets.push_back(IndexSubset::from_mask(mask));
    for (const auto& t : subsets) {
      if (!is_short(l, t)) continue;
      for (const auto& s : subsets)
        if (dominates(s, t)) CHECK(is_short(l, s));
    }
  }
}
