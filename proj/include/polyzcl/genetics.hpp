#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polyzcl/poset.hpp"
#include "polyzcl/rational.hpp"

namespace polyzcl {

// Hard cap on exhaustive subset-sum scans (2^n subsets). Callers may raise it
// explicitly at their own risk.
inline constexpr int kGenericityCap = 12;

// Side lengths of a planar polygon, sorted nondecreasing. Entries are exact
// positive rationals; the constructor sorts.
class LengthVector {
 public:
  explicit LengthVector(std::vector<Rational> lengths);

  int n() const { return static_cast<int>(lengths_.size()); }
  const Rational& length(int i) const { return lengths_[static_cast<std::size_t>(i - 1)]; }  // 1-based
  const std::vector<Rational>& lengths() const { return lengths_; }
  Rational total() const;
  Rational subset_sum(const IndexSubset& s) const;

  friend bool operator==(const LengthVector&, const LengthVector&) = default;

 private:
  std::vector<Rational> lengths_;
};

// Orders genes the way they are written: by descending element sequence,
// lexicographically. "9421" sorts before "95".
bool gene_order_less(const IndexSubset& a, const IndexSubset& b);

// An antichain of genes, each containing n. Canonical gene order throughout.
class GeneticCode {
 public:
  GeneticCode(int n, std::vector<IndexSubset> genes);

  int n() const { return n_; }
  int m() const { return n_ - 3; }
  const std::vector<IndexSubset>& genes() const { return genes_; }
  const std::vector<IndexSubset>& gees() const { return gees_; }
  int max_gee_size() const;  // s

  friend bool operator==(const GeneticCode&, const GeneticCode&) = default;

 private:
  int n_ = 0;
  std::vector<IndexSubset> genes_;
  std::vector<IndexSubset> gees_;
};

bool code_order_less(const GeneticCode& a, const GeneticCode& b);

// True iff no subset of sides sums to exactly half the perimeter.
bool is_generic(const LengthVector& l, int cap = kGenericityCap);

// Exact comparison of the subset sum against half the perimeter.
bool is_short(const LengthVector& l, const IndexSubset& s);

// Maximal short subsets containing n, under dominance.
GeneticCode genetic_code(const LengthVector& l, int cap = kGenericityCap);

// Every set dominated by some gee, the empty set included, ordered by
// cardinality then lexicographically.
std::vector<IndexSubset> subgees(const GeneticCode& code);

// a_k = number of subgees of cardinality k, for k = 0..s.
std::vector<int> subgee_counts(const GeneticCode& code);

// False only for the one code homeomorphic to a disjoint pair of tori,
// whose single gee is {1,...,n-3}.
bool is_connected(const GeneticCode& code);

// Gene notation: digits concatenated (descending) when every element is a
// single digit, otherwise "{a,b,c}"; genes joined with "," or ";".
GeneticCode parse_code(std::string_view text, int n);
std::string format_code(const GeneticCode& code);
std::string format_subset(const IndexSubset& s);  // one gene/gee, same notation

}  // namespace polyzcl
