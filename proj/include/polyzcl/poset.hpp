#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace polyzcl {

// Finite set of positive integers, stored strictly increasing.
class IndexSubset {
 public:
  IndexSubset() = default;
  explicit IndexSubset(std::vector<int> elements);  // sorts and dedupes

  static IndexSubset initial_segment(int k);  // {1,...,k}; k=0 gives the empty set
  // Bit i-1 of `mask` set means element i is present.
  static IndexSubset from_mask(std::uint32_t mask);
  std::uint32_t to_mask() const;  // requires all elements <= 32

  const std::vector<int>& elements() const { return elems_; }
  int size() const { return static_cast<int>(elems_.size()); }
  bool empty() const { return elems_.empty(); }
  bool contains(int x) const;
  int max_element() const { return elems_.empty() ? 0 : elems_.back(); }

  IndexSubset with(int x) const;
  IndexSubset without(int x) const;
  bool subset_of(const IndexSubset& other) const;
  bool disjoint_with(const IndexSubset& other) const;
  IndexSubset set_union(const IndexSubset& other) const;
  IndexSubset set_difference(const IndexSubset& other) const;

  friend bool operator==(const IndexSubset&, const IndexSubset&) = default;
  friend auto operator<=>(const IndexSubset&, const IndexSubset&) = default;

 private:
  std::vector<int> elems_;
};

// Multiset of positive integers, stored nondecreasing.
class IndexMultiset {
 public:
  IndexMultiset() = default;
  explicit IndexMultiset(std::vector<int> elements);  // sorts
  explicit IndexMultiset(const IndexSubset& s) : elems_(s.elements()) {}

  static IndexMultiset initial_segment(int k);

  const std::vector<int>& elements() const { return elems_; }
  int size() const { return static_cast<int>(elems_.size()); }
  bool empty() const { return elems_.empty(); }

  friend bool operator==(const IndexMultiset&, const IndexMultiset&) = default;
  friend auto operator<=>(const IndexMultiset&, const IndexMultiset&) = default;

 private:
  std::vector<int> elems_;
};

// True iff S <= T in the dominance order, i.e. T contains a subfamily that is
// element-wise >= S in sorted order. Computed by the tail-alignment criterion
// s_i <= t_{k-l+i}, which is equivalent to the subfamily definition (greedy
// exchange); the equivalence is cross-checked against brute force in tests.
bool dominates(const IndexMultiset& s, const IndexMultiset& t);
bool dominates(const IndexSubset& s, const IndexSubset& t);

IndexMultiset multiset_union(const IndexMultiset& a, const IndexMultiset& b);

// Largest k >= 0 with [k] <= u; 0 for the empty multiset.
int max_initial_segment(const IndexMultiset& u);

// Max over ordered gee pairs (repetition allowed) of max_initial_segment(G u G').
int k0(const std::vector<IndexSubset>& gees);

// Some partition [k] = S u T with S <= g and T <= g2, by exhaustive search over
// the 2^k splits (ascending bitmask order, so the witness is deterministic).
std::optional<std::pair<IndexSubset, IndexSubset>> find_partition(const IndexSubset& g,
                                                                  const IndexSubset& g2, int k);

}  // namespace polyzcl
