#include "polyzcl/poset.hpp"

#include <algorithm>
#include <stdexcept>

#include "polyzcl/errors.hpp"

namespace polyzcl {

IndexSubset::IndexSubset(std::vector<int> elements) : elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (!elems_.empty() && elems_.front() < 1)
    raise(Errc::parse_error, "index sets contain positive integers only");
}

IndexSubset IndexSubset::initial_segment(int k) {
  IndexSubset s;
  s.elems_.reserve(static_cast<std::size_t>(std::max(k, 0)));
  for (int i = 1; i <= k; ++i) s.elems_.push_back(i);
  return s;
}

IndexSubset IndexSubset::from_mask(std::uint32_t mask) {
  IndexSubset s;
  for (int i = 1; mask != 0; ++i, mask >>= 1)
    if (mask & 1u) s.elems_.push_back(i);
  return s;
}

std::uint32_t IndexSubset::to_mask() const {
  std::uint32_t mask = 0;
  for (int e : elems_) {
    if (e > 32) throw std::logic_error("element too large for mask");
    mask |= 1u << (e - 1);
  }
  return mask;
}

bool IndexSubset::contains(int x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

IndexSubset IndexSubset::with(int x) const {
  IndexSubset s = *this;
  if (!contains(x)) {
    s.elems_.insert(std::upper_bound(s.elems_.begin(), s.elems_.end(), x), x);
  }
  return s;
}

IndexSubset IndexSubset::without(int x) const {
  IndexSubset s = *this;
  auto it = std::lower_bound(s.elems_.begin(), s.elems_.end(), x);
  if (it != s.elems_.end() && *it == x) s.elems_.erase(it);
  return s;
}

bool IndexSubset::subset_of(const IndexSubset& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

bool IndexSubset::disjoint_with(const IndexSubset& other) const {
  auto a = elems_.begin();
  auto b = other.elems_.begin();
  while (a != elems_.end() && b != other.elems_.end()) {
    if (*a == *b) return false;
    (*a < *b) ? ++a : ++b;
  }
  return true;
}

IndexSubset IndexSubset::set_union(const IndexSubset& other) const {
  IndexSubset s;
  std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                 std::back_inserter(s.elems_));
  return s;
}

IndexSubset IndexSubset::set_difference(const IndexSubset& other) const {
  IndexSubset s;
  std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                      std::back_inserter(s.elems_));
  return s;
}

IndexMultiset::IndexMultiset(std::vector<int> elements) : elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end());
  if (!elems_.empty() && elems_.front() < 1)
    raise(Errc::parse_error, "multisets contain positive integers only");
}

IndexMultiset IndexMultiset::initial_segment(int k) {
  IndexMultiset s;
  s.elems_.reserve(static_cast<std::size_t>(std::max(k, 0)));
  for (int i = 1; i <= k; ++i) s.elems_.push_back(i);
  return s;
}

bool dominates(const IndexMultiset& s, const IndexMultiset& t) {
  const auto& sv = s.elements();
  const auto& tv = t.elements();
  const int l = static_cast<int>(sv.size());
  const int k = static_cast<int>(tv.size());
  if (l > k) return false;
  for (int i = 0; i < l; ++i)
    if (sv[i] > tv[k - l + i]) return false;
  return true;
}

bool dominates(const IndexSubset& s, const IndexSubset& t) {
  return dominates(IndexMultiset(s), IndexMultiset(t));
}

IndexMultiset multiset_union(const IndexMultiset& a, const IndexMultiset& b) {
  std::vector<int> merged;
  merged.reserve(a.elements().size() + b.elements().size());
  std::merge(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
             std::back_inserter(merged));
  return IndexMultiset(std::move(merged));
}

int max_initial_segment(const IndexMultiset& u) {
  const auto& v = u.elements();
  const int t = static_cast<int>(v.size());
  // [k] <= u iff the top-k tail satisfies v[t-k+i-1] >= i for i = 1..k.
  for (int k = t; k >= 1; --k) {
    bool ok = true;
    for (int i = 1; i <= k; ++i) {
      if (v[t - k + i - 1] < i) {
        ok = false;
        break;
      }
    }
    if (ok) return k;
  }
  return 0;
}

int k0(const std::vector<IndexSubset>& gees) {
  int best = 0;
  for (const auto& g : gees) {
    for (const auto& g2 : gees) {
      best = std::max(best, max_initial_segment(multiset_union(IndexMultiset(g), IndexMultiset(g2))));
    }
  }
  return best;
}

std::optional<std::pair<IndexSubset, IndexSubset>> find_partition(const IndexSubset& g,
                                                                  const IndexSubset& g2, int k) {
  if (k < 0) return std::nullopt;
  const std::uint32_t full = (k >= 32) ? 0xffffffffu : ((1u << k) - 1u);
  for (std::uint32_t sm = 0;; ++sm) {
    IndexSubset s = IndexSubset::from_mask(sm);
    IndexSubset t = IndexSubset::from_mask(full & ~sm);
    if (dominates(s, g) && dominates(t, g2)) return std::make_pair(s, t);
    if (sm == full) break;
  }
  return std::nullopt;
}

}  // namespace polyzcl
