#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyzcl/cohomology.hpp"
#include "polyzcl/genetics.hpp"

namespace polyzcl {

// Sparse element of R tensor R over a fixed graded ring, with Koszul-signed
// multiplication: (a@b)(c@d) = (-1)^(|b||c|) ac@bd.
class TensorElement {
 public:
  explicit TensorElement(const GradedRing& ring) : ring_(&ring) {}
  static TensorElement unit(const GradedRing& ring);
  static TensorElement term(const GradedRing& ring, int a, int b, Rational coeff = 1);

  const GradedRing& ring() const { return *ring_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<std::pair<int, int>, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int a, int b) const;
  void add(int a, int b, const Rational& c);

  friend bool operator==(const TensorElement& x, const TensorElement& y) {
    return x.coeffs_ == y.coeffs_;
  }

 private:
  const GradedRing* ring_;
  std::map<std::pair<int, int>, Rational> coeffs_;
};

TensorElement tensor_multiply(const TensorElement& x, const TensorElement& y);

// u@1 - 1@u.
TensorElement bar(const GradedRing& ring, int basis_index);

// Cup-product pairing: a@b |-> a.b summed over terms, no sign.
RingElement mult_map(const TensorElement& x);

// The product of bar(V_i) over S, bar(W_S), bar(V_j) over T, for the first gee
// pair admitting a partition [k] = S u T; bar(W_T) is appended when k and m
// have the same parity. `factors` receives a printable factor list.
TensorElement certificate_product(const GradedRing& ring, const GeneticCode& code, int k,
                                  std::vector<std::string>* factors = nullptr);

struct ZclBounds {
  int lower = 0;
  int upper = 0;
  std::optional<int> exact;
  std::optional<std::string> certificate;  // factor list of the verified witness
  std::vector<std::string> warnings;
};

// lower = k0+2 or k0+1 by parity against m, verified by evaluating the
// certificate product; upper = min(2s+2, 2m); exact when m >= 2s.
ZclBounds zcl_bounds(const GeneticCode& code);
ZclBounds zcl_bounds(const GradedRing& ring, bool model_exact, const GeneticCode& code);

// Longest nonzero product of the given zero divisors, by depth-first search
// with memoized scale-normalized partials. Throws when the number of distinct
// partials exceeds `budget`.
int search_zcl(const GradedRing& ring, const std::vector<TensorElement>& generators, int max_len,
               std::size_t budget = 1000000);

// bar(x) for every degree-one class and every W class, deduplicated; the
// generator set the zero-divisor search explores.
std::vector<TensorElement> barred_generators(const GradedRing& ring);

// (zcl_lower + 1, 2n - 5).
std::pair<int, int> tc_bounds(const GeneticCode& code);

}  // namespace polyzcl
