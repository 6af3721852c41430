#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyzcl/genetics.hpp"
#include "polyzcl/poset.hpp"
#include "polyzcl/rational.hpp"

namespace polyzcl {

struct BasisClass {
  enum class Kind { V, W, named };
  Kind kind = Kind::named;
  IndexSubset set;   // subscript for V/W classes
  std::string name;  // label for special-ring classes
  int degree = 0;
};

// Sparse rational combination of basis classes; zero coefficients never stored.
class RingElement {
 public:
  RingElement() = default;
  static RingElement basis_term(int index, Rational coeff = 1);

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<int, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int index) const;
  void add(int index, const Rational& c);
  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other);
  RingElement scaled(const Rational& c) const;

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  std::map<int, Rational> coeffs_;
};

// Finite graded-commutative algebra over Q, given by a basis with degrees and
// a sparse multiplication table on basis pairs.
class GradedRing {
 public:
  GradedRing(int m, std::vector<BasisClass> basis);

  void set_product(int i, int j, std::vector<std::pair<int, Rational>> value);

  int m() const { return m_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<BasisClass>& basis() const { return basis_; }
  const BasisClass& basis_class(int i) const { return basis_[static_cast<std::size_t>(i)]; }
  int degree(int i) const { return basis_[static_cast<std::size_t>(i)].degree; }
  const std::vector<std::pair<int, Rational>>& product(int i, int j) const;

  int unit_index() const { return unit_; }
  int top_index() const { return top_; }
  std::optional<int> find_v(const IndexSubset& s) const;
  std::optional<int> find_w(const IndexSubset& s) const;
  std::optional<int> find_named(const std::string& name) const;
  std::vector<int> degree_indices(int d) const;

  RingElement multiply(const RingElement& x, const RingElement& y) const;

  std::string describe(int i) const;  // "1", "V_13", "W_{}", "a1", ...
  std::string describe(const RingElement& x) const;

 private:
  int m_ = 0;
  std::vector<BasisClass> basis_;
  std::vector<std::vector<std::vector<std::pair<int, Rational>>>> table_;
  int unit_ = -1;
  int top_ = -1;
};

// Number of elements of t greater than i.
int rho(int i, const IndexSubset& t);

// The canonical-model ring of a connected realizable code: basis V_S, W_S over
// subgees S, V.V by signed shuffle, V.W by iterated subscript removal, all W.W
// zero. The boolean is true when m >= 2s, in which case the model is the whole
// ring rather than an assumption.
std::pair<GradedRing, bool> build_canonical_ring(const GeneticCode& code);

// Bilinear extension of the basis product table (free-function form).
RingElement multiply(const GradedRing& ring, const RingElement& x, const RingElement& y);

// b_i = a_i + a_{m-i} from the subgee counts; no ring construction needed.
std::vector<int> betti(const GeneticCode& code);

// True iff each pairing H^i x H^{m-i} -> H^m is square and nonsingular over Q.
bool verify_poincare(const GradedRing& ring);

// The connected sum of two 3-tori: exterior faces a1..a3, b1..b3 with all
// cross products zero and both top products identified to tau.
GradedRing build_genus2_ring();

struct ExoticProduct {
  std::string left;
  std::string right;
  std::string canonical;  // value predicted by the canonical model
  std::string actual;     // value in the genus-2 ring, canonical coordinates
};

// Maps the canonical-model classes of <632> into the genus-2 ring
// (V_i -> a_i + b_i, W's per the fixed dictionary), verifies the structural
// relations that the dictionary satisfies (linear isomorphism, delta-supported
// pairings with unit coefficient, vanishing complementary W.W, degree-<=2
// V-products), and returns every product that deviates from the canonical
// model of <632>.
std::vector<ExoticProduct> check_vw_iso();

}  // namespace polyzcl
