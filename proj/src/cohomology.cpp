#include "polyzcl/cohomology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "polyzcl/errors.hpp"

namespace polyzcl {

RingElement RingElement::basis_term(int index, Rational coeff) {
  RingElement e;
  e.add(index, coeff);
  return e;
}

Rational RingElement::coeff(int index) const {
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void RingElement::add(int index, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

RingElement& RingElement::operator+=(const RingElement& other) {
  for (const auto& [i, c] : other.coeffs_) add(i, c);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
  for (const auto& [i, c] : other.coeffs_) add(i, -c);
  return *this;
}

RingElement RingElement::scaled(const Rational& c) const {
  RingElement e;
  if (c == 0) return e;
  for (const auto& [i, v] : coeffs_) e.coeffs_.emplace(i, v * c);
  return e;
}

GradedRing::GradedRing(int m, std::vector<BasisClass> basis) : m_(m), basis_(std::move(basis)) {
  const auto n = basis_.size();
  table_.assign(n, std::vector<std::vector<std::pair<int, Rational>>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (basis_[i].degree == 0) unit_ = static_cast<int>(i);
    if (basis_[i].degree == m_) top_ = static_cast<int>(i);
  }
}

void GradedRing::set_product(int i, int j, std::vector<std::pair<int, Rational>> value) {
  table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(value);
}

const std::vector<std::pair<int, Rational>>& GradedRing::product(int i, int j) const {
  return table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

std::optional<int> GradedRing::find_v(const IndexSubset& s) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].kind == BasisClass::Kind::V && basis_[i].set == s) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> GradedRing::find_w(const IndexSubset& s) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].kind == BasisClass::Kind::W && basis_[i].set == s) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> GradedRing::find_named(const std::string& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].kind == BasisClass::Kind::named && basis_[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

std::vector<int> GradedRing::degree_indices(int d) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].degree == d) out.push_back(static_cast<int>(i));
  return out;
}

RingElement GradedRing::multiply(const RingElement& x, const RingElement& y) const {
  RingElement out;
  for (const auto& [i, ci] : x.coeffs()) {
    for (const auto& [j, cj] : y.coeffs()) {
      const Rational c = ci * cj;
      for (const auto& [k, ck] : product(i, j)) out.add(k, c * ck);
    }
  }
  return out;
}

namespace {

std::string subscript_string(const IndexSubset& s) {
  const auto& v = s.elements();
  if (v.empty()) return "{}";
  std::string out;
  if (s.max_element() <= 9) {
    for (int e : v) out.push_back(static_cast<char>('0' + e));
  } else {
    out.push_back('{');
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) out.push_back(',');
      out += std::to_string(v[i]);
    }
    out.push_back('}');
  }
  return out;
}

}  // namespace

std::string GradedRing::describe(int i) const {
  const BasisClass& b = basis_[static_cast<std::size_t>(i)];
  switch (b.kind) {
    case BasisClass::Kind::V:
      return b.set.empty() ? "1" : "V_" + subscript_string(b.set);
    case BasisClass::Kind::W:
      return "W_" + subscript_string(b.set);
    case BasisClass::Kind::named:
      return b.name;
  }
  return "?";
}

std::string GradedRing::describe(const RingElement& x) const {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [i, c] : x.coeffs()) {
    std::string mag = to_string(c < 0 ? Rational(-c) : c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    if (mag != "1") out += mag + "*";
    out += describe(i);
    first = false;
  }
  return out;
}

int rho(int i, const IndexSubset& t) {
  int count = 0;
  for (int e : t.elements())
    if (e > i) ++count;
  return count;
}

namespace {

// Pairs (a, b) in A x B with a > b: the sign exponent when the concatenation
// (A, B) of ascending lists is sorted.
int inversions(const IndexSubset& a, const IndexSubset& b) {
  int count = 0;
  for (int x : a.elements())
    for (int y : b.elements())
      if (x > y) ++count;
  return count;
}

// Pairs (t, u) in T x U with u > t; the accumulated rho sign for removing all
// of T from a W subscript, largest element first.
int cross_count(const IndexSubset& t, const IndexSubset& u) {
  int count = 0;
  for (int x : t.elements())
    for (int y : u.elements())
      if (y > x) ++count;
  return count;
}

Rational sign(int exponent) { return (exponent % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace

std::pair<GradedRing, bool> build_canonical_ring(const GeneticCode& code) {
  if (!is_connected(code))
    raise(Errc::disconnected, "code " + format_code(code) + " is the disconnected torus pair");
  const int m = code.m();
  const int s = code.max_gee_size();

  std::vector<IndexSubset> subs = subgees(code);
  std::set<IndexSubset> subgee_set(subs.begin(), subs.end());

  std::vector<BasisClass> basis;
  basis.reserve(2 * subs.size());
  for (const auto& sub : subs)
    basis.push_back({BasisClass::Kind::V, sub, "", sub.size()});
  for (const auto& sub : subs)
    basis.push_back({BasisClass::Kind::W, sub, "", m - sub.size()});
  std::stable_sort(basis.begin(), basis.end(), [](const BasisClass& a, const BasisClass& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.kind != b.kind) return a.kind == BasisClass::Kind::V;
    if (a.set.size() != b.set.size()) return a.set.size() < b.set.size();
    return a.set.elements() < b.set.elements();
  });

  GradedRing ring(m, std::move(basis));
  const int dim = ring.dim();
  for (int i = 0; i < dim; ++i) {
    const BasisClass& x = ring.basis_class(i);
    for (int j = 0; j < dim; ++j) {
      const BasisClass& y = ring.basis_class(j);
      std::vector<std::pair<int, Rational>> value;
      if (x.kind == BasisClass::Kind::V && y.kind == BasisClass::Kind::V) {
        if (x.set.disjoint_with(y.set)) {
          IndexSubset u = x.set.set_union(y.set);
          if (subgee_set.count(u)) {
            value.emplace_back(*ring.find_v(u), sign(inversions(x.set, y.set)));
          }
        }
      } else if (x.kind == BasisClass::Kind::V && y.kind == BasisClass::Kind::W) {
        if (x.set.subset_of(y.set)) {
          IndexSubset rest = y.set.set_difference(x.set);
          value.emplace_back(*ring.find_w(rest), sign(cross_count(x.set, rest)));
        }
      } else if (x.kind == BasisClass::Kind::W && y.kind == BasisClass::Kind::V) {
        if (y.set.subset_of(x.set)) {
          IndexSubset rest = x.set.set_difference(y.set);
          Rational c = sign(cross_count(y.set, rest)) * sign(x.degree * y.degree);
          value.emplace_back(*ring.find_w(rest), c);
        }
      }
      // All W.W products vanish in the canonical model.
      ring.set_product(i, j, std::move(value));
    }
  }
  return {std::move(ring), m >= 2 * s};
}

RingElement multiply(const GradedRing& ring, const RingElement& x, const RingElement& y) {
  return ring.multiply(x, y);
}

std::vector<int> betti(const GeneticCode& code) {
  const int m = code.m();
  std::vector<int> a = subgee_counts(code);
  auto count = [&](int k) {
    return (k >= 0 && k < static_cast<int>(a.size())) ? a[static_cast<std::size_t>(k)] : 0;
  };
  std::vector<int> b(static_cast<std::size_t>(m) + 1, 0);
  for (int i = 0; i <= m; ++i) b[static_cast<std::size_t>(i)] = count(i) + count(m - i);
  return b;
}

namespace {

// Rank of a rational matrix by Gaussian elimination.
int matrix_rank(std::vector<std::vector<Rational>> a) {
  int rank = 0;
  const int rows = static_cast<int>(a.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(a[0].size());
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[static_cast<std::size_t>(rank)], a[static_cast<std::size_t>(pivot)]);
    const auto& prow = a[static_cast<std::size_t>(rank)];
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      auto& row = a[static_cast<std::size_t>(r)];
      const Rational f = row[static_cast<std::size_t>(c)] / prow[static_cast<std::size_t>(c)];
      if (f == 0) continue;
      for (int k = c; k < cols; ++k)
        row[static_cast<std::size_t>(k)] -= f * prow[static_cast<std::size_t>(k)];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool verify_poincare(const GradedRing& ring) {
  const int m = ring.m();
  if (ring.top_index() < 0 || ring.degree_indices(m).size() != 1) return false;
  const int top = ring.top_index();
  for (int d = 0; d <= m; ++d) {
    std::vector<int> left = ring.degree_indices(d);
    std::vector<int> right = ring.degree_indices(m - d);
    if (left.size() != right.size()) return false;
    std::vector<std::vector<Rational>> pairing(left.size(), std::vector<Rational>(right.size(), Rational(0)));
    for (std::size_t i = 0; i < left.size(); ++i)
      for (std::size_t j = 0; j < right.size(); ++j)
        for (const auto& [k, c] : ring.product(left[i], right[j]))
          if (k == top) pairing[i][j] = c;
    if (matrix_rank(std::move(pairing)) != static_cast<int>(left.size())) return false;
  }
  return true;
}

namespace {

// Genus-2 basis bookkeeping: every class is a face of one of the two
// exterior-algebra summands ('a' or 'b'), with both 3-faces glued to tau.
struct Genus2Class {
  char family = 'u';  // 'a', 'b', 'u' (unit), 't' (top)
  IndexSubset set;
};

std::vector<Genus2Class> genus2_layout() {
  std::vector<Genus2Class> layout;
  layout.push_back({'u', IndexSubset{}});
  for (int i = 1; i <= 3; ++i) layout.push_back({'a', IndexSubset({i})});
  for (int i = 1; i <= 3; ++i) layout.push_back({'b', IndexSubset({i})});
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) layout.push_back({'a', IndexSubset({i, j})});
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) layout.push_back({'b', IndexSubset({i, j})});
  layout.push_back({'t', IndexSubset{}});
  return layout;
}

std::string genus2_name(const Genus2Class& c) {
  if (c.family == 'u') return "1";
  if (c.family == 't') return "tau";
  std::string out;
  for (int e : c.set.elements()) {
    out.push_back(c.family);
    out += std::to_string(e);
  }
  return out;
}

}  // namespace

GradedRing build_genus2_ring() {
  const auto layout = genus2_layout();
  std::vector<BasisClass> basis;
  for (const auto& c : layout) {
    int degree = (c.family == 't') ? 3 : c.set.size();
    basis.push_back({BasisClass::Kind::named, IndexSubset{}, genus2_name(c), degree});
  }
  GradedRing ring(3, std::move(basis));

  const int dim = ring.dim();
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const auto& x = layout[static_cast<std::size_t>(i)];
      const auto& y = layout[static_cast<std::size_t>(j)];
      std::vector<std::pair<int, Rational>> value;
      if (x.family == 'u') {
        value.emplace_back(j, Rational(1));
      } else if (y.family == 'u') {
        value.emplace_back(i, Rational(1));
      } else if (x.family == 't' || y.family == 't') {
        // top class times positive degree vanishes
      } else if (x.family == y.family && x.set.disjoint_with(y.set)) {
        IndexSubset u = x.set.set_union(y.set);
        Rational c = sign(inversions(x.set, y.set));
        if (u.size() == 3) {
          value.emplace_back(dim - 1, c);  // a123 = b123 = tau
        } else {
          for (int k = 0; k < dim; ++k) {
            const auto& z = layout[static_cast<std::size_t>(k)];
            if (z.family == x.family && z.set == u) {
              value.emplace_back(k, c);
              break;
            }
          }
        }
      }
      // distinct families in positive degree multiply to zero
      ring.set_product(i, j, std::move(value));
    }
  }
  return ring;
}

namespace {

// Solves M c = rhs for square nonsingular rational M; empty result if singular.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const int n = static_cast<int>(m.size());
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return {};
    std::swap(m[static_cast<std::size_t>(c)], m[static_cast<std::size_t>(pivot)]);
    std::swap(rhs[static_cast<std::size_t>(c)], rhs[static_cast<std::size_t>(pivot)]);
    const Rational p = m[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
    for (int k = c; k < n; ++k) m[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)] /= p;
    rhs[static_cast<std::size_t>(c)] /= p;
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      const Rational f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (f == 0) continue;
      for (int k = c; k < n; ++k)
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] -= f * m[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
      rhs[static_cast<std::size_t>(r)] -= f * rhs[static_cast<std::size_t>(c)];
    }
  }
  return rhs;
}

}  // namespace

std::vector<ExoticProduct> check_vw_iso() {
  const GeneticCode code = parse_code("632", 6);
  auto [canonical, exact] = build_canonical_ring(code);
  (void)exact;
  const GradedRing genus2 = build_genus2_ring();
  const int dim = canonical.dim();

  auto named = [&](const std::string& n) {
    return RingElement::basis_term(*genus2.find_named(n));
  };

  // The fixed dictionary; composite V classes are images of products.
  std::vector<RingElement> image(static_cast<std::size_t>(dim));
  auto v_image = [&](const IndexSubset& s) {
    RingElement e = RingElement::basis_term(genus2.unit_index());
    for (int i : s.elements()) {
      RingElement vi = named("a" + std::to_string(i));
      vi += named("b" + std::to_string(i));
      e = genus2.multiply(e, vi);
    }
    return e;
  };
  const std::vector<std::pair<std::string, std::string>> w_dictionary = {
      {"12", "a3"}, {"13", "b2"}, {"23", "a1"}, {"1", "b2b3"}, {"2", "a1a3"}, {"3", "b1b2"}};
  for (int i = 0; i < dim; ++i) {
    const BasisClass& b = canonical.basis_class(i);
    if (b.kind == BasisClass::Kind::V) {
      image[static_cast<std::size_t>(i)] = v_image(b.set);
    } else {
      if (b.set.empty()) {
        image[static_cast<std::size_t>(i)] = named("tau");
        continue;
      }
      std::string key = subscript_string(b.set);
      for (const auto& [sub, value] : w_dictionary)
        if (sub == key) image[static_cast<std::size_t>(i)] = named(value);
      if (image[static_cast<std::size_t>(i)].is_zero())
        raise(Errc::iso_violation, "missing dictionary entry for W_" + key);
    }
  }

  // Linear isomorphism: images must form a basis of the genus-2 ring.
  std::vector<std::vector<Rational>> mat(static_cast<std::size_t>(dim),
                                         std::vector<Rational>(static_cast<std::size_t>(dim), Rational(0)));
  for (int j = 0; j < dim; ++j)
    for (const auto& [k, c] : image[static_cast<std::size_t>(j)].coeffs())
      mat[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = c;
  {
    auto copy = mat;
    if (matrix_rank(std::move(copy)) != dim)
      raise(Errc::iso_violation, "dictionary images are not a basis");
  }
  auto preimage = [&](const RingElement& e) {
    std::vector<Rational> rhs(static_cast<std::size_t>(dim), Rational(0));
    for (const auto& [k, c] : e.coeffs()) rhs[static_cast<std::size_t>(k)] = c;
    std::vector<Rational> sol = solve_linear(mat, std::move(rhs));
    RingElement out;
    for (int i = 0; i < dim; ++i) out.add(i, sol[static_cast<std::size_t>(i)]);
    return out;
  };

  const int m = canonical.m();
  const RingElement top_image = image[static_cast<std::size_t>(canonical.top_index())];

  // Structural checks the dictionary is supposed to satisfy.
  for (int i = 0; i < dim; ++i) {
    const BasisClass& x = canonical.basis_class(i);
    for (int j = 0; j < dim; ++j) {
      const BasisClass& y = canonical.basis_class(j);
      if (x.degree + y.degree != m) continue;
      RingElement p = genus2.multiply(image[static_cast<std::size_t>(i)], image[static_cast<std::size_t>(j)]);
      if (x.kind == BasisClass::Kind::V && y.kind == BasisClass::Kind::W) {
        if (x.set == y.set) {
          if (p != top_image && p != top_image.scaled(-1))
            raise(Errc::iso_violation,
                  "pairing " + canonical.describe(i) + "*" + canonical.describe(j) + " is not +-W_{}");
        } else if (!p.is_zero()) {
          raise(Errc::iso_violation,
                "off-diagonal pairing " + canonical.describe(i) + "*" + canonical.describe(j) + " is nonzero");
        }
      }
      if (x.kind == BasisClass::Kind::W && y.kind == BasisClass::Kind::W && !p.is_zero())
        raise(Errc::iso_violation, "complementary W product is nonzero");
    }
  }
  {
    // The one pairing sign the dictionary pins down exactly.
    const int v12 = *canonical.find_v(IndexSubset({1, 2}));
    const int w12 = *canonical.find_w(IndexSubset({1, 2}));
    if (genus2.multiply(image[static_cast<std::size_t>(v12)], image[static_cast<std::size_t>(w12)]) != top_image)
      raise(Errc::iso_violation, "V_12*W_12 does not map to +tau");
  }

  // Everything that deviates from the canonical model is an exotic product.
  std::vector<ExoticProduct> exotic;
  for (int i = 0; i < dim; ++i) {
    if (i == canonical.unit_index()) continue;
    for (int j = i; j < dim; ++j) {
      if (j == canonical.unit_index()) continue;
      RingElement actual =
          preimage(genus2.multiply(image[static_cast<std::size_t>(i)], image[static_cast<std::size_t>(j)]));
      RingElement model = canonical.multiply(RingElement::basis_term(i), RingElement::basis_term(j));
      if (actual != model) {
        exotic.push_back({canonical.describe(i), canonical.describe(j), canonical.describe(model),
                          canonical.describe(actual)});
      }
    }
  }
  return exotic;
}

}  // namespace polyzcl
