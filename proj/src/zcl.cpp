#include "polyzcl/zcl.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#include "polyzcl/errors.hpp"
#include "polyzcl/poset.hpp"

namespace polyzcl {

TensorElement TensorElement::unit(const GradedRing& ring) {
  return term(ring, ring.unit_index(), ring.unit_index());
}

TensorElement TensorElement::term(const GradedRing& ring, int a, int b, Rational coeff) {
  TensorElement e(ring);
  e.add(a, b, coeff);
  return e;
}

Rational TensorElement::coeff(int a, int b) const {
  auto it = coeffs_.find({a, b});
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void TensorElement::add(int a, int b, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace({a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

TensorElement tensor_multiply(const TensorElement& x, const TensorElement& y) {
  const GradedRing& ring = x.ring();
  if (&ring != &y.ring()) throw std::logic_error("tensor factors over different rings");
  TensorElement out(ring);
  for (const auto& [xp, cx] : x.coeffs()) {
    const auto [a, b] = xp;
    for (const auto& [yp, cy] : y.coeffs()) {
      const auto [c, d] = yp;
      Rational coeff = cx * cy;
      if ((ring.degree(b) * ring.degree(c)) % 2 != 0) coeff = -coeff;
      for (const auto& [left, cl] : ring.product(a, c))
        for (const auto& [right, cr] : ring.product(b, d)) out.add(left, right, coeff * cl * cr);
    }
  }
  return out;
}

TensorElement bar(const GradedRing& ring, int basis_index) {
  TensorElement e(ring);
  e.add(basis_index, ring.unit_index(), 1);
  e.add(ring.unit_index(), basis_index, -1);
  return e;
}

RingElement mult_map(const TensorElement& x) {
  const GradedRing& ring = x.ring();
  RingElement out;
  for (const auto& [p, c] : x.coeffs())
    for (const auto& [k, ck] : ring.product(p.first, p.second)) out.add(k, c * ck);
  return out;
}

namespace {

std::string bar_label(const GradedRing& ring, int index) { return "bar(" + ring.describe(index) + ")"; }

TensorElement evaluate_certificate(const GradedRing& ring, const IndexSubset& s, const IndexSubset& t,
                                   bool append_wt, std::vector<std::string>* factors) {
  std::vector<int> factor_indices;
  for (int i : s.elements()) factor_indices.push_back(*ring.find_v(IndexSubset({i})));
  factor_indices.push_back(*ring.find_w(s));
  for (int j : t.elements()) factor_indices.push_back(*ring.find_v(IndexSubset({j})));
  if (append_wt) factor_indices.push_back(*ring.find_w(t));

  TensorElement product = TensorElement::unit(ring);
  std::vector<std::string> labels;
  for (int idx : factor_indices) {
    product = tensor_multiply(product, bar(ring, idx));
    labels.push_back(bar_label(ring, idx));
  }
  if (factors) *factors = std::move(labels);
  return product;
}

}  // namespace

TensorElement certificate_product(const GradedRing& ring, const GeneticCode& code, int k,
                                  std::vector<std::string>* factors) {
  bool any_partition = false;
  TensorElement last(ring);
  const bool append_wt = ((k % 2) == (code.m() % 2));
  for (const auto& g : code.gees()) {
    for (const auto& g2 : code.gees()) {
      auto part = find_partition(g, g2, k);
      if (!part) continue;
      any_partition = true;
      std::vector<std::string> labels;
      TensorElement product = evaluate_certificate(ring, part->first, part->second, append_wt, &labels);
      if (!product.is_zero()) {
        if (factors) *factors = std::move(labels);
        return product;
      }
      last = std::move(product);
      if (factors) *factors = std::move(labels);
    }
  }
  if (!any_partition)
    raise(Errc::no_partition, "no gee pair admits a partition of [" + std::to_string(k) + "]");
  return last;
}

ZclBounds zcl_bounds(const GeneticCode& code) {
  auto [ring, exact] = build_canonical_ring(code);
  return zcl_bounds(ring, exact, code);
}

ZclBounds zcl_bounds(const GradedRing& ring, bool model_exact, const GeneticCode& code) {
  const int m = code.m();
  const int s = code.max_gee_size();
  const int k_best = k0(code.gees());
  auto parity_bound = [m](int k) { return (k % 2 == m % 2) ? k + 2 : k + 1; };

  ZclBounds bounds;
  bounds.lower = parity_bound(k_best);
  bounds.upper = std::min(2 * s + 2, 2 * m);

  // Verify the claimed witness by direct evaluation; fall back and flag if the
  // partition or the nonzero-ness ever fails to materialize.
  int verified_k = -1;
  std::vector<std::string> factors;
  for (int k = k_best; k >= 0; --k) {
    try {
      TensorElement product = certificate_product(ring, code, k, &factors);
      if (!product.is_zero()) {
        verified_k = k;
        break;
      }
    } catch (const Error& e) {
      if (e.code() != Errc::no_partition) throw;
    }
    factors.clear();
  }
  if (verified_k == k_best) {
    bounds.certificate = [&] {
      std::string out;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) out += "*";
        out += factors[i];
      }
      return out;
    }();
    if (model_exact) {
      bounds.exact = bounds.lower;
      bounds.upper = bounds.lower;
    }
  } else {
    bounds.warnings.push_back("certificate verification failed at k0=" + std::to_string(k_best) +
                              "; verified level " + std::to_string(verified_k));
    bounds.lower = verified_k >= 0 ? parity_bound(verified_k) : 0;
  }
  return bounds;
}

std::vector<TensorElement> barred_generators(const GradedRing& ring) {
  std::vector<int> indices;
  for (int i = 0; i < ring.dim(); ++i) {
    if (ring.degree(i) == 1 || ring.basis_class(i).kind == BasisClass::Kind::W) indices.push_back(i);
  }
  std::vector<TensorElement> gens;
  gens.reserve(indices.size());
  for (int i : indices) gens.push_back(bar(ring, i));
  return gens;
}

namespace {

std::string normalized_key(const TensorElement& x) {
  // Scale so the first stored coefficient is 1; products that differ by a
  // nonzero scalar extend identically.
  const Rational lead = x.coeffs().begin()->second;
  std::string key;
  for (const auto& [p, c] : x.coeffs()) {
    key += std::to_string(p.first);
    key.push_back(',');
    key += std::to_string(p.second);
    key.push_back(':');
    key += to_string(Rational(c / lead));
    key.push_back(';');
  }
  return key;
}

}  // namespace

int search_zcl(const GradedRing& ring, const std::vector<TensorElement>& generators, int max_len,
               std::size_t budget) {
  for (const auto& g : generators)
    if (!mult_map(g).is_zero()) throw std::logic_error("search generator is not a zero divisor");

  std::unordered_map<std::string, int> memo;
  std::function<int(const TensorElement&)> extend = [&](const TensorElement& p) -> int {
    const std::string key = normalized_key(p);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    if (memo.size() >= budget)
      raise(Errc::budget_exceeded, "zero-divisor search exceeded " + std::to_string(budget) + " states");
    memo.emplace(key, 0);
    int best = 0;
    for (const auto& g : generators) {
      TensorElement q = tensor_multiply(p, g);
      if (q.is_zero()) continue;
      best = std::max(best, 1 + extend(q));
    }
    memo[key] = best;
    return best;
  };
  return std::min(extend(TensorElement::unit(ring)), max_len);
}

std::pair<int, int> tc_bounds(const GeneticCode& code) {
  ZclBounds bounds = zcl_bounds(code);
  return {bounds.lower + 1, 2 * code.n() - 5};
}

}  // namespace polyzcl
