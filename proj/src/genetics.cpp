#include "polyzcl/genetics.hpp"

#include <algorithm>
#include <cctype>

#include "polyzcl/errors.hpp"

namespace polyzcl {

LengthVector::LengthVector(std::vector<Rational> lengths) : lengths_(std::move(lengths)) {
  if (lengths_.size() < 3) raise(Errc::parse_error, "a length vector needs at least 3 sides");
  for (const auto& l : lengths_)
    if (l <= 0) raise(Errc::parse_error, "side lengths must be positive");
  std::sort(lengths_.begin(), lengths_.end());
}

Rational LengthVector::total() const {
  Rational t = 0;
  for (const auto& l : lengths_) t += l;
  return t;
}

Rational LengthVector::subset_sum(const IndexSubset& s) const {
  Rational t = 0;
  for (int i : s.elements()) {
    if (i > n()) raise(Errc::parse_error, "subset index exceeds n");
    t += length(i);
  }
  return t;
}

bool gene_order_less(const IndexSubset& a, const IndexSubset& b) {
  const auto& av = a.elements();
  const auto& bv = b.elements();
  return std::lexicographical_compare(av.rbegin(), av.rend(), bv.rbegin(), bv.rend());
}

GeneticCode::GeneticCode(int n, std::vector<IndexSubset> genes) : n_(n), genes_(std::move(genes)) {
  if (n_ < 3) raise(Errc::parse_error, "genetic codes need n >= 3");
  if (genes_.empty()) raise(Errc::empty_space, "a nonempty space has at least the gene {n}");
  std::sort(genes_.begin(), genes_.end(), gene_order_less);
  genes_.erase(std::unique(genes_.begin(), genes_.end()), genes_.end());
  for (const auto& g : genes_) {
    if (!g.contains(n_))
      raise(Errc::parse_error, "every gene must contain n = " + std::to_string(n_));
    if (g.max_element() > n_) raise(Errc::parse_error, "gene element exceeds n");
  }
  for (std::size_t i = 0; i < genes_.size(); ++i)
    for (std::size_t j = 0; j < genes_.size(); ++j)
      if (i != j && dominates(genes_[i], genes_[j]))
        raise(Errc::not_antichain, "genes " + format_subset(genes_[i]) + " and " +
                                       format_subset(genes_[j]) + " are comparable");
  gees_.reserve(genes_.size());
  for (const auto& g : genes_) gees_.push_back(g.without(n_));
}

int GeneticCode::max_gee_size() const {
  int s = 0;
  for (const auto& g : gees_) s = std::max(s, g.size());
  return s;
}

bool code_order_less(const GeneticCode& a, const GeneticCode& b) {
  if (a.n() != b.n()) return a.n() < b.n();
  return std::lexicographical_compare(a.genes().begin(), a.genes().end(), b.genes().begin(),
                                      b.genes().end(), gene_order_less);
}

bool is_generic(const LengthVector& l, int cap) {
  const int n = l.n();
  if (n > cap) raise(Errc::size_limit, "genericity scan limited to n <= " + std::to_string(cap));
  const Rational total = l.total();
  const std::uint32_t full = (1u << n) - 1u;
  // Each split {S, S^c} is seen twice; scanning everything is still cheap.
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    Rational sum = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) sum += l.length(i + 1);
    if (2 * sum == total) return false;
  }
  return true;
}

bool is_short(const LengthVector& l, const IndexSubset& s) {
  return 2 * l.subset_sum(s) < l.total();
}

GeneticCode genetic_code(const LengthVector& l, int cap) {
  const int n = l.n();
  if (!is_generic(l, cap)) raise(Errc::not_generic, "length vector is not generic");
  if (!is_short(l, IndexSubset({n}))) raise(Errc::empty_space, "side n is long: M(l) is empty");

  std::vector<IndexSubset> shorts;  // short subsets containing n
  const std::uint32_t n_bit = 1u << (n - 1);
  for (std::uint32_t mask = n_bit; mask < (1u << n); ++mask) {
    if (!(mask & n_bit)) continue;
    IndexSubset s = IndexSubset::from_mask(mask);
    if (is_short(l, s)) shorts.push_back(std::move(s));
  }
  std::vector<IndexSubset> maximal;
  for (const auto& s : shorts) {
    bool is_max = true;
    for (const auto& t : shorts) {
      if (s != t && dominates(s, t)) {
        is_max = false;
        break;
      }
    }
    if (is_max) maximal.push_back(s);
  }
  return GeneticCode(n, std::move(maximal));
}

std::vector<IndexSubset> subgees(const GeneticCode& code) {
  const int top = code.n() - 1;
  std::vector<IndexSubset> out;
  for (std::uint32_t mask = 0; mask < (1u << top); ++mask) {
    IndexSubset s = IndexSubset::from_mask(mask);
    for (const auto& gee : code.gees()) {
      if (dominates(s, gee)) {
        out.push_back(std::move(s));
        break;
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const IndexSubset& a, const IndexSubset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements() < b.elements();
  });
  return out;
}

std::vector<int> subgee_counts(const GeneticCode& code) {
  std::vector<int> a(static_cast<std::size_t>(code.max_gee_size()) + 1, 0);
  for (const auto& s : subgees(code)) a[static_cast<std::size_t>(s.size())]++;
  return a;
}

bool is_connected(const GeneticCode& code) {
  return !(code.genes().size() == 1 && code.gees()[0] == IndexSubset::initial_segment(code.n() - 3));
}

namespace {

IndexSubset parse_gene(std::string_view text, int n) {
  std::vector<int> elems;
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') raise(Errc::parse_error, "unterminated '{' in gene");
    std::string_view body = text.substr(1, text.size() - 2);
    std::size_t pos = 0;
    while (pos <= body.size()) {
      std::size_t comma = body.find(',', pos);
      std::string_view item = body.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
      if (item.empty()) raise(Errc::parse_error, "empty element in gene");
      int value = 0;
      for (char c : item) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          raise(Errc::parse_error, std::string("bad integer '") + std::string(item) + "' in gene");
        value = value * 10 + (c - '0');
      }
      elems.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        raise(Errc::parse_error, std::string("unexpected character '") + c + "' in gene");
      elems.push_back(c - '0');
    }
  }
  if (elems.empty()) raise(Errc::parse_error, "empty gene");
  for (int e : elems)
    if (e < 1) raise(Errc::parse_error, "gene elements are positive integers");
  IndexSubset gene(elems);
  if (gene.max_element() > n)
    raise(Errc::parse_error, "gene " + format_subset(gene) + " has an element above n = " + std::to_string(n));
  // Gee notation is accepted: a gene written without n gets n added.
  if (!gene.contains(n)) gene = gene.with(n);
  return gene;
}

}  // namespace

GeneticCode parse_code(std::string_view text, int n) {
  std::string cleaned;
  cleaned.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) cleaned.push_back(c);
  if (cleaned.empty()) raise(Errc::parse_error, "empty genetic code");

  std::vector<IndexSubset> genes;
  std::size_t pos = 0;
  while (pos < cleaned.size()) {
    std::size_t end;
    if (cleaned[pos] == '{') {
      end = cleaned.find('}', pos);
      if (end == std::string::npos) raise(Errc::parse_error, "unterminated '{' in code");
      ++end;
    } else {
      end = cleaned.find_first_of(",;", pos);
      if (end == std::string::npos) end = cleaned.size();
    }
    genes.push_back(parse_gene(std::string_view(cleaned).substr(pos, end - pos), n));
    pos = end;
    if (pos < cleaned.size()) {
      if (cleaned[pos] != ',' && cleaned[pos] != ';')
        raise(Errc::parse_error, "expected ',' or ';' between genes");
      ++pos;
      if (pos == cleaned.size()) raise(Errc::parse_error, "trailing gene separator");
    }
  }
  return GeneticCode(n, std::move(genes));
}

std::string format_subset(const IndexSubset& s) {
  const auto& v = s.elements();
  if (v.empty()) return "{}";
  bool single_digits = s.max_element() <= 9;
  std::string out;
  if (single_digits) {
    for (auto it = v.rbegin(); it != v.rend(); ++it) out.push_back(static_cast<char>('0' + *it));
  } else {
    out.push_back('{');
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
      if (it != v.rbegin()) out.push_back(',');
      out += std::to_string(*it);
    }
    out.push_back('}');
  }
  return out;
}

std::string format_code(const GeneticCode& code) {
  std::string out;
  for (std::size_t i = 0; i < code.genes().size(); ++i) {
    if (i > 0) out.push_back(',');
    out += format_subset(code.genes()[i]);
  }
  return out;
}

}  // namespace polyzcl
