#include "polyzcl/census.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "polyzcl/cohomology.hpp"
#include "polyzcl/errors.hpp"
#include "polyzcl/lp.hpp"

namespace polyzcl {

namespace {

bool is_subgee_of(const IndexSubset& u, const std::vector<IndexSubset>& gees) {
  for (const auto& g : gees)
    if (dominates(u, g)) return true;
  return false;
}

// Dominance-minimal long sets (gee side). A long set is minimal iff every
// covering step down — decrement an element into a gap, where decrementing 1
// removes it — lands on a short set.
std::vector<IndexSubset> minimal_long_sets(int n, const std::vector<IndexSubset>& gees) {
  const std::uint32_t count = 1u << (n - 1);
  std::vector<IndexSubset> out;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    IndexSubset u = IndexSubset::from_mask(mask);
    if (is_subgee_of(u, gees)) continue;
    bool minimal = true;
    for (int e : u.elements()) {
      IndexSubset down;
      if (e == 1) {
        down = u.without(1);
      } else if (!u.contains(e - 1)) {
        down = u.without(e).with(e - 1);
      } else {
        continue;
      }
      if (!is_subgee_of(down, gees)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(std::move(u));
  }
  return out;
}

int default_threads(int threads) {
  if (threads > 0) return threads;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

std::optional<LengthVector> try_realize(const GeneticCode& code) {
  const int n = code.n();
  if (n > 16) raise(Errc::size_limit, "realizability LP limited to n <= 16");
  const int nv = n + 1;  // lengths plus the slack eps
  const int eps = n;     // column index of eps

  std::vector<LpConstraint> cons;
  {
    // eps - l_1 <= 0
    LpConstraint c{std::vector<Rational>(nv, Rational(0)), LpRelation::le, Rational(0)};
    c.coeffs[static_cast<std::size_t>(eps)] = 1;
    c.coeffs[0] = -1;
    cons.push_back(std::move(c));
  }
  for (int i = 0; i + 1 < n; ++i) {
    // l_i - l_{i+1} <= 0
    LpConstraint c{std::vector<Rational>(nv, Rational(0)), LpRelation::le, Rational(0)};
    c.coeffs[static_cast<std::size_t>(i)] = 1;
    c.coeffs[static_cast<std::size_t>(i) + 1] = -1;
    cons.push_back(std::move(c));
  }
  {
    LpConstraint c{std::vector<Rational>(nv, Rational(1)), LpRelation::eq, Rational(1)};
    c.coeffs[static_cast<std::size_t>(eps)] = 0;
    cons.push_back(std::move(c));
  }
  for (const auto& gene : code.genes()) {
    // short with slack: 2*sum + eps <= 1
    LpConstraint c{std::vector<Rational>(nv, Rational(0)), LpRelation::le, Rational(1)};
    for (int i : gene.elements()) c.coeffs[static_cast<std::size_t>(i) - 1] = 2;
    c.coeffs[static_cast<std::size_t>(eps)] = 1;
    cons.push_back(std::move(c));
  }
  for (const auto& long_set : minimal_long_sets(n, code.gees())) {
    // long with slack: 2*sum - eps >= 1, the sum taken over the set plus side n
    LpConstraint c{std::vector<Rational>(nv, Rational(0)), LpRelation::ge, Rational(1)};
    for (int i : long_set.elements()) c.coeffs[static_cast<std::size_t>(i) - 1] = 2;
    c.coeffs[static_cast<std::size_t>(n) - 1] = 2;
    c.coeffs[static_cast<std::size_t>(eps)] = -1;
    cons.push_back(std::move(c));
  }

  std::vector<Rational> objective(nv, Rational(0));
  objective[static_cast<std::size_t>(eps)] = 1;
  LpSolution sol = lp_maximize(objective, cons);
  if (sol.status != LpStatus::optimal || sol.objective <= 0) return std::nullopt;

  LengthVector witness(std::vector<Rational>(sol.x.begin(), sol.x.begin() + n));
  if (!(genetic_code(witness, 16) == code))
    throw std::logic_error("realizability witness fails the round trip for " + format_code(code));
  return witness;
}

LengthVector realize(const GeneticCode& code) {
  auto witness = try_realize(code);
  if (!witness) raise(Errc::not_realizable, "code " + format_code(code) + " is not realizable");
  return *witness;
}

namespace {

// Pairwise dominance and gene-allowability tables over bitmask subsets of [n-1].
struct MaskPoset {
  int n = 0;
  std::uint32_t count = 0;
  std::vector<IndexSubset> sets;
  std::vector<bool> leq;           // count x count: u <= v
  std::vector<bool> pair_allowed;  // ordered (g, g2): not ([n-1]-g2 <= g u {n})

  bool is_leq(std::uint32_t u, std::uint32_t v) const { return leq[u * count + v]; }
  bool allowed(std::uint32_t g, std::uint32_t g2) const { return pair_allowed[g * count + g2]; }

  explicit MaskPoset(int sides) : n(sides), count(1u << (sides - 1)) {
    sets.reserve(count);
    for (std::uint32_t m = 0; m < count; ++m) sets.push_back(IndexSubset::from_mask(m));
    leq.assign(static_cast<std::size_t>(count) * count, false);
    for (std::uint32_t u = 0; u < count; ++u)
      for (std::uint32_t v = 0; v < count; ++v)
        leq[u * count + v] = dominates(sets[u], sets[v]);
    pair_allowed.assign(static_cast<std::size_t>(count) * count, false);
    const std::uint32_t full = count - 1;
    for (std::uint32_t g = 0; g < count; ++g) {
      IndexSubset gene = sets[g].with(n);
      for (std::uint32_t g2 = 0; g2 < count; ++g2) {
        IndexSubset complement = sets[full & ~g2];
        pair_allowed[g * count + g2] = !dominates(complement, gene);
      }
    }
  }
};

void collect_antichains(const MaskPoset& poset, std::vector<std::uint32_t>& current,
                        std::uint32_t start, std::vector<std::vector<std::uint32_t>>& out) {
  for (std::uint32_t u = start; u < poset.count; ++u) {
    if (!poset.allowed(u, u)) continue;
    bool ok = true;
    for (std::uint32_t g : current) {
      if (poset.is_leq(g, u) || poset.is_leq(u, g) || !poset.allowed(g, u) || !poset.allowed(u, g)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    current.push_back(u);
    out.push_back(current);
    collect_antichains(poset, current, u + 1, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<GeneticCode> enumerate_codes(int n, const EnumerateOptions& options,
                                         EnumerateStats* stats) {
  const int cap = options.allow_large ? 11 : 9;
  if (n < 4 || n > cap)
    raise(Errc::size_limit, "enumeration supports 4 <= n <= " + std::to_string(cap));

  MaskPoset poset(n);
  std::vector<std::vector<std::uint32_t>> candidates;
  {
    std::vector<std::uint32_t> current;
    collect_antichains(poset, current, 0, candidates);
  }

  std::vector<GeneticCode> codes;
  codes.reserve(candidates.size());
  for (const auto& gee_masks : candidates) {
    std::vector<IndexSubset> genes;
    genes.reserve(gee_masks.size());
    for (std::uint32_t g : gee_masks) genes.push_back(poset.sets[g].with(n));
    codes.emplace_back(n, std::move(genes));
  }

  const int workers = default_threads(options.threads);
  std::vector<char> keep(codes.size(), 0);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= codes.size()) break;
      keep[i] = try_realize(codes[i]).has_value() ? 1 : 0;
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  std::vector<GeneticCode> out;
  for (std::size_t i = 0; i < codes.size(); ++i)
    if (keep[i]) out.push_back(std::move(codes[i]));
  std::sort(out.begin(), out.end(), code_order_less);
  if (stats) {
    stats->candidates = static_cast<long>(codes.size());
    stats->rejected = static_cast<long>(codes.size() - out.size());
  }
  return out;
}

ClassificationRecord classify(const GeneticCode& code) {
  ClassificationRecord rec;
  rec.n = code.n();
  rec.m = code.m();
  rec.s = code.max_gee_size();
  rec.gees = code.gees();
  rec.subgee_counts = subgee_counts(code);
  rec.k0 = k0(code.gees());
  rec.connected = is_connected(code);
  rec.model_exact = rec.m >= 2 * rec.s;
  rec.tc_upper = 2 * rec.n - 5;
  if (rec.connected) {
    auto [ring, exact] = build_canonical_ring(code);
    ZclBounds zb = zcl_bounds(ring, exact, code);
    rec.zcl_lower = zb.lower;
    rec.zcl_upper = zb.upper;
    rec.zcl_exact = zb.exact;
    rec.tc_lower = zb.lower + 1;
    rec.certificate = zb.certificate;
    rec.warnings = zb.warnings;
    if (!exact) rec.warnings.push_back("canonical model; exotic products possible");
  } else {
    rec.warnings.push_back("disconnected torus pair; outside the canonical-ring analysis");
  }
  return rec;
}

std::vector<CensusEntry> classify_all(const std::vector<GeneticCode>& codes, int threads) {
  std::vector<std::optional<CensusEntry>> slots(codes.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= codes.size()) break;
      slots[i] = CensusEntry{codes[i], classify(codes[i])};
    }
  };
  const int workers = default_threads(threads);
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  std::vector<CensusEntry> out;
  out.reserve(codes.size());
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

bool is_special_code(const GeneticCode& code) {
  if (code.genes().size() != 1) return false;
  const IndexSubset& gee = code.gees()[0];
  const int k = gee.size();
  return k <= code.n() - 4 && gee == IndexSubset::initial_segment(k);
}

CensusSummary summarize(const std::vector<CensusEntry>& entries) {
  CensusSummary s;
  if (entries.empty()) return s;
  s.n = entries.front().code.n();
  s.zcl_threshold = (s.n - 3) + 2;
  s.total = static_cast<int>(entries.size());
  for (const auto& e : entries) {
    if (e.record.model_exact) ++s.model_exact;
    if (e.record.zcl_lower && *e.record.zcl_lower >= s.zcl_threshold) ++s.zcl_at_least_threshold;
    if (!e.record.connected) {
      ++s.disconnected;
    } else if (is_special_code(e.code)) {
      ++s.special;
    } else {
      ++s.by_s[e.record.s];
    }
  }
  return s;
}

std::string format_summary(const CensusSummary& s) {
  std::ostringstream out;
  out << "total codes: " << s.total << "\n";
  out << "special rows: " << s.special << "\n";
  out << "disconnected: " << s.disconnected << "\n";
  for (const auto& [size, count] : s.by_s) out << "s=" << size << ": " << count << "\n";
  out << "model_exact (m >= 2s): " << s.model_exact << "\n";
  out << "zcl_lower >= " << s.zcl_threshold << ": " << s.zcl_at_least_threshold << "\n";
  return out.str();
}

namespace {

std::string opt_to_string(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string();
}

}  // namespace

std::string census_csv(const std::vector<CensusEntry>& entries) {
  std::string out = "n,genes,s,k0,zcl_lower,zcl_upper,zcl_exact,connected\n";
  for (const auto& e : entries) {
    out += std::to_string(e.code.n());
    out += ",\"" + format_code(e.code) + "\",";
    out += std::to_string(e.record.s) + ",";
    out += std::to_string(e.record.k0) + ",";
    out += opt_to_string(e.record.zcl_lower) + ",";
    out += opt_to_string(e.record.zcl_upper) + ",";
    out += opt_to_string(e.record.zcl_exact) + ",";
    out += e.record.connected ? "true" : "false";
    out += "\n";
  }
  return out;
}

std::vector<CensusEntry> parse_census_csv(const std::string& text) {
  std::vector<CensusEntry> out;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (first) {
      first = false;
      if (line.rfind("n,genes", 0) == 0) continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      std::string field;
      if (pos < line.size() && line[pos] == '"') {
        std::size_t close = line.find('"', pos + 1);
        if (close == std::string::npos) raise(Errc::parse_error, "unterminated quote in census CSV");
        field = line.substr(pos + 1, close - pos - 1);
        pos = close + 1;
        if (pos < line.size() && line[pos] == ',') ++pos;
      } else {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string::npos) {
          field = line.substr(pos);
          pos = line.size() + 1;
        } else {
          field = line.substr(pos, comma - pos);
          pos = comma + 1;
        }
      }
      fields.push_back(std::move(field));
      if (pos == line.size() + 1) break;
      if (pos == line.size()) {  // trailing comma: one empty field
        fields.emplace_back();
        break;
      }
    }
    if (fields.size() != 8) raise(Errc::parse_error, "census CSV row with wrong arity");
    auto to_int = [](const std::string& f) {
      try {
        std::size_t used = 0;
        int v = std::stoi(f, &used);
        if (used != f.size()) throw std::invalid_argument(f);
        return v;
      } catch (const std::exception&) {
        raise(Errc::parse_error, "bad integer '" + f + "' in census CSV");
      }
    };
    const int n = to_int(fields[0]);
    GeneticCode code = parse_code(fields[1], n);
    ClassificationRecord rec;
    rec.n = n;
    rec.m = n - 3;
    rec.s = to_int(fields[2]);
    rec.k0 = to_int(fields[3]);
    auto opt_int = [&](const std::string& f) {
      return f.empty() ? std::optional<int>() : std::optional<int>(to_int(f));
    };
    rec.zcl_lower = opt_int(fields[4]);
    rec.zcl_upper = opt_int(fields[5]);
    rec.zcl_exact = opt_int(fields[6]);
    rec.connected = fields[7] == "true";
    rec.gees = code.gees();
    rec.model_exact = rec.m >= 2 * rec.s;
    rec.tc_upper = 2 * n - 5;
    if (rec.zcl_lower) rec.tc_lower = *rec.zcl_lower + 1;
    out.push_back(CensusEntry{std::move(code), std::move(rec)});
  }
  return out;
}

}  // namespace polyzcl
