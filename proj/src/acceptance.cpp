#include "polyzcl/acceptance.hpp"

#include <chrono>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "polyzcl/census.hpp"
#include "polyzcl/cohomology.hpp"
#include "polyzcl/errors.hpp"
#include "polyzcl/genetics.hpp"
#include "polyzcl/poset.hpp"
#include "polyzcl/zcl.hpp"

namespace polyzcl {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Checker {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail << (detail.tellp() > 0 ? "; " : "") << what;
    }
  }
  template <typename T>
  void expect_eq(const T& actual, const T& wanted, const std::string& label) {
    if (!(actual == wanted)) {
      ok = false;
      std::ostringstream msg;
      msg << label << " = " << actual << ", wanted " << wanted;
      detail << (detail.tellp() > 0 ? "; " : "") << msg.str();
    }
  }
  std::string text(const std::string& pass_text) const {
    return ok ? pass_text : detail.str();
  }
};

bool has_gee_at_least(const ClassificationRecord& rec, const IndexSubset& floor) {
  for (const auto& g : rec.gees)
    if (dominates(floor, g)) return true;
  return false;
}

bool has_distinct_pair_union_at_least(const ClassificationRecord& rec, int k) {
  const IndexMultiset target = IndexMultiset::initial_segment(k);
  for (std::size_t i = 0; i < rec.gees.size(); ++i)
    for (std::size_t j = i + 1; j < rec.gees.size(); ++j) {
      IndexMultiset u = multiset_union(IndexMultiset(rec.gees[i]), IndexMultiset(rec.gees[j]));
      if (dominates(target, u)) return true;
    }
  return false;
}

CriterionResult census7(std::vector<GeneticCode>& out_codes, int threads) {
  auto start = Clock::now();
  Checker c;
  out_codes = enumerate_codes(7, {threads, false});
  int model_exact = 0;
  for (const auto& code : out_codes)
    if (code.m() >= 2 * code.max_gee_size()) ++model_exact;
  double secs = elapsed(start);
  c.expect_eq(static_cast<int>(out_codes.size()), 134, "n=7 codes");
  c.expect_eq(model_exact, 64, "model-exact count");
  c.expect(secs < 10.0, "runtime " + std::to_string(secs) + "s exceeds 10s");
  return {"census n=7: 134 codes, 64 model-exact, <10s", c.ok, c.text("134 codes, 64 model-exact"), secs};
}

CriterionResult census8(std::vector<CensusEntry>& out_entries, int threads) {
  auto start = Clock::now();
  Checker c;
  std::vector<GeneticCode> codes = enumerate_codes(8, {threads, false});
  out_entries = classify_all(codes, threads);
  double secs = elapsed(start);

  c.expect_eq(static_cast<int>(out_entries.size()), 2469, "n=8 codes");

  int disconnected = 0;
  bool torus_pair_found = false;
  std::set<std::string> specials;
  std::map<int, int> by_s;
  int zcl_ge_7 = 0;
  int s3_gee_531 = 0, s3_pair_5 = 0, s3_rest = 0;
  int s2_gee_42 = 0, s2_pair_4 = 0, s2_rest = 0;
  const IndexSubset floor531({5, 3, 1});
  const IndexSubset floor42({4, 2});
  for (const auto& e : out_entries) {
    const auto& rec = e.record;
    if (rec.zcl_lower && *rec.zcl_lower >= 7) ++zcl_ge_7;
    if (!rec.connected) {
      ++disconnected;
      if (format_code(e.code) == "854321") torus_pair_found = true;
      continue;
    }
    if (is_special_code(e.code)) {
      specials.insert(format_code(e.code));
      continue;
    }
    ++by_s[rec.s];
    if (rec.s == 3) {
      if (has_gee_at_least(rec, floor531))
        ++s3_gee_531;
      else if (has_distinct_pair_union_at_least(rec, 5))
        ++s3_pair_5;
      else
        ++s3_rest;
    } else if (rec.s == 2) {
      if (has_gee_at_least(rec, floor42))
        ++s2_gee_42;
      else if (has_distinct_pair_union_at_least(rec, 4))
        ++s2_pair_4;
      else
        ++s2_rest;
    }
  }
  c.expect_eq(disconnected, 1, "disconnected count");
  c.expect(torus_pair_found, "disconnected code is not 854321");
  c.expect_eq(static_cast<int>(specials.size()), 5, "special-case count");
  c.expect(specials == std::set<std::string>{"8", "81", "821", "8321", "84321"},
           "special-case codes differ");
  c.expect_eq(by_s[1], 6, "s=1 count");
  c.expect_eq(by_s[2], 120, "s=2 count");
  c.expect_eq(by_s[3], 1569, "s=3 count");
  c.expect_eq(by_s[4], 768, "s=4 count");
  c.expect_eq(s3_gee_531, 929, "s=3 with gee >= 531");
  c.expect_eq(s3_pair_5, 524, "s=3 distinct pair union >= [5]");
  c.expect_eq(s3_rest, 116, "s=3 remainder");
  c.expect_eq(s2_gee_42, 85, "s=2 with gee >= 42");
  c.expect_eq(s2_pair_4, 10, "s=2 distinct pair union >= [4]");
  c.expect_eq(s2_rest, 25, "s=2 remainder");
  c.expect_eq(zcl_ge_7, 2221, "zcl_lower >= 7 count");
  c.expect(secs < 600.0, "runtime " + std::to_string(secs) + "s exceeds 600s");
  return {"census n=8: 2469 codes, exact breakdown, 2221 with zcl>=7, <10min", c.ok,
          c.text("2469 codes; 6/120/1569/768 by s; 929+524+116, 85+10+25; zcl>=7: 2221"), secs};
}

CriterionResult example_ring_9421_95() {
  auto start = Clock::now();
  Checker c;
  GeneticCode code = parse_code("9421,95", 9);
  c.expect(betti(code) == std::vector<int>({1, 5, 5, 4, 5, 5, 1}), "betti vector differs");
  auto [ring, exact] = build_canonical_ring(code);
  std::vector<int> degree2 = ring.degree_indices(2);
  std::set<std::string> names;
  for (int i : degree2) names.insert(ring.describe(i));
  c.expect(names == std::set<std::string>{"V_12", "V_13", "V_14", "V_23", "V_24"},
           "degree-2 basis differs");
  c.expect_eq(static_cast<int>(ring.degree_indices(3).size()), 4, "degree-3 dimension");
  ClassificationRecord rec = classify(code);
  c.expect(exact && rec.model_exact, "m >= 2s expected");
  c.expect(rec.zcl_exact && *rec.zcl_exact == 6, "zcl_exact != 6");
  c.expect(rec.tc_lower && *rec.tc_lower == 7 && rec.tc_upper == 13, "tc bounds != (7,13)");
  return {"example <9421,95>: betti, degree-2/3 basis, zcl 6, TC (7,13)", c.ok,
          c.text("betti (1,5,5,4,5,5,1); basis as listed; zcl 6; tc (7,13)"), elapsed(start)};
}

CriterionResult special_cases_table() {
  auto start = Clock::now();
  Checker c;
  const std::vector<std::pair<std::string, int>> wanted = {
      {"8", 1}, {"81", 3}, {"821", 3}, {"8321", 5}, {"84321", 5}};
  for (std::size_t i = 0; i < wanted.size(); ++i) {
    const auto& [text, zcl_lower] = wanted[i];
    ClassificationRecord rec = classify(parse_code(text, 8));
    c.expect(rec.zcl_lower && *rec.zcl_lower == zcl_lower,
             "<" + text + "> zcl_lower != " + std::to_string(zcl_lower));
    if (i < 3)
      c.expect(rec.zcl_exact && *rec.zcl_exact == zcl_lower, "<" + text + "> should be exact");
    else
      c.expect(!rec.zcl_exact, "<" + text + "> should be an interval");
  }
  return {"special cases <8>,<81>,<821>,<8321>,<84321>: zcl 1,3,3,5,5", c.ok,
          c.text("zcl lower bounds 1,3,3,5,5; first three exact"), elapsed(start)};
}

CriterionResult genus2_example() {
  auto start = Clock::now();
  Checker c;
  GeneticCode code = parse_code("632", 6);
  ClassificationRecord rec = classify(code);
  c.expect(rec.zcl_lower && *rec.zcl_lower == 5 && rec.zcl_upper && *rec.zcl_upper == 6,
           "canonical bounds != [5,6]");

  GradedRing genus2 = build_genus2_ring();
  int found = search_zcl(genus2, barred_generators(genus2), 7);
  c.expect_eq(found, 6, "genus-2 search_zcl");

  // The explicit witness: product of the six barred degree-one classes.
  TensorElement witness = TensorElement::unit(genus2);
  for (const std::string& name : {"a1", "a2", "a3", "b1", "b2", "b3"})
    witness = tensor_multiply(witness, bar(genus2, *genus2.find_named(name)));
  const int tau = genus2.top_index();
  TensorElement twice_top = TensorElement::term(genus2, tau, tau, 2);
  TensorElement minus_twice_top = TensorElement::term(genus2, tau, tau, -2);
  c.expect(witness == twice_top || witness == minus_twice_top,
           std::string("witness is not +-2 times the top class (it evaluates to ") +
               (witness.is_zero() ? "0" : std::to_string(witness.coeffs().size()) + " terms") +
               "; the two top terms carry opposite Koszul signs and cancel)");

  const int tc = found + 1;
  c.expect(tc == 7 && 2 * code.n() - 5 == 7, "TC != 7");

  bool saw_ww = false, saw_vw = false;
  for (const auto& e : check_vw_iso()) {
    if (e.left == "W_12" && e.right == "W_23" && e.actual == "-W_2") saw_ww = true;
    if (e.left == "V_2" && e.right == "W_12" && e.actual == "V_23 - W_1") saw_vw = true;
  }
  c.expect(saw_ww, "exotic product W_12*W_23 = -W_2 not reported");
  c.expect(saw_vw, "exotic product V_2*W_12 = -W_1 + V_23 not reported");
  return {"<632>: bounds [5,6], genus-2 witness +-2*top, TC 7, exotic products", c.ok,
          c.text("bounds [5,6]; search 6; witness +-2(tau@tau); TC 7; exotic products reported"),
          elapsed(start)};
}

CriterionResult equilateral_family() {
  auto start = Clock::now();
  Checker c;
  for (int k = 2; k <= 4; ++k) {
    const int n = 2 * k + 1;
    LengthVector ones(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
    GeneticCode code = genetic_code(ones);
    std::vector<int> gene;
    for (int i = n; i >= k + 2; --i) gene.push_back(i);
    c.expect(code == GeneticCode(n, {IndexSubset(gene)}),
             "equilateral code differs for n=" + std::to_string(n));
    ClassificationRecord rec = classify(code);
    c.expect(rec.zcl_exact && *rec.zcl_exact == 2 * k,
             "equilateral zcl != " + std::to_string(2 * k) + " for n=" + std::to_string(n));
  }
  return {"equilateral (2k+1)-gons, k=2,3,4: code {2k+1..k+2}, zcl 2k", c.ok,
          c.text("codes and exact zcl match for k=2,3,4"), elapsed(start)};
}

// Associativity, graded commutativity, duality, zero divisors, the parity
// criterion, and certificate levels, over every connected code with n <= 7.
CriterionResult property_sweep(const std::vector<GeneticCode>& codes7, int threads) {
  auto start = Clock::now();
  Checker c;
  long violations = 0;
  int rings_checked = 0;
  std::string first_violation;

  auto note = [&](const std::string& what) {
    ++violations;
    if (first_violation.empty()) first_violation = what;
  };

  std::vector<GeneticCode> all;
  for (int n = 4; n <= 6; ++n)
    for (auto& code : enumerate_codes(n, {threads, false})) all.push_back(std::move(code));
  for (const auto& code : codes7) all.push_back(code);

  for (const auto& code : all) {
    if (!is_connected(code)) continue;
    ++rings_checked;
    const std::string label = format_code(code);
    auto [ring, exact] = build_canonical_ring(code);
    const int dim = ring.dim();
    const int m = ring.m();

    for (int i = 0; i < dim; ++i) {
      RingElement ei = RingElement::basis_term(i);
      for (int j = 0; j < dim; ++j) {
        RingElement ej = RingElement::basis_term(j);
        RingElement ij = ring.multiply(ei, ej);
        RingElement ji = ring.multiply(ej, ei);
        if ((ring.degree(i) * ring.degree(j)) % 2 != 0) ji = ji.scaled(-1);
        if (!(ij == ji)) note(label + ": commutativity at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        for (int k = 0; k < dim; ++k) {
          RingElement ek = RingElement::basis_term(k);
          if (!(ring.multiply(ij, ek) == ring.multiply(ei, ring.multiply(ej, ek))))
            note(label + ": associativity");
        }
      }
    }

    if (!verify_poincare(ring)) note(label + ": poincare pairing singular");

    // Delta pairing in complementary degrees.
    for (int i = 0; i < dim; ++i) {
      const BasisClass& x = ring.basis_class(i);
      if (x.kind != BasisClass::Kind::V) continue;
      for (int j = 0; j < dim; ++j) {
        const BasisClass& y = ring.basis_class(j);
        if (y.kind != BasisClass::Kind::W || x.degree + y.degree != m) continue;
        RingElement p = ring.multiply(RingElement::basis_term(i), RingElement::basis_term(j));
        RingElement wanted =
            (x.set == y.set) ? RingElement::basis_term(ring.top_index()) : RingElement();
        if (!(p == wanted)) note(label + ": pairing is not delta");
      }
    }

    std::vector<int> b = betti(code);
    for (int d = 0; d <= m; ++d) {
      if (b[static_cast<std::size_t>(d)] != static_cast<int>(ring.degree_indices(d).size()))
        note(label + ": betti/basis mismatch");
      if (b[static_cast<std::size_t>(d)] != b[static_cast<std::size_t>(m - d)])
        note(label + ": betti not symmetric");
    }

    for (int i = 0; i < dim; ++i)
      if (!mult_map(bar(ring, i)).is_zero()) note(label + ": bar not a zero divisor");

    // Parity criterion over disjoint subgee triples whose W subscripts exist.
    std::vector<IndexSubset> subs = subgees(code);
    std::set<IndexSubset> subgee_set(subs.begin(), subs.end());
    auto barred_v_product = [&](const IndexSubset& d, TensorElement acc) {
      for (int i : d.elements()) acc = tensor_multiply(acc, bar(ring, *ring.find_v(IndexSubset({i}))));
      return acc;
    };
    for (const auto& d1 : subs) {
      for (const auto& d2 : subs) {
        if (!d1.disjoint_with(d2)) continue;
        for (const auto& d3 : subs) {
          if (!d1.disjoint_with(d3) || !d2.disjoint_with(d3)) continue;
          IndexSubset w1 = d1.set_union(d3);
          IndexSubset w2 = d2.set_union(d3);
          if (!subgee_set.count(w1) || !subgee_set.count(w2)) continue;
          TensorElement p = barred_v_product(d1, TensorElement::unit(ring));
          p = barred_v_product(d2, std::move(p));
          p = barred_v_product(d3, std::move(p));
          p = tensor_multiply(p, bar(ring, *ring.find_w(w1)));
          p = tensor_multiply(p, bar(ring, *ring.find_w(w2)));
          const int total = d1.size() + d2.size() + d3.size();
          const bool expected_nonzero = (total % 2) == (m % 2);
          if (p.is_zero() == expected_nonzero) note(label + ": parity criterion");
        }
      }
    }

    // Certificates at every level up to k0, and none above it.
    const int kk = k0(code.gees());
    for (int k = 0; k <= kk; ++k) {
      TensorElement cert = certificate_product(ring, code, k);
      if (cert.is_zero()) note(label + ": certificate zero at k=" + std::to_string(k));
    }
    for (int k = kk + 1; k <= kk + 2; ++k) {
      bool no_partition = false;
      try {
        certificate_product(ring, code, k);
      } catch (const Error& e) {
        no_partition = e.code() == Errc::no_partition;
      }
      if (!no_partition) note(label + ": partition exists beyond k0");
    }

    // The barred-generator search sits inside the bounds, and matches the
    // formula exactly when the model is the whole ring. Exhaustive through
    // n = 6, sampled for n = 7.
    if (code.n() <= 6 || (rings_checked % 7) == 0) {
      ZclBounds zb = zcl_bounds(ring, exact, code);
      int found = search_zcl(ring, barred_generators(ring), 2 * m);
      if (found < zb.lower || found > zb.upper) note(label + ": search outside zcl bounds");
      if (exact && found != zb.lower) note(label + ": exact-model search differs from the formula");
    }
  }

  double secs = elapsed(start);
  c.expect(violations == 0, std::to_string(violations) + " violations, first: " + first_violation);
  c.expect(secs < 300.0, "runtime " + std::to_string(secs) + "s exceeds 300s");
  return {"property sweep over all connected codes, n <= 7", c.ok,
          c.text(std::to_string(rings_checked) + " rings, zero violations"), secs};
}

CriterionResult round_trip(const std::vector<GeneticCode>& codes7,
                           const std::vector<CensusEntry>& entries8) {
  auto start = Clock::now();
  Checker c;
  long checked = 0, failures = 0;
  auto verify = [&](const GeneticCode& code) {
    ++checked;
    auto witness = try_realize(code);
    if (!witness || !(genetic_code(*witness) == code)) ++failures;
  };
  for (int n = 4; n <= 6; ++n)
    for (const auto& code : enumerate_codes(n, {})) verify(code);
  for (const auto& code : codes7) verify(code);  // whole population (134 < 200)
  // 8-gons: a deterministic sample of at least 200.
  const std::size_t total = entries8.size();
  for (std::size_t i = 0; i < total; i += 12) verify(entries8[i].code);
  c.expect(failures == 0, std::to_string(failures) + " round-trip failures");
  return {"round trip genetic_code(realize(code)) == code, n<=6 exhaustive, n=7,8 sampled", c.ok,
          c.text(std::to_string(checked) + " codes, zero failures"), elapsed(start)};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(int threads) {
  std::vector<CriterionResult> results;
  std::vector<GeneticCode> codes7;
  std::vector<CensusEntry> entries8;
  results.push_back(census7(codes7, threads));
  results.push_back(census8(entries8, threads));
  results.push_back(example_ring_9421_95());
  results.push_back(special_cases_table());
  results.push_back(genus2_example());
  results.push_back(equilateral_family());
  results.push_back(property_sweep(codes7, threads));
  results.push_back(round_trip(codes7, entries8));
  return results;
}

bool report_acceptance(const std::vector<CriterionResult>& results, std::ostream& out) {
  bool all = true;
  int index = 1;
  for (const auto& r : results) {
    out << (r.pass ? "PASS" : "FAIL") << "  " << index++ << ". " << r.name << " — " << r.detail
        << "  [" << static_cast<long>(r.seconds * 10) / 10.0 << "s]\n";
    all = all && r.pass;
  }
  out << (all ? "all criteria passed" : "ACCEPTANCE FAILURES PRESENT") << "\n";
  return all;
}

}  // namespace polyzcl
