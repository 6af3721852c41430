#include "polyzcl/report.hpp"

#include <sstream>

#include "polyzcl/errors.hpp"
#include "polyzcl/zcl.hpp"

namespace polyzcl {

namespace {

bool is_genus2_code(const GeneticCode& code) {
  return code.n() == 6 && code.genes().size() == 1 && code.genes()[0] == IndexSubset({6, 3, 2});
}

void add_genus2_note(Report& report) {
  if (!is_genus2_code(report.code)) return;
  GradedRing genus2 = build_genus2_ring();
  int found = search_zcl(genus2, barred_generators(genus2), 7);
  report.notes.push_back(
      "true ring is the connected sum of two 3-tori (exotic products); its barred-generator "
      "search reaches " +
      std::to_string(found) + ", so TC >= " + std::to_string(found + 1));
}

}  // namespace

Report analyze_code(const GeneticCode& code) {
  realize(code);  // throws NotRealizable
  Report report{code, classify(code), betti(code), std::nullopt, {}};
  add_genus2_note(report);
  return report;
}

Report analyze_lengths(const LengthVector& lengths, int cap) {
  GeneticCode code = genetic_code(lengths, cap);
  Report report{code, classify(code), betti(code), lengths, {}};
  add_genus2_note(report);
  return report;
}

nlohmann::ordered_json report_json(const Report& report) {
  nlohmann::ordered_json j;
  const ClassificationRecord& rec = report.record;
  j["n"] = rec.n;
  j["m"] = rec.m;
  j["s"] = rec.s;
  j["code"] = format_code(report.code);
  nlohmann::ordered_json gees = nlohmann::ordered_json::array();
  for (const auto& g : rec.gees) gees.push_back(format_subset(g));
  j["gees"] = gees;
  j["connected"] = rec.connected;
  j["model_exact"] = rec.model_exact;
  j["subgee_counts"] = rec.subgee_counts;
  j["k0"] = rec.k0;
  j["betti"] = report.betti_numbers;
  nlohmann::ordered_json zcl;
  zcl["lower"] = rec.zcl_lower ? nlohmann::ordered_json(*rec.zcl_lower) : nlohmann::ordered_json();
  zcl["upper"] = rec.zcl_upper ? nlohmann::ordered_json(*rec.zcl_upper) : nlohmann::ordered_json();
  zcl["exact"] = rec.zcl_exact ? nlohmann::ordered_json(*rec.zcl_exact) : nlohmann::ordered_json();
  j["zcl"] = zcl;
  nlohmann::ordered_json tc;
  tc["lower"] = rec.tc_lower ? nlohmann::ordered_json(*rec.tc_lower) : nlohmann::ordered_json();
  tc["upper"] = rec.tc_upper;
  j["tc"] = tc;
  j["certificate"] = rec.certificate ? nlohmann::ordered_json(*rec.certificate) : nlohmann::ordered_json();
  if (report.lengths) {
    nlohmann::ordered_json lens = nlohmann::ordered_json::array();
    for (const auto& l : report.lengths->lengths()) lens.push_back(to_string(l));
    j["lengths"] = lens;
  } else {
    j["lengths"] = nullptr;
  }
  j["warnings"] = rec.warnings;
  j["notes"] = report.notes;
  return j;
}

std::string report_human(const Report& report) {
  const ClassificationRecord& rec = report.record;
  std::ostringstream out;
  out << "code:          <" << format_code(report.code) << ">  (n = " << rec.n << ")\n";
  if (report.lengths) {
    out << "lengths:       (";
    const auto& lens = report.lengths->lengths();
    for (std::size_t i = 0; i < lens.size(); ++i) {
      if (i > 0) out << ", ";
      out << to_string(lens[i]);
    }
    out << ")\n";
  }
  out << "m = n-3:       " << rec.m << "\n";
  out << "s (max gee):   " << rec.s << "\n";
  out << "connected:     " << (rec.connected ? "true" : "false") << "\n";
  out << "model exact:   " << (rec.model_exact ? "true" : "false") << "\n";
  out << "subgee counts: (";
  for (std::size_t i = 0; i < rec.subgee_counts.size(); ++i) {
    if (i > 0) out << ", ";
    out << rec.subgee_counts[i];
  }
  out << ")\n";
  out << "k0:            " << rec.k0 << "\n";
  out << "betti:         (";
  for (std::size_t i = 0; i < report.betti_numbers.size(); ++i) {
    if (i > 0) out << ", ";
    out << report.betti_numbers[i];
  }
  out << ")\n";
  if (rec.zcl_lower) {
    if (rec.zcl_exact)
      out << "zcl:           " << *rec.zcl_exact << " (exact)\n";
    else
      out << "zcl:           [" << *rec.zcl_lower << ", " << *rec.zcl_upper << "]\n";
    out << "tc:            [" << *rec.tc_lower << ", " << rec.tc_upper << "]\n";
  } else {
    out << "zcl:           not computed\n";
    out << "tc:            [?, " << rec.tc_upper << "]\n";
  }
  if (rec.certificate) out << "certificate:   " << *rec.certificate << "\n";
  for (const auto& w : rec.warnings) out << "warning:       " << w << "\n";
  for (const auto& n : report.notes) out << "note:          " << n << "\n";
  return out.str();
}

nlohmann::ordered_json ring_json(const GradedRing& ring) {
  nlohmann::ordered_json j;
  j["m"] = ring.m();
  nlohmann::ordered_json basis = nlohmann::ordered_json::array();
  for (int i = 0; i < ring.dim(); ++i) {
    const BasisClass& b = ring.basis_class(i);
    nlohmann::ordered_json e;
    switch (b.kind) {
      case BasisClass::Kind::V:
        e["kind"] = "V";
        break;
      case BasisClass::Kind::W:
        e["kind"] = "W";
        break;
      case BasisClass::Kind::named:
        e["kind"] = "named";
        e["name"] = b.name;
        break;
    }
    e["set"] = b.set.elements();
    e["degree"] = b.degree;
    basis.push_back(e);
  }
  j["basis"] = basis;
  nlohmann::ordered_json products = nlohmann::ordered_json::array();
  for (int i = 0; i < ring.dim(); ++i) {
    for (int k = 0; k < ring.dim(); ++k) {
      const auto& value = ring.product(i, k);
      if (value.empty()) continue;
      nlohmann::ordered_json terms = nlohmann::ordered_json::array();
      for (const auto& [idx, coeff] : value)
        terms.push_back(nlohmann::ordered_json::array({idx, to_string(coeff)}));
      products.push_back(nlohmann::ordered_json::array({i, k, terms}));
    }
  }
  j["products"] = products;
  return j;
}

}  // namespace polyzcl
