#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyzcl/census.hpp"
#include "polyzcl/cohomology.hpp"
#include "polyzcl/genetics.hpp"

namespace polyzcl {

struct Report {
  GeneticCode code;
  ClassificationRecord record;
  std::vector<int> betti_numbers;
  std::optional<LengthVector> lengths;  // input echo or realization witness
  std::vector<std::string> notes;
};

// Full pipeline for a code: realizability check, classification, betti, and
// the genus-2 annotation when the code is <632>.
Report analyze_code(const GeneticCode& code);
Report analyze_lengths(const LengthVector& lengths, int cap = kGenericityCap);

nlohmann::ordered_json report_json(const Report& report);
std::string report_human(const Report& report);

nlohmann::ordered_json ring_json(const GradedRing& ring);

}  // namespace polyzcl
