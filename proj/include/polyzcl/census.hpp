#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyzcl/genetics.hpp"
#include "polyzcl/zcl.hpp"

namespace polyzcl {

// Decides realizability by exact rational LP: lengths normalized to total 1,
// a uniform slack eps on every strict inequality, eps maximized. Only the
// genes (short side) and the dominance-minimal long sets are constrained;
// monotonicity of subset sums under the ordering makes that equivalent to
// constraining all 2^(n-1) subsets containing n.
std::optional<LengthVector> try_realize(const GeneticCode& code);
LengthVector realize(const GeneticCode& code);  // throws NotRealizable

struct EnumerateOptions {
  int threads = 0;          // 0 = hardware concurrency
  bool allow_large = false; // raises the n cap at the caller's risk
};

// How the necessary gene-allowability pre-filter compared with the LP. The
// pre-filter is provably necessary only; a nonzero `rejected` is data about
// its sharpness, not an error.
struct EnumerateStats {
  long candidates = 0;  // antichains passing the pre-filter
  long rejected = 0;    // of those, rejected by the realizability LP
};

// Every realizable genetic code for n, exactly once, in canonical order.
// Nonempty spaces only; the disconnected torus-pair code is included.
std::vector<GeneticCode> enumerate_codes(int n, const EnumerateOptions& options = {},
                                         EnumerateStats* stats = nullptr);

struct ClassificationRecord {
  int n = 0;
  int m = 0;
  int s = 0;
  std::vector<IndexSubset> gees;
  std::vector<int> subgee_counts;  // a_0..a_s
  int k0 = 0;
  std::optional<int> zcl_lower;    // absent for the disconnected code
  std::optional<int> zcl_upper;
  std::optional<int> zcl_exact;
  std::optional<int> tc_lower;
  int tc_upper = 0;
  bool model_exact = false;        // m >= 2s
  bool connected = true;
  std::optional<std::string> certificate;
  std::vector<std::string> warnings;
};

ClassificationRecord classify(const GeneticCode& code);

struct CensusEntry {
  GeneticCode code;
  ClassificationRecord record;
};

std::vector<CensusEntry> classify_all(const std::vector<GeneticCode>& codes, int threads = 0);

// A single gene whose gee is an initial segment [k], k <= n-4: the
// sphere-times-torus products that sit outside the generic tabulation.
bool is_special_code(const GeneticCode& code);

struct CensusSummary {
  int n = 0;
  int total = 0;
  int special = 0;
  int disconnected = 0;
  std::map<int, int> by_s;  // specials and the disconnected code excluded
  int model_exact = 0;
  int zcl_threshold = 0;    // m + 2
  int zcl_at_least_threshold = 0;
};

CensusSummary summarize(const std::vector<CensusEntry>& entries);
std::string format_summary(const CensusSummary& summary);

// CSV schema: n,genes,s,k0,zcl_lower,zcl_upper,zcl_exact,connected.
// The genes field is always quoted; UTF-8, LF line endings.
std::string census_csv(const std::vector<CensusEntry>& entries);
std::vector<CensusEntry> parse_census_csv(const std::string& text);

inline constexpr const char* kCensusFormatVersion = "v1";

}  // namespace polyzcl
