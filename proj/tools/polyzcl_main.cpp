#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyzcl/acceptance.hpp"
#include "polyzcl/census.hpp"
#include "polyzcl/cohomology.hpp"
#include "polyzcl/errors.hpp"
#include "polyzcl/genetics.hpp"
#include "polyzcl/report.hpp"
#include "polyzcl/zcl.hpp"

namespace {

using polyzcl::Errc;

int exit_code_for(const polyzcl::Error& e) {
  switch (e.code()) {
    case Errc::parse_error:
    case Errc::not_antichain:
    case Errc::size_limit:
      return 2;
    case Errc::not_generic:
    case Errc::empty_space:
    case Errc::not_realizable:
    case Errc::disconnected:
      return 3;
    case Errc::budget_exceeded:
      return 4;
    default:
      return 1;
  }
}

polyzcl::LengthVector parse_lengths(const std::string& text) {
  std::vector<polyzcl::Rational> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    values.push_back(polyzcl::parse_rational(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return polyzcl::LengthVector(std::move(values));
}

void write_output(const std::string& out_file, const std::string& content) {
  if (out_file.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_file, std::ios::binary);
  if (!out) polyzcl::raise(Errc::parse_error, "cannot open output file " + out_file);
  out << content;
}

std::string cache_path(int n, bool classified) {
  return std::string(".polyzcl-cache/census_n") + std::to_string(n) + "_" +
         polyzcl::kCensusFormatVersion + (classified ? "_classified" : "_codes") + ".csv";
}

nlohmann::ordered_json summary_json(const polyzcl::CensusSummary& s) {
  nlohmann::ordered_json j;
  j["total"] = s.total;
  j["special"] = s.special;
  j["disconnected"] = s.disconnected;
  nlohmann::ordered_json by_s;
  for (const auto& [size, count] : s.by_s) by_s[std::to_string(size)] = count;
  j["by_s"] = by_s;
  j["model_exact"] = s.model_exact;
  j["zcl_threshold"] = s.zcl_threshold;
  j["zcl_at_least_threshold"] = s.zcl_at_least_threshold;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rational cohomology, zero-divisor-cup-length and TC bounds for planar polygon spaces"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  std::string out_file;
  int threads = 0;
  long budget = 1000000;
  app.add_flag("--json", json, "machine-readable output");
  app.add_option("--out", out_file, "write the primary output to FILE");
  app.add_option("--threads", threads, "worker threads, 0 = auto");
  app.add_option("--budget", budget, "state cap for zero-divisor searches");
  bool allow_large = false;
  app.add_flag("--allow-large", allow_large, "raise the desk-scale n caps at your own risk");

  std::string lengths_text, code_text;
  int n = 0;

  auto* analyze = app.add_subcommand("analyze", "classify one polygon space");
  analyze->add_option("--lengths", lengths_text, "side lengths, e.g. 1,1,1,3,3,4 or 1/2,2/3,...");
  analyze->add_option("--code", code_text, "genetic code, e.g. 9421,95");
  analyze->add_option("--n", n, "number of sides, required with --code");

  auto* enumerate = app.add_subcommand("enumerate", "census of realizable genetic codes");
  int enum_n = 0;
  bool classify_flag = false, no_cache = false;
  enumerate->add_option("--n", enum_n, "number of sides, 4..9")->required();
  enumerate->add_flag("--classify", classify_flag, "compute zcl / TC columns");
  enumerate->add_flag("--no-cache", no_cache, "ignore and do not touch the census cache");

  auto* realize_cmd = app.add_subcommand("realize", "find a length vector with the given code");
  realize_cmd->add_option("--code", code_text, "genetic code")->required();
  realize_cmd->add_option("--n", n, "number of sides")->required();

  auto* ring_cmd = app.add_subcommand("ring", "dump the cohomology ring as JSON");
  bool genus2 = false;
  ring_cmd->add_option("--code", code_text, "genetic code");
  ring_cmd->add_option("--n", n, "number of sides");
  ring_cmd->add_flag("--genus2", genus2, "dump the connected sum of two 3-tori instead");

  auto* zcl_cmd = app.add_subcommand("zcl", "zero-divisor-cup-length bounds");
  bool run_search = false;
  zcl_cmd->add_option("--code", code_text, "genetic code");
  zcl_cmd->add_option("--n", n, "number of sides");
  zcl_cmd->add_option("--lengths", lengths_text, "side lengths");
  zcl_cmd->add_flag("--search", run_search, "also search products of barred generators");

  auto* verify = app.add_subcommand("verify-tables", "run the full verification table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (analyze->parsed()) {
      const bool have_lengths = !lengths_text.empty();
      const bool have_code = !code_text.empty();
      if (have_lengths == have_code)
        polyzcl::raise(Errc::parse_error, "analyze needs exactly one of --lengths or --code");
      if (have_code && n == 0) polyzcl::raise(Errc::parse_error, "--code requires --n");
      const int cap = allow_large ? 16 : polyzcl::kGenericityCap;
      polyzcl::Report report = have_lengths
                                   ? polyzcl::analyze_lengths(parse_lengths(lengths_text), cap)
                                   : polyzcl::analyze_code(polyzcl::parse_code(code_text, n));
      write_output(out_file, json ? polyzcl::report_json(report).dump(2) + "\n"
                                  : polyzcl::report_human(report));
      return 0;
    }

    if (enumerate->parsed()) {
      std::vector<polyzcl::CensusEntry> entries;
      bool loaded = false;
      if (!no_cache) {
        // A classified cache serves both flavors; a codes-only cache serves
        // only the light one.
        std::vector<std::string> paths = {cache_path(enum_n, true)};
        if (!classify_flag) paths.push_back(cache_path(enum_n, false));
        for (const auto& path : paths) {
          std::ifstream in(path, std::ios::binary);
          if (!in) continue;
          std::ostringstream buffer;
          buffer << in.rdbuf();
          entries = polyzcl::parse_census_csv(buffer.str());
          loaded = true;
          break;
        }
      }
      if (!loaded) {
        polyzcl::EnumerateStats stats;
        std::vector<polyzcl::GeneticCode> codes =
            polyzcl::enumerate_codes(enum_n, {threads, allow_large}, &stats);
        if (stats.rejected > 0)
          std::cerr << "note: the allowability pre-filter passed " << stats.candidates
                    << " antichains, of which the realizability LP rejected " << stats.rejected
                    << "\n";
        if (classify_flag) {
          entries = polyzcl::classify_all(codes, threads);
        } else {
          for (auto& code : codes) {
            polyzcl::ClassificationRecord rec;
            rec.n = code.n();
            rec.m = code.m();
            rec.s = code.max_gee_size();
            rec.gees = code.gees();
            rec.k0 = polyzcl::k0(code.gees());
            rec.connected = polyzcl::is_connected(code);
            rec.model_exact = rec.m >= 2 * rec.s;
            rec.tc_upper = 2 * rec.n - 5;
            entries.push_back({std::move(code), std::move(rec)});
          }
        }
        if (!no_cache) {
          std::filesystem::create_directories(".polyzcl-cache");
          std::ofstream cache(cache_path(enum_n, classify_flag), std::ios::binary);
          if (cache) cache << polyzcl::census_csv(entries);
        }
      }
      polyzcl::CensusSummary summary = polyzcl::summarize(entries);
      if (json) {
        nlohmann::ordered_json j;
        j["n"] = enum_n;
        j["summary"] = summary_json(summary);
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& e : entries) {
          nlohmann::ordered_json row;
          row["genes"] = polyzcl::format_code(e.code);
          row["s"] = e.record.s;
          row["k0"] = e.record.k0;
          row["zcl_lower"] = e.record.zcl_lower ? nlohmann::ordered_json(*e.record.zcl_lower)
                                                : nlohmann::ordered_json();
          row["zcl_upper"] = e.record.zcl_upper ? nlohmann::ordered_json(*e.record.zcl_upper)
                                                : nlohmann::ordered_json();
          row["zcl_exact"] = e.record.zcl_exact ? nlohmann::ordered_json(*e.record.zcl_exact)
                                                : nlohmann::ordered_json();
          row["connected"] = e.record.connected;
          rows.push_back(row);
        }
        j["rows"] = rows;
        write_output(out_file, j.dump(2) + "\n");
      } else if (!out_file.empty()) {
        write_output(out_file, polyzcl::census_csv(entries));
        std::cout << polyzcl::format_summary(summary);
      } else {
        std::cout << polyzcl::census_csv(entries) << "\n" << polyzcl::format_summary(summary);
      }
      return 0;
    }

    if (realize_cmd->parsed()) {
      polyzcl::GeneticCode code = polyzcl::parse_code(code_text, n);
      polyzcl::LengthVector witness = polyzcl::realize(code);
      const bool round_trip = polyzcl::genetic_code(witness) == code;
      if (json) {
        nlohmann::ordered_json j;
        j["code"] = polyzcl::format_code(code);
        nlohmann::ordered_json lens = nlohmann::ordered_json::array();
        for (const auto& l : witness.lengths()) lens.push_back(polyzcl::to_string(l));
        j["lengths"] = lens;
        j["round_trip"] = round_trip;
        write_output(out_file, j.dump(2) + "\n");
      } else {
        std::ostringstream out;
        out << "lengths: (";
        for (std::size_t i = 0; i < witness.lengths().size(); ++i) {
          if (i > 0) out << ", ";
          out << polyzcl::to_string(witness.lengths()[i]);
        }
        out << ")\nround-trip: " << (round_trip ? "ok" : "FAILED") << "\n";
        write_output(out_file, out.str());
      }
      return 0;
    }

    if (ring_cmd->parsed()) {
      if (!genus2 && code_text.empty())
        polyzcl::raise(Errc::parse_error, "ring needs --code/--n or --genus2");
      if (genus2) {
        write_output(out_file, polyzcl::ring_json(polyzcl::build_genus2_ring()).dump(2) + "\n");
      } else {
        if (n == 0) polyzcl::raise(Errc::parse_error, "--code requires --n");
        polyzcl::GeneticCode code = polyzcl::parse_code(code_text, n);
        polyzcl::realize(code);
        auto [ring, exact] = polyzcl::build_canonical_ring(code);
        (void)exact;
        write_output(out_file, polyzcl::ring_json(ring).dump(2) + "\n");
      }
      return 0;
    }

    if (zcl_cmd->parsed()) {
      polyzcl::GeneticCode code = [&] {
        if (!lengths_text.empty())
          return polyzcl::genetic_code(parse_lengths(lengths_text),
                                       allow_large ? 16 : polyzcl::kGenericityCap);
        if (code_text.empty() || n == 0)
          polyzcl::raise(Errc::parse_error, "zcl needs --lengths or --code with --n");
        return polyzcl::parse_code(code_text, n);
      }();
      polyzcl::realize(code);
      auto [ring, exact] = polyzcl::build_canonical_ring(code);
      polyzcl::ZclBounds bounds = polyzcl::zcl_bounds(ring, exact, code);
      std::optional<int> search_result;
      if (run_search)
        search_result = polyzcl::search_zcl(ring, polyzcl::barred_generators(ring), 2 * code.m(),
                                            static_cast<std::size_t>(budget));
      if (json) {
        nlohmann::ordered_json j;
        j["code"] = polyzcl::format_code(code);
        j["lower"] = bounds.lower;
        j["upper"] = bounds.upper;
        j["exact"] = bounds.exact ? nlohmann::ordered_json(*bounds.exact) : nlohmann::ordered_json();
        j["certificate"] =
            bounds.certificate ? nlohmann::ordered_json(*bounds.certificate) : nlohmann::ordered_json();
        j["search"] = search_result ? nlohmann::ordered_json(*search_result) : nlohmann::ordered_json();
        j["warnings"] = bounds.warnings;
        write_output(out_file, j.dump(2) + "\n");
      } else {
        std::ostringstream out;
        if (bounds.exact)
          out << "zcl: " << *bounds.exact << " (exact)\n";
        else
          out << "zcl: [" << bounds.lower << ", " << bounds.upper << "]\n";
        if (bounds.certificate) out << "certificate: " << *bounds.certificate << "\n";
        if (search_result) out << "barred-generator search: " << *search_result << "\n";
        for (const auto& w : bounds.warnings) out << "warning: " << w << "\n";
        write_output(out_file, out.str());
      }
      return 0;
    }

    if (verify->parsed()) {
      std::vector<polyzcl::CriterionResult> results = polyzcl::run_acceptance(threads);
      return polyzcl::report_acceptance(results, std::cout) ? 0 : 1;
    }
  } catch (const polyzcl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
