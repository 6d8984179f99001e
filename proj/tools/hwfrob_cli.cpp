// Command-line front end: reads a problem file, computes the Frobenius
// action on H^q(X, O_X) and prints a text or JSON report.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <new>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hwfrob.hpp"

namespace {

using namespace hwfrob;

struct CliConfig {
  std::string input;
  std::string format = "text";
  std::string algorithm;
  std::string resolution;
  std::string dump;
  std::optional<std::string> bench;
  bool timing = false;
};

struct Dumps {
  bool resolution = false;
  bool lifts = false;
  bool basis = false;

  bool any() const { return resolution || lifts || basis; }
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    out.push_back(item.substr(b, item.find_last_not_of(" \t") - b + 1));
  }
  return out;
}

Dumps parse_dumps(const std::string& s) {
  Dumps d;
  for (const auto& item : split_list(s)) {
    if (item == "resolution") d.resolution = true;
    else if (item == "lifts") d.lifts = true;
    else if (item == "basis") d.basis = true;
    else throw InputError("unknown dump '" + item + "' (expected resolution, lifts or basis)");
  }
  return d;
}

std::vector<std::uint64_t> parse_primes(const std::string& s) {
  std::vector<std::uint64_t> out;
  for (const auto& item : split_list(s)) {
    if (item.size() > 12 || item.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("--bench: '" + item + "' is not a positive integer");
    }
    out.push_back(std::stoull(item));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void apply_overrides(ProblemSpec& spec, const CliConfig& cfg) {
  if (cfg.algorithm == "auto") spec.algorithm = AlgorithmChoice::automatic;
  else if (cfg.algorithm == "general") spec.algorithm = AlgorithmChoice::general;
  else if (cfg.algorithm == "ci") spec.algorithm = AlgorithmChoice::complete_intersection;
  if (cfg.resolution == "frame") spec.shape = ResolutionShape::schreyer_frame;
  else if (cfg.resolution == "minimal") spec.shape = ResolutionShape::minimal;
}

std::string run(const CliConfig& cfg, const std::string& text) {
  ProblemSpec spec = parse_problem(text);
  apply_overrides(spec, cfg);
  const Dumps dumps = parse_dumps(cfg.dump);
  DispatchResult res = dispatch_detailed(spec);
  const FrobeniusReport& rep = res.report;
  std::optional<StepA> a = std::move(res.step_a);
  if (dumps.any() && !a) a = koszul_step_a(spec);
  const auto& names = spec.var_names;
  const int i0 = spec.r() - spec.q;

  if (cfg.format == "json") {
    Json j = report_json(rep, names, cfg.timing);
    if (dumps.any()) {
      Json d;
      if (dumps.resolution) d["resolution"] = resolution_json(a->resolution, names);
      if (dumps.lifts) d["lifts"] = lift_json(a->lift, names);
      if (dumps.basis) d["basis"] = cohomology_basis_json(CohomologySpace(a->resolution.module(i0), spec.r()), names);
      j["dumps"] = std::move(d);
    }
    return j.dump(2) + "\n";
  }
  std::string out = report_text(rep, names, cfg.timing);
  if (dumps.resolution) out += resolution_text(a->resolution, names);
  if (dumps.lifts) out += lift_text(a->lift, names);
  if (dumps.basis) {
    out += "cohomology basis of H^" + std::to_string(spec.r()) + "(F" + std::to_string(i0) + "):\n";
    for (const auto& b : cohomology_basis_json(CohomologySpace(a->resolution.module(i0), spec.r()), names)) {
      out += "  " + b.get<std::string>() + "\n";
    }
  }
  return out;
}

/// One row per prime in the given order; a failing row records its error
/// and the remaining rows still run.
std::string bench(const CliConfig& cfg, const std::string& text, const std::vector<std::uint64_t>& primes) {
  Json rows = Json::array();
  std::ostringstream os;
  os << "p\trank\tchar_poly\tD\talpha\tstep_a_ms\tstep_b_ms\n";
  for (std::uint64_t p : primes) {
    Json row;
    row["p"] = p;
    try {
      ProblemSpec spec = parse_problem(text, p);
      apply_overrides(spec, cfg);
      const FrobeniusReport rep = dispatch(spec);
      row["algorithm_used"] = rep.algorithm_used;
      row["rank"] = rep.rank;
      row["char_poly"] = rep.char_poly;
      row["D"] = rep.D;
      row["alpha"] = rep.alpha ? Json(*rep.alpha) : Json(nullptr);
      row["timings"] = {{"step_a_ms", rep.timings.step_a_ms}, {"step_b_ms", rep.timings.step_b_ms}};
      row["error"] = nullptr;
      os << p << "\t" << rep.rank << "\t" << format_charpoly(rep.char_poly, "a") << "\t" << rep.D << "\t"
         << (rep.alpha ? std::to_string(*rep.alpha) : std::string("n/a")) << "\t" << format_ms(rep.timings.step_a_ms)
         << "\t" << format_ms(rep.timings.step_b_ms) << "\n";
    } catch (const std::exception& e) {
      row["error"] = e.what();
      os << p << "\terror: " << e.what() << "\n";
    }
    rows.push_back(std::move(row));
  }
  if (cfg.format == "json") return Json{{"rows", std::move(rows)}}.dump(2) + "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CliConfig cfg;
  CLI::App app{"Frobenius action on H^q(X, O_X) for projective varieties over F_p"};
  app.add_option("--input", cfg.input, "problem file")->required();
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--algorithm", cfg.algorithm, "override the file's algorithm")
      ->check(CLI::IsMember({"auto", "general", "ci"}));
  app.add_option("--resolution", cfg.resolution, "resolution shape for the general path")
      ->check(CLI::IsMember({"frame", "minimal"}));
  app.add_option("--dump", cfg.dump, "comma-separated: resolution,lifts,basis");
  app.add_option("--bench", cfg.bench, "comma-separated primes; prints one row per prime");
  app.add_flag("--timing", cfg.timing, "include Step A / Step B timings");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const std::string text = read_file(cfg.input);
    const std::string out = cfg.bench ? bench(cfg, text, parse_primes(*cfg.bench)) : run(cfg, text);
    std::cout << out;
    return 0;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::bad_alloc&) {
    std::cerr << "internal error: out of memory\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
