#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "subgap/report.hpp"

namespace {

using subgap::AnalysisInput;
using subgap::Report;

// exit codes: 0 certified / verified, 1 analysis completed but nothing was
// certified (hypothesis failed, connection rejected, ...), 2 bad input
constexpr int kOk = 0;
constexpr int kNotCertified = 1;
constexpr int kUsage = 2;

double parse_param(const std::string& spec) {
  auto eq = spec.find('=');
  std::string key = eq == std::string::npos ? spec : spec.substr(0, eq);
  if (key != "c" || eq == std::string::npos)
    throw subgap::SchemaViolation("--param expects c=<value>");
  return std::stod(spec.substr(eq + 1));
}

AnalysisInput load_input(const std::string& input_path,
                         const std::string& builtin,
                         const std::string& param) {
  if (!input_path.empty() && !builtin.empty())
    throw subgap::SchemaViolation("--input and --builtin are exclusive");
  if (!input_path.empty()) return subgap::parse_spec(input_path);
  if (builtin.empty())
    throw subgap::SchemaViolation("one of --input or --builtin is required");
  if (!param.empty())
    return subgap::builtin_input(builtin, parse_param(param));
  return subgap::builtin_input(builtin);
}

void emit(const Report& rep, const std::string& format,
          const std::string& output) {
  std::string text =
      format == "machine" ? rep.machine_text() : rep.human_text();
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(output);
    if (!f) throw subgap::ParseError("cannot open output file '" + output + "'");
    f << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subgap: certified spectral gap bounds for sub-Laplacians on "
               "compact Lie groups"};
  app.require_subcommand(1);

  double tolerance = subgap::kDefaultTol;
  if (const char* env = std::getenv("SUBGAP_TOLERANCE"))
    tolerance = std::atof(env);
  app.add_option("--tolerance", tolerance,
                 "zero threshold for algebraic checks");

  std::string input_path, builtin, param, output, format = "text";

  CLI::App* analyze = app.add_subcommand(
      "analyze", "run the full certification pipeline on one structure");
  analyze->add_option("--input", input_path, "JSON input file");
  analyze->add_option("--builtin", builtin, "named builtin example");
  analyze->add_option("--param", param, "family parameter, e.g. c=0.2");
  analyze->add_option("--output", output, "write the report here");
  analyze->add_option("--format", format, "text or machine")
      ->check(CLI::IsMember({"text", "machine"}));

  int cutoff = 3;
  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "exact spectrum of a builtin via its irreps");
  spectrum->add_option("--builtin", builtin, "named builtin example")
      ->required();
  spectrum->add_option("--param", param, "family parameter, e.g. c=0.2");
  spectrum->add_option("--cutoff", cutoff, "maximum total spin");
  spectrum->add_option("--format", format, "text or machine")
      ->check(CLI::IsMember({"text", "machine"}));

  double lo = 0.0, hi = 0.5, sweep_tol = 1e-10;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "bisect for the largest parameter with a positive bound");
  sweep->add_option("--builtin", builtin, "parametric builtin family")
      ->required();
  sweep->add_option("--lo", lo, "lower end of the bracket");
  sweep->add_option("--hi", hi, "upper end of the bracket");
  sweep->add_option("--tol", sweep_tol, "bisection width");

  CLI::App* verify = app.add_subcommand(
      "verify", "check every builtin against its stored expected values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (analyze->parsed()) {
      AnalysisInput in = load_input(input_path, builtin, param);
      in.tolerance = tolerance;
      Report rep = subgap::analyze(in);
      emit(rep, format, output);
      bool certified = rep.data.contains("bounds") &&
                       rep.data["bounds"].is_object() &&
                       rep.data["bounds"].contains("certified");
      return certified ? kOk : kNotCertified;
    }
    if (spectrum->parsed()) {
      AnalysisInput in = load_input("", builtin, param);
      in.tolerance = tolerance;
      in.spectrum.enabled = true;
      in.spectrum.cutoff = cutoff;
      Report rep = subgap::analyze(in);
      Report only;
      only.data["name"] = rep.data["name"];
      only.data["spectrum"] = rep.data.contains("spectrum")
                                  ? rep.data["spectrum"]
                                  : nlohmann::ordered_json{
                                        {"skipped_because", "not available"}};
      emit(only, format, output);
      return only.data["spectrum"].contains("first_gap") ? kOk : kNotCertified;
    }
    if (sweep->parsed()) {
      subgap::SweepResult res = subgap::sweep_threshold(
          [&](double c) { return subgap::family_bound(builtin, c); }, lo, hi,
          sweep_tol);
      std::cout << "family " << builtin << ": bound positive for parameter < "
                << res.threshold << " (bracket [" << res.bracket_lo << ", "
                << res.bracket_hi << "])\n";
      for (const auto& [x, v] : res.samples)
        std::cout << "  c = " << x << "  bound = " << v << "\n";
      return kOk;
    }
    if (verify->parsed()) {
      bool ok = subgap::verify_goldens(std::cout);
      std::cout << (ok ? "verify: all goldens match\n"
                       : "verify: MISMATCH\n");
      return ok ? kOk : kNotCertified;
    }
  } catch (const subgap::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const subgap::SchemaViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const subgap::UnknownBuiltin& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const subgap::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotCertified;
  }
  return kUsage;
}
