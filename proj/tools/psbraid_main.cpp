// psbraid: dilatation estimates and entropy-bound certification for
// pseudo-Anosov pure surface braids built from filling multicurve pairs.
//
// Subcommands:
//   bounds    closed-form entropy bounds at one (g, n)
//   construct build the (g, n) multicurve configuration and its dilatation
//   verify    sweep a (g, n) grid and certify lower <= entropy <= upper
//   appendix  numeric checks for the hyperbolic-geometry toolkit
//
// Exit codes: 0 success/certified, 1 usage error, 2 certification violation,
// 3 internal computation failure.

#include "psbraid/bounds.hpp"
#include "psbraid/curves.hpp"
#include "psbraid/hyperbolic.hpp"
#include "psbraid/io.hpp"
#include "psbraid/pf.hpp"
#include "psbraid/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace psbraid;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;
constexpr int kExitInternal = 3;

// Relative output paths land in $PSBRAID_OUTPUT_DIR when it is set.
std::filesystem::path resolve_output(const std::string& file) {
  std::filesystem::path path(file);
  if (path.is_absolute()) return path;
  if (const char* dir = std::getenv("PSBRAID_OUTPUT_DIR"))
    return std::filesystem::path(dir) / path;
  return path;
}

void write_file(const std::string& file, const std::string& content) {
  const auto path = resolve_output(file);
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file " + path.string());
  out << content;
}

struct BoundsOptions {
  std::int64_t g = 0;
  std::int64_t n = 0;
  std::string format = "table";
  double tsai_cg = 0.0;
  bool has_tsai = false;
};

int run_bounds(const BoundsOptions& opt) {
  const std::optional<double> cg =
      opt.has_tsai ? std::optional<double>(opt.tsai_cg) : std::nullopt;
  const BoundProfile profile = bound_profile(opt.g, opt.n, cg);
  if (opt.format == "csv") {
    std::cout << bound_profile_csv_header(profile) << "\n"
              << bound_profile_csv_row(profile) << "\n";
  } else if (opt.format == "json") {
    std::cout << bound_profile_json(profile) << "\n";
  } else {
    std::cout << "entropy bounds at g=" << profile.genus << ", n=" << profile.punctures
              << "\n";
    for (const BoundEntry& entry : profile.entries) {
      std::cout << "  " << entry.name;
      for (std::size_t pad = entry.name.size(); pad < 24; ++pad) std::cout << ' ';
      std::cout << (entry.side == BoundSide::lower ? "lower  " : "upper  ")
                << format_real(entry.value) << (entry.valid ? "" : "  [not applicable]")
                << "\n";
    }
  }
  return kExitOk;
}

struct ConstructOptions {
  std::int64_t g = 0;
  std::int64_t n = 0;
  double tolerance = 1e-8;
  std::string format = "table";
  std::string dot_file;
  std::string json_file;
};

int run_construct(const ConstructOptions& opt) {
  const Configuration config =
      build_configuration(static_cast<int>(opt.g), static_cast<int>(opt.n));
  const PFBracket bracket = pf_eigenvalue(gram(config.matrix), opt.tolerance);
  const DilatationEstimate est = dilatation_from_mu(bracket.upper);

  if (!opt.dot_file.empty()) write_file(opt.dot_file, config.graph.to_dot());
  if (!opt.json_file.empty()) write_file(opt.json_file, config.to_json());

  if (opt.format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(config.to_json());
    j["mu_lower"] = nlohmann::ordered_json::parse(format_real(static_cast<double>(bracket.lower)));
    j["mu_upper"] = nlohmann::ordered_json::parse(format_real(static_cast<double>(bracket.upper)));
    j["pf_iterations"] = bracket.iterations;
    j["lambda"] = nlohmann::ordered_json::parse(format_real(static_cast<double>(est.lambda)));
    j["entropy"] = nlohmann::ordered_json::parse(format_real(static_cast<double>(est.entropy)));
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }

  std::cout << "configuration g=" << config.genus << ", n=" << config.punctures << " ("
            << to_string(config.tag) << ")\n";
  std::cout << "subsurface genera:";
  for (int h : config.subsurface_genera) std::cout << " " << h;
  std::cout << "\nintersection matrix N (rows red, cols blue):\n";
  for (Index i = 0; i < config.matrix.rows(); ++i) {
    std::cout << " ";
    for (Index j = 0; j < config.matrix.cols(); ++j) std::cout << " " << config.matrix(i, j);
    std::cout << "\n";
  }
  std::cout << "mu bracket: [" << format_real(static_cast<double>(bracket.lower)) << ", "
            << format_real(static_cast<double>(bracket.upper)) << "] ("
            << bracket.iterations << " iterations)\n";
  std::cout << "lambda:  " << format_real(static_cast<double>(est.lambda)) << "\n";
  std::cout << "entropy: " << format_real(static_cast<double>(est.entropy)) << "\n";
  return kExitOk;
}

struct VerifyOptions {
  SweepSpec spec;
  std::string n_rule_text;
  std::string variant = "proof";
  std::string format = "table";
  std::string out_file;
  std::string config_file;
  bool quiet_points = false;
};

void apply_config_file(VerifyOptions& opt, const CLI::App& cmd) {
  std::ifstream in(opt.config_file);
  if (!in) throw std::invalid_argument("cannot read config file " + opt.config_file);
  nlohmann::json j;
  in >> j;
  // CLI flags win: only fields the user did not pass are taken from the file.
  if (j.contains("g_min") && cmd.count("--g-min") == 0) opt.spec.g_min = j["g_min"];
  if (j.contains("g_max") && cmd.count("--g-max") == 0) opt.spec.g_max = j["g_max"];
  if (j.contains("n_rule") && cmd.count("--n-rule") == 0)
    opt.n_rule_text = j["n_rule"].get<std::string>();
  if (j.contains("tolerance") && cmd.count("--tolerance") == 0)
    opt.spec.tolerance = j["tolerance"];
  if (j.contains("variant") && cmd.count("--variant") == 0)
    opt.variant = j["variant"].get<std::string>();
  if (j.contains("format") && cmd.count("--format") == 0)
    opt.format = j["format"].get<std::string>();
  if (j.contains("perturb_upper") && cmd.count("--perturb-upper") == 0)
    opt.spec.perturb_upper = j["perturb_upper"];
}

int run_verify(VerifyOptions& opt, const CLI::App& cmd) {
  if (!opt.config_file.empty()) apply_config_file(opt, cmd);
  opt.spec.n_rule = NRule::parse(opt.n_rule_text);
  opt.spec.variant =
      opt.variant == "statement" ? BoundVariant::statement : BoundVariant::proof;

  const ConsistencyReport report = run_verification(opt.spec);

  std::string rendered;
  if (opt.format == "csv")
    rendered = report.to_csv();
  else if (opt.format == "json")
    rendered = report.to_json() + "\n";
  else
    rendered = report.to_table();
  if (opt.out_file.empty())
    std::cout << rendered;
  else
    write_file(opt.out_file, rendered);

  if (report.has_computation_failure()) return kExitInternal;
  return report.passed() ? kExitOk : kExitViolation;
}

struct AppendixOptions {
  std::string format = "table";
  std::string constants_file;
};

int run_appendix(const AppendixOptions& opt) {
  const auto checks = appendix_checks();
  if (!opt.constants_file.empty()) write_file(opt.constants_file, trigon_constants_json());

  bool failed = false;
  if (opt.format == "json") {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const AppendixCheck& check : checks) {
      nlohmann::ordered_json row;
      row["name"] = check.name;
      row["left"] = nlohmann::ordered_json::parse(format_real(check.left));
      row["relation"] = check.relation;
      row["right"] = nlohmann::ordered_json::parse(format_real(check.right));
      row["status"] = check.status == AppendixCheck::Status::pass   ? "PASS"
                      : check.status == AppendixCheck::Status::fail ? "FAIL"
                                                                    : "INFO-DISCREPANCY";
      rows.push_back(row);
      failed = failed || check.status == AppendixCheck::Status::fail;
    }
    nlohmann::ordered_json j;
    j["checks"] = rows;
    j["constants"] = nlohmann::ordered_json::parse(trigon_constants_json());
    std::cout << j.dump(2) << "\n";
  } else {
    for (const AppendixCheck& check : checks) {
      std::cout << "  " << check.name;
      for (std::size_t pad = check.name.size(); pad < 32; ++pad) std::cout << ' ';
      std::cout << format_real(check.left, 6) << " " << check.relation << " "
                << format_real(check.right, 6) << "  "
                << (check.status == AppendixCheck::Status::pass   ? "PASS"
                    : check.status == AppendixCheck::Status::fail ? "FAIL"
                                                                  : "INFO-DISCREPANCY")
                << "\n";
      failed = failed || check.status == AppendixCheck::Status::fail;
    }
  }
  return failed ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dilatation bounds for pseudo-Anosov pure surface braids"};
  app.require_subcommand(1);

  BoundsOptions bounds_opt;
  CLI::App* bounds_cmd = app.add_subcommand("bounds", "closed-form entropy bounds at (g, n)");
  bounds_cmd->add_option("--g", bounds_opt.g, "genus (>= 2)")->required();
  bounds_cmd->add_option("--n", bounds_opt.n, "punctures (>= 1)")->required();
  bounds_cmd->add_option("--format", bounds_opt.format, "table|csv|json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  auto* tsai_flag = bounds_cmd->add_option("--tsai-cg", bounds_opt.tsai_cg,
                                           "c_g constant for the Tsai window (>= 1)");

  ConstructOptions construct_opt;
  CLI::App* construct_cmd =
      app.add_subcommand("construct", "build the (g, n) filling multicurve configuration");
  construct_cmd->add_option("--g", construct_opt.g, "genus (>= 2)")->required();
  construct_cmd->add_option("--n", construct_opt.n, "punctures (>= 2)")->required();
  construct_cmd->add_option("--tolerance", construct_opt.tolerance,
                            "Perron-Frobenius bracket width");
  construct_cmd->add_option("--format", construct_opt.format, "table|json")
      ->check(CLI::IsMember({"table", "json"}));
  construct_cmd->add_option("--dot", construct_opt.dot_file, "write the curve graph as DOT");
  construct_cmd->add_option("--json", construct_opt.json_file,
                            "write the configuration as JSON");

  VerifyOptions verify_opt;
  verify_opt.n_rule_text = verify_opt.spec.n_rule.to_string();
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "certify bounds over a (g, n) parameter grid");
  verify_cmd->add_option("--g-min", verify_opt.spec.g_min, "smallest genus");
  verify_cmd->add_option("--g-max", verify_opt.spec.g_max, "largest genus");
  verify_cmd->add_option("--n-rule", verify_opt.n_rule_text,
                         "puncture range, e.g. 2..2g+16 or 1..40");
  verify_cmd->add_option("--tolerance", verify_opt.spec.tolerance,
                         "Perron-Frobenius bracket width");
  verify_cmd->add_option("--variant", verify_opt.variant, "statement|proof")
      ->check(CLI::IsMember({"statement", "proof"}));
  verify_cmd->add_option("--perturb-upper", verify_opt.spec.perturb_upper,
                         "shift the entropy upper bound (fault-injection self-test)");
  verify_cmd->add_option("--format", verify_opt.format, "table|csv|json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  verify_cmd->add_option("--out", verify_opt.out_file, "write the report to a file");
  verify_cmd->add_option("--config", verify_opt.config_file,
                         "JSON file mirroring these flags (flags win)");

  AppendixOptions appendix_opt;
  CLI::App* appendix_cmd =
      app.add_subcommand("appendix", "hyperbolic toolkit numeric checks");
  appendix_cmd->add_option("--format", appendix_opt.format, "table|json")
      ->check(CLI::IsMember({"table", "json"}));
  appendix_cmd->add_option("--constants", appendix_opt.constants_file,
                           "write the trigon model constants as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (bounds_cmd->parsed()) {
      bounds_opt.has_tsai = tsai_flag->count() > 0;
      return run_bounds(bounds_opt);
    }
    if (construct_cmd->parsed()) return run_construct(construct_opt);
    if (verify_cmd->parsed()) return run_verify(verify_opt, *verify_cmd);
    if (appendix_cmd->parsed()) return run_appendix(appendix_opt);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
