#include "psbraid/sweep.hpp"

#include "psbraid/hyperbolic.hpp"
#include "psbraid/io.hpp"
#include "psbraid/pf.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace psbraid {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::int64_t parse_int(const std::string& text) {
  std::size_t used = 0;
  const long long value = std::stoll(text, &used);
  if (used != text.size()) throw std::invalid_argument("trailing characters in '" + text + "'");
  return value;
}

}  // namespace

NRule NRule::parse(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos)
    throw std::invalid_argument("n-rule must look like '2..2g+16' or '1..40': " + text);
  NRule rule;
  rule.lo = parse_int(text.substr(0, dots));
  std::string hi = text.substr(dots + 2);
  const auto g_at = hi.find('g');
  if (g_at == std::string::npos) {
    rule.coeff = 0;
    rule.offset = parse_int(hi);
  } else {
    const std::string coeff_text = hi.substr(0, g_at);
    rule.coeff = coeff_text.empty() ? 1 : parse_int(coeff_text);
    const std::string rest = hi.substr(g_at + 1);
    rule.offset = rest.empty() ? 0 : parse_int(rest);
  }
  if (rule.lo < 1) throw std::invalid_argument("n-rule lower end must be >= 1");
  return rule;
}

std::string NRule::to_string() const {
  std::string out = std::to_string(lo) + "..";
  if (coeff == 0) return out + std::to_string(offset);
  if (coeff != 1) out += std::to_string(coeff);
  out += "g";
  if (offset > 0) out += "+" + std::to_string(offset);
  if (offset < 0) out += std::to_string(offset);
  return out;
}

bool ConsistencyReport::has_computation_failure() const {
  for (const Violation& v : violations)
    if (v.kind == ViolationKind::computation) return true;
  return false;
}

std::string ConsistencyReport::to_csv() const {
  std::string out =
      "g,n,case,mu_upper,entropy,main_upper,constant_lower,thm61_proof,thm61_statement,ok\n";
  for (const GridPointSummary& p : points) {
    out += std::to_string(p.genus) + "," + std::to_string(p.punctures) + "," + p.case_tag +
           "," + format_real(p.mu_upper) + "," + format_real(p.entropy) + "," +
           format_real(p.main_upper_value) + "," + format_real(p.constant_lower_value) + "," +
           format_real(p.thm61_proof) + "," + format_real(p.thm61_statement) + "," +
           (p.ok ? "true" : "false") + "\n";
  }
  return out;
}

std::string ConsistencyReport::to_json() const {
  // No timing in machine-readable output: identical invocations must render
  // byte-identically.
  nlohmann::ordered_json j;
  j["grid_size"] = grid_size;
  j["passed"] = passed();
  nlohmann::ordered_json violation_list = nlohmann::ordered_json::array();
  for (const Violation& v : violations) {
    nlohmann::ordered_json item;
    item["g"] = v.genus;
    item["n"] = v.punctures;
    item["kind"] = v.kind == ViolationKind::bound ? "bound" : "computation";
    item["lower_name"] = v.lower_name;
    item["upper_name"] = v.upper_name;
    item["lower_value"] = nlohmann::ordered_json::parse(format_real(v.lower_value));
    item["upper_value"] = nlohmann::ordered_json::parse(format_real(v.upper_value));
    if (!v.detail.empty()) item["detail"] = v.detail;
    violation_list.push_back(item);
  }
  j["violations"] = violation_list;
  nlohmann::ordered_json point_list = nlohmann::ordered_json::array();
  for (const GridPointSummary& p : points) {
    nlohmann::ordered_json item;
    item["g"] = p.genus;
    item["n"] = p.punctures;
    item["case"] = p.case_tag;
    item["mu_upper"] = nlohmann::ordered_json::parse(format_real(p.mu_upper));
    item["entropy"] = nlohmann::ordered_json::parse(format_real(p.entropy));
    item["main_upper"] = nlohmann::ordered_json::parse(format_real(p.main_upper_value));
    item["ok"] = p.ok;
    point_list.push_back(item);
  }
  j["points"] = point_list;
  return j.dump(2);
}

std::string ConsistencyReport::to_table() const {
  std::ostringstream out;
  out << "grid points: " << grid_size << "\n";
  out << "violations:  " << violations.size() << "\n";
  out << "elapsed:     " << format_real(elapsed_seconds, 4) << " s\n";
  for (const Violation& v : violations) {
    out << "  (g=" << v.genus << ", n=" << v.punctures << ") ";
    if (v.kind == ViolationKind::computation) {
      out << "computation failure: " << v.detail << "\n";
    } else {
      out << v.lower_name << " = " << format_real(v.lower_value) << " > " << v.upper_name
          << " = " << format_real(v.upper_value) << "\n";
    }
  }
  out << (passed() ? "certification PASSED\n" : "certification FAILED\n");
  return out.str();
}

namespace {

void check_point(const SweepSpec& spec, std::int64_t g, std::int64_t n,
                 ConsistencyReport& report) {
  GridPointSummary row;
  row.genus = g;
  row.punctures = n;
  row.ok = true;
  const std::size_t violations_before = report.violations.size();

  auto add_violation = [&](const std::string& lower_name, double lower_value,
                           const std::string& upper_name, double upper_value) {
    report.violations.push_back({g, n, ViolationKind::bound, lower_name, upper_name,
                                 lower_value, upper_value, ""});
  };

  try {
    const BoundProfile profile = bound_profile(g, n);
    row.main_upper_value = profile.find("main_upper")->value + spec.perturb_upper;
    row.constant_lower_value = profile.find("constant_lower")->value;
    row.thm61_proof = profile.find("thm61_proof")->value;
    row.thm61_statement = profile.find("thm61_statement")->value;

    double entropy;
    if (n == 1) {
      // Point-pushing chain instead of a built configuration.
      row.case_tag = "pointpush";
      const WideInt lambda_bound = pointpush_dilatation_upper(g);
      const DilatationEstimate est =
          dilatation_from_mu(static_cast<long double>(lambda_bound) - 2.0L);
      row.mu_upper = static_cast<double>(est.mu);
      entropy = static_cast<double>(est.entropy);
      const double push_upper = pointpush_upper(g);
      if (!(std::log(static_cast<double>(lambda_bound)) < push_upper))
        add_violation("pointpush_construction", std::log(static_cast<double>(lambda_bound)),
                      "pointpush_upper", push_upper);
    } else {
      const Configuration config = build_configuration(static_cast<int>(g),
                                                       static_cast<int>(n));
      row.case_tag = to_string(config.tag);
      const DilatationEstimate est = configuration_dilatation(config, spec.tolerance);
      row.mu_upper = static_cast<double>(est.mu);
      entropy = static_cast<double>(est.entropy);
    }
    row.entropy = entropy;

    if (!(entropy <= row.main_upper_value))
      add_violation("construction_entropy", entropy, "main_upper", row.main_upper_value);

    // Only the selected variant of the genus-growth bound participates in
    // certification; the other is reported in the CSV columns.
    const std::string skipped_variant =
        spec.variant == BoundVariant::proof ? "thm61_statement" : "thm61_proof";
    for (const BoundEntry& lower : profile.entries) {
      if (!lower.valid || lower.side != BoundSide::lower) continue;
      if (lower.name == skipped_variant) continue;
      if (!(lower.value <= entropy))
        add_violation(lower.name, lower.value, "construction_entropy", entropy);
      for (const BoundEntry& upper : profile.entries) {
        if (!upper.valid || upper.side != BoundSide::upper) continue;
        const double upper_value =
            upper.name == "main_upper" ? row.main_upper_value : upper.value;
        if (!(lower.value <= upper_value))
          add_violation(lower.name, lower.value, upper.name, upper_value);
      }
    }
  } catch (const std::exception& error) {
    row.case_tag = "error";
    row.mu_upper = row.entropy = kNaN;
    row.ok = false;
    report.violations.push_back({g, n, ViolationKind::computation, "", "", kNaN, kNaN,
                                 error.what()});
    report.points.push_back(row);
    return;
  }

  row.ok = report.violations.size() == violations_before;
  report.points.push_back(row);
}

}  // namespace

ConsistencyReport run_verification(const SweepSpec& spec) {
  if (spec.g_min < 2 || spec.g_max < spec.g_min)
    throw std::invalid_argument("need 2 <= g_min <= g_max");
  if (!(spec.tolerance > 0)) throw std::invalid_argument("tolerance must be positive");

  const auto start = std::chrono::steady_clock::now();
  ConsistencyReport report;
  for (std::int64_t g = spec.g_min; g <= spec.g_max; ++g) {
    const std::int64_t n_hi = spec.n_rule.hi_for(g);
    for (std::int64_t n = spec.n_rule.lo; n <= n_hi; ++n) {
      ++report.grid_size;
      check_point(spec, g, n, report);
    }
  }
  if (report.grid_size == 0) throw std::invalid_argument("sweep grid is empty");
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

double growth_lower_via_appendix(std::int64_t genus, std::int64_t punctures) {
  const double numerator = 40.0 * diameter_lower(genus).lower_bound;
  const double clamped = numerator < 0.0 ? 0.0 : numerator;
  return kra_lower(clamped / (80.0 * static_cast<double>(punctures))) / 3.0;
}

}  // namespace psbraid
