#include "psbraid/bounds.hpp"

#include "psbraid/curves.hpp"
#include "psbraid/io.hpp"

#include <json.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace psbraid {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require(bool condition, const std::string& message) {
  if (!condition) throw std::domain_error(message);
}

}  // namespace

double main_upper(std::int64_t genus, std::int64_t punctures) {
  require(genus >= 2, "genus must be >= 2");
  require(punctures >= 1, "puncture count must be >= 1");
  if (punctures > 2 * genus) return 4.0 * std::log(6.0);
  const auto x = static_cast<double>(ceil_div(2 * genus, punctures));
  return 4.0 * std::log(x) + 4.0 * std::log(7.0);
}

double constant_lower() { return 0.000155; }

double alm_lower(std::int64_t kappa, std::int64_t chi) {
  require(chi < 0, "Euler characteristic must be negative");
  require(kappa >= 0, "kappa must be nonnegative");
  return 0.00031 * (static_cast<double>(kappa) + 1.0) / static_cast<double>(-chi);
}

std::int64_t kappa_lower(std::int64_t genus, std::int64_t punctures) {
  require(genus >= 2, "genus must be >= 2");
  require(punctures >= 1, "puncture count must be >= 1");
  return std::max(2 * genus, punctures - 1);
}

double growth_lower(std::int64_t genus, std::int64_t punctures, BoundVariant variant) {
  require(genus > 5, "the genus-growth lower bound needs g > 5");
  require(punctures >= 1, "puncture count must be >= 1");
  double numerator = std::log((static_cast<double>(genus) - 2.0) / 3.0);
  numerator += variant == BoundVariant::statement ? 2.0 : -2.0;
  if (variant == BoundVariant::proof && numerator < 0.0) numerator = 0.0;
  return std::log1p(numerator / (160.0 * static_cast<double>(punctures))) / 3.0;
}

double kra_lower(double t) {
  require(t >= 0.0, "distortion argument must be nonnegative");
  return std::log1p(t / 2.0);
}

IvanovBounds ivanov_bounds(const IvanovInput& input) {
  const std::size_t m = input.exponents.size();
  if (input.rho_intersections.size() != m || input.gamma_intersections.size() != m)
    throw std::invalid_argument("Ivanov input lists must share one length");
  if (input.rho_gamma < 0) throw std::invalid_argument("intersection numbers are nonnegative");
  IvanovBounds out;
  for (std::size_t i = 0; i < m; ++i) {
    const std::int64_t ri = input.rho_intersections[i];
    const std::int64_t gi = input.gamma_intersections[i];
    if (ri < 0 || gi < 0)
      throw std::invalid_argument("intersection numbers are nonnegative");
    const WideInt s = input.exponents[i] < 0 ? -input.exponents[i] : input.exponents[i];
    const WideInt product = WideInt(ri) * WideInt(gi);
    out.lower += (s - 2) * product;
    out.upper += s * product;
  }
  out.lower -= input.rho_gamma;
  out.upper += input.rho_gamma;
  return out;
}

double pointpush_upper(std::int64_t genus) {
  require(genus >= 2, "genus must be >= 2");
  return 4.0 * std::log(static_cast<double>(genus)) + 2.0 * std::log(24.0);
}

WideInt pointpush_dilatation_upper(std::int64_t genus) {
  require(genus >= 2, "genus must be >= 2");
  const WideInt i = 24 * WideInt(genus) * genus - 24 * WideInt(genus) + 6;
  return i * i + 2;
}

double penner_lower(std::int64_t genus) {
  require(genus >= 2, "genus must be >= 2");
  return std::log(2.0) / (12.0 * static_cast<double>(genus) - 12.0);
}

double penner_upper(std::int64_t genus) {
  require(genus >= 2, "genus must be >= 2");
  return std::log(11.0) / static_cast<double>(genus);
}

double dowdall_lower(std::int64_t genus) {
  require(genus >= 2, "genus must be >= 2");
  return std::log(2.0 * static_cast<double>(genus)) / 5.0;
}

double tsai_lower(std::int64_t punctures, double cg) {
  require(punctures >= 3, "the Tsai window needs n >= 3");
  require(cg >= 1.0, "c_g must be >= 1");
  const auto n = static_cast<double>(punctures);
  return std::log(n) / (cg * n);
}

double tsai_upper(std::int64_t punctures, double cg) {
  require(punctures >= 3, "the Tsai window needs n >= 3");
  require(cg >= 1.0, "c_g must be >= 1");
  const auto n = static_cast<double>(punctures);
  return cg * std::log(n) / n;
}

const BoundEntry* BoundProfile::find(const std::string& name) const {
  for (const BoundEntry& entry : entries)
    if (entry.name == name) return &entry;
  return nullptr;
}

BoundProfile bound_profile(std::int64_t genus, std::int64_t punctures,
                           std::optional<double> tsai_cg) {
  require(genus >= 2, "genus must be >= 2");
  require(punctures >= 1, "puncture count must be >= 1");

  BoundProfile profile;
  profile.genus = genus;
  profile.punctures = punctures;
  auto add = [&profile](std::string name, double value, bool valid, BoundSide side) {
    profile.entries.push_back({std::move(name), value, valid, side});
  };

  const std::int64_t chi = 2 - 2 * genus - punctures;
  const bool growth_valid = genus > 5;
  const bool single_puncture = punctures == 1;

  add("main_upper", main_upper(genus, punctures), true, BoundSide::upper);
  add("constant_lower", constant_lower(), true, BoundSide::lower);
  add("alm_lower", alm_lower(kappa_lower(genus, punctures), chi), true, BoundSide::lower);
  add("thm61_statement",
      growth_valid ? growth_lower(genus, punctures, BoundVariant::statement) : kNaN,
      growth_valid, BoundSide::lower);
  add("thm61_proof",
      growth_valid ? growth_lower(genus, punctures, BoundVariant::proof) : kNaN,
      growth_valid, BoundSide::lower);
  add("dowdall_lower", dowdall_lower(genus), single_puncture, BoundSide::lower);
  add("pointpush_upper", pointpush_upper(genus), single_puncture, BoundSide::upper);
  add("pointpush_construction",
      std::log(static_cast<double>(pointpush_dilatation_upper(genus))), single_puncture,
      BoundSide::upper);
  // Closed-surface window: context only, never a pure-braid bound for n >= 1.
  add("penner_lower", penner_lower(genus), false, BoundSide::lower);
  add("penner_upper", penner_upper(genus), false, BoundSide::upper);

  const bool tsai_defined = tsai_cg.has_value() && *tsai_cg >= 1.0 && punctures >= 3;
  // The lower bound transfers to the subgroup; the upper one does not.
  add("tsai_lower", tsai_defined ? tsai_lower(punctures, *tsai_cg) : kNaN, tsai_defined,
      BoundSide::lower);
  add("tsai_upper", tsai_defined ? tsai_upper(punctures, *tsai_cg) : kNaN, false,
      BoundSide::upper);
  return profile;
}

std::string bound_profile_csv_header(const BoundProfile& profile) {
  std::string header = "g,n";
  for (const BoundEntry& entry : profile.entries) header += "," + entry.name;
  for (const BoundEntry& entry : profile.entries) header += "," + entry.name + "_valid";
  return header;
}

std::string bound_profile_csv_row(const BoundProfile& profile) {
  std::string row = std::to_string(profile.genus) + "," + std::to_string(profile.punctures);
  for (const BoundEntry& entry : profile.entries) row += "," + format_real(entry.value);
  for (const BoundEntry& entry : profile.entries)
    row += entry.valid ? ",true" : ",false";
  return row;
}

std::string bound_profile_json(const BoundProfile& profile) {
  nlohmann::ordered_json j;
  j["genus"] = profile.genus;
  j["punctures"] = profile.punctures;
  nlohmann::ordered_json bounds;
  for (const BoundEntry& entry : profile.entries) {
    nlohmann::ordered_json item;
    if (std::isnan(entry.value))
      item["value"] = nullptr;
    else
      item["value"] = nlohmann::ordered_json::parse(format_real(entry.value));
    item["valid"] = entry.valid;
    item["side"] = entry.side == BoundSide::lower ? "lower" : "upper";
    bounds[entry.name] = item;
  }
  j["bounds"] = bounds;
  return j.dump();
}

}  // namespace psbraid
