#include "psbraid/hyperbolic.hpp"

#include "psbraid/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace psbraid {

namespace {

constexpr double kPi = std::numbers::pi;

// The law-of-cosines expressions can land a few ulps outside [-1, 1] for
// degenerate triangles (c = a + b); clamp that, reject anything larger.
double clamp_cosine(double value) {
  constexpr double slack = 1e-9;
  if (value > 1.0) {
    if (value > 1.0 + slack) throw std::domain_error("no hyperbolic triangle with these sides");
    return 1.0;
  }
  if (value < -1.0) {
    if (value < -1.0 - slack) throw std::domain_error("no hyperbolic triangle with these sides");
    return -1.0;
  }
  return value;
}

}  // namespace

TrigonModelConstants::TrigonModelConstants()
    : max_side(std::log(4.0)),
      min_triangle_side(std::log(2.0)),
      max_width(std::log(2.0)) {}

std::string trigon_constants_json() {
  const TrigonModelConstants c;
  nlohmann::ordered_json j;
  j["max_side"] = nlohmann::ordered_json::parse(format_real(c.max_side));
  j["min_triangle_side"] = nlohmann::ordered_json::parse(format_real(c.min_triangle_side));
  j["min_area"] = c.min_area;
  j["max_area"] = c.max_area;
  j["min_width"] = c.min_width;
  j["max_width"] = nlohmann::ordered_json::parse(format_real(c.max_width));
  j["combinatorial_slope"] = c.combinatorial_slope;
  j["combinatorial_offset"] = c.combinatorial_offset;
  return j.dump();
}

double angle_from_sides(double a, double b, double c) {
  if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0))
    throw std::domain_error("triangle sides must be positive");
  const double expression =
      (std::cosh(c) - std::cosh(a) * std::cosh(b)) / (-std::sinh(a) * std::sinh(b));
  return std::acos(clamp_cosine(expression));
}

double side_from_sides_angle(double a, double b, double gamma) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::domain_error("triangle sides must be positive");
  if (!(gamma > 0.0) || !(gamma < kPi))
    throw std::domain_error("angle must lie in (0, pi)");
  const double argument =
      std::cosh(a) * std::cosh(b) - std::sinh(a) * std::sinh(b) * std::cos(gamma);
  if (argument < 1.0) {
    if (argument < 1.0 - 1e-12) throw std::domain_error("no hyperbolic triangle with these data");
    return 0.0;
  }
  return std::acosh(argument);
}

IsoperimetricChain isoperimetric_chain(double p) {
  if (!(p > 0.0)) throw std::domain_error("loop length must be positive");
  IsoperimetricChain chain{};
  const double s1 = std::sinh(std::asinh(p / (2.0 * kPi)) / 2.0);
  chain.stage1 = 4.0 * kPi * s1 * s1;
  const double s2 = std::sinh(std::log1p(p / kPi) / 2.0);
  chain.stage2 = 4.0 * kPi * s2 * s2;
  chain.stage3 = p * p / (p + kPi);
  return chain;
}

double isoperimetric_area_bound(double p) { return isoperimetric_chain(p).stage3; }

double graph_length_lower(std::int64_t genus) {
  if (genus < 2) throw std::domain_error("genus must be >= 2");
  return 2.0 * kPi * (static_cast<double>(genus) - 1.0);
}

double combinatorial_length_upper(double ell) {
  if (ell < 0.0) throw std::domain_error("hyperbolic length must be nonnegative");
  return 40.0 * ell + 2.0;
}

std::uint64_t ball_size_bound(int distance) {
  if (distance < 0) throw std::domain_error("distance must be nonnegative");
  if (distance == 0) return 1;
  if (distance > 62) throw std::domain_error("ball size exceeds 64-bit range");
  return 3ULL * (1ULL << (distance - 1)) + 1ULL;
}

DiameterBound diameter_lower(std::int64_t genus) {
  if (genus < 3) throw std::domain_error("need genus >= 3 for a positive log argument");
  DiameterBound bound;
  bound.genus = genus;
  bound.lower_bound = (std::log((static_cast<double>(genus) - 2.0) / 3.0) - 2.0) / 40.0;
  bound.valid = genus > 5;
  return bound;
}

std::vector<AppendixCheck> appendix_checks() {
  using Status = AppendixCheck::Status;
  std::vector<AppendixCheck> checks;
  const double log2 = std::log(2.0);
  const double log4 = std::log(4.0);

  const double angle = angle_from_sides(log4, log4, log2);
  checks.push_back({"triangle_angle", angle, kPi / 9.0, ">",
                    angle > kPi / 9.0 + 1e-9 ? Status::pass : Status::fail});

  const double segment = side_from_sides_angle(log2, log2, kPi / 9.0);
  checks.push_back({"good_segment_length", segment, 0.25, ">=",
                    segment >= 0.25 - 1e-9 ? Status::pass : Status::fail});

  double worst12 = -1.0;
  double worst23 = -1.0;
  double worst3p = -1.0;
  for (double p = 1e-3; p <= 1e6; p *= 1.7) {
    const IsoperimetricChain chain = isoperimetric_chain(p);
    worst12 = std::max(worst12, chain.stage1 - chain.stage2);
    worst23 = std::max(worst23, std::abs(chain.stage2 - chain.stage3));
    worst3p = std::max(worst3p, chain.stage3 - p);
  }
  checks.push_back({"isoperimetric_stage1_le_stage2", worst12, 0.0, "<=",
                    worst12 <= 1e-9 ? Status::pass : Status::fail});
  checks.push_back({"isoperimetric_stage2_eq_stage3", worst23, 0.0, "~=",
                    worst23 <= 1e-9 ? Status::pass : Status::fail});
  checks.push_back({"isoperimetric_stage3_lt_p", worst3p, 0.0, "<",
                    worst3p < 0.0 ? Status::pass : Status::fail});

  checks.push_back({"piece_length_vs_2pi", 3.0 * log4, 2.0 * kPi, "vs", Status::info});

  checks.push_back({"ball_size_d3", static_cast<double>(ball_size_bound(3)), 13.0, "=",
                    ball_size_bound(3) == 13 ? Status::pass : Status::fail});

  // Least d with 3*2^(d-1)+1 > g-1 must be at least log2((g-2)/3), sampled
  // geometrically; the acceptance suite runs the exhaustive integer sweep.
  double worst_margin = std::numeric_limits<double>::infinity();
  for (std::int64_t g = 6; g <= 1000000; g = g * 3 / 2 + 1) {
    int d = 0;
    while (static_cast<double>(ball_size_bound(d)) <= static_cast<double>(g - 1)) ++d;
    worst_margin = std::min(worst_margin,
                            static_cast<double>(d) -
                                std::log2((static_cast<double>(g) - 2.0) / 3.0));
  }
  checks.push_back({"ball_counting_margin", worst_margin, 0.0, ">=",
                    worst_margin >= 0.0 ? Status::pass : Status::fail});

  const double diam27 = diameter_lower(27).lower_bound;
  checks.push_back({"diameter_lower_g27", diam27, 0.0, ">",
                    diam27 > 0.0 ? Status::pass : Status::fail});

  const double slope_unit = combinatorial_length_upper(1.0);
  checks.push_back({"combinatorial_length_unit", slope_unit, 42.0, "=",
                    slope_unit == 42.0 ? Status::pass : Status::fail});

  return checks;
}

}  // namespace psbraid
