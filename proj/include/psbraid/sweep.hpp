#pragma once

#include "psbraid/bounds.hpp"
#include "psbraid/curves.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace psbraid {

// Puncture range per genus: n runs from `lo` to coeff*g + offset inclusive
// (coeff = 0 gives a fixed interval). Parsed from strings like "2..2g+16",
// "4..2g-1" or "1..40".
struct NRule {
  std::int64_t lo = 2;
  std::int64_t coeff = 2;
  std::int64_t offset = 16;

  static NRule parse(const std::string& text);
  std::int64_t hi_for(std::int64_t genus) const { return coeff * genus + offset; }
  std::string to_string() const;
};

struct SweepSpec {
  std::int64_t g_min = 2;
  std::int64_t g_max = 64;
  NRule n_rule;
  double tolerance = 1e-8;
  BoundVariant variant = BoundVariant::proof;
  // Added to the entropy upper bound before checking; a negative value is the
  // fault-injection self-test proving the checker reports violations.
  double perturb_upper = 0.0;
};

enum class ViolationKind { bound, computation };

struct Violation {
  std::int64_t genus = 0;
  std::int64_t punctures = 0;
  ViolationKind kind = ViolationKind::bound;
  std::string lower_name;
  std::string upper_name;
  double lower_value = 0.0;
  double upper_value = 0.0;
  std::string detail;
};

// One CSV row of the verification sweep.
struct GridPointSummary {
  std::int64_t genus = 0;
  std::int64_t punctures = 0;
  std::string case_tag;
  double mu_upper = 0.0;
  double entropy = 0.0;
  double main_upper_value = 0.0;
  double constant_lower_value = 0.0;
  double thm61_proof = 0.0;
  double thm61_statement = 0.0;
  bool ok = false;
};

struct ConsistencyReport {
  std::int64_t grid_size = 0;
  std::vector<Violation> violations;
  std::vector<GridPointSummary> points;
  double elapsed_seconds = 0.0;

  bool passed() const { return violations.empty(); }
  bool has_computation_failure() const;

  // header: g,n,case,mu_upper,entropy,main_upper,constant_lower,thm61_proof,
  //         thm61_statement,ok
  std::string to_csv() const;
  std::string to_json() const;
  std::string to_table() const;
};

// Certification sweep. For every grid point with n >= 2: build the
// configuration, take the certified entropy upper estimate, and check
//   every valid lower bound <= entropy <= (possibly perturbed) main_upper
// plus the pairwise lower <= upper lattice of the bound profile. Points with
// n = 1 check the point-pushing chain and the lattice only. Any exception at
// a grid point becomes a computation violation, never a silent skip.
ConsistencyReport run_verification(const SweepSpec& spec);

// The genus-growth lower bound reproduced through the appendix plumbing:
// (1/3) * kra_lower(numerator / 80n) with numerator = 40 * diameter_lower(g),
// clamped at zero like the proof variant.
double growth_lower_via_appendix(std::int64_t genus, std::int64_t punctures);

}  // namespace psbraid
