#pragma once

#include "psbraid/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace psbraid {

// Which form of the genus-growth lower bound to evaluate: the stated one has
// +2 in the inner numerator, the derivation ends with -2. Both are exposed;
// consistency sweeps use the weaker `proof` form, clamped at zero.
enum class BoundVariant { statement, proof };

// Entropy upper bound from the multicurve constructions:
// 4 log(ceil(2g/n)) + 4 log 7 for n <= 2g, constant 4 log 6 beyond.
double main_upper(std::int64_t genus, std::int64_t punctures);

// Uniform entropy lower bound 0.000155 for every pure surface braid.
double constant_lower();

// Homology lower bound 0.00031 * (kappa + 1) / |chi|; requires chi < 0.
double alm_lower(std::int64_t kappa, std::int64_t chi);

// Lower bound max{2g, n-1} on the dimension of the fixed homology subspace.
std::int64_t kappa_lower(std::int64_t genus, std::int64_t punctures);

// (1/3) log(1 + (log((g-2)/3) +- 2) / (160 n)) for g > 5. The proof variant
// clamps the inner numerator at zero instead of going negative.
double growth_lower(std::int64_t genus, std::int64_t punctures, BoundVariant variant);

// Lower bound log(1 + t/2) on the extremal quasiconformal distortion
// function; strictly increasing, zero at t = 0. Requires t >= 0.
double kra_lower(double t);

// Inputs to the two-sided multi-twist intersection inequality: twist
// exponents s_i about disjoint curves c_i, with the relevant intersection
// numbers of rho and gamma.
struct IvanovInput {
  std::vector<std::int64_t> exponents;
  std::vector<std::int64_t> rho_intersections;    // i(rho, c_i)
  std::vector<std::int64_t> gamma_intersections;  // i(c_i, gamma)
  std::int64_t rho_gamma = 0;                     // i(rho, gamma)
};

struct IvanovBounds {
  WideInt lower = 0;
  WideInt upper = 0;
};

// lower = sum (|s_i| - 2) i(rho,c_i) i(c_i,gamma) - i(rho,gamma),
// upper = sum  |s_i|      i(rho,c_i) i(c_i,gamma) + i(rho,gamma).
IvanovBounds ivanov_bounds(const IvanovInput& input);

// Point-pushing entropy bound 4 log g + 2 log 24 for the 1-puncture braid
// group, and the dilatation bound (24g^2 - 24g + 6)^2 + 2 of the underlying
// twist construction. log of the latter is always below the former.
double pointpush_upper(std::int64_t genus);
WideInt pointpush_dilatation_upper(std::int64_t genus);

// Context values for neighbouring groups (not bounds on the pure braid
// group itself, except where noted): Penner's closed-surface window, the
// Dowdall point-pushing lower bound, and Tsai's parametric punctured-surface
// window with caller-supplied c_g.
double penner_lower(std::int64_t genus);   // log 2 / (12g - 12)
double penner_upper(std::int64_t genus);   // log 11 / g
double dowdall_lower(std::int64_t genus);  // (1/5) log(2g), valid for n = 1
double tsai_lower(std::int64_t punctures, double cg);  // log n / (cg * n)
double tsai_upper(std::int64_t punctures, double cg);  // cg * log n / n

enum class BoundSide { lower, upper };

// One named bound evaluated at (g, n). `valid` means the value is usable as
// a bound on the least pure-braid entropy at (g, n): the theorem's own
// hypotheses hold there and the statement transfers to the pure braid group.
// Context entries (Penner, the Tsai upper) keep their values but stay
// invalid, so consistency sweeps never compare bounds across groups.
struct BoundEntry {
  std::string name;
  double value = 0.0;
  bool valid = false;
  BoundSide side = BoundSide::lower;
};

struct BoundProfile {
  std::int64_t genus = 0;
  std::int64_t punctures = 0;
  std::vector<BoundEntry> entries;

  const BoundEntry* find(const std::string& name) const;
};

// Every named bound at (g, n), in a fixed serialization order. Tsai entries
// are invalid (value nan) unless a c_g >= 1 is supplied and n >= 3.
BoundProfile bound_profile(std::int64_t genus, std::int64_t punctures,
                           std::optional<double> tsai_cg = std::nullopt);

// CSV header "g,n,<name>,...,<name>_valid,..." and matching one-line row.
std::string bound_profile_csv_header(const BoundProfile& profile);
std::string bound_profile_csv_row(const BoundProfile& profile);
std::string bound_profile_json(const BoundProfile& profile);

}  // namespace psbraid
