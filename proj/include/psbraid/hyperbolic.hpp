#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace psbraid {

// Constants of the trigon combinatorial model for a closed hyperbolic
// surface: every piece has sides of length at most log 4, geodesic triangles
// have sides of length at least log 2, widths sit between 1/4 and log 2, and
// a geodesic crosses at most 40 * length + 2 pieces.
struct TrigonModelConstants {
  double max_side;
  double min_triangle_side;
  double min_area = 0.19;
  double max_area = 1.36;
  double min_width = 0.25;
  double max_width;
  int combinatorial_slope = 40;
  int combinatorial_offset = 2;

  TrigonModelConstants();
};

// Machine-readable JSON rendering of the model constants.
std::string trigon_constants_json();

// Hyperbolic law of cosines for sides: the angle opposite side c in a
// triangle with sides a, b, c. Throws std::domain_error when no such
// triangle exists (cosine expression outside [-1, 1]).
double angle_from_sides(double a, double b, double c);

// Side opposite the angle gamma enclosed by sides a and b.
double side_from_sides_angle(double a, double b, double gamma);

// The three evaluable stages of the isoperimetric chain for a loop of
// length p > 0:
//   stage1 = 4 pi sinh^2( asinh(p / 2pi) / 2 )
//   stage2 = 4 pi sinh^2( log(1 + p/pi) / 2 )
//   stage3 = p^2 / (p + pi)
// stage1 <= stage2 = stage3 < p.
struct IsoperimetricChain {
  double stage1;
  double stage2;
  double stage3;
};

IsoperimetricChain isoperimetric_chain(double p);

// stage3 of the chain: the area bound p^2 / (p + pi).
double isoperimetric_area_bound(double p);

// Total length of the covering graph of a filling graph: > 2 pi (g - 1).
double graph_length_lower(std::int64_t genus);

// Piece-count bound for a geodesic of hyperbolic length ell: 40 ell + 2.
double combinatorial_length_upper(double ell);

// At combinatorial distance d from a base piece there are at most
// 3 * 2^(d-1) + 1 pieces (1 at d = 0); the dual graph has valence <= 3.
std::uint64_t ball_size_bound(int distance);

struct DiameterBound {
  std::int64_t genus = 0;
  double lower_bound = 0.0;  // (log((g-2)/3) - 2) / 40, negative for small g
  bool valid = false;        // the bound is proved for g > 5
};

DiameterBound diameter_lower(std::int64_t genus);

// One row of the appendix verification table. `info` marks a reported
// comparison that is not asserted either way (the per-piece length constant
// 3 log 4 sits below 2 pi, so its ordering is only documented).
struct AppendixCheck {
  std::string name;
  double left = 0.0;
  double right = 0.0;
  std::string relation;
  enum class Status { pass, fail, info } status = Status::pass;
};

std::vector<AppendixCheck> appendix_checks();

}  // namespace psbraid
