#pragma once

#include "psbraid/pf.hpp"
#include "psbraid/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace psbraid {

enum class CurveColor { red, blue };

// at_alpha / at_beta: the two curves of an Aougab-Taylor pair on a subsurface.
// puncture_bounding: a red curve bounding a punctured disc that ties
// neighbouring subsurfaces into one filling pair of multicurves.
enum class CurveKind { at_alpha, at_beta, puncture_bounding };

struct CurveVertex {
  CurveColor color = CurveColor::red;
  CurveKind kind = CurveKind::at_alpha;
  int subsurface = 0;
};

struct LabeledEdge {
  Index red = 0;
  Index blue = 0;
  std::int64_t label = 0;
};

// Labeled bipartite intersection graph: red vertices for the multicurve A,
// blue for B, edge labels are geometric intersection numbers.
struct BipartiteCurveGraph {
  std::vector<CurveVertex> red_vertices;
  std::vector<CurveVertex> blue_vertices;
  std::vector<LabeledEdge> edges;

  // Throws std::invalid_argument on broken invariants: color/kind mismatch,
  // out-of-range edge endpoints, labels < 1, or a disconnected graph.
  void validate() const;

  bool connected() const;

  // Adjacency-label matrix, rows indexed by red vertices, columns by blue.
  IntersectionMatrix adjacency_matrix() const;

  // Graphviz "graph" with red/blue vertex coloring and edge labels as weights.
  std::string to_dot() const;
};

enum class CaseTag { case1, case2, case3 };

std::string to_string(CaseTag tag);

// A (g, n) filling multicurve configuration together with its bookkeeping:
// how the genus splits over subsurfaces and where every puncture lives.
struct Configuration {
  int genus = 0;
  int punctures = 0;
  CaseTag tag = CaseTag::case1;
  std::vector<int> subsurface_genera;
  std::vector<int> subsurface_punctures;
  // Punctures placed in discs away from all curves (the thrice-punctured disc
  // of the n = 3 construction, or the central region when n >= 2g).
  int central_punctures = 0;
  BipartiteCurveGraph graph;
  IntersectionMatrix matrix;

  // JSON object {genus, punctures, case, subsurface_genera, edges:[[r,b,label]]}.
  std::string to_json() const;
};

void validate_configuration(const Configuration& config);

// Upper bound on the intersection number of an Aougab-Taylor pair on a
// genus-h subsurface with one boundary component: 6 for h = 1, 24 for h = 2,
// and 24h^2 - 24h + 6 for h >= 3.
std::int64_t at_pair_intersection(std::int64_t subsurface_genus);

// Two subsurfaces of genus ceil(g/2) and floor(g/2), one Aougab-Taylor pair
// each, plus one red curve around the n punctures meeting both blue curves.
Configuration build_case1(int genus, int punctures);

// n/2 subsurfaces arranged cyclically when n is even. For odd n the chain is
// open: (n+1)/2 subsurfaces, the last one carrying a single puncture, and the
// (n-1)/2 twice-punctured discs link consecutive subsurfaces along a path.
// Subsurface genera never exceed ceil(2g/n).
Configuration build_case2(int genus, int punctures);

// g genus-1 subsurfaces arranged cyclically with fixed labels 6/8/2; the
// n - 2g surplus punctures sit in central discs and add no intersections.
Configuration build_case3(int genus, int punctures);

// Dispatch: n in {2,3} -> case 1; 4 <= n < 2g -> case 2; n >= 2g -> case 3.
// n = 1 is rejected (use the point-pushing bounds instead).
Configuration build_configuration(int genus, int punctures);

// Certified upper estimate: mu is the upper endpoint of the
// Perron-Frobenius bracket for gram(matrix).
DilatationEstimate configuration_dilatation(const Configuration& config,
                                            double tolerance = 1e-8);

// Exact closed forms for the case-2 row sums of N*N^T, computed from the
// subsurface genera alone (independent of the Gram product). alpha_rows[i]
// belongs to the i-th Aougab-Taylor red curve, twist_rows[i] to the i-th
// puncture-bounding red curve.
struct Case2RowSums {
  std::vector<WideInt> alpha_rows;
  std::vector<WideInt> twist_rows;
};

Case2RowSums expected_case2_row_sums(const Configuration& config);

// Worst-case row-sum bounds for case 2 in terms of x = ceil(2g/n):
// dashed edges carry at most P = 24x^2 - 24x + 8, so a valence-1 red row sum
// is at most 2P^2 + 2P and a valence-2 one at most 2P^2 + 6P + 4.
WideInt case2_edge_bound(std::int64_t x);
WideInt case2_alpha_row_bound(std::int64_t x);
WideInt case2_twist_row_bound(std::int64_t x);

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

}  // namespace psbraid
