#include "psbraid/curves.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace psbraid {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

// Genus parts for k subsurfaces, as equal as possible, larger parts first.
std::vector<int> split_genus(int genus, int parts) {
  std::vector<int> out(static_cast<std::size_t>(parts), genus / parts);
  for (int i = 0; i < genus % parts; ++i) out[static_cast<std::size_t>(i)] += 1;
  return out;
}

void sort_edges(std::vector<LabeledEdge>& edges) {
  std::sort(edges.begin(), edges.end(), [](const LabeledEdge& a, const LabeledEdge& b) {
    return a.red != b.red ? a.red < b.red : a.blue < b.blue;
  });
}

Configuration finish(Configuration config) {
  sort_edges(config.graph.edges);
  config.graph.validate();
  config.matrix = config.graph.adjacency_matrix();
  validate_configuration(config);
  return config;
}

}  // namespace

void BipartiteCurveGraph::validate() const {
  for (const CurveVertex& v : red_vertices) {
    require(v.color == CurveColor::red, "red vertex list contains a blue vertex");
    require(v.kind != CurveKind::at_beta, "at-beta curves are blue");
  }
  for (const CurveVertex& v : blue_vertices) {
    require(v.color == CurveColor::blue, "blue vertex list contains a red vertex");
    require(v.kind == CurveKind::at_beta, "blue vertices must be at-beta curves");
  }
  for (const LabeledEdge& e : edges) {
    require(e.red >= 0 && e.red < static_cast<Index>(red_vertices.size()),
            "edge red endpoint out of range");
    require(e.blue >= 0 && e.blue < static_cast<Index>(blue_vertices.size()),
            "edge blue endpoint out of range");
    require(e.label >= 1, "edge labels are positive intersection numbers");
  }
  require(connected(), "bipartite curve graph must be connected");
}

bool BipartiteCurveGraph::connected() const {
  const std::size_t reds = red_vertices.size();
  const std::size_t total = reds + blue_vertices.size();
  if (total == 0) return false;
  std::vector<char> seen(total, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t visited = 1;
  while (!stack.empty()) {
    const std::size_t at = stack.back();
    stack.pop_back();
    for (const LabeledEdge& e : edges) {
      const std::size_t r = static_cast<std::size_t>(e.red);
      const std::size_t b = reds + static_cast<std::size_t>(e.blue);
      std::size_t next = total;
      if (r == at)
        next = b;
      else if (b == at)
        next = r;
      if (next < total && !seen[next]) {
        seen[next] = 1;
        ++visited;
        stack.push_back(next);
      }
    }
  }
  return visited == total;
}

IntersectionMatrix BipartiteCurveGraph::adjacency_matrix() const {
  IntersectionMatrix m = IntersectionMatrix::Zero(static_cast<Index>(red_vertices.size()),
                                                  static_cast<Index>(blue_vertices.size()));
  for (const LabeledEdge& e : edges) m(e.red, e.blue) += e.label;
  return m;
}

std::string BipartiteCurveGraph::to_dot() const {
  std::ostringstream out;
  out << "graph configuration {\n";
  out << "  node [style=filled];\n";
  const auto name = [](const CurveVertex& v, std::size_t index, bool red) {
    if (!red) return "b" + std::to_string(index);
    return (v.kind == CurveKind::puncture_bounding ? "c" : "a") + std::to_string(index);
  };
  std::size_t alpha = 0;
  std::size_t twist = 0;
  std::vector<std::string> red_names;
  for (const CurveVertex& v : red_vertices) {
    const std::size_t index = v.kind == CurveKind::puncture_bounding ? twist++ : alpha++;
    red_names.push_back(name(v, index, true));
    out << "  " << red_names.back() << " [color=red, fillcolor=lightcoral, subsurface="
        << v.subsurface << "];\n";
  }
  for (std::size_t j = 0; j < blue_vertices.size(); ++j) {
    out << "  b" << j << " [color=blue, fillcolor=lightblue, subsurface="
        << blue_vertices[j].subsurface << "];\n";
  }
  for (const LabeledEdge& e : edges) {
    out << "  " << red_names[static_cast<std::size_t>(e.red)] << " -- b" << e.blue
        << " [label=" << e.label << ", weight=" << e.label << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::case1: return "case1";
    case CaseTag::case2: return "case2";
    case CaseTag::case3: return "case3";
  }
  return "unknown";
}

std::string Configuration::to_json() const {
  nlohmann::ordered_json j;
  j["genus"] = genus;
  j["punctures"] = punctures;
  j["case"] = psbraid::to_string(tag);
  j["subsurface_genera"] = subsurface_genera;
  nlohmann::ordered_json edge_list = nlohmann::ordered_json::array();
  for (const LabeledEdge& e : graph.edges)
    edge_list.push_back({e.red, e.blue, e.label});
  j["edges"] = edge_list;
  return j.dump();
}

void validate_configuration(const Configuration& config) {
  require(config.genus >= 2, "genus must be >= 2");
  require(config.punctures >= 2, "configurations need at least 2 punctures");
  const int genus_total = std::accumulate(config.subsurface_genera.begin(),
                                          config.subsurface_genera.end(), 0);
  require(genus_total == config.genus, "subsurface genera must sum to the genus");
  for (int h : config.subsurface_genera) require(h >= 1, "subsurface genera are positive");
  const int puncture_total = std::accumulate(config.subsurface_punctures.begin(),
                                             config.subsurface_punctures.end(), 0) +
                             config.central_punctures;
  require(puncture_total == config.punctures, "puncture bookkeeping must total n");
  require(config.central_punctures >= 0, "central puncture count must be nonnegative");

  const int g = config.genus;
  const int n = config.punctures;
  switch (config.tag) {
    case CaseTag::case1: require(n == 2 || n == 3, "case 1 covers n in {2,3}"); break;
    case CaseTag::case2: require(n >= 4 && n < 2 * g, "case 2 covers 4 <= n < 2g"); break;
    case CaseTag::case3: require(n >= 2 * g, "case 3 covers n >= 2g"); break;
  }

  config.graph.validate();
  require(config.matrix == config.graph.adjacency_matrix(),
          "matrix must be the adjacency-label matrix of the graph");
}

std::int64_t at_pair_intersection(std::int64_t subsurface_genus) {
  if (subsurface_genus < 1)
    throw std::invalid_argument("Aougab-Taylor pairs need subsurface genus >= 1");
  if (subsurface_genus > 500000000)
    throw std::invalid_argument("subsurface genus too large for 64-bit intersection numbers");
  if (subsurface_genus == 1) return 6;
  if (subsurface_genus == 2) return 24;
  return 24 * subsurface_genus * subsurface_genus - 24 * subsurface_genus + 6;
}

Configuration build_case1(int genus, int punctures) {
  require(genus >= 2, "genus must be >= 2");
  require(punctures == 2 || punctures == 3, "case 1 covers n in {2,3}");

  Configuration config;
  config.genus = genus;
  config.punctures = punctures;
  config.tag = CaseTag::case1;
  config.subsurface_genera = {(genus + 1) / 2, genus / 2};
  config.subsurface_punctures = {1, 1};
  config.central_punctures = punctures - 2;

  auto& graph = config.graph;
  for (int i = 0; i < 2; ++i) {
    graph.red_vertices.push_back({CurveColor::red, CurveKind::at_alpha, i});
    graph.blue_vertices.push_back({CurveColor::blue, CurveKind::at_beta, i});
  }
  graph.red_vertices.push_back({CurveColor::red, CurveKind::puncture_bounding, 0});
  for (Index i = 0; i < 2; ++i) {
    const std::int64_t d = at_pair_intersection(config.subsurface_genera[static_cast<std::size_t>(i)]);
    graph.edges.push_back({i, i, d});
    graph.edges.push_back({2, i, d + 2});
  }
  return finish(std::move(config));
}

Configuration build_case2(int genus, int punctures) {
  require(genus >= 2, "genus must be >= 2");
  require(punctures >= 4 && punctures < 2 * genus, "case 2 covers 4 <= n < 2g");

  const bool even = punctures % 2 == 0;
  const int subsurfaces = even ? punctures / 2 : (punctures + 1) / 2;

  Configuration config;
  config.genus = genus;
  config.punctures = punctures;
  config.tag = CaseTag::case2;
  config.subsurface_genera = split_genus(genus, subsurfaces);
  config.subsurface_punctures.assign(static_cast<std::size_t>(subsurfaces), 2);
  if (!even) config.subsurface_punctures.back() = 1;
  config.central_punctures = 0;

  const std::int64_t cap = ceil_div(2 * genus, punctures);
  for (int h : config.subsurface_genera)
    require(h <= cap, "case-2 subsurface genus exceeded ceil(2g/n)");

  auto& graph = config.graph;
  std::vector<std::int64_t> d(static_cast<std::size_t>(subsurfaces));
  for (int i = 0; i < subsurfaces; ++i) {
    graph.red_vertices.push_back({CurveColor::red, CurveKind::at_alpha, i});
    graph.blue_vertices.push_back({CurveColor::blue, CurveKind::at_beta, i});
    d[static_cast<std::size_t>(i)] =
        at_pair_intersection(config.subsurface_genera[static_cast<std::size_t>(i)]);
    graph.edges.push_back({i, i, d[static_cast<std::size_t>(i)]});
  }
  if (even) {
    // Cyclic chain of twice-punctured discs.
    for (Index i = 0; i < subsurfaces; ++i) {
      graph.red_vertices.push_back({CurveColor::red, CurveKind::puncture_bounding,
                                    static_cast<int>(i)});
      const Index next = (i + 1) % subsurfaces;
      graph.edges.push_back({subsurfaces + i, i, d[static_cast<std::size_t>(i)] + 2});
      graph.edges.push_back({subsurfaces + i, next, 2});
    }
  } else {
    // Open chain: disc i pairs the boundary puncture of subsurface i with the
    // Aougab-Taylor puncture of subsurface i+1.
    for (Index i = 0; i + 1 < subsurfaces; ++i) {
      graph.red_vertices.push_back({CurveColor::red, CurveKind::puncture_bounding,
                                    static_cast<int>(i)});
      graph.edges.push_back({subsurfaces + i, i, 2});
      graph.edges.push_back({subsurfaces + i, i + 1, d[static_cast<std::size_t>(i + 1)] + 2});
    }
  }
  return finish(std::move(config));
}

Configuration build_case3(int genus, int punctures) {
  require(genus >= 2, "genus must be >= 2");
  require(punctures >= 2 * genus, "case 3 covers n >= 2g");

  Configuration config;
  config.genus = genus;
  config.punctures = punctures;
  config.tag = CaseTag::case3;
  config.subsurface_genera.assign(static_cast<std::size_t>(genus), 1);
  config.subsurface_punctures.assign(static_cast<std::size_t>(genus), 2);
  config.central_punctures = punctures - 2 * genus;

  auto& graph = config.graph;
  for (int i = 0; i < genus; ++i) {
    graph.red_vertices.push_back({CurveColor::red, CurveKind::at_alpha, i});
    graph.blue_vertices.push_back({CurveColor::blue, CurveKind::at_beta, i});
    graph.edges.push_back({i, i, 6});
  }
  for (Index i = 0; i < genus; ++i) {
    graph.red_vertices.push_back({CurveColor::red, CurveKind::puncture_bounding,
                                  static_cast<int>(i)});
    graph.edges.push_back({genus + i, i, 8});
    graph.edges.push_back({genus + i, (i + 1) % genus, 2});
  }
  return finish(std::move(config));
}

Configuration build_configuration(int genus, int punctures) {
  if (genus < 2) throw std::invalid_argument("genus must be >= 2");
  if (punctures <= 0) throw std::invalid_argument("puncture count must be positive");
  if (punctures == 1)
    throw std::invalid_argument(
        "n = 1 has no multicurve configuration; use the point-pushing bounds "
        "(`bounds` command) instead");
  if (punctures <= 3) return build_case1(genus, punctures);
  if (punctures < 2 * genus) return build_case2(genus, punctures);
  return build_case3(genus, punctures);
}

DilatationEstimate configuration_dilatation(const Configuration& config, double tolerance) {
  const PFBracket bracket = pf_eigenvalue(gram(config.matrix), tolerance);
  return dilatation_from_mu(bracket.upper);
}

Case2RowSums expected_case2_row_sums(const Configuration& config) {
  require(config.tag == CaseTag::case2, "closed-form row sums apply to case 2 only");
  const std::size_t k = config.subsurface_genera.size();
  std::vector<WideInt> d(k);
  std::vector<WideInt> e(k);
  for (std::size_t i = 0; i < k; ++i) {
    d[i] = at_pair_intersection(config.subsurface_genera[i]);
    e[i] = d[i] + 2;
  }
  Case2RowSums sums;
  if (config.punctures % 2 == 0) {
    // Blue column sum is D_i + E_i + 2 everywhere in the cyclic arrangement.
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t next = (i + 1) % k;
      sums.alpha_rows.push_back(d[i] * (d[i] + e[i] + 2));
      sums.twist_rows.push_back(e[i] * (d[i] + e[i] + 2) + 2 * (d[next] + e[next] + 2));
    }
  } else {
    // Open chain: first and last blue vertices have valence 2.
    std::vector<WideInt> column(k);
    for (std::size_t i = 0; i < k; ++i) {
      column[i] = d[i];
      if (i + 1 < k) column[i] += 2;     // solid edge from disc i
      if (i > 0) column[i] += e[i];      // dashed edge from disc i-1
    }
    for (std::size_t i = 0; i < k; ++i) sums.alpha_rows.push_back(d[i] * column[i]);
    for (std::size_t i = 0; i + 1 < k; ++i)
      sums.twist_rows.push_back(2 * column[i] + e[i + 1] * column[i + 1]);
  }
  return sums;
}

WideInt case2_edge_bound(std::int64_t x) {
  const WideInt w = x;
  return 24 * w * w - 24 * w + 8;
}

WideInt case2_alpha_row_bound(std::int64_t x) {
  const WideInt p = case2_edge_bound(x);
  return 2 * p * p + 2 * p;
}

WideInt case2_twist_row_bound(std::int64_t x) {
  const WideInt p = case2_edge_bound(x);
  return 2 * p * p + 6 * p + 4;
}

}  // namespace psbraid
