#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ccc/arith.hpp"
#include "ccc/group.hpp"

namespace ccc {

/// Simple undirected graph: symmetric adjacency, empty diagonal.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::vector<std::string> labels);

  int num_vertices() const { return static_cast<int>(labels_.size()); }
  long long num_edges() const;
  bool adjacent(int u, int v) const { return adj_[u][v]; }
  void add_edge(int u, int v);
  int degree(int v) const;
  const std::vector<std::string>& labels() const { return labels_; }

  nlohmann::json to_json() const;  // {labels, edges}

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<char>> adj_;
};

/// Disjoint-union-of-cliques normal form: (multiplicity l_i, clique size m_i),
/// sorted by decreasing m_i, equal sizes merged.
struct CliqueDecomposition {
  std::vector<std::pair<long long, long long>> parts;

  Int total_vertices() const;
  Int total_edges() const;
  std::string to_string() const;  // e.g. "K4 + 2K1"
  bool operator==(const CliqueDecomposition&) const = default;

  static CliqueDecomposition from_sizes(std::vector<long long> clique_sizes);
  /// Parses `K:4+2*K:1` (only complete-graph terms).
  static CliqueDecomposition parse(const std::string& text);
};

/// Commuting conjugacy class graph. Vertices are the non-central classes in
/// ClassData order; distinct classes are adjacent iff some representatives
/// commute. The edge test fixes one representative of the first class:
/// conjugation equivariance makes that equivalent to the all-pairs test.
SimpleGraph ccc_graph(const FiniteGroup& g);
SimpleGraph ccc_graph(const FiniteGroup& g, const ClassData& data);

std::optional<CliqueDecomposition> detect_clique_union(const SimpleGraph& g);

SimpleGraph graph_from_decomposition(const CliqueDecomposition& d);

/// Deterministic DOT rendering: vertices in label order, edges lexicographic.
std::string export_dot(const SimpleGraph& g);

/// Graph mini-syntax for conjecture checks without a group:
/// terms `K:n`, `star:n` (K_{1,n}), optional multiplicity `l*K:n`,
/// joined with `+` for disjoint union.
SimpleGraph parse_graph_expr(const std::string& text);

}  // namespace ccc
