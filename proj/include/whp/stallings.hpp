#pragma once

#include "whp/word.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace whp {

/// Directed edge source --x_label--> target. `trace` is a word in the subgroup
/// generators y_1..y_k: for a closed path at the base vertex, the product of the
/// traces (inverted on reversed edges) is an expression of the path label in the y's.
struct GraphEdge {
  int source;
  int target;
  int label;
  FreeWord trace;
};

/// Folded core graph of a finitely generated subgroup of F_n, canonically
/// numbered: vertex 0 is the base and the rest follow breadth-first discovery
/// order with letters explored as x1, X1, x2, X2, ...
class FoldedGraph {
 public:
  int rank() const { return rank_; }
  int generator_count() const { return generator_count_; }
  int vertex_count() const { return vertex_count_; }
  int base() const { return 0; }
  const std::vector<GraphEdge>& edges() const { return edges_; }

  /// Edge list dump, one "s -x3-> t" per line.
  std::string str() const;

  /// Equality as based labelled graphs; traces are ignored.
  friend bool operator==(const FoldedGraph& a, const FoldedGraph& b);

 private:
  friend FoldedGraph fold(std::span<const FreeWord> generators, int rank);

  int rank_ = 0;
  int generator_count_ = 0;
  int vertex_count_ = 1;
  std::vector<GraphEdge> edges_;
};

/// Folded core graph of the subgroup generated by `generators`. An empty list gives
/// the single-vertex graph of the trivial subgroup.
FoldedGraph fold(std::span<const FreeWord> generators, int rank);

/// |E| - |V| + 1.
int graph_rank(const FoldedGraph& g);

bool membership(const FoldedGraph& g, const FreeWord& w);

/// Writes w as a word in the generators the graph was folded from, if w is in the
/// subgroup. The result has rank generator_count().
std::optional<FreeWord> express(const FoldedGraph& g, const FreeWord& w);

bool is_injective_endo(std::span<const FreeWord> images, int rank);
bool is_surjective_endo(std::span<const FreeWord> images, int rank);

/// Two-sided inverse of the endomorphism x_i -> images[i], when it is an automorphism.
std::optional<FreeImages> invert_free_automorphism(std::span<const FreeWord> images, int rank);

}  // namespace whp
