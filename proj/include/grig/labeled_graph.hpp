#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "grig/tree_action.hpp"
#include "grig/word.hpp"

namespace grig::group {

/// Undirected labeled edge between vertex indices; v == w encodes a loop.
/// Stored once per edge with v <= w.
struct LabeledEdge {
  std::int32_t v = 0;
  std::int32_t w = 0;
  Gen label = Gen::a;
  bool loop() const noexcept { return v == w; }
  bool operator==(const LabeledEdge&) const = default;
};

/// Vertex-labeled multigraph over edge labels {a,b,c,d} with a root.
/// Vertices are dense indices with display names (level-n bit strings for
/// Schreier graphs, window positions for window graphs).
struct LabeledGraph {
  std::vector<std::string> vertex_names;
  std::vector<LabeledEdge> edges;
  std::int32_t root = 0;

  std::int64_t vertex_count() const noexcept { return static_cast<std::int64_t>(vertex_names.size()); }
};

/// Schreier graph of the action on level n of the tree, rooted at 1^n.
/// Guarded at n <= 16.
LabeledGraph schreier_graph(int n);

/// Line graph of a subshift window: vertices 1..|w|+1, the letter at window
/// index i spans vertices i and i+1:
///   a -> one a-edge; x -> parallel b,c edges plus d-loops at both ends;
///   y -> parallel b,d plus c-loops; z -> parallel c,d plus b-loops.
/// Rooted at the vertex whose absolute position is 1.
LabeledGraph graph_from_window(const PointedWord& w);

/// Linear-path normal form: vertex order plus per-seam and per-vertex
/// sorted label lists. Throws std::invalid_argument when not path-shaped.
struct PathForm {
  std::vector<std::int32_t> order;
  std::vector<std::vector<Gen>> seam_labels;  // size V-1
  std::vector<std::vector<Gen>> loop_labels;  // size V
};

PathForm path_form(const LabeledGraph& g);

struct GraphDiffEntry {
  std::int64_t position = 0;  // path index of the vertex (loops) or left seam vertex (edges)
  bool loop = false;
  Gen label = Gen::a;
  int side = 0;  // 0: present only in first graph, 1: only in second
};

struct GraphDiff {
  std::vector<GraphDiffEntry> entries;
  std::int64_t path_length = 0;  // number of path vertices of the aligned graphs

  bool empty() const noexcept { return entries.empty(); }
  /// True iff every discrepancy is a loop at one of the two path ends.
  bool loops_at_ends_only() const;
};

/// Aligns two path-shaped graphs end to end (both orientations tried; the
/// a-labeled seam pattern must match) and lists the differing edges/loops.
/// Throws when the graphs cannot be aligned.
GraphDiff compare_graphs(const LabeledGraph& g1, const LabeledGraph& g2);

struct EdgeCensus {
  std::int64_t a_edges = 0;       // non-loop edges labeled a
  std::int64_t double_edges = 0;  // vertex pairs joined by exactly two parallel edges
  std::int64_t loops = 0;
};

EdgeCensus census(const LabeledGraph& g);

/// Verifies that no label repeats at a vertex (counting a loop once) and
/// returns the vertices with missing labels. For graphs of legal windows
/// the deficit is confined to the two path ends.
std::vector<std::int32_t> label_deficit_vertices(const LabeledGraph& g);

/// Text format: "root <name>" header, then one "v w label" line per edge
/// (loops as "v v label"), names as in vertex_names.
void write_edge_list(std::ostream& os, const LabeledGraph& g);
LabeledGraph read_edge_list(std::istream& is);

}  // namespace grig::group
