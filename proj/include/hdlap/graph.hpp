#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace hdlap {

/// Undirected simple graph; vertices are variables, edges are pairwise
/// interactions. Vertex indices are 1-based, edges stored with i < j.
struct InteractionGraph {
  std::int64_t m = 0;
  std::vector<std::array<std::int64_t, 2>> edges;

  std::int64_t edge_count() const { return static_cast<std::int64_t>(edges.size()); }
  /// Total embedding dimension m + |edges|.
  std::int64_t n() const { return m + edge_count(); }

  std::vector<std::int64_t> degrees() const;
  /// Mean of the squared vertex degrees.
  double mean_squared_degree() const;

  /// Throws InputError on self-loops, duplicates or out-of-range indices.
  void validate() const;
};

InteractionGraph complete_graph(std::int64_t m);
InteractionGraph single_edge_graph();  // m = 2, one edge
InteractionGraph cycle_graph(std::int64_t m);

/// JSON form {"m": int, "edges": [[i, j], ...]} with 1-based indices.
InteractionGraph graph_from_json(const std::string& text);
/// Plain-text form: first line "m", then one "i j" pair per line.
/// Blank lines and lines starting with '#' are skipped.
InteractionGraph graph_from_edge_list(const std::string& text);
/// Dispatches on extension: .json uses the JSON reader, anything else the
/// edge-list reader.
InteractionGraph load_graph(const std::string& path);

}  // namespace hdlap
