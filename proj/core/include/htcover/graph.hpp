#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "htcover/index_set.hpp"
#include "htcover/ring.hpp"

namespace htcover {

enum class VertexKind { kX, kY };

struct Vertex {
  std::string name;
  VertexKind kind = VertexKind::kX;

  bool operator==(const Vertex&) const = default;
};

/// Subset of a graph's vertices, by position in the graph's vertex order.
using VertexSet = IndexSet;

/// Undirected edge between vertex positions, normalized so that u < v.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Resource guard shared by every exhaustive enumeration.
struct EnumerationLimits {
  std::size_t max_vertices = 32;
  std::uint64_t max_search_nodes = 200'000'000;
};

/// Simple undirected graph with a fixed vertex order. Immutable once built.
class Graph {
 public:
  Graph() = default;
  /// Throws ContractError on self-loops, duplicate edges, duplicate names or
  /// out-of-range endpoints; CapacityError beyond 64 vertices.
  Graph(std::string label, std::vector<Vertex> vertices,
        std::vector<std::pair<std::size_t, std::size_t>> edges);

  const std::string& label() const { return label_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
  const std::string& name(std::size_t i) const { return vertices_.at(i).name; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Neighbors of a single vertex.
  VertexSet adjacency(std::size_t v) const { return adjacency_.at(v); }
  bool adjacent(std::size_t u, std::size_t v) const { return adjacency_.at(u).contains(v); }

  VertexSet all() const { return VertexSet::full(vertices_.size()); }
  VertexSet y_vertices() const;

  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Resolves names to a vertex set; throws ContractError on unknown names.
  VertexSet vertex_set(const std::vector<std::string_view>& names) const;
  std::vector<std::string> names_of(VertexSet s) const;

  /// Variable list for ideals over this graph, shared between calls.
  const RingPtr& ring() const { return ring_; }

  /// Structural equality: vertex list (names, kinds, order) and edge set.
  bool operator==(const Graph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  std::string label_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adjacency_;
  RingPtr ring_;
};

/// Induced odd cycle plus r y-vertices outside it whose neighborhood lies in it.
struct ClusterDescriptor {
  VertexSet cycle;
  VertexSet ys;
  std::size_t r = 0;

  VertexSet support() const { return cycle | ys; }
  auto operator<=>(const ClusterDescriptor&) const = default;
};

struct Coloring {
  std::size_t colors = 0;
  /// Color per vertex, in 0..colors-1.
  std::vector<std::size_t> assignment;
};

/// Throws CapacityError if the graph exceeds the configured vertex cap.
void check_capacity(const Graph& g, const EnumerationLimits& limits);

/// H_1: 5-cycle x1..x5 with y1 joined to x1,x2,x3. H_t (t>1): (4t-1)-cycle,
/// y1 joined to x1,x2,x3 and y_i joined to x_{4i-4}..x_{4i-1}.
Graph build_ht(int t);
Graph build_odd_cycle(int k);

/// Returns t if g is structurally identical to build_ht(t).
std::optional<int> recognize_ht(const Graph& g);

Graph induced_subgraph(const Graph& g, VertexSet a);
VertexSet neighbors(const Graph& g, VertexSet a);
std::size_t induced_edge_count(const Graph& g, VertexSet a);

std::vector<VertexSet> enumerate_minimal_vertex_covers(const Graph& g,
                                                       const EnumerationLimits& limits = {});
/// Minimal vertex covers of the subgraph induced by region, as subsets of g.
std::vector<VertexSet> enumerate_minimal_vertex_covers(const Graph& g, VertexSet region,
                                                       const EnumerationLimits& limits = {});

std::size_t minimum_vertex_cover_size(const Graph& g, const EnumerationLimits& limits = {});
/// All minimum-cardinality vertex covers of the subgraph induced by region.
/// An edgeless region yields the single empty cover.
std::vector<VertexSet> minimum_vertex_covers(const Graph& g, VertexSet region,
                                             const EnumerationLimits& limits = {});

/// Exact chromatic number with a witness coloring. The empty graph needs 0 colors.
Coloring chromatic_number(const Graph& g, const EnumerationLimits& limits = {});

bool is_induced_odd_cycle(const Graph& g, VertexSet a);
std::vector<VertexSet> enumerate_induced_odd_cycles(const Graph& g,
                                                    const EnumerationLimits& limits = {});

bool is_valid_cluster(const Graph& g, const ClusterDescriptor& c);
/// All r-clusters; empty when r exceeds the number of y-vertices.
std::vector<ClusterDescriptor> enumerate_r_clusters(const Graph& g, std::size_t r,
                                                    const EnumerationLimits& limits = {});

}  // namespace htcover
