#include "htcover/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "htcover/error.hpp"

namespace htcover {

std::shared_ptr<const Ring> Ring::anonymous(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
  return std::make_shared<const Ring>(std::move(names));
}

Graph::Graph(std::string label, std::vector<Vertex> vertices,
             std::vector<std::pair<std::size_t, std::size_t>> edges)
    : label_(std::move(label)), vertices_(std::move(vertices)) {
  if (vertices_.size() > IndexSet::kMaxIndex) {
    throw CapacityError("graph has " + std::to_string(vertices_.size()) +
                        " vertices; at most 64 are representable");
  }
  std::set<std::string> seen;
  for (const Vertex& v : vertices_) {
    if (v.name.empty()) throw ContractError("vertex with empty name");
    if (!seen.insert(v.name).second) throw ContractError("duplicate vertex name '" + v.name + "'");
  }
  adjacency_.assign(vertices_.size(), VertexSet{});
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a >= vertices_.size() || b >= vertices_.size()) {
      throw ContractError("edge endpoint is not a declared vertex");
    }
    if (a == b) throw ContractError("self-loop on vertex '" + vertices_[a].name + "'");
    if (adjacency_[a].contains(b)) {
      throw ContractError("duplicate edge {" + vertices_[a].name + "," + vertices_[b].name + "}");
    }
    adjacency_[a].insert(b);
    adjacency_[b].insert(a);
    edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(edges_.begin(), edges_.end());

  std::vector<std::string> names;
  names.reserve(vertices_.size());
  for (const Vertex& v : vertices_) names.push_back(v.name);
  ring_ = std::make_shared<const Ring>(std::move(names));
}

VertexSet Graph::y_vertices() const {
  VertexSet ys;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].kind == VertexKind::kY) ys.insert(i);
  }
  return ys;
}

std::optional<std::size_t> Graph::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].name == name) return i;
  }
  return std::nullopt;
}

VertexSet Graph::vertex_set(const std::vector<std::string_view>& names) const {
  VertexSet s;
  for (std::string_view n : names) {
    auto i = index_of(n);
    if (!i) throw ContractError("unknown vertex '" + std::string(n) + "'");
    s.insert(*i);
  }
  return s;
}

std::vector<std::string> Graph::names_of(VertexSet s) const {
  std::vector<std::string> out;
  for (std::size_t i : s) out.push_back(name(i));
  return out;
}

void check_capacity(const Graph& g, const EnumerationLimits& limits) {
  if (g.vertex_count() > limits.max_vertices) {
    throw CapacityError("graph has " + std::to_string(g.vertex_count()) +
                        " vertices; capacity cap is " + std::to_string(limits.max_vertices));
  }
}

namespace {

void check_subset(const Graph& g, VertexSet a) {
  if (!a.is_subset_of(g.all())) throw ContractError("vertex set contains foreign vertices");
}

class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t cap) : cap_(cap) {}
  void tick() {
    if (++used_ > cap_) throw CapacityError("search node budget exhausted");
  }

 private:
  std::uint64_t cap_;
  std::uint64_t used_ = 0;
};

std::string x_name(int i) { return "x" + std::to_string(i); }
std::string y_name(int i) { return "y" + std::to_string(i); }

// First vertex of region (ascending) having an edge inside region to a
// vertex outside `covered`, i.e. an endpoint of an uncovered edge.
std::optional<std::size_t> uncovered_endpoint(const Graph& g, VertexSet region, VertexSet covered) {
  for (std::size_t u : region - covered) {
    if (!((g.adjacency(u) & region) - covered).empty()) return u;
  }
  return std::nullopt;
}

// Branch on a vertex u incident to an uncovered edge: either u joins the
// cover, or u is excluded and its whole neighborhood must join.
void branch_covers(const Graph& g, VertexSet region, VertexSet in, VertexSet out, NodeBudget& budget,
                   const std::function<void(VertexSet)>& emit) {
  budget.tick();
  auto u = uncovered_endpoint(g, region, in);
  if (!u) {
    emit(in);
    return;
  }
  if (!out.contains(*u)) branch_covers(g, region, in | VertexSet{*u}, out, budget, emit);
  const VertexSet forced = g.adjacency(*u) & region;
  if (!forced.intersects(out) && !in.contains(*u)) {
    VertexSet out2 = out;
    out2.insert(*u);
    branch_covers(g, region, in | forced, out2, budget, emit);
  }
}

bool is_minimal_cover(const Graph& g, VertexSet region, VertexSet cover) {
  for (std::size_t v : cover) {
    if (((g.adjacency(v) & region) - cover).empty()) return false;
  }
  return true;
}

}  // namespace

Graph build_ht(int t) {
  if (t < 1) throw ContractError("H_t requires t >= 1");
  const int cycle_len = t == 1 ? 5 : 4 * t - 1;
  if (cycle_len + t > static_cast<int>(IndexSet::kMaxIndex)) {
    throw CapacityError("H_" + std::to_string(t) + " exceeds 64 vertices");
  }
  std::vector<Vertex> vertices;
  for (int i = 1; i <= cycle_len; ++i) vertices.push_back({x_name(i), VertexKind::kX});
  for (int i = 1; i <= t; ++i) vertices.push_back({y_name(i), VertexKind::kY});

  auto x = [](int i) { return static_cast<std::size_t>(i - 1); };
  auto y = [&](int i) { return static_cast<std::size_t>(cycle_len + i - 1); };

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (int i = 1; i <= cycle_len; ++i) edges.emplace_back(x(i), x(i % cycle_len + 1));
  for (int j = 1; j <= 3; ++j) edges.emplace_back(y(1), x(j));
  for (int i = 2; i <= t; ++i) {
    for (int j = 4 * i - 4; j <= 4 * i - 1; ++j) edges.emplace_back(y(i), x(j));
  }
  return Graph("H_" + std::to_string(t), std::move(vertices), std::move(edges));
}

Graph build_odd_cycle(int k) {
  if (k < 3 || k % 2 == 0) throw ContractError("odd cycle length must be odd and >= 3");
  if (k > static_cast<int>(IndexSet::kMaxIndex)) throw CapacityError("cycle exceeds 64 vertices");
  std::vector<Vertex> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (int i = 1; i <= k; ++i) {
    vertices.push_back({x_name(i), VertexKind::kX});
    edges.emplace_back(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i % k));
  }
  return Graph("C_" + std::to_string(k), std::move(vertices), std::move(edges));
}

std::optional<int> recognize_ht(const Graph& g) {
  const std::size_t t = g.y_vertices().size();
  if (t < 1) return std::nullopt;
  const std::size_t expected = t == 1 ? 6 : 5 * t - 1;
  if (g.vertex_count() != expected) return std::nullopt;
  if (g == build_ht(static_cast<int>(t))) return static_cast<int>(t);
  return std::nullopt;
}

Graph induced_subgraph(const Graph& g, VertexSet a) {
  check_subset(g, a);
  std::vector<Vertex> vertices;
  std::vector<std::size_t> position(g.vertex_count(), 0);
  for (std::size_t v : a) {
    position[v] = vertices.size();
    vertices.push_back(g.vertex(v));
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const Edge& e : g.edges()) {
    if (a.contains(e.u) && a.contains(e.v)) edges.emplace_back(position[e.u], position[e.v]);
  }
  return Graph(g.label() + "[induced]", std::move(vertices), std::move(edges));
}

VertexSet neighbors(const Graph& g, VertexSet a) {
  check_subset(g, a);
  VertexSet n;
  for (std::size_t v : a) n |= g.adjacency(v);
  return n - a;
}

std::size_t induced_edge_count(const Graph& g, VertexSet a) {
  std::size_t twice = 0;
  for (std::size_t v : a) twice += (g.adjacency(v) & a).size();
  return twice / 2;
}

std::vector<VertexSet> enumerate_minimal_vertex_covers(const Graph& g, VertexSet region,
                                                       const EnumerationLimits& limits) {
  check_capacity(g, limits);
  check_subset(g, region);
  NodeBudget budget(limits.max_search_nodes);
  std::vector<VertexSet> out;
  branch_covers(g, region, VertexSet{}, VertexSet{}, budget, [&](VertexSet c) {
    if (is_minimal_cover(g, region, c)) out.push_back(c);
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<VertexSet> enumerate_minimal_vertex_covers(const Graph& g, const EnumerationLimits& limits) {
  return enumerate_minimal_vertex_covers(g, g.all(), limits);
}

std::vector<VertexSet> minimum_vertex_covers(const Graph& g, VertexSet region,
                                             const EnumerationLimits& limits) {
  auto covers = enumerate_minimal_vertex_covers(g, region, limits);
  std::size_t best = IndexSet::kMaxIndex + 1;
  for (VertexSet c : covers) best = std::min(best, c.size());
  std::erase_if(covers, [&](VertexSet c) { return c.size() != best; });
  return covers;
}

std::size_t minimum_vertex_cover_size(const Graph& g, const EnumerationLimits& limits) {
  check_capacity(g, limits);
  NodeBudget budget(limits.max_search_nodes);
  std::size_t best = g.vertex_count();
  const VertexSet region = g.all();
  std::function<void(VertexSet, VertexSet)> search = [&](VertexSet in, VertexSet out) {
    budget.tick();
    if (in.size() >= best) return;
    auto u = uncovered_endpoint(g, region, in);
    if (!u) {
      best = in.size();
      return;
    }
    if (!out.contains(*u)) search(in | VertexSet{*u}, out);
    const VertexSet forced = g.adjacency(*u);
    if (!forced.intersects(out)) {
      VertexSet out2 = out;
      out2.insert(*u);
      search(in | forced, out2);
    }
  };
  search(VertexSet{}, VertexSet{});
  return best;
}

Coloring chromatic_number(const Graph& g, const EnumerationLimits& limits) {
  check_capacity(g, limits);
  const std::size_t n = g.vertex_count();
  if (n == 0) return {};
  NodeBudget budget(limits.max_search_nodes);

  // Color vertices by descending degree; ties by index.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return g.adjacency(a).size() > g.adjacency(b).size();
  });

  std::vector<std::size_t> color(n, n);
  std::function<bool(std::size_t, std::size_t, std::size_t)> assign = [&](std::size_t pos, std::size_t k,
                                                                          std::size_t used) {
    budget.tick();
    if (pos == n) return true;
    const std::size_t v = order[pos];
    // Symmetry break: a fresh color is only ever the next unused one.
    for (std::size_t c = 0; c < std::min(k, used + 1); ++c) {
      bool clash = false;
      for (std::size_t w : g.adjacency(v)) {
        if (color[w] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      color[v] = c;
      if (assign(pos + 1, k, std::max(used, c + 1))) return true;
      color[v] = n;
    }
    return false;
  };

  for (std::size_t k = 1; k <= n; ++k) {
    std::fill(color.begin(), color.end(), n);
    if (assign(0, k, 0)) return Coloring{k, color};
  }
  // Unreachable: k == n always succeeds.
  for (std::size_t i = 0; i < n; ++i) color[i] = i;
  return Coloring{n, color};
}

bool is_induced_odd_cycle(const Graph& g, VertexSet a) {
  if (!a.is_subset_of(g.all())) return false;
  const std::size_t k = a.size();
  if (k < 3 || k % 2 == 0) return false;
  for (std::size_t v : a) {
    if ((g.adjacency(v) & a).size() != 2) return false;
  }
  // 2-regular: connected iff a walk from one vertex reaches all of a.
  VertexSet seen{a.front()};
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (std::size_t v : frontier) next |= g.adjacency(v) & a;
    frontier = next - seen;
    seen |= frontier;
  }
  return seen == a;
}

std::vector<VertexSet> enumerate_induced_odd_cycles(const Graph& g, const EnumerationLimits& limits) {
  check_capacity(g, limits);
  NodeBudget budget(limits.max_search_nodes);
  std::vector<VertexSet> out;
  const std::size_t n = g.vertex_count();

  // Grow chordless paths s = p0, p1, ..., all vertices > s. A path closes
  // into a chordless cycle when its new endpoint is adjacent to s; it may
  // not be extended past such a vertex. Requiring p1 < last breaks the
  // two traversal directions.
  std::vector<std::size_t> path;
  std::function<void(VertexSet, VertexSet)> grow = [&](VertexSet on_path, VertexSet blocked) {
    budget.tick();
    const std::size_t s = path.front();
    const std::size_t last = path.back();
    for (std::size_t w : g.adjacency(last)) {
      if (w <= s || on_path.contains(w) || blocked.contains(w)) continue;
      if (g.adjacent(w, s)) {
        if (path.size() >= 2 && w > path[1]) {
          VertexSet cycle = on_path;
          cycle.insert(w);
          if (cycle.size() % 2 == 1) out.push_back(cycle);
        }
        continue;
      }
      // Interior vertices other than `last` must not see w.
      VertexSet next_on = on_path;
      next_on.insert(w);
      path.push_back(w);
      grow(next_on, blocked | (g.adjacency(last) - VertexSet{w}));
      path.pop_back();
    }
  };

  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t p1 : g.adjacency(s)) {
      if (p1 <= s) continue;
      path = {s, p1};
      // Other neighbors of s may only appear as the closing vertex; they are
      // handled by the adjacency-to-s test, so nothing is blocked yet.
      grow(VertexSet{s, p1}, VertexSet{});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_valid_cluster(const Graph& g, const ClusterDescriptor& c) {
  if (c.r == 0 || c.ys.size() != c.r) return false;
  if (!c.ys.is_subset_of(g.y_vertices()) || c.ys.intersects(c.cycle)) return false;
  if (!is_induced_odd_cycle(g, c.cycle)) return false;
  return neighbors(g, c.ys).is_subset_of(c.cycle);
}

std::vector<ClusterDescriptor> enumerate_r_clusters(const Graph& g, std::size_t r,
                                                    const EnumerationLimits& limits) {
  if (r == 0) throw ContractError("cluster size r must be positive");
  const VertexSet ys = g.y_vertices();
  if (r > ys.size()) return {};
  const auto cycles = enumerate_induced_odd_cycles(g, limits);
  std::vector<ClusterDescriptor> out;
  for (VertexSet cycle : cycles) {
    const std::vector<std::size_t> pool = (ys - cycle).indices();
    if (pool.size() < r) continue;
    // Lexicographic r-combinations of pool.
    std::vector<std::size_t> pick(r);
    for (std::size_t i = 0; i < r; ++i) pick[i] = i;
    while (true) {
      VertexSet chosen;
      for (std::size_t i : pick) chosen.insert(pool[i]);
      if (neighbors(g, chosen).is_subset_of(cycle)) out.push_back({cycle, chosen, r});
      std::size_t i = r;
      while (i > 0 && pick[i - 1] == pool.size() - r + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace htcover
