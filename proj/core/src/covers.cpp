#include "htcover/covers.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "htcover/error.hpp"

namespace htcover {

namespace {

void check_length(const Graph& g, const DegreeVector& a) {
  if (a.size() != g.vertex_count()) throw ContractError("degree vector length does not match graph");
}

// Calls visit(chosen) for every multiset of `count` indices into [0, options),
// as nondecreasing index sequences in lexicographic order.
void for_each_multiset(std::size_t options, std::size_t count,
                       const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (chosen.size() == count) {
      visit(chosen);
      return;
    }
    for (std::size_t i = from; i < options; ++i) {
      chosen.push_back(i);
      rec(i);
      chosen.pop_back();
    }
  };
  rec(0);
}

// Keeps the first witness for each distinct vector, then sorts by vector.
std::vector<AdmissibleVector> dedupe(std::vector<AdmissibleVector> vs) {
  std::map<DegreeVector, AdmissibleVector> by_vector;
  for (AdmissibleVector& v : vs) by_vector.try_emplace(v.vector, std::move(v));
  std::vector<AdmissibleVector> out;
  out.reserve(by_vector.size());
  for (auto& [key, v] : by_vector) out.push_back(std::move(v));
  return out;
}

}  // namespace

bool is_k_cover(const Graph& g, const DegreeVector& a, int k) {
  check_length(g, a);
  if (a.is_zero()) throw ContractError("k-covers are nonzero degree vectors");
  if (k < 1) throw ContractError("k must be positive");
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return a[e.u] + a[e.v] >= k; });
}

std::optional<CoverCertificate> decompose_into_one_covers(const Graph& g, const DegreeVector& a, int n,
                                                          const EnumerationLimits& limits) {
  check_length(g, a);
  if (n < 1) throw ContractError("n must be positive");
  const std::size_t m = g.vertex_count();
  const auto count = static_cast<std::size_t>(n);

  if (g.edge_count() == 0) {
    // Any nonzero vector is a one-cover: split a into n nonzero parts.
    if (a.total_degree() < n) return std::nullopt;
    CoverCertificate cert;
    DegreeVector rest = a;
    for (std::size_t k = 0; k + 1 < count; ++k) {
      const std::size_t i = rest.support().front();
      DegreeVector unit(m);
      unit.set(i, 1);
      rest.set(i, rest[i] - 1);
      cert.summands.push_back(std::move(unit));
    }
    cert.summands.push_back(std::move(rest));
    std::sort(cert.summands.begin(), cert.summands.end());
    return cert;
  }

  // A one-cover dominates some minimal-cover indicator, and anything above a
  // one-cover is a one-cover, so it suffices to find n minimal covers whose
  // sum stays below a; the excess is folded into one summand.
  std::vector<DegreeVector> minimal;
  for (VertexSet c : enumerate_minimal_vertex_covers(g, limits)) {
    minimal.push_back(DegreeVector::indicator(m, c));
  }

  std::uint64_t nodes = 0;
  std::vector<int> residual(a.raw().begin(), a.raw().end());
  std::vector<std::size_t> chosen;

  // Every remaining cover adds at least one to each edge's endpoint sum.
  auto feasible = [&](std::size_t remaining) {
    const int need = static_cast<int>(remaining);
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge& e) { return residual[e.u] + residual[e.v] >= need; });
  };

  std::function<bool(std::size_t)> search = [&](std::size_t from) {
    if (++nodes > limits.max_search_nodes) throw CapacityError("one-cover search budget exhausted");
    const std::size_t remaining = count - chosen.size();
    if (remaining == 0) return true;
    if (!feasible(remaining)) return false;
    for (std::size_t k = from; k < minimal.size(); ++k) {
      const DegreeVector& c = minimal[k];
      bool fits = true;
      for (std::size_t i : c.support()) {
        if (residual[i] < 1) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      for (std::size_t i : c.support()) --residual[i];
      chosen.push_back(k);
      if (search(k)) return true;
      chosen.pop_back();
      for (std::size_t i : c.support()) ++residual[i];
    }
    return false;
  };
  if (!search(0)) return std::nullopt;

  CoverCertificate cert;
  for (std::size_t k : chosen) cert.summands.push_back(minimal[k]);
  cert.summands.front() += DegreeVector::from_ints(residual);
  std::sort(cert.summands.begin(), cert.summands.end());
  return cert;
}

OneCoverSet minimum_one_covers(const Graph& g, VertexSet region, const EnumerationLimits& limits) {
  OneCoverSet out;
  out.degenerate = induced_edge_count(g, region) == 0;
  for (VertexSet c : minimum_vertex_covers(g, region, limits)) {
    out.covers.push_back(DegreeVector::indicator(g.vertex_count(), c));
  }
  std::sort(out.covers.begin(), out.covers.end());
  return out;
}

OneCoverSet minimum_one_covers(const Graph& g, const EnumerationLimits& limits) {
  return minimum_one_covers(g, g.all(), limits);
}

std::vector<AdmissibleVector> enumerate_n_admissible(VertexSet cycle, const Graph& g, int n,
                                                     const EnumerationLimits& limits) {
  if (n <= 2) throw ContractError("n-admissible vectors require n > 2");
  if (!is_induced_odd_cycle(g, cycle)) throw ContractError("vertex set is not an induced odd cycle");
  const std::size_t m = g.vertex_count();
  const auto covers = minimum_one_covers(g, cycle, limits).covers;
  const DegreeVector base = DegreeVector::constant(m, cycle, 2);

  std::vector<AdmissibleVector> out;
  for_each_multiset(covers.size(), static_cast<std::size_t>(n - 2), [&](const std::vector<std::size_t>& pick) {
    AdmissibleVector v{cycle, n, base, base, std::nullopt, {}};
    for (std::size_t k : pick) {
      v.vector += covers[k];
      v.summands.push_back(covers[k]);
    }
    out.push_back(std::move(v));
  });
  return dedupe(std::move(out));
}

namespace {

// f-candidates for a cluster: 0/1 vectors whose restriction to V\N(Y) and to
// each {y} ∪ N(y) is a minimum one-cover of that region.
std::vector<DegreeVector> cluster_f_options(const ClusterDescriptor& cluster, const Graph& g,
                                            VertexSet rest, const EnumerationLimits& limits) {
  const std::size_t m = g.vertex_count();
  std::vector<VertexSet> regions{rest};
  for (std::size_t y : cluster.ys) regions.push_back(VertexSet{y} | neighbors(g, VertexSet{y}));
  std::vector<std::vector<VertexSet>> choices;
  for (VertexSet r : regions) choices.push_back(minimum_vertex_covers(g, r, limits));

  std::vector<DegreeVector> out;
  std::vector<VertexSet> picked(regions.size());
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == regions.size()) {
      VertexSet f;
      for (VertexSet p : picked) f |= p;
      // Overlapping regions must agree on their shared vertices.
      for (std::size_t j = 0; j < regions.size(); ++j) {
        if ((f & regions[j]) != picked[j]) return;
      }
      out.push_back(DegreeVector::indicator(m, f));
      return;
    }
    for (VertexSet c : choices[k]) {
      picked[k] = c;
      rec(k + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<AdmissibleVector> enumerate_nhat_admissible(const ClusterDescriptor& cluster, const Graph& g,
                                                        int n, const EnumerationLimits& limits) {
  if (n <= 2) throw ContractError("cluster-admissible vectors require n > 2");
  if (!is_valid_cluster(g, cluster)) throw ContractError("not an r-cluster of this graph");
  const std::size_t m = g.vertex_count();
  const VertexSet support = cluster.support();
  const VertexSet rest = cluster.cycle - neighbors(g, cluster.ys);

  DegreeVector d = DegreeVector::constant(m, support, 3);
  for (std::size_t i : rest) d.set(i, 2);
  const auto e_options = minimum_one_covers(g, rest, limits).covers;
  const auto f_options = cluster_f_options(cluster, g, rest, limits);

  std::vector<AdmissibleVector> out;
  for (const DegreeVector& e : e_options) {
    for_each_multiset(f_options.size(), static_cast<std::size_t>(n - 3),
                      [&](const std::vector<std::size_t>& pick) {
                        AdmissibleVector v{support, n, d + e, d, e, {}};
                        for (std::size_t k : pick) {
                          v.vector += f_options[k];
                          v.summands.push_back(f_options[k]);
                        }
                        out.push_back(std::move(v));
                      });
  }
  return dedupe(std::move(out));
}

std::vector<AdmissibleVector> enumerate_lifted_cluster_vectors(const ClusterDescriptor& cluster,
                                                               const Graph& g, int n,
                                                               const EnumerationLimits& limits) {
  const int first = static_cast<int>(cluster.r) + 2;
  if (n < first) throw ContractError("lifted cluster vectors require n >= r+2");
  const auto seeds = enumerate_nhat_admissible(cluster, g, first, limits);
  const auto covers = minimum_one_covers(g, cluster.support(), limits).covers;

  std::vector<AdmissibleVector> out;
  for (const AdmissibleVector& seed : seeds) {
    for_each_multiset(covers.size(), static_cast<std::size_t>(n - first),
                      [&](const std::vector<std::size_t>& pick) {
                        AdmissibleVector v = seed;
                        v.n = n;
                        for (std::size_t k : pick) {
                          v.vector += covers[k];
                          v.summands.push_back(covers[k]);
                        }
                        out.push_back(std::move(v));
                      });
  }
  return dedupe(std::move(out));
}

bool check_degree_sum_bound(const ClusterDescriptor& cluster, const AdmissibleVector& c, int n) {
  const int r = static_cast<int>(cluster.r);
  if (n <= r + 1) {
    throw ContractError("degree-sum bound requires n > r+1 (n=" + std::to_string(n) +
                        ", r=" + std::to_string(r) + ")");
  }
  const int k = static_cast<int>(cluster.cycle.size());
  const int sum = c.vector.restricted(cluster.support()).total_degree();
  return sum < r + k + n * ((k + 1) / 2 + r);
}

}  // namespace htcover
