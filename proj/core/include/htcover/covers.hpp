#pragma once

#include <optional>
#include <vector>

#include "htcover/graph.hpp"
#include "htcover/monomial.hpp"

namespace htcover {

/// n one-covers of a graph whose componentwise sum is the queried vector.
struct CoverCertificate {
  std::vector<DegreeVector> summands;
};

/// Indicator vectors of all minimum vertex covers. `degenerate` marks an
/// edgeless (or empty) region, whose single minimum cover is empty.
struct OneCoverSet {
  std::vector<DegreeVector> covers;
  bool degenerate = false;
};

/// Degree vector for an induced odd cycle or a cluster, zero off `support`,
/// with the decomposition that produced it.
struct AdmissibleVector {
  VertexSet support;
  int n = 0;
  DegreeVector vector;
  /// (2,...,2) on the cycle, or d for a cluster.
  DegreeVector base;
  /// Cluster vectors only.
  std::optional<DegreeVector> e;
  /// b_1..b_{n-2} for a cycle; f_1..f_{n-3} for a cluster (lifted
  /// cluster vectors append their whole-cluster covers after the f_i).
  std::vector<DegreeVector> summands;
};

/// a_i + a_j >= k on every edge. Zero vectors are rejected.
bool is_k_cover(const Graph& g, const DegreeVector& a, int k);

/// Complete backtracking search for a as a sum of n one-covers; an empty
/// result proves none exists. Summands in the certificate are sorted.
std::optional<CoverCertificate> decompose_into_one_covers(const Graph& g, const DegreeVector& a, int n,
                                                          const EnumerationLimits& limits = {});

OneCoverSet minimum_one_covers(const Graph& g, const EnumerationLimits& limits = {});
/// Minimum one-covers of the subgraph induced by region, as vectors over g.
OneCoverSet minimum_one_covers(const Graph& g, VertexSet region, const EnumerationLimits& limits = {});

/// (2,...,2) plus n-2 minimum one-covers of the cycle, one entry per
/// distinct vector, sorted by vector. Requires n > 2.
std::vector<AdmissibleVector> enumerate_n_admissible(VertexSet cycle, const Graph& g, int n,
                                                     const EnumerationLimits& limits = {});

/// Cluster vectors c = d + e + f_1 + ... + f_{n-3}: d is 2 on V\N(Y) and 3
/// elsewhere, e a minimum one-cover of V\N(Y) (zero on Y ∪ N(Y)), and each
/// f_i a minimum one-cover on V\N(Y) and on every {y} ∪ N(y). Requires n > 2.
std::vector<AdmissibleVector> enumerate_nhat_admissible(const ClusterDescriptor& cluster, const Graph& g,
                                                        int n, const EnumerationLimits& limits = {});

/// Cluster vectors at n = r+2 from enumerate_nhat_admissible, each raised by
/// n-2-r minimum one-covers of the whole cluster. Requires n >= r+2.
std::vector<AdmissibleVector> enumerate_lifted_cluster_vectors(const ClusterDescriptor& cluster,
                                                               const Graph& g, int n,
                                                               const EnumerationLimits& limits = {});

/// sum(c) < r + k + n((k+1)/2 + r) for a cluster on a k-cycle.
/// Throws ContractError when n <= r+1.
bool check_degree_sum_bound(const ClusterDescriptor& cluster, const AdmissibleVector& c, int n);

}  // namespace htcover
