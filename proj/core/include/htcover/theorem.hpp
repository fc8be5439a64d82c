#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "htcover/covers.hpp"
#include "htcover/decomposition.hpp"
#include "htcover/graph.hpp"
#include "htcover/monomial.hpp"

namespace htcover {

/// How cluster components of the closed form are generated.
enum class ClusterRule {
  /// Every n̂-admissible vector (enumerate_nhat_admissible at n).
  kLiteral,
  /// n̂-admissible vectors at n = r+2 raised by whole-cluster minimum
  /// one-covers (enumerate_lifted_cluster_vectors).
  kLifted,
};

const char* to_string(ClusterRule rule);

/// Limits for the brute-force side of the checks. By default the
/// power-and-decompose oracle runs for t <= 2 with n <= 6 and for t = 3
/// with n <= 4; larger requests run the closed form alone.
struct TheoremBudget {
  int max_n_t_upto_2 = 6;
  int max_n_t3 = 4;
  int max_n_larger_t = 0;
  std::uint64_t max_generators = 5'000'000;
  EnumerationLimits limits;
  DecomposeOptions decompose{DecomposeOptions::Algorithm::kIncremental};

  bool allows_bruteforce(int t, int n) const;
};

/// power(i, n) that throws CapacityError once an intermediate power has
/// more than max_generators generators.
MonomialIdeal bounded_power(const MonomialIdeal& i, int n, std::uint64_t max_generators);

struct ClosedForm {
  int t = 0;
  int n = 0;
  ClusterRule rule = ClusterRule::kLiteral;
  std::vector<IrreducibleComponent> a;
  /// Odd-cycle components (squared cycles when n = 2).
  std::vector<IrreducibleComponent> b;
  /// Cluster components per r = 1..n-2.
  std::map<int, std::vector<IrreducibleComponent>> d;

  /// Union of all families, sorted and deduplicated.
  std::vector<IrreducibleComponent> all() const;
};

/// Per edge {v_i, v_j} of H_t: exponents (s, n+1-s) for s = 1..n.
std::vector<IrreducibleComponent> build_A(int t, int n);
/// n-admissible vectors over every induced odd cycle of H_t; n > 2.
std::vector<IrreducibleComponent> build_B(int t, int n);
/// Cluster vectors over every r-cluster of H_t; 1 <= r <= n-2.
std::vector<IrreducibleComponent> build_D(int t, int n, int r, ClusterRule rule = ClusterRule::kLiteral);

/// n = 1: edge primes. n = 2: (v_i^2, v_j) ∩ (v_i, v_j^2) per edge plus the
/// squared odd cycles. n > 2: A ∪ B ∪ D^1 ∪ ... ∪ D^{n-2}.
ClosedForm closed_form_power_decomposition(int t, int n, ClusterRule rule = ClusterRule::kLiteral);

struct DecompositionReport {
  int t = 0;
  int n = 0;
  ClusterRule rule = ClusterRule::kLiteral;
  std::size_t count_a = 0;
  std::size_t count_b = 0;
  std::map<int, std::size_t> count_d;
  /// Distinct closed-form components.
  std::size_t closed_form_count = 0;
  /// No closed-form component can be dropped.
  bool irredundant = false;
  std::vector<IrreducibleComponent> redundant_components;

  /// False when the budget excluded the brute-force side.
  bool oracle_run = false;
  /// Intersection of the closed form equals power(J_t, n).
  bool equal = false;
  /// Closed-form set equals the brute-force irredundant decomposition.
  bool matches_bruteforce = false;
  std::size_t power_generator_count = 0;
  std::size_t bruteforce_component_count = 0;
  /// Up to 10 generators lying in exactly one of the two ideals.
  std::vector<DegreeVector> only_in_closed_form;
  std::vector<DegreeVector> only_in_power;
  std::vector<IrreducibleComponent> missing_components;
  std::vector<IrreducibleComponent> extra_components;

  bool complete = true;
  std::string note;
};

DecompositionReport verify_decomposition(int t, int n, ClusterRule rule = ClusterRule::kLiteral,
                                         const TheoremBudget& budget = {});

/// Edges, plus induced odd cycles for n >= 2, plus r-cluster supports for
/// 1 <= r <= n-2.
std::vector<PrimeSupport> classify_ass_closed_form(int t, int n);

struct StabilizationReport {
  int horizon = 0;
  /// Ass(R/J^n) for n = 1..(number computed).
  std::vector<std::vector<PrimeSupport>> ass_sets;
  /// Smallest s with ass_sets constant from s to the last computed n.
  int first_stable_index = 0;
  /// Set when the graph is recognized as H_t.
  std::optional<int> t;
  std::optional<int> predicted;
  /// Per n, brute force equals classify_ass_closed_form(t, n); H_t only.
  std::vector<bool> agrees_with_classification;
  /// n such that Ass(n) is not contained in Ass(n+1).
  std::vector<int> monotonicity_violations;
  /// First n whose Ass contains the full vertex set.
  std::optional<int> full_support_first;
  bool complete = true;
  std::string note;
};

StabilizationReport stabilization_scan(const Graph& g, int horizon, const TheoremBudget& budget = {});

/// Every minimal generator of power(J_t, n) lies in every A_{t,n} component.
bool verify_min_generator_containment(int t, int n, const TheoremBudget& budget = {});

}  // namespace htcover
