#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "htcover/index_set.hpp"
#include "htcover/monomial.hpp"

namespace htcover {

/// Irreducible monomial ideal V^a = (v_i^{a_i} : a_i > 0). At least one
/// exponent is positive; the unit ideal is never a component.
class IrreducibleComponent {
 public:
  explicit IrreducibleComponent(DegreeVector exponents);

  const DegreeVector& exponents() const { return exponents_; }
  std::size_t size() const { return exponents_.size(); }
  IndexSet support() const { return support_; }
  int operator[](std::size_t i) const { return exponents_[i]; }

  MonomialIdeal to_ideal(RingPtr ring) const;

  bool operator==(const IrreducibleComponent& o) const { return exponents_ == o.exponents_; }
  auto operator<=>(const IrreducibleComponent& o) const { return exponents_ <=> o.exponents_; }

 private:
  DegreeVector exponents_;
  IndexSet support_;
};

/// Support of an associated prime: the variables generating it.
using PrimeSupport = IndexSet;

bool component_contains_monomial(const IrreducibleComponent& c, const DegreeVector& m);
/// V^{c1} ⊆ V^{c2}.
bool component_subset(const IrreducibleComponent& c1, const IrreducibleComponent& c2);

struct DecomposeOptions {
  enum class Algorithm {
    /// Recursive coprime splitting of a mixed generator, memoized per call.
    kSplitting,
    /// Add generators one at a time, refining the component list.
    kIncremental,
  };
  Algorithm algorithm = Algorithm::kSplitting;
  /// Splitting only: randomize which generator and which support part split.
  bool randomize_splits = false;
  std::uint64_t seed = 0;
  /// Recursion nodes (splitting) or candidate components (incremental).
  std::uint64_t max_work = 500'000'000;
};

/// An irreducible decomposition whose intersection equals i, sorted and
/// deduplicated but not necessarily irredundant. Zero and unit ideals are
/// rejected with ContractError.
std::vector<IrreducibleComponent> irreducible_components(const MonomialIdeal& i,
                                                         const DecomposeOptions& options = {});

/// Drops components containing the intersection of the others. Pairwise
/// containment prefilter, then every survivor is confirmed by an explicit
/// witness monomial lying in all other components but not in it.
std::vector<IrreducibleComponent> irredundant(std::vector<IrreducibleComponent> components);

/// irredundant(irreducible_components(i)).
std::vector<IrreducibleComponent> irredundant_decomposition(const MonomialIdeal& i,
                                                            const DecomposeOptions& options = {});

/// A monomial in every component except components[k] and not in it, if any.
std::optional<DegreeVector> omit_one_witness(std::span<const IrreducibleComponent> components,
                                             std::size_t k);

/// Intersection of the components as a monomial ideal; the empty
/// intersection is the unit ideal.
MonomialIdeal intersect_components(const RingPtr& ring,
                                   std::span<const IrreducibleComponent> components);

/// Supports of the irredundant components, deduplicated and sorted.
std::vector<PrimeSupport> associated_primes(const MonomialIdeal& i,
                                            const DecomposeOptions& options = {});
std::vector<PrimeSupport> supports_of(std::span<const IrreducibleComponent> components);

}  // namespace htcover
