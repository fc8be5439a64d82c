#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "htcover/graph.hpp"
#include "htcover/index_set.hpp"
#include "htcover/ring.hpp"

namespace htcover {

using Exponent = std::uint8_t;
inline constexpr int kMaxExponent = 255;

/// Per-variable nonnegative exponents (a_1, ..., a_m). Doubles as a monomial
/// and as a degree vector over a graph's vertices.
class DegreeVector {
 public:
  DegreeVector() = default;
  explicit DegreeVector(std::size_t n) : e_(n, 0) {}
  /// Throws ContractError on negative entries, CapacityError above 255.
  DegreeVector(std::initializer_list<int> values);
  static DegreeVector from_ints(std::span<const int> values);
  static DegreeVector indicator(std::size_t n, IndexSet s);
  static DegreeVector constant(std::size_t n, IndexSet s, int value);

  std::size_t size() const { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, int value);
  const std::vector<Exponent>& raw() const { return e_; }

  int total_degree() const;
  IndexSet support() const;
  bool is_zero() const;
  /// Componentwise <=, i.e. this monomial divides `other`.
  bool divides(const DegreeVector& other) const;
  /// Same exponents on s, zero elsewhere.
  DegreeVector restricted(IndexSet s) const;

  DegreeVector& operator+=(const DegreeVector& other);
  friend DegreeVector operator+(DegreeVector a, const DegreeVector& b) { return a += b; }

  auto operator<=>(const DegreeVector&) const = default;
  bool operator==(const DegreeVector&) const = default;

  std::vector<int> to_ints() const { return {e_.begin(), e_.end()}; }

 private:
  std::vector<Exponent> e_;
};

/// Componentwise maximum (the lcm of two monomials).
DegreeVector lcm(const DegreeVector& a, const DegreeVector& b);

std::ostream& operator<<(std::ostream& os, const DegreeVector& v);

/// Monomial ideal held as its canonical minimal generating set:
/// no generator divides another, generators in ascending lexicographic
/// order. The zero ideal has no generators; the unit ideal is {0}.
class MonomialIdeal {
 public:
  MonomialIdeal(RingPtr ring, std::vector<DegreeVector> generators);

  static MonomialIdeal zero(RingPtr ring) { return MonomialIdeal(std::move(ring), {}); }
  static MonomialIdeal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  std::size_t variable_count() const { return ring_->size(); }
  const std::vector<DegreeVector>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_zero(); }

  bool operator==(const MonomialIdeal& other) const {
    return *ring_ == *other.ring_ && gens_ == other.gens_;
  }

 private:
  struct Minimalized {};
  MonomialIdeal(RingPtr ring, std::vector<DegreeVector> generators, Minimalized)
      : ring_(std::move(ring)), gens_(std::move(generators)) {}
  friend MonomialIdeal minimalize(RingPtr ring, std::vector<DegreeVector> gens);

  RingPtr ring_;
  std::vector<DegreeVector> gens_;
};

/// Drops every generator divisible by another and sorts. Throws
/// ContractError when lengths disagree with the ring.
MonomialIdeal minimalize(RingPtr ring, std::vector<DegreeVector> gens);

/// Pairwise exponent sums, minimalized.
MonomialIdeal multiply(const MonomialIdeal& i, const MonomialIdeal& j);
/// Iterated multiplication; n >= 1.
MonomialIdeal power(const MonomialIdeal& i, int n);
/// Pairwise lcms, minimalized.
MonomialIdeal intersect(const MonomialIdeal& i, const MonomialIdeal& j);
bool contains(const MonomialIdeal& i, const DegreeVector& m);
/// True iff every generator of `inner` lies in `outer`.
bool is_subideal(const MonomialIdeal& inner, const MonomialIdeal& outer);

/// Cover ideal, built two ways (intersection of the edge primes and the
/// indicators of minimal vertex covers); a disagreement throws
/// std::logic_error. An edgeless graph yields the unit ideal.
MonomialIdeal cover_ideal(const Graph& g, const EnumerationLimits& limits = {});
MonomialIdeal edge_ideal(const Graph& g);

/// Monomial in v^e*w^f notation ("1" for the zero vector).
std::string format_monomial(const Ring& ring, const DegreeVector& m);

}  // namespace htcover
