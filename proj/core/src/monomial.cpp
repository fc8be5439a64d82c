#include "htcover/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "htcover/error.hpp"

namespace htcover {

namespace {

Exponent checked_exponent(int value) {
  if (value < 0) throw ContractError("negative exponent");
  if (value > kMaxExponent) throw CapacityError("exponent exceeds 255");
  return static_cast<Exponent>(value);
}

void check_ring(const MonomialIdeal& i, const MonomialIdeal& j) {
  if (!(*i.ring() == *j.ring())) throw ContractError("ideals live in different rings");
}

}  // namespace

DegreeVector::DegreeVector(std::initializer_list<int> values) {
  e_.reserve(values.size());
  for (int v : values) e_.push_back(checked_exponent(v));
}

DegreeVector DegreeVector::from_ints(std::span<const int> values) {
  DegreeVector d(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) d.e_[i] = checked_exponent(values[i]);
  return d;
}

DegreeVector DegreeVector::indicator(std::size_t n, IndexSet s) { return constant(n, s, 1); }

DegreeVector DegreeVector::constant(std::size_t n, IndexSet s, int value) {
  if (!s.is_subset_of(IndexSet::full(n))) throw ContractError("index set exceeds vector length");
  DegreeVector d(n);
  const Exponent e = checked_exponent(value);
  for (std::size_t i : s) d.e_[i] = e;
  return d;
}

void DegreeVector::set(std::size_t i, int value) { e_.at(i) = checked_exponent(value); }

int DegreeVector::total_degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

IndexSet DegreeVector::support() const {
  IndexSet s;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] != 0) s.insert(i);
  }
  return s;
}

bool DegreeVector::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](Exponent e) { return e == 0; });
}

bool DegreeVector::divides(const DegreeVector& other) const {
  if (e_.size() != other.e_.size()) throw ContractError("degree vector length mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

DegreeVector DegreeVector::restricted(IndexSet s) const {
  DegreeVector d(e_.size());
  for (std::size_t i : s) {
    if (i < e_.size()) d.e_[i] = e_[i];
  }
  return d;
}

DegreeVector& DegreeVector::operator+=(const DegreeVector& other) {
  if (e_.size() != other.e_.size()) throw ContractError("degree vector length mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] = checked_exponent(e_[i] + other.e_[i]);
  return *this;
}

DegreeVector lcm(const DegreeVector& a, const DegreeVector& b) {
  if (a.size() != b.size()) throw ContractError("degree vector length mismatch");
  DegreeVector d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d.set(i, std::max(a[i], b[i]));
  return d;
}

std::ostream& operator<<(std::ostream& os, const DegreeVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) os << ',';
    os << v[i];
  }
  return os << ')';
}

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<DegreeVector> generators)
    : MonomialIdeal(minimalize(std::move(ring), std::move(generators))) {}

MonomialIdeal MonomialIdeal::unit(RingPtr ring) {
  const std::size_t n = ring->size();
  return MonomialIdeal(std::move(ring), {DegreeVector(n)}, Minimalized{});
}

MonomialIdeal minimalize(RingPtr ring, std::vector<DegreeVector> gens) {
  if (!ring) throw ContractError("ideal without a ring");
  const std::size_t n = ring->size();
  for (const DegreeVector& g : gens) {
    if (g.size() != n) throw ContractError("generator length does not match the ring");
  }
  struct Entry {
    int degree;
    IndexSet support;
    std::size_t index;
  };
  std::vector<Entry> order;
  order.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    order.push_back({gens[i].total_degree(), gens[i].support(), i});
  }
  std::sort(order.begin(), order.end(), [&](const Entry& a, const Entry& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return gens[a.index] < gens[b.index];
  });

  // Ascending degree: a candidate can only be divided by something kept earlier.
  std::vector<Entry> kept;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Entry& c = order[k];
    const DegreeVector& cand = gens[c.index];
    if (k > 0 && order[k - 1].degree == c.degree && gens[order[k - 1].index] == cand) continue;
    bool divisible = false;
    for (const Entry& h : kept) {
      if (h.support.is_subset_of(c.support) && gens[h.index].divides(cand)) {
        divisible = true;
        break;
      }
    }
    if (!divisible) kept.push_back(c);
  }

  std::vector<DegreeVector> out;
  out.reserve(kept.size());
  for (const Entry& e : kept) out.push_back(std::move(gens[e.index]));
  std::sort(out.begin(), out.end());
  return MonomialIdeal(std::move(ring), std::move(out), MonomialIdeal::Minimalized{});
}

MonomialIdeal multiply(const MonomialIdeal& i, const MonomialIdeal& j) {
  check_ring(i, j);
  std::vector<DegreeVector> sums;
  sums.reserve(i.size() * j.size());
  for (const DegreeVector& g : i.generators()) {
    for (const DegreeVector& h : j.generators()) sums.push_back(g + h);
  }
  return minimalize(i.ring(), std::move(sums));
}

MonomialIdeal power(const MonomialIdeal& i, int n) {
  if (n <= 0) throw ContractError("ideal power requires n >= 1");
  MonomialIdeal p = i;
  for (int k = 2; k <= n; ++k) p = multiply(p, i);
  return p;
}

MonomialIdeal intersect(const MonomialIdeal& i, const MonomialIdeal& j) {
  check_ring(i, j);
  std::vector<DegreeVector> lcms;
  lcms.reserve(i.size() * j.size());
  for (const DegreeVector& g : i.generators()) {
    for (const DegreeVector& h : j.generators()) lcms.push_back(lcm(g, h));
  }
  return minimalize(i.ring(), std::move(lcms));
}

bool contains(const MonomialIdeal& i, const DegreeVector& m) {
  if (m.size() != i.variable_count()) throw ContractError("monomial length does not match the ring");
  return std::any_of(i.generators().begin(), i.generators().end(),
                     [&](const DegreeVector& g) { return g.divides(m); });
}

bool is_subideal(const MonomialIdeal& inner, const MonomialIdeal& outer) {
  check_ring(inner, outer);
  return std::all_of(inner.generators().begin(), inner.generators().end(),
                     [&](const DegreeVector& g) { return contains(outer, g); });
}

MonomialIdeal cover_ideal(const Graph& g, const EnumerationLimits& limits) {
  const std::size_t n = g.vertex_count();
  if (g.edge_count() == 0) return MonomialIdeal::unit(g.ring());

  std::vector<DegreeVector> indicators;
  for (VertexSet c : enumerate_minimal_vertex_covers(g, limits)) {
    indicators.push_back(DegreeVector::indicator(n, c));
  }
  MonomialIdeal by_covers = minimalize(g.ring(), std::move(indicators));

  MonomialIdeal by_edges = MonomialIdeal::unit(g.ring());
  for (const Edge& e : g.edges()) {
    MonomialIdeal prime(g.ring(), {DegreeVector::indicator(n, IndexSet{e.u}),
                                   DegreeVector::indicator(n, IndexSet{e.v})});
    by_edges = intersect(by_edges, prime);
  }
  if (!(by_edges == by_covers)) {
    throw std::logic_error("cover ideal: edge intersection disagrees with vertex-cover generators");
  }
  return by_covers;
}

MonomialIdeal edge_ideal(const Graph& g) {
  std::vector<DegreeVector> gens;
  for (const Edge& e : g.edges()) {
    gens.push_back(DegreeVector::indicator(g.vertex_count(), IndexSet{e.u, e.v}));
  }
  return minimalize(g.ring(), std::move(gens));
}

std::string format_monomial(const Ring& ring, const DegreeVector& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace htcover
