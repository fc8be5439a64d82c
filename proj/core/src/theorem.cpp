#include "htcover/theorem.hpp"

#include <algorithm>
#include <set>

#include "htcover/error.hpp"

namespace htcover {

namespace {

constexpr std::size_t kMaxWitnesses = 10;

void sort_unique(std::vector<IrreducibleComponent>& cs) {
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
}

void check_tn(int t, int n) {
  if (t < 1) throw ContractError("t must be >= 1");
  if (n < 1) throw ContractError("n must be >= 1");
}

std::vector<IrreducibleComponent> components_of(const std::vector<AdmissibleVector>& vs) {
  std::vector<IrreducibleComponent> out;
  out.reserve(vs.size());
  for (const AdmissibleVector& v : vs) out.emplace_back(v.vector);
  return out;
}

std::vector<IrreducibleComponent> set_difference(const std::vector<IrreducibleComponent>& a,
                                                 const std::vector<IrreducibleComponent>& b) {
  std::vector<IrreducibleComponent> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

const char* to_string(ClusterRule rule) {
  return rule == ClusterRule::kLiteral ? "literal" : "lifted";
}

bool TheoremBudget::allows_bruteforce(int t, int n) const {
  if (t <= 2) return n <= max_n_t_upto_2;
  if (t == 3) return n <= max_n_t3;
  return n <= max_n_larger_t;
}

MonomialIdeal bounded_power(const MonomialIdeal& i, int n, std::uint64_t max_generators) {
  if (n <= 0) throw ContractError("ideal power requires n >= 1");
  MonomialIdeal p = i;
  for (int k = 2; k <= n; ++k) {
    if (static_cast<std::uint64_t>(p.size()) * i.size() > max_generators * 64) {
      throw CapacityError("power expansion exceeds the generator budget at n=" + std::to_string(k));
    }
    p = multiply(p, i);
    if (p.size() > max_generators) {
      throw CapacityError("power has more than " + std::to_string(max_generators) +
                          " generators at n=" + std::to_string(k));
    }
  }
  return p;
}

std::vector<IrreducibleComponent> ClosedForm::all() const {
  std::vector<IrreducibleComponent> out = a;
  out.insert(out.end(), b.begin(), b.end());
  for (const auto& [r, cs] : d) out.insert(out.end(), cs.begin(), cs.end());
  sort_unique(out);
  return out;
}

std::vector<IrreducibleComponent> build_A(int t, int n) {
  check_tn(t, n);
  const Graph g = build_ht(t);
  std::vector<IrreducibleComponent> out;
  for (const Edge& e : g.edges()) {
    for (int s = 1; s <= n; ++s) {
      DegreeVector v(g.vertex_count());
      v.set(e.u, s);
      v.set(e.v, n + 1 - s);
      out.emplace_back(std::move(v));
    }
  }
  sort_unique(out);
  return out;
}

std::vector<IrreducibleComponent> build_B(int t, int n) {
  check_tn(t, n);
  if (n <= 2) throw ContractError("B requires n > 2");
  const Graph g = build_ht(t);
  std::vector<IrreducibleComponent> out;
  for (VertexSet cycle : enumerate_induced_odd_cycles(g)) {
    auto cs = components_of(enumerate_n_admissible(cycle, g, n));
    out.insert(out.end(), cs.begin(), cs.end());
  }
  sort_unique(out);
  return out;
}

std::vector<IrreducibleComponent> build_D(int t, int n, int r, ClusterRule rule) {
  check_tn(t, n);
  if (r < 1 || r > n - 2) throw ContractError("D requires 1 <= r <= n-2");
  const Graph g = build_ht(t);
  std::vector<IrreducibleComponent> out;
  for (const ClusterDescriptor& c : enumerate_r_clusters(g, static_cast<std::size_t>(r))) {
    auto vs = rule == ClusterRule::kLiteral ? enumerate_nhat_admissible(c, g, n)
                                            : enumerate_lifted_cluster_vectors(c, g, n);
    auto cs = components_of(vs);
    out.insert(out.end(), cs.begin(), cs.end());
  }
  sort_unique(out);
  return out;
}

ClosedForm closed_form_power_decomposition(int t, int n, ClusterRule rule) {
  check_tn(t, n);
  ClosedForm cf;
  cf.t = t;
  cf.n = n;
  cf.rule = rule;
  cf.a = build_A(t, n);
  if (n == 1) return cf;
  if (n == 2) {
    const Graph g = build_ht(t);
    for (VertexSet cycle : enumerate_induced_odd_cycles(g)) {
      cf.b.emplace_back(DegreeVector::constant(g.vertex_count(), cycle, 2));
    }
    sort_unique(cf.b);
    return cf;
  }
  cf.b = build_B(t, n);
  for (int r = 1; r <= n - 2; ++r) cf.d[r] = build_D(t, n, r, rule);
  return cf;
}

DecompositionReport verify_decomposition(int t, int n, ClusterRule rule, const TheoremBudget& budget) {
  DecompositionReport rep;
  rep.t = t;
  rep.n = n;
  rep.rule = rule;

  const ClosedForm cf = closed_form_power_decomposition(t, n, rule);
  rep.count_a = cf.a.size();
  rep.count_b = cf.b.size();
  for (const auto& [r, cs] : cf.d) rep.count_d[r] = cs.size();
  const auto comps = cf.all();
  rep.closed_form_count = comps.size();

  const auto survivors = irredundant(comps);
  rep.redundant_components = set_difference(comps, survivors);
  rep.irredundant = rep.redundant_components.empty();

  if (!budget.allows_bruteforce(t, n)) {
    rep.note = "brute-force oracle skipped by budget; closed-form consistency only";
    return rep;
  }

  try {
    const Graph g = build_ht(t);
    const MonomialIdeal power_ideal = bounded_power(cover_ideal(g, budget.limits), n, budget.max_generators);
    rep.power_generator_count = power_ideal.size();
    const MonomialIdeal closed = intersect_components(g.ring(), comps);

    rep.oracle_run = true;
    rep.equal = closed == power_ideal;
    for (const DegreeVector& m : closed.generators()) {
      if (rep.only_in_closed_form.size() + rep.only_in_power.size() >= kMaxWitnesses) break;
      if (!contains(power_ideal, m)) rep.only_in_closed_form.push_back(m);
    }
    for (const DegreeVector& m : power_ideal.generators()) {
      if (rep.only_in_closed_form.size() + rep.only_in_power.size() >= kMaxWitnesses) break;
      if (!contains(closed, m)) rep.only_in_power.push_back(m);
    }

    const auto brute = irredundant_decomposition(power_ideal, budget.decompose);
    rep.bruteforce_component_count = brute.size();
    rep.matches_bruteforce = brute == comps;
    rep.missing_components = set_difference(brute, comps);
    rep.extra_components = set_difference(comps, brute);
  } catch (const CapacityError& e) {
    rep.complete = false;
    rep.note = std::string("capacity exhausted: ") + e.what();
  }
  return rep;
}

std::vector<PrimeSupport> classify_ass_closed_form(int t, int n) {
  check_tn(t, n);
  const Graph g = build_ht(t);
  std::set<PrimeSupport> out;
  for (const Edge& e : g.edges()) out.insert(PrimeSupport{e.u, e.v});
  if (n >= 2) {
    for (VertexSet cycle : enumerate_induced_odd_cycles(g)) out.insert(cycle);
  }
  for (int r = 1; r <= std::min(n - 2, t); ++r) {
    for (const ClusterDescriptor& c : enumerate_r_clusters(g, static_cast<std::size_t>(r))) {
      out.insert(c.support());
    }
  }
  return {out.begin(), out.end()};
}

StabilizationReport stabilization_scan(const Graph& g, int horizon, const TheoremBudget& budget) {
  if (horizon < 1) throw ContractError("horizon must be >= 1");
  check_capacity(g, budget.limits);
  StabilizationReport rep;
  rep.horizon = horizon;
  rep.t = recognize_ht(g);
  if (rep.t) rep.predicted = 2 + *rep.t;

  try {
    const MonomialIdeal j = cover_ideal(g, budget.limits);
    if (j.is_unit()) throw ContractError("graph has no edges; its cover ideal is the unit ideal");
    MonomialIdeal p = j;
    for (int n = 1; n <= horizon; ++n) {
      if (n > 1) {
        p = multiply(p, j);
        if (p.size() > budget.max_generators) {
          throw CapacityError("power has more than " + std::to_string(budget.max_generators) +
                              " generators at n=" + std::to_string(n));
        }
      }
      rep.ass_sets.push_back(associated_primes(p, budget.decompose));
    }
  } catch (const CapacityError& e) {
    rep.complete = false;
    rep.note = std::string("capacity exhausted after n=") + std::to_string(rep.ass_sets.size()) +
               ": " + e.what();
  }

  const int computed = static_cast<int>(rep.ass_sets.size());
  rep.first_stable_index = computed;
  while (rep.first_stable_index > 1 &&
         rep.ass_sets[rep.first_stable_index - 2] == rep.ass_sets.back()) {
    --rep.first_stable_index;
  }
  for (int n = 1; n < computed; ++n) {
    const auto& a = rep.ass_sets[n - 1];
    const auto& b = rep.ass_sets[n];
    if (!std::includes(b.begin(), b.end(), a.begin(), a.end())) rep.monotonicity_violations.push_back(n);
  }
  for (int n = 1; n <= computed; ++n) {
    const auto& s = rep.ass_sets[n - 1];
    if (std::find(s.begin(), s.end(), g.all()) != s.end()) {
      rep.full_support_first = n;
      break;
    }
  }
  if (rep.t) {
    for (int n = 1; n <= computed; ++n) {
      rep.agrees_with_classification.push_back(rep.ass_sets[n - 1] == classify_ass_closed_form(*rep.t, n));
    }
  }
  return rep;
}

bool verify_min_generator_containment(int t, int n, const TheoremBudget& budget) {
  check_tn(t, n);
  const Graph g = build_ht(t);
  const MonomialIdeal p = bounded_power(cover_ideal(g, budget.limits), n, budget.max_generators);
  const auto a = build_A(t, n);
  return std::all_of(p.generators().begin(), p.generators().end(), [&](const DegreeVector& m) {
    return std::all_of(a.begin(), a.end(),
                       [&](const IrreducibleComponent& c) { return component_contains_monomial(c, m); });
  });
}

}  // namespace htcover
