#include "htcover/decomposition.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "htcover/error.hpp"

namespace htcover {

IrreducibleComponent::IrreducibleComponent(DegreeVector exponents)
    : exponents_(std::move(exponents)), support_(exponents_.support()) {
  if (support_.empty()) throw ContractError("irreducible component needs a positive exponent");
}

MonomialIdeal IrreducibleComponent::to_ideal(RingPtr ring) const {
  std::vector<DegreeVector> gens;
  for (std::size_t i : support_) {
    DegreeVector g(exponents_.size());
    g.set(i, exponents_[i]);
    gens.push_back(std::move(g));
  }
  return MonomialIdeal(std::move(ring), std::move(gens));
}

bool component_contains_monomial(const IrreducibleComponent& c, const DegreeVector& m) {
  if (c.size() != m.size()) throw ContractError("monomial length does not match component");
  for (std::size_t i : c.support()) {
    if (m[i] >= c[i]) return true;
  }
  return false;
}

bool component_subset(const IrreducibleComponent& c1, const IrreducibleComponent& c2) {
  if (c1.size() != c2.size()) throw ContractError("component length mismatch");
  if (!c1.support().is_subset_of(c2.support())) return false;
  for (std::size_t i : c1.support()) {
    if (c1[i] < c2[i]) return false;
  }
  return true;
}

namespace {

void sort_unique(std::vector<IrreducibleComponent>& cs) {
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
}

// Keeps the inclusion-minimal components: c is dropped when another
// component is contained in it.
std::vector<IrreducibleComponent> keep_minimal(std::vector<IrreducibleComponent> cs) {
  sort_unique(cs);
  std::vector<char> drop(cs.size(), 0);
  for (std::size_t a = 0; a < cs.size(); ++a) {
    for (std::size_t b = 0; b < cs.size(); ++b) {
      if (a != b && !drop[b] && component_subset(cs[b], cs[a])) {
        drop[a] = 1;
        break;
      }
    }
  }
  std::vector<IrreducibleComponent> out;
  out.reserve(cs.size());
  for (std::size_t a = 0; a < cs.size(); ++a) {
    if (!drop[a]) out.push_back(std::move(cs[a]));
  }
  return out;
}

void check_decomposable(const MonomialIdeal& i) {
  if (i.is_zero()) throw ContractError("the zero ideal has no irreducible decomposition here");
  if (i.is_unit()) throw ContractError("the unit ideal has no proper irreducible decomposition");
}

struct GenHash {
  std::size_t operator()(const std::vector<DegreeVector>& gens) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (const DegreeVector& g : gens) {
      for (Exponent e : g.raw()) {
        h ^= e;
        h *= 1099511628211ULL;
      }
      h ^= 0xff;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

class Splitter {
 public:
  explicit Splitter(const DecomposeOptions& options) : options_(options), rng_(options.seed) {}

  std::vector<IrreducibleComponent> run(const std::vector<DegreeVector>& gens) {
    if (++work_ > options_.max_work) throw CapacityError("decomposition work budget exhausted");
    if (auto it = memo_.find(gens); it != memo_.end()) return it->second;

    std::vector<std::size_t> mixed;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (gens[k].support().size() >= 2) {
        mixed.push_back(k);
        if (!options_.randomize_splits) break;
      }
    }

    std::vector<IrreducibleComponent> result;
    if (mixed.empty()) {
      DegreeVector exps(gens.front().size());
      for (const DegreeVector& g : gens) exps.set(g.support().front(), g[g.support().front()]);
      result.emplace_back(std::move(exps));
    } else {
      const DegreeVector& m = gens[pick(mixed)];
      const IndexSet part = choose_part(m.support());
      const DegreeVector left = m.restricted(part);
      const DegreeVector right = m.restricted(m.support() - part);
      auto a = run(with_generator(gens, left));
      auto b = run(with_generator(gens, right));
      a.insert(a.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
      result = keep_minimal(std::move(a));
    }
    memo_.emplace(gens, result);
    return result;
  }

 private:
  std::size_t pick(const std::vector<std::size_t>& mixed) {
    if (!options_.randomize_splits) return mixed.front();
    std::uniform_int_distribution<std::size_t> d(0, mixed.size() - 1);
    return mixed[d(rng_)];
  }

  // Canonical split: the first positive coordinate against the rest.
  // Randomized: any nonempty proper subset of the support.
  IndexSet choose_part(IndexSet support) {
    if (!options_.randomize_splits) return IndexSet{support.front()};
    const auto idx = support.indices();
    std::uniform_int_distribution<std::uint64_t> d(1, (std::uint64_t{1} << idx.size()) - 2);
    const std::uint64_t mask = d(rng_);
    IndexSet part;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if ((mask >> k) & 1U) part.insert(idx[k]);
    }
    return part;
  }

  // gens is minimal and `extra` strictly divides one of its members, so no
  // generator divides `extra`; only its multiples need removing.
  static std::vector<DegreeVector> with_generator(const std::vector<DegreeVector>& gens,
                                                  const DegreeVector& extra) {
    std::vector<DegreeVector> out;
    out.reserve(gens.size() + 1);
    const IndexSet es = extra.support();
    for (const DegreeVector& g : gens) {
      if (!(es.is_subset_of(g.support()) && extra.divides(g))) out.push_back(g);
    }
    out.insert(std::lower_bound(out.begin(), out.end(), extra), extra);
    return out;
  }

  DecomposeOptions options_;
  std::mt19937_64 rng_;
  std::uint64_t work_ = 0;
  std::unordered_map<std::vector<DegreeVector>, std::vector<IrreducibleComponent>, GenHash> memo_;
};

std::vector<IrreducibleComponent> incremental(const MonomialIdeal& ideal, std::uint64_t max_work) {
  const auto& gens = ideal.generators();
  const std::size_t n = ideal.variable_count();
  std::uint64_t work = 0;

  struct Comp {
    DegreeVector e;
    IndexSet support;
  };
  auto subset = [](const Comp& a, const Comp& b) {  // V^a ⊆ V^b
    if (!a.support.is_subset_of(b.support)) return false;
    for (std::size_t i : a.support) {
      if (a.e[i] < b.e[i]) return false;
    }
    return true;
  };

  std::vector<Comp> comps;
  for (std::size_t i : gens.front().support()) {
    DegreeVector e(n);
    e.set(i, gens.front()[i]);
    comps.push_back({std::move(e), IndexSet{i}});
  }

  for (std::size_t k = 1; k < gens.size(); ++k) {
    const DegreeVector& g = gens[k];
    std::vector<Comp> kept;
    std::vector<Comp> fresh;
    for (Comp& c : comps) {
      bool inside = false;
      for (std::size_t i : c.support) {
        if (g[i] >= c.e[i]) {
          inside = true;
          break;
        }
      }
      if (inside) {
        kept.push_back(std::move(c));
        continue;
      }
      // V^c + (g) = ∩_{i in supp g} (V^c + (v_i^{g_i})).
      for (std::size_t i : g.support()) {
        Comp d = c;
        d.e.set(i, g[i]);
        d.support.insert(i);
        fresh.push_back(std::move(d));
      }
    }
    work += fresh.size();
    if (work > max_work) throw CapacityError("decomposition work budget exhausted");

    // Old survivors stay irredundant; only new candidates can be redundant.
    std::sort(fresh.begin(), fresh.end(), [](const Comp& a, const Comp& b) { return a.e < b.e; });
    fresh.erase(std::unique(fresh.begin(), fresh.end(),
                            [](const Comp& a, const Comp& b) { return a.e == b.e; }),
                fresh.end());
    std::vector<char> drop(fresh.size(), 0);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      for (const Comp& q : kept) {
        if (subset(q, fresh[a])) {
          drop[a] = 1;
          break;
        }
      }
      if (drop[a]) continue;
      for (std::size_t b = 0; b < fresh.size(); ++b) {
        if (a != b && !drop[b] && subset(fresh[b], fresh[a])) {
          drop[a] = 1;
          break;
        }
      }
    }
    comps = std::move(kept);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!drop[a]) comps.push_back(std::move(fresh[a]));
    }
  }

  std::vector<IrreducibleComponent> out;
  out.reserve(comps.size());
  for (Comp& c : comps) out.emplace_back(std::move(c.e));
  sort_unique(out);
  return out;
}

}  // namespace

std::vector<IrreducibleComponent> irreducible_components(const MonomialIdeal& i,
                                                         const DecomposeOptions& options) {
  check_decomposable(i);
  std::vector<IrreducibleComponent> out;
  if (options.algorithm == DecomposeOptions::Algorithm::kIncremental) {
    out = incremental(i, options.max_work);
  } else {
    Splitter splitter(options);
    out = splitter.run(i.generators());
  }
  sort_unique(out);
  return out;
}

std::optional<DegreeVector> omit_one_witness(std::span<const IrreducibleComponent> components,
                                             std::size_t k) {
  const IrreducibleComponent& target = components[k];
  DegreeVector w(target.size());
  for (std::size_t j = 0; j < components.size(); ++j) {
    if (j == k) continue;
    const IrreducibleComponent& c = components[j];
    // A generator of V^c outside V^target; exists iff c is not inside target.
    std::optional<std::size_t> pick;
    for (std::size_t i : c.support()) {
      if (!target.support().contains(i) || c[i] < target[i]) {
        pick = i;
        break;
      }
    }
    if (!pick) return std::nullopt;
    w.set(*pick, std::max(w[*pick], c[*pick]));
  }
  if (component_contains_monomial(target, w)) return std::nullopt;
  for (std::size_t j = 0; j < components.size(); ++j) {
    if (j != k && !component_contains_monomial(components[j], w)) return std::nullopt;
  }
  return w;
}

std::vector<IrreducibleComponent> irredundant(std::vector<IrreducibleComponent> components) {
  auto survivors = keep_minimal(std::move(components));
  // Confirm each survivor individually; drop any that fail (none should).
  std::vector<IrreducibleComponent> out;
  out.reserve(survivors.size());
  for (std::size_t k = 0; k < survivors.size(); ++k) {
    if (survivors.size() == 1 || omit_one_witness(survivors, k)) out.push_back(survivors[k]);
  }
  return out;
}

std::vector<IrreducibleComponent> irredundant_decomposition(const MonomialIdeal& i,
                                                            const DecomposeOptions& options) {
  return irredundant(irreducible_components(i, options));
}

MonomialIdeal intersect_components(const RingPtr& ring,
                                   std::span<const IrreducibleComponent> components) {
  const std::size_t n = ring->size();
  std::vector<DegreeVector> gens{DegreeVector(n)};
  for (const IrreducibleComponent& c : components) {
    if (c.size() != n) throw ContractError("component length does not match the ring");
    // lcm(g, v_i^{c_i}) is g itself when g already lies in V^c. Other
    // generators are raised to c_i at some i in the support. A raised h can
    // only be divided by a member with exponent exactly c_i at i, or by
    // another generator raised at the same i, so each i is filtered alone.
    std::vector<DegreeVector> next;
    std::vector<DegreeVector> outside;
    for (DegreeVector& g : gens) {
      if (component_contains_monomial(c, g)) {
        next.push_back(std::move(g));
      } else {
        outside.push_back(std::move(g));
      }
    }
    const std::size_t members = next.size();
    for (std::size_t i : c.support()) {
      const int ci = c[i];
      std::vector<std::size_t> blockers;
      for (std::size_t k = 0; k < members; ++k) {
        if (next[k][i] == ci) blockers.push_back(k);
      }
      std::vector<DegreeVector> bucket;
      bucket.reserve(outside.size());
      for (const DegreeVector& g : outside) {
        DegreeVector h = g;
        h.set(i, ci);
        bucket.push_back(std::move(h));
      }
      std::sort(bucket.begin(), bucket.end(), [](const DegreeVector& a, const DegreeVector& b) {
        const int da = a.total_degree();
        const int db = b.total_degree();
        return da != db ? da < db : a < b;
      });
      const std::size_t start = next.size();
      for (DegreeVector& h : bucket) {
        auto divides_h = [&](const DegreeVector& k) { return k.divides(h); };
        if (std::any_of(blockers.begin(), blockers.end(), [&](std::size_t k) { return divides_h(next[k]); })) {
          continue;
        }
        if (std::any_of(next.begin() + static_cast<std::ptrdiff_t>(start), next.end(), divides_h)) continue;
        next.push_back(std::move(h));
      }
    }
    gens = std::move(next);
  }
  std::sort(gens.begin(), gens.end());
  return MonomialIdeal(ring, std::move(gens));
}

std::vector<PrimeSupport> supports_of(std::span<const IrreducibleComponent> components) {
  std::vector<PrimeSupport> out;
  out.reserve(components.size());
  for (const IrreducibleComponent& c : components) out.push_back(c.support());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<PrimeSupport> associated_primes(const MonomialIdeal& i, const DecomposeOptions& options) {
  const auto comps = irredundant_decomposition(i, options);
  return supports_of(comps);
}

}  // namespace htcover
