#include "finring/ideal.hpp"

#include <algorithm>
#include <set>

namespace finring {

void join_cyclic_subgroup(const FiniteRing& r, Mask& span, Elem x) {
  if (span.test(x)) return;
  const std::vector<Elem> base = span.members();
  const Mask before = span;
  // New cosets base + k*x for k = 1, 2, ... until k*x falls back into the span.
  for (Elem shift = x; !before.test(shift); shift = r.add(shift, x))
    for (Elem b : base) span.set(r.add(b, shift));
}

Ideal ideal_generated(const RingPtr& r, std::span<const Elem> gens) {
  const FiniteRing& ring = *r;
  Mask m(ring.order());
  m.set(ring.zero());
  for (Elem g : gens) {
    ring.check_element(g);
    if (m.test(g)) continue;
    for (Elem s = 0; s < ring.order(); ++s) join_cyclic_subgroup(ring, m, ring.mul(s, g));
  }
  return Ideal{r, std::move(m), std::vector<Elem>(gens.begin(), gens.end())};
}

bool is_ideal_mask(const FiniteRing& r, const Mask& m) {
  if (m.universe() != r.order() || !m.test(r.zero())) return false;
  const auto mem = m.members();
  for (Elem a : mem) {
    for (Elem b : mem)
      if (!m.test(r.add(a, b))) return false;
    for (Elem s = 0; s < r.order(); ++s)
      if (!m.test(r.mul(s, a))) return false;
  }
  return true;
}

Ideal ideal_from_mask(const RingPtr& r, const Mask& m) {
  if (!is_ideal_mask(*r, m)) throw PreconditionError("mask is not an ideal");
  std::vector<Elem> gens;
  Mask closure = ideal_generated(r, {}).members;
  for (Elem x : m.members()) {
    if (closure.test(x)) continue;
    gens.push_back(x);
    closure = ideal_generated(r, gens).members;
  }
  if (gens.empty()) gens.push_back(r->zero());
  return Ideal{r, m, std::move(gens)};
}

QuotientRing quotient(const Ideal& ideal, const BuildOptions& opts) {
  const FiniteRing& r = *ideal.ring;
  if (!ideal.is_proper()) throw PreconditionError("quotient by the whole ring would be the zero ring");
  const std::size_t n = r.order();
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> coset(n, kUnset);
  std::vector<Elem> reps;
  const auto members = ideal.members.members();
  for (Elem x = 0; x < n; ++x) {
    if (coset[x] != kUnset) continue;
    const Elem id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem i : members) coset[r.add(x, i)] = id;
  }
  const std::size_t q = reps.size();
  std::vector<Elem> add(q * q), mul(q * q);
  for (Elem a = 0; a < q; ++a)
    for (Elem b = 0; b < q; ++b) {
      add[a * q + b] = coset[r.add(reps[a], reps[b])];
      mul[a * q + b] = coset[r.mul(reps[a], reps[b])];
    }
  auto ring = std::make_shared<const FiniteRing>(
      FiniteRing::from_flat(q, std::move(add), std::move(mul), "(" + r.provenance() + ")/I", opts));
  return QuotientRing{ring, make_hom(ideal.ring, ring, std::move(coset)), std::move(reps)};
}

bool is_maximal(const Ideal& i) {
  if (!i.is_proper()) return false;
  const RingPtr quot = quotient(i).ring;
  const FiniteRing& q = *quot;
  return units(q).size() == q.order() - 1;
}

bool is_prime(const Ideal& i) {
  if (!i.is_proper()) return false;
  const RingPtr quot = quotient(i).ring;
  const FiniteRing& q = *quot;
  for (Elem a = 0; a < q.order(); ++a)
    for (Elem b = 0; b < q.order(); ++b)
      if (a != q.zero() && b != q.zero() && q.mul(a, b) == q.zero()) return false;
  return true;
}

bool is_maximal_by_generation(const Ideal& i) {
  if (!i.is_proper()) return false;
  std::vector<Elem> gens = i.members.members();
  for (Elem y = 0; y < i.ring->order(); ++y) {
    if (i.contains(y)) continue;
    gens.push_back(y);
    if (ideal_generated(i.ring, gens).is_proper()) return false;
    gens.pop_back();
  }
  return true;
}

std::vector<Ideal> max_spectrum(const RingPtr& r) {
  const FiniteRing& ring = *r;
  // Seed with the proper principal ideals, then climb by adjoining one
  // element at a time. Every proper ideal is reached; those with no proper
  // one-step enlargement are maximal.
  std::set<Mask> seen;
  std::vector<Ideal> frontier;
  for (Elem x = 0; x < ring.order(); ++x) {
    Ideal i = ideal_generated(r, {x});
    if (i.is_proper() && seen.insert(i.members).second) frontier.push_back(std::move(i));
  }
  std::vector<Mask> maximal;
  while (!frontier.empty()) {
    Ideal current = std::move(frontier.back());
    frontier.pop_back();
    bool has_bigger = false;
    std::vector<Elem> gens = current.generators;
    for (Elem y = 0; y < ring.order(); ++y) {
      if (current.contains(y)) continue;
      gens.push_back(y);
      Ideal bigger = ideal_generated(r, gens);
      gens.pop_back();
      if (!bigger.is_proper()) continue;
      has_bigger = true;
      if (seen.insert(bigger.members).second) frontier.push_back(std::move(bigger));
    }
    if (!has_bigger) maximal.push_back(current.members);
  }
  std::sort(maximal.begin(), maximal.end());
  std::vector<Ideal> out;
  out.reserve(maximal.size());
  for (const Mask& m : maximal) out.push_back(ideal_from_mask(r, m));
  return out;
}

Ideal pullback(const RingHom& h, const Mask& target_ideal) {
  Mask m(h.source->order());
  for (Elem x = 0; x < h.source->order(); ++x)
    if (target_ideal.test(h(x))) m.set(x);
  return ideal_from_mask(h.source, m);
}

Idealization idealization(const CyclicModuleSpec& spec, const BuildOptions& opts) {
  const FiniteRing& r = *spec.ring;
  const Ideal& den = spec.denominator;
  if (den.ring.get() != spec.ring.get() && !den.ring->same_tables(r))
    throw PreconditionError("module denominator belongs to another ring");

  const std::size_t n = r.order();
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> coset(n, kUnset);
  std::vector<Elem> reps;
  const auto members = den.members.members();
  for (Elem x = 0; x < n; ++x) {
    if (coset[x] != kUnset) continue;
    const Elem id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem i : members) coset[r.add(x, i)] = id;
  }
  const std::size_t m = reps.size();
  const std::size_t total = n * m;
  if (total > opts.max_order) throw CapExceeded("idealization", total, opts.max_order);

  std::vector<Elem> add(total * total), mul(total * total);
  for (Elem x = 0; x < total; ++x) {
    const Elem r1 = x / m, e1 = reps[x % m];
    for (Elem y = 0; y < total; ++y) {
      const Elem r2 = y / m, e2 = reps[y % m];
      add[x * total + y] = static_cast<Elem>(r.add(r1, r2) * m + coset[r.add(e1, e2)]);
      const Elem e = r.add(r.mul(r1, e2), r.mul(r2, e1));
      mul[x * total + y] = static_cast<Elem>(r.mul(r1, r2) * m + coset[e]);
    }
  }
  std::string prov = "Id(" + r.provenance() + "; R/I, |R/I|=" + std::to_string(m) + ")";
  auto ring = std::make_shared<const FiniteRing>(
      FiniteRing::from_flat(total, std::move(add), std::move(mul), std::move(prov), opts));
  std::vector<Elem> emb(n);
  for (Elem x = 0; x < n; ++x) emb[x] = static_cast<Elem>(x * m + coset[r.zero()]);
  RingHom embed = make_hom(spec.ring, ring, std::move(emb));
  if (!embed.is_injective()) throw InternalError("idealization embedding not injective");
  return Idealization{ring, std::move(embed), m, std::move(reps), std::move(coset)};
}

}  // namespace finring
