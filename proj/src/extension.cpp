#include "finring/extension.hpp"

#include <algorithm>

namespace finring {

Extension make_extension(RingHom embed) {
  embed.validate();
  if (!embed.is_injective()) {
    std::vector<Elem> seen(embed.target->order(), ~Elem{0});
    for (Elem x = 0; x < embed.source->order(); ++x) {
      const Elem y = embed(x);
      if (seen[y] != ~Elem{0}) throw HomViolation("injective", {seen[y], x});
      seen[y] = x;
    }
  }
  Mask image = embed.image_mask();
  return Extension{embed.source, embed.target, std::move(embed), std::move(image)};
}

namespace {

// Grows `span` (a ring B, as an additive group and B-module) to B[g].
// `ring_members` lists B. Returns early (with a partial span) as soon as the
// span meets `stop`, when given.
bool adjoin_one(const FiniteRing& t, Mask& span, const std::vector<Elem>& ring_members, Elem g,
                const Mask* stop) {
  Elem power = g;
  while (!span.test(power)) {
    for (Elem b : ring_members) join_cyclic_subgroup(t, span, t.mul(b, power));
    if (stop) {
      for (Elem x = 0; x < t.order(); ++x)
        if (span.test(x) && stop->test(x)) return true;
    }
    power = t.mul(power, g);
  }
  return false;
}

}  // namespace

Mask closure(const FiniteRing& t, const Mask& base, std::span<const Elem> gens) {
  Mask s = base;
  std::vector<Elem> members = s.members();
  for (Elem g : gens) {
    t.check_element(g);
    if (s.test(g)) continue;
    adjoin_one(t, s, members, g, nullptr);
    members = s.members();
  }
  return s;
}

bool is_subring_mask(const FiniteRing& t, const Mask& m) {
  if (m.universe() != t.order() || !m.test(t.zero()) || !m.test(t.one())) return false;
  const auto mem = m.members();
  for (Elem a : mem) {
    if (!m.test(t.neg(a))) return false;
    for (Elem b : mem)
      if (!m.test(t.add(a, b)) || !m.test(t.mul(a, b))) return false;
  }
  return true;
}

Subring adjoin(const Extension& ext, std::span<const Elem> gens) {
  return Subring{ext.big, closure(*ext.big, ext.image, gens), std::vector<Elem>(gens.begin(), gens.end())};
}

Extension subring_extension(const RingPtr& big, const Mask& sub, const BuildOptions& opts) {
  const FiniteRing& t = *big;
  if (!is_subring_mask(t, sub)) throw PreconditionError("mask is not a unital subring");
  const std::vector<Elem> members = sub.members();
  const std::size_t n = members.size();
  std::vector<Elem> index(t.order(), ~Elem{0});
  for (std::size_t i = 0; i < n; ++i) index[members[i]] = static_cast<Elem>(i);
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = index[t.add(members[a], members[b])];
      mul[a * n + b] = index[t.mul(members[a], members[b])];
    }
  auto small = std::make_shared<const FiniteRing>(FiniteRing::from_flat(
      n, std::move(add), std::move(mul), "subring of order " + std::to_string(n) + " in " + t.provenance(),
      opts));
  return make_extension(make_hom(small, big, members));
}

std::optional<Elem> minimality_witness(const FiniteRing& t, const Mask& base) {
  if (base.full()) throw PreconditionError("extension is not proper");
  const std::vector<Elem> base_members = base.members();
  // Elements already known to generate T; meeting one ends a closure early.
  Mask generators(t.order());
  for (Elem g = 0; g < t.order(); ++g) {
    if (base.test(g) || generators.test(g)) continue;
    Mask span = base;
    const bool hit = adjoin_one(t, span, base_members, g, &generators);
    if (!hit && !span.full()) return g;
    generators.set(g);
  }
  return std::nullopt;
}

bool is_minimal_over(const FiniteRing& t, const Mask& base) { return !minimality_witness(t, base).has_value(); }

bool is_minimal(const Extension& ext) { return is_minimal_over(*ext.big, ext.image); }

Mask diagonal_formula_mask(const RingPtr& r, Elem a, Elem b) {
  const FiniteRing& ring = *r;
  const Ideal i = ideal_generated(r, {ring.sub(a, b)});
  const std::size_t n = ring.order();
  Mask m(n * n);
  for (Elem c = 0; c < n; ++c)
    for (Elem d = 0; d < n; ++d)
      if (i.contains(ring.sub(c, d))) m.set(static_cast<Elem>(c * n + d));
  return m;
}

DiagonalExtension diagonal_extension(const RingPtr& r, Elem a, Elem b, const BuildOptions& opts) {
  r->check_element(a);
  r->check_element(b);
  ProductRing square = product(r, r, opts);
  std::vector<Elem> diag(r->order());
  for (Elem x = 0; x < r->order(); ++x) diag[x] = square.encode(x, x);
  Extension ext = make_extension(make_hom(r, square.ring, std::move(diag)));
  Subring sub = adjoin(ext, {square.encode(a, b)});
  if (sub.members != diagonal_formula_mask(r, a, b))
    throw InternalError("closure of the diagonal with (a, b) differs from {(c, d) : c - d in <a - b>}");
  return DiagonalExtension{std::move(square), std::move(ext), std::move(sub)};
}

Conductor conductor(const Extension& ext) {
  const FiniteRing& t = *ext.big;
  Mask c(t.order());
  for (Elem x = 0; x < t.order(); ++x) {
    bool conducts = true;
    for (Elem y = 0; y < t.order() && conducts; ++y) conducts = ext.image.test(t.mul(x, y));
    if (conducts) c.set(x);
  }
  if (!c.subset_of(ext.image)) throw InternalError("conductor not contained in the base ring");
  if (!is_ideal_mask(t, c)) throw InternalError("conductor is not an ideal of the big ring");
  return Conductor{pullback(ext.embed, c), std::move(c)};
}

IdealizationExtension idealization_extension(const CyclicModuleSpec& m, const BuildOptions& opts) {
  Idealization parts = idealization(m, opts);
  Extension ext = make_extension(parts.embed);
  return IdealizationExtension{std::move(parts), std::move(ext)};
}

std::variant<Ideal, NotOfForm> intermediate_idealization_form(const IdealizationExtension& ie, const Mask& sub) {
  const Idealization& id = ie.parts;
  const FiniteRing& r = *ie.ext.small;
  const FiniteRing& t = *id.ring;
  if (id.module_size != r.order())
    throw PreconditionError("intermediate form needs the module R (zero denominator)");
  if (sub.universe() != t.order() || !ie.ext.image.subset_of(sub))
    throw PreconditionError("subring must contain the base ring");

  const Elem zero = r.zero();
  Mask i(r.order());
  for (Elem e = 0; e < r.order(); ++e)
    if (sub.test(id.encode(zero, id.coset_of[e]))) i.set(e);
  if (!is_ideal_mask(r, i)) {
    for (Elem e = 0; e < r.order(); ++e)
      if (i.test(e)) return NotOfForm{id.encode(zero, id.coset_of[e])};
  }
  for (Elem x = 0; x < t.order(); ++x) {
    const bool expected = i.test(id.module_reps[id.module_part(x)]);
    if (sub.test(x) != expected) return NotOfForm{x};
  }
  return ideal_from_mask(ie.ext.small, i);
}

bool is_minimal_field_extension(const Extension& ext) {
  const FiniteRing& r = *ext.small;
  const FiniteRing& t = *ext.big;
  if (units(r).size() != r.order() - 1 || units(t).size() != t.order() - 1)
    throw PreconditionError("both rings must be fields");
  if (!ext.is_proper()) throw PreconditionError("extension is not proper");

  const bool minimal = is_minimal(ext);

  std::size_t degree = 0;
  std::size_t rest = t.order();
  while (rest % r.order() == 0 && rest > 1) {
    rest /= r.order();
    ++degree;
  }
  if (rest != 1) throw InternalError("field order is not a power of the subfield order");
  if (minimal != is_prime_number(degree))
    throw InternalError("adjunction and degree criteria disagree on field extension minimality");
  return minimal;
}

}  // namespace finring
