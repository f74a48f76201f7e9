#include "finring/local.hpp"

#include <algorithm>
#include <numeric>

namespace finring {

Corner corner_ring(const RingPtr& r, Elem e, const BuildOptions& opts) {
  const FiniteRing& ring = *r;
  ring.check_element(e);
  if (e == ring.zero() || ring.mul(e, e) != e) throw PreconditionError("corner needs a nonzero idempotent");

  Mask in_corner(ring.order());
  for (Elem x = 0; x < ring.order(); ++x) in_corner.set(ring.mul(e, x));
  const std::vector<Elem> members = in_corner.members();
  const std::size_t n = members.size();
  std::vector<Elem> index(ring.order(), ~Elem{0});
  for (std::size_t i = 0; i < n; ++i) index[members[i]] = static_cast<Elem>(i);

  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = index[ring.add(members[a], members[b])];
      mul[a * n + b] = index[ring.mul(members[a], members[b])];
    }
  auto corner = std::make_shared<const FiniteRing>(FiniteRing::from_flat(
      n, std::move(add), std::move(mul), "corner " + std::to_string(e) + "*(" + ring.provenance() + ")", opts));
  std::vector<Elem> images(ring.order());
  for (Elem x = 0; x < ring.order(); ++x) images[x] = index[ring.mul(e, x)];
  return Corner{corner, make_hom(r, corner, std::move(images)), members};
}

Localization localize(const RingPtr& r, std::span<const Elem> s, const BuildOptions& opts) {
  const FiniteRing& ring = *r;
  if (s.empty()) throw PreconditionError("multiplicative set must be nonempty");
  Mask closed(ring.order());
  std::vector<Elem> work{ring.one()};
  closed.set(ring.one());
  for (Elem x : s) {
    ring.check_element(x);
    if (!closed.test(x)) {
      closed.set(x);
      work.push_back(x);
    }
  }
  // Close under products with the generators.
  for (std::size_t i = 0; i < work.size(); ++i)
    for (Elem g : s) {
      const Elem y = ring.mul(work[i], g);
      if (!closed.test(y)) {
        closed.set(y);
        work.push_back(y);
      }
    }

  Elem e = ring.one();
  for (Elem x : closed.members()) e = ring.mul(e, eventual_idempotent(ring, x));
  if (e == ring.zero())
    throw DegenerateLocalization("localization of " + ring.provenance() + " is the zero ring");

  Corner corner = corner_ring(r, e, opts);
  const FiniteRing& c = *corner.ring;
  for (Elem x : closed.members()) {
    const Elem image = corner.hom(x);
    bool unit = false;
    for (Elem y = 0; y < c.order() && !unit; ++y) unit = c.mul(image, y) == c.one();
    if (!unit) throw InternalError("multiplicative set element not inverted by the localization");
  }
  return Localization{r, std::move(closed), e, std::move(corner)};
}

Localization localize_at_prime(const RingPtr& r, const Ideal& p, const BuildOptions& opts) {
  if (!is_prime(p)) throw PreconditionError("localize_at_prime needs a prime ideal");
  std::vector<Elem> complement;
  for (Elem x = 0; x < r->order(); ++x)
    if (!p.contains(x)) complement.push_back(x);
  Localization loc = localize(r, complement, opts);
  if (max_spectrum(loc.ring()).size() != 1) throw InternalError("localization at a prime is not local");
  return loc;
}

LocalDecomposition local_decomposition(const RingPtr& r, const BuildOptions& opts) {
  const FiniteRing& ring = *r;
  // Refine {1} by every idempotent; what remains is the set of primitive
  // orthogonal idempotents.
  std::vector<Elem> parts{ring.one()};
  for (Elem f : idempotents(ring)) {
    std::vector<Elem> next;
    const Elem cof = ring.sub(ring.one(), f);
    for (Elem e : parts)
      for (Elem piece : {ring.mul(e, f), ring.mul(e, cof)})
        if (piece != ring.zero()) next.push_back(piece);
    parts = std::move(next);
  }
  std::sort(parts.begin(), parts.end());

  std::vector<LocalFactor> factors;
  for (Elem e : parts) {
    Corner c = corner_ring(r, e, opts);
    if (max_spectrum(c.ring).size() != 1) throw InternalError("primitive corner is not local");
    factors.push_back(LocalFactor{e, std::move(c)});
  }
  if (factors.size() != max_spectrum(r).size())
    throw InternalError("local factor count differs from the number of maximal ideals");

  RingPtr assembled = factors.front().corner.ring;
  std::vector<Elem> images = factors.front().corner.hom.images;
  for (std::size_t i = 1; i < factors.size(); ++i) {
    ProductRing p = product(assembled, factors[i].corner.ring, opts);
    for (Elem x = 0; x < ring.order(); ++x) images[x] = p.encode(images[x], factors[i].corner.hom(x));
    assembled = p.ring;
  }
  RingHom reassembly = make_hom(r, assembled, std::move(images));
  if (assembled->order() != ring.order() || !reassembly.is_injective())
    throw InternalError("reassembly map is not an isomorphism");
  return LocalDecomposition{std::move(factors), std::move(assembled), std::move(reassembly)};
}

CrucialReport crucial_maximal_ideal(const Extension& ext, const BuildOptions& opts) {
  if (!ext.is_proper()) throw PreconditionError("extension is not proper");
  if (!is_minimal(ext)) throw PreconditionError("extension is not minimal");
  const FiniteRing& r = *ext.small;

  std::vector<PrimeLocalization> table;
  std::vector<std::size_t> non_iso;
  for (Ideal& p : max_spectrum(ext.small)) {
    Localization rp = localize_at_prime(ext.small, p, opts);
    std::vector<Elem> outside;
    for (Elem x = 0; x < r.order(); ++x)
      if (!p.contains(x)) outside.push_back(ext.embed(x));
    Localization tp = localize(ext.big, outside, opts);
    if (ext.embed(rp.idempotent) != tp.idempotent)
      throw InternalError("localization idempotents not compatible with the embedding");
    // The induced map R_P -> T_P is x -> embed(x) on corners, injective because
    // the embedding is; it is bijective exactly when the orders agree.
    PrimeLocalization row{std::move(p), rp.ring()->order(), tp.ring()->order(), false};
    row.isomorphism = row.small_order == row.big_order;
    if (!row.isomorphism) non_iso.push_back(table.size());
    table.push_back(std::move(row));
  }
  if (non_iso.size() != 1) throw CrucialIdealError(non_iso.size(), std::move(table));
  Ideal j = table[non_iso.front()].prime;
  return CrucialReport{std::move(j), std::move(table)};
}

TotalQuotient total_quotient_ring(const RingPtr& r, const BuildOptions& opts) {
  std::vector<Elem> regular;
  for (Elem x = 0; x < r->order(); ++x)
    if (element_profile(*r, x).is_regular) regular.push_back(x);
  Localization loc = localize(r, regular, opts);
  if (loc.idempotent != r->one() || loc.ring()->order() != r->order())
    throw InternalError("total quotient ring differs from the ring");
  std::vector<Elem> identity(r->order());
  std::iota(identity.begin(), identity.end(), Elem{0});
  return TotalQuotient{r, make_hom(r, r, std::move(identity))};
}

}  // namespace finring
