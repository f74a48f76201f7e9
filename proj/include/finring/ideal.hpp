#pragma once

#include <span>
#include <vector>

#include "finring/ring.hpp"

namespace finring {

/// An ideal of a finite ring, kept as a membership mask plus the generators
/// it was built from.
struct Ideal {
  RingPtr ring;
  Mask members;
  std::vector<Elem> generators;

  bool contains(Elem x) const { return members.test(x); }
  bool is_proper() const { return !members.test(ring->one()); }
  bool is_zero() const { return members.count() == 1; }
  std::size_t size() const { return members.count(); }

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.members == b.members; }
};

/// Least ideal containing `gens`.
Ideal ideal_generated(const RingPtr& r, std::span<const Elem> gens);
inline Ideal ideal_generated(const RingPtr& r, std::initializer_list<Elem> gens) {
  return ideal_generated(r, std::span<const Elem>(gens.begin(), gens.size()));
}

/// Wraps a mask that is already an ideal. Throws PreconditionError otherwise.
/// The generator list is the greedy ascending generating set.
Ideal ideal_from_mask(const RingPtr& r, const Mask& m);

/// True iff `m` contains 0 and is closed under addition and under
/// multiplication by every ring element.
bool is_ideal_mask(const FiniteRing& r, const Mask& m);

/// Grows `span` (an additive subgroup mask) to the subgroup generated by it and x.
void join_cyclic_subgroup(const FiniteRing& r, Mask& span, Elem x);

struct QuotientRing {
  RingPtr ring;
  RingHom surjection;
  /// Least representative of each coset, indexed by quotient element.
  std::vector<Elem> representatives;
};

/// R/I. Cosets are numbered by ascending least representative.
QuotientRing quotient(const Ideal& i, const BuildOptions& opts = {});

bool is_maximal(const Ideal& i);
bool is_prime(const Ideal& i);

/// Independent maximality oracle: I is proper and I + <y> = R for every y outside I.
bool is_maximal_by_generation(const Ideal& i);

/// All maximal ideals, sorted by ascending member lists.
std::vector<Ideal> max_spectrum(const RingPtr& r);

/// Kernel-style pullback of an ideal mask of the target along a hom.
Ideal pullback(const RingHom& h, const Mask& target_ideal);

/// The cyclic module R/I. I = 0 encodes the module R itself; I = R gives the
/// zero module.
struct CyclicModuleSpec {
  RingPtr ring;
  Ideal denominator;
};

inline CyclicModuleSpec module_r(const RingPtr& r) { return {r, ideal_generated(r, {r->zero()})}; }

struct Idealization {
  RingPtr ring;
  RingHom embed;       // r -> (r, 0)
  std::size_t module_size = 0;
  /// Least coset representatives of the module elements.
  std::vector<Elem> module_reps;
  /// Module element index of each ring element's coset.
  std::vector<Elem> coset_of;

  Elem encode(Elem r, Elem e) const { return static_cast<Elem>(r * module_size + e); }
  Elem ring_part(Elem x) const { return static_cast<Elem>(x / module_size); }
  Elem module_part(Elem x) const { return static_cast<Elem>(x % module_size); }
};

/// R(+)M with (r1, e1)(r2, e2) = (r1 r2, r1 e2 + r2 e1); the pair (r, e) has
/// index r*|M| + e where e numbers the cosets of I by least representative.
Idealization idealization(const CyclicModuleSpec& m, const BuildOptions& opts = {});

}  // namespace finring
