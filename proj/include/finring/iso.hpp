#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "finring/extension.hpp"
#include "finring/ring.hpp"

namespace finring {

inline constexpr std::size_t kDefaultIsoCap = 64;

/// Backtracking search for an injective unital hom A -> B that extends the
/// `fixed` assignments, optionally required to be bijective.
///
/// Branches only on the least unassigned element; everything in the subring
/// generated by the assigned elements is filled in by propagation. Candidates
/// are tried in ascending order, so the first map found is the
/// lexicographically least by image sequence. Candidates are pruned by additive
/// order and the idempotent/nilpotent flags, all preserved by injective homs.
std::optional<std::vector<Elem>> search_injective_hom(const FiniteRing& a, const FiniteRing& b,
                                                      const std::vector<std::pair<Elem, Elem>>& fixed,
                                                      bool bijective);

/// Least injective unital hom A -> B, validated.
std::optional<RingHom> find_embedding(const RingPtr& a, const RingPtr& b);

/// R-algebra isomorphism T_A -> T_B commuting with both embeddings of the
/// common small ring, or nullopt. Throws CapExceeded when |T_A| > iso_cap and
/// PreconditionError when the small rings differ.
std::optional<RingHom> algebra_isomorphic(const Extension& a, const Extension& b,
                                          std::size_t iso_cap = kDefaultIsoCap);

}  // namespace finring
