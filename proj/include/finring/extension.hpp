#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "finring/ideal.hpp"
#include "finring/ring.hpp"

namespace finring {

/// A unital ring extension R -> T given by a validated injective hom.
struct Extension {
  RingPtr small;
  RingPtr big;
  RingHom embed;
  Mask image;  // embed(R) inside T

  bool is_proper() const { return !image.full(); }
};

/// Validates `embed` as an injective unital hom and caches its image.
/// Throws HomViolation with a witness otherwise.
Extension make_extension(RingHom embed);

/// A unital subring of `big` containing the image of the base ring.
struct Subring {
  RingPtr big;
  Mask members;
  std::vector<Elem> adjoined;

  std::size_t size() const { return members.count(); }
};

/// Least subring of T containing the subring `base` and `gens`.
///
/// Computed one generator at a time as a span of powers: for a ring B and an
/// element g, B[g] = B + Bg + Bg^2 + ... and the sum is closed as soon as the
/// next power lands inside it.
Mask closure(const FiniteRing& t, const Mask& base, std::span<const Elem> gens);

/// True iff `m` contains 0 and 1 and is closed under +, x and negation.
bool is_subring_mask(const FiniteRing& t, const Mask& m);

/// The generated R-subalgebra R[gens] of T.
Subring adjoin(const Extension& ext, std::span<const Elem> gens);
inline Subring adjoin(const Extension& ext, std::initializer_list<Elem> gens) {
  return adjoin(ext, std::span<const Elem>(gens.begin(), gens.size()));
}

/// Re-indexes a subring (ascending by its index in T) as a FiniteRing and
/// returns the inclusion as an Extension of the subring into T.
Extension subring_extension(const RingPtr& big, const Mask& sub, const BuildOptions& opts = {});

/// Least outside element t with base[t] != T, or nullopt when every outside
/// element generates T. Throws PreconditionError if base is all of T.
std::optional<Elem> minimality_witness(const FiniteRing& t, const Mask& base);

/// Decides whether base (a subring) is a maximal subring of T.
bool is_minimal_over(const FiniteRing& t, const Mask& base);

/// Decides whether ext is a minimal ring extension.
bool is_minimal(const Extension& ext);

/// The diagonal embedding R -> R x R together with the subring D(R)[(a, b)].
struct DiagonalExtension {
  ProductRing square;  // R x R, pair (c, d) at index c*|R| + d
  Extension diagonal;
  Subring subring;
};

/// Builds D(R)[(a, b)] by closure and independently as {(c, d) : c - d in <a - b>},
/// and throws InternalError if the two masks differ.
DiagonalExtension diagonal_extension(const RingPtr& r, Elem a, Elem b, const BuildOptions& opts = {});

/// {(c, d) : c - d in <a - b>} as a mask of R x R, computed from the ideal side.
Mask diagonal_formula_mask(const RingPtr& r, Elem a, Elem b);

struct Conductor {
  Ideal in_small;  // pulled back along the embedding
  Mask in_big;     // {t in T : tT is inside the image}
};

/// (R:T) = {t in T : tT is contained in R}.
Conductor conductor(const Extension& ext);

/// The canonical extension R -> R(+)R/I.
struct IdealizationExtension {
  Idealization parts;
  Extension ext;
};

IdealizationExtension idealization_extension(const CyclicModuleSpec& m, const BuildOptions& opts = {});

/// Element of S outside R(+)I, reported when S does not have that form.
struct NotOfForm {
  Elem witness;
};

/// Returns I with S = R(+)I, where I = {e : (0, e) in S}. Requires the module R
/// (zero denominator) so that module elements are ring elements.
std::variant<Ideal, NotOfForm> intermediate_idealization_form(const IdealizationExtension& ie, const Mask& sub);

/// Field extension minimality, decided by adjunction and cross-checked against
/// "degree [T:R] is prime". Throws on non-fields or an improper extension.
bool is_minimal_field_extension(const Extension& ext);

}  // namespace finring
