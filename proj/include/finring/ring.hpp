#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "finring/error.hpp"
#include "finring/mask.hpp"

namespace finring {

inline constexpr std::size_t kDefaultMaxOrder = 512;
inline constexpr std::size_t kExhaustiveAxiomOrder = 64;
inline constexpr std::uint64_t kDefaultSeed = 0x5eed'f1e1'd5ULL;

/// Knobs shared by every ring constructor.
struct BuildOptions {
  std::size_t max_order = kDefaultMaxOrder;
  /// Seed for the sampled associativity/distributivity checks above
  /// kExhaustiveAxiomOrder.
  std::uint64_t seed = kDefaultSeed;
};

/// A finite commutative ring with identity, stored as dense operation tables
/// over the element indices 0..n-1.
///
/// Instances are immutable and are always validated at construction, so every
/// FiniteRing in the program satisfies the ring axioms (exhaustively checked
/// up to order 64, sampled with at least 10*n^2 triples above) and has 0 != 1.
class FiniteRing {
 public:
  using Table = std::vector<std::vector<Elem>>;

  /// Validates `add` and `mul` as the tables of a commutative unital ring.
  /// Zero and one are located by scanning for the identities.
  static FiniteRing from_tables(const Table& add, const Table& mul, std::string provenance = "tables",
                                const BuildOptions& opts = {});

  /// Flat row-major variant used by the internal constructors.
  static FiniteRing from_flat(std::size_t n, std::vector<Elem> add, std::vector<Elem> mul,
                              std::string provenance, const BuildOptions& opts = {});

  std::size_t order() const { return n_; }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }
  const std::string& provenance() const { return provenance_; }

  Elem add(Elem a, Elem b) const { return add_[a * n_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * n_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem pow(Elem a, std::size_t k) const;
  /// k * a, the k-fold sum.
  Elem times(std::size_t k, Elem a) const;

  bool contains(Elem e) const { return e < n_; }
  void check_element(Elem e) const;

  Table add_table() const;
  Table mul_table() const;

  bool same_tables(const FiniteRing& other) const {
    return n_ == other.n_ && add_ == other.add_ && mul_ == other.mul_;
  }

 private:
  FiniteRing() = default;
  void validate(const BuildOptions& opts);

  std::size_t n_ = 0;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  Elem zero_ = 0;
  Elem one_ = 0;
  std::string provenance_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

/// Unital ring homomorphism given as an element-index map.
struct RingHom {
  RingPtr source;
  RingPtr target;
  std::vector<Elem> images;

  Elem operator()(Elem x) const { return images[x]; }

  /// Throws HomViolation (with the least-index witness) unless the map is a
  /// unital additive and multiplicative map. Exhaustive.
  void validate() const;
  bool is_injective() const;
  bool is_surjective() const;
  Mask image_mask() const;
};

/// Checked construction of a hom.
RingHom make_hom(RingPtr source, RingPtr target, std::vector<Elem> images);

struct ElementProfile {
  bool is_unit = false;
  bool is_idempotent = false;
  bool is_nilpotent = false;
  bool is_zero_divisor = false;
  bool is_regular = false;
  std::size_t additive_order = 1;
  std::optional<std::size_t> nilpotency_index;

  friend bool operator==(const ElementProfile&, const ElementProfile&) = default;
};

struct RingPredicates {
  bool is_field = false;
  bool is_reduced = false;
  bool is_vnr = false;
  bool is_local = false;
};

// Catalog constructors ------------------------------------------------------

/// Z/nZ with element i the residue i.
RingPtr zmod(std::size_t n, const BuildOptions& opts = {});

/// GF(p^k) as Z/p[x] modulo the lexicographically least monic irreducible of
/// degree k (coefficients compared constant term first). Element index is
/// sum c_j p^j for the coefficient vector (c_0, ..., c_{k-1}).
RingPtr galois_field(std::size_t p, std::size_t k, const BuildOptions& opts = {});

/// Coefficients (c_0, ..., c_{k-1}) of the monic modulus used by galois_field.
std::vector<std::size_t> gf_modulus(std::size_t p, std::size_t k);

struct ProductRing {
  RingPtr ring;
  RingHom proj_left;
  RingHom proj_right;

  /// Index of the pair (i, j).
  Elem encode(Elem i, Elem j) const { return static_cast<Elem>(i * proj_right.target->order() + j); }
};

/// R x S with componentwise tables; the pair (i, j) has index i*|S| + j.
ProductRing product(const RingPtr& r, const RingPtr& s, const BuildOptions& opts = {});

// Element and ring queries --------------------------------------------------

ElementProfile element_profile(const FiniteRing& r, Elem x);
std::vector<Elem> units(const FiniteRing& r);
std::vector<Elem> idempotents(const FiniteRing& r);
RingPredicates ring_predicates(const RingPtr& r);

/// The unique idempotent among the powers s, s^2, s^3, ...
Elem eventual_idempotent(const FiniteRing& r, Elem s);

bool is_prime_number(std::size_t n);

}  // namespace finring
