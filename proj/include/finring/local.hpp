#pragma once

#include <span>
#include <vector>

#include "finring/extension.hpp"
#include "finring/ideal.hpp"
#include "finring/ring.hpp"

namespace finring {

/// The corner ring eR with identity e, re-indexed ascending by source index.
struct Corner {
  RingPtr ring;
  RingHom hom;                // r -> e r
  std::vector<Elem> members;  // source index of each corner element
};

/// Throws PreconditionError unless e is a nonzero idempotent.
Corner corner_ring(const RingPtr& r, Elem e, const BuildOptions& opts = {});

/// R[S^-1] realized as the corner eR, where e is the product of the eventual
/// idempotents of the multiplicative closure of S.
struct Localization {
  RingPtr source;
  Mask multiplicative_set;
  Elem idempotent = 0;
  Corner corner;

  const RingPtr& ring() const { return corner.ring; }
};

/// Throws DegenerateLocalization when the closure of S meets a nilpotent (e = 0).
Localization localize(const RingPtr& r, std::span<const Elem> s, const BuildOptions& opts = {});

/// R_P, localizing at the complement of the prime P. Throws if P is not prime.
Localization localize_at_prime(const RingPtr& r, const Ideal& p, const BuildOptions& opts = {});

struct LocalFactor {
  Elem idempotent;
  Corner corner;
};

/// R as the product of its local factors e_i R.
struct LocalDecomposition {
  std::vector<LocalFactor> factors;
  RingPtr product;     // e_1 R x e_2 R x ... (left-nested pair encoding)
  RingHom reassembly;  // r -> (e_1 r, e_2 r, ...), validated bijective
};

LocalDecomposition local_decomposition(const RingPtr& r, const BuildOptions& opts = {});

/// One row of the crucial-ideal table: is R_P -> T_P an isomorphism?
struct PrimeLocalization {
  Ideal prime;
  std::size_t small_order = 0;  // |R_P|
  std::size_t big_order = 0;    // |T_P|
  bool isomorphism = false;
};

struct CrucialReport {
  Ideal crucial;
  std::vector<PrimeLocalization> table;
};

/// Raised when the number of maximal ideals with non-bijective localization
/// is not exactly one.
class CrucialIdealError : public Error {
 public:
  CrucialIdealError(std::size_t non_iso_count, std::vector<PrimeLocalization> table)
      : Error(non_iso_count == 0 ? "no maximal ideal has a non-bijective localization"
                                 : "several maximal ideals have non-bijective localizations"),
        count_(non_iso_count),
        table_(std::move(table)) {}

  std::size_t non_iso_count() const { return count_; }
  const std::vector<PrimeLocalization>& table() const { return table_; }

 private:
  std::size_t count_;
  std::vector<PrimeLocalization> table_;
};

/// The unique J in Max(R) with R_J -> T_J not bijective, plus the per-prime
/// table. Re-verifies that ext is a proper minimal extension.
CrucialReport crucial_maximal_ideal(const Extension& ext, const BuildOptions& opts = {});

struct TotalQuotient {
  RingPtr ring;
  RingHom hom;
};

/// Localization at the regular elements. For a finite ring every regular
/// element is a unit, so this returns R with the identity map (asserted).
TotalQuotient total_quotient_ring(const RingPtr& r, const BuildOptions& opts = {});

}  // namespace finring
