#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "finring/extension.hpp"
#include "finring/ideal.hpp"
#include "finring/iso.hpp"
#include "finring/ring.hpp"

namespace finring {

using Json = nlohmann::ordered_json;

enum class Verdict { Pass, Fail, Skipped };

const char* to_string(Verdict v);

/// Outcome of one verifier on one catalog entry.
struct VerdictReport {
  std::string theorem;
  std::string entry;
  Verdict verdict = Verdict::Pass;
  Json witnesses = Json::object();
  Json counterexample = nullptr;  // present iff verdict == Fail
  std::size_t instances = 0;
  double millis = 0.0;

  /// Records the first failure; later ones only bump the failure count.
  void fail(Json detail);
  bool passed() const { return verdict == Verdict::Pass; }
};

struct VerifyOptions {
  BuildOptions build;
  std::size_t iso_cap = 512;
};

// Biconditionals over all element pairs of R --------------------------------

/// D(R)[(r, s)] = R x R  <=>  r - s is a unit, for all pairs.
VerdictReport verify_unit_criterion(const RingPtr& r, const VerifyOptions& opts = {});

/// For all pairs: closure equals {(c, d) : c - d in <a - b>}, its order is
/// |R| |<a - b>|, and minimality (adjunction decision) <=> <a - b> maximal.
VerdictReport verify_diagonal_theorem(const RingPtr& r, const VerifyOptions& opts = {});

/// For all pairs in R(+)R: R[(a, b)] = R(+)<b>, minimal <=> <b> maximal;
/// R(+)M maximal for every maximal M; R maximal in R(+)R <=> R is a field.
VerdictReport verify_idealization_results(const RingPtr& r, const VerifyOptions& opts = {});

// Extension catalog -----------------------------------------------------------

enum class CaseKind { Inert, Decomposed, Ramified };

const char* to_string(CaseKind k);

/// A constructed extension of a catalog ring together with its role.
struct NamedExtension {
  std::string name;
  Extension ext;
  std::optional<CaseKind> intended;  // set for the VNR candidates
  std::optional<Ideal> target;       // the maximal ideal it was built over
};

/// For VNR R and each maximal ideal m (with e the primitive idempotent off m):
///  - inert:      (1-e)R x K, K the degree-2 extension of eR = R/m
///  - decomposed: R x R/m, r -> (r, r mod m)
///  - ramified:   (1-e)R x eR(+)eR
/// Candidates over the order cap are omitted and counted in `skipped`.
std::vector<NamedExtension> vnr_candidates(const RingPtr& r, const BuildOptions& opts, std::size_t* skipped = nullptr);

/// Every minimal extension the suite builds over R: the VNR candidates, R in
/// R x R/m and R(+)R/m for every maximal m, the distinct minimal subrings
/// D(R)[(a, 0)] of R x R and R(+)M of R(+)R. Each is verified minimal.
std::vector<NamedExtension> catalog_minimal_extensions(const RingPtr& r, const BuildOptions& opts,
                                                       std::size_t* skipped = nullptr);

// VNR classification ---------------------------------------------------------

struct CaseLabel {
  CaseKind kind = CaseKind::Inert;
  std::optional<Elem> q;  // witness for decomposed / ramified
  Ideal m;
};

enum class StructureCheck { BigRingVnr, BigRingNotVnr, IsoFound, IsoMissing, SkippedIsoCap };

struct Classification {
  Ideal m;  // the conductor, pulled back to R
  bool m_maximal = false;
  bool inert = false;
  bool decomposed = false;
  bool ramified = false;
  std::optional<Elem> decomposed_q;
  std::optional<Elem> ramified_q;
  std::optional<CaseLabel> label;  // set iff exactly one case holds
  StructureCheck structure = StructureCheck::SkippedIsoCap;
  std::optional<RingHom> iso;  // T -> R(+)R/m for the ramified case
  VerdictReport report;
};

/// Tests the three conditions independently, requires exactly one, and
/// cross-checks the big ring's shape (VNR, or isomorphic to R(+)R/m).
/// Throws PreconditionError unless R is VNR and ext is minimal.
Classification classify_vnr_extension(const Extension& ext, std::size_t iso_cap = 512,
                                      const BuildOptions& opts = {});

/// classify_vnr_extension over every VNR candidate of R: exactly one case,
/// m = (R:T) maximal, and the case matches the construction.
VerdictReport verify_vnr_trichotomy(const RingPtr& r, const VerifyOptions& opts = {});

/// Every candidate's big ring is VNR or R-algebra isomorphic to R(+)R/m.
VerdictReport verify_vnr_structure(const RingPtr& r, const VerifyOptions& opts = {});

/// Both of the above from a single classification pass: {trichotomy, structure}.
std::vector<VerdictReport> verify_vnr_results(const RingPtr& r, const VerifyOptions& opts = {});

// Conductor and crucial ideal --------------------------------------------------

/// (R:T) is prime. Throws PreconditionError if ext is not minimal.
VerdictReport verify_conductor_prime(const Extension& ext, const std::string& entry = "");

/// Unique crucial J, J contains (R:T), J = (R:T), and some maximal ideal of T contracts to J.
VerdictReport verify_crucial_ideal(const Extension& ext, const std::string& entry = "",
                                   const BuildOptions& opts = {});

VerdictReport verify_conductor_prime_catalog(const RingPtr& r, const VerifyOptions& opts = {});
VerdictReport verify_crucial_ideal_catalog(const RingPtr& r, const VerifyOptions& opts = {});

/// Both catalog verifiers over one construction of the catalog: {conductor, crucial}.
std::vector<VerdictReport> verify_extension_catalog(const RingPtr& r, const VerifyOptions& opts = {});

// Oracles ---------------------------------------------------------------------

/// Fixed-point closure under +, x and negation over all pairs. Slow, simple,
/// and independent of the power-span closure.
Mask naive_closure(const FiniteRing& t, const Mask& seed);

/// No proper intermediate ring arises as the naive closure of the base with
/// at most two outside elements. Requires |T| <= 16.
bool exhaustive_minimality_oracle(const FiniteRing& t, const Mask& base);

/// On every extension over R with |T| <= 16, the adjunction decision agrees
/// with the exhaustive oracle, and minimal ones have two-node lattices.
VerdictReport verify_minimality_oracle(const RingPtr& r, const VerifyOptions& opts = {});

/// Axioms, profile laws, localizations, local decomposition, tq(R) = R and
/// the maximal-spectrum cross-checks on R.
VerdictReport verify_infrastructure(const RingPtr& r, const VerifyOptions& opts = {});

}  // namespace finring
