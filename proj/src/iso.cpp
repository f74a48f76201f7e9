#include "finring/iso.hpp"

#include <algorithm>
#include <tuple>

namespace finring {

namespace {

constexpr Elem kUnset = ~Elem{0};

struct Invariant {
  std::size_t additive_order;
  bool idempotent;
  bool nilpotent;

  friend bool operator==(const Invariant&, const Invariant&) = default;
  friend auto operator<=>(const Invariant& x, const Invariant& y) {
    return std::tie(x.additive_order, x.idempotent, x.nilpotent) <=>
           std::tie(y.additive_order, y.idempotent, y.nilpotent);
  }
};

std::vector<Invariant> invariants(const FiniteRing& r) {
  std::vector<Invariant> out(r.order());
  for (Elem x = 0; x < r.order(); ++x) {
    const ElementProfile p = element_profile(r, x);
    out[x] = Invariant{p.additive_order, p.is_idempotent, p.is_nilpotent};
  }
  return out;
}

class HomSearch {
 public:
  HomSearch(const FiniteRing& a, const FiniteRing& b, bool bijective)
      : a_(a), b_(b), bijective_(bijective), inv_a_(invariants(a)), inv_b_(invariants(b)),
        phi_(a.order(), kUnset), preimage_(b.order(), kUnset) {}

  bool seed(const std::vector<std::pair<Elem, Elem>>& fixed) {
    for (auto [x, y] : fixed)
      if (!assign(x, y)) return false;
    return propagate();
  }

  bool solve() {
    Elem next = kUnset;
    for (Elem x = 0; x < a_.order(); ++x)
      if (phi_[x] == kUnset) {
        next = x;
        break;
      }
    if (next == kUnset) return !bijective_ || a_.order() == b_.order();
    for (Elem y = 0; y < b_.order(); ++y) {
      if (preimage_[y] != kUnset || !(inv_a_[next] == inv_b_[y])) continue;
      const std::size_t mark = trail_.size();
      const std::size_t done = processed_;
      if (assign(next, y) && propagate() && solve()) return true;
      undo(mark);
      processed_ = done;
    }
    return false;
  }

  const std::vector<Elem>& map() const { return phi_; }

 private:
  bool assign(Elem x, Elem y) {
    if (phi_[x] != kUnset) return phi_[x] == y;
    if (preimage_[y] != kUnset) return false;
    if (!(inv_a_[x] == inv_b_[y])) return false;
    phi_[x] = y;
    preimage_[y] = x;
    trail_.push_back(x);
    return true;
  }

  // Every pair of assigned elements forces the images of their sum and product.
  bool propagate() {
    for (; processed_ < trail_.size(); ++processed_) {
      const Elem x = trail_[processed_];
      for (std::size_t j = 0; j <= processed_; ++j) {
        const Elem z = trail_[j];
        if (!assign(a_.add(x, z), b_.add(phi_[x], phi_[z]))) return false;
        if (!assign(a_.mul(x, z), b_.mul(phi_[x], phi_[z]))) return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Elem x = trail_.back();
      trail_.pop_back();
      preimage_[phi_[x]] = kUnset;
      phi_[x] = kUnset;
    }
  }

  const FiniteRing& a_;
  const FiniteRing& b_;
  bool bijective_;
  std::vector<Invariant> inv_a_;
  std::vector<Invariant> inv_b_;
  std::vector<Elem> phi_;
  std::vector<Elem> preimage_;
  std::vector<Elem> trail_;
  std::size_t processed_ = 0;
};

}  // namespace

std::optional<std::vector<Elem>> search_injective_hom(const FiniteRing& a, const FiniteRing& b,
                                                      const std::vector<std::pair<Elem, Elem>>& fixed,
                                                      bool bijective) {
  if (a.order() > b.order() || (bijective && a.order() != b.order())) return std::nullopt;
  HomSearch search(a, b, bijective);
  std::vector<std::pair<Elem, Elem>> seeds{{a.zero(), b.zero()}, {a.one(), b.one()}};
  seeds.insert(seeds.end(), fixed.begin(), fixed.end());
  if (!search.seed(seeds) || !search.solve()) return std::nullopt;
  return search.map();
}

std::optional<RingHom> find_embedding(const RingPtr& a, const RingPtr& b) {
  auto images = search_injective_hom(*a, *b, {}, false);
  if (!images) return std::nullopt;
  RingHom h = make_hom(a, b, std::move(*images));
  if (!h.is_injective()) throw InternalError("embedding search returned a non-injective map");
  return h;
}

std::optional<RingHom> algebra_isomorphic(const Extension& a, const Extension& b, std::size_t iso_cap) {
  if (a.big->order() > iso_cap) throw CapExceeded("algebra_isomorphic", a.big->order(), iso_cap);
  if (a.small.get() != b.small.get() && !a.small->same_tables(*b.small))
    throw PreconditionError("algebra isomorphism needs the same small ring on both sides");
  if (a.big->order() != b.big->order()) return std::nullopt;

  auto ia = invariants(*a.big);
  auto ib = invariants(*b.big);
  std::sort(ia.begin(), ia.end());
  std::sort(ib.begin(), ib.end());
  if (ia != ib) return std::nullopt;

  std::vector<std::pair<Elem, Elem>> fixed;
  for (Elem r = 0; r < a.small->order(); ++r) fixed.emplace_back(a.embed(r), b.embed(r));
  auto images = search_injective_hom(*a.big, *b.big, fixed, true);
  if (!images) return std::nullopt;

  RingHom iso = make_hom(a.big, b.big, std::move(*images));
  if (!iso.is_injective() || !iso.is_surjective()) throw InternalError("isomorphism search returned a non-bijection");
  for (Elem r = 0; r < a.small->order(); ++r)
    if (iso(a.embed(r)) != b.embed(r)) throw InternalError("isomorphism does not commute with the embeddings");
  return iso;
}

}  // namespace finring
