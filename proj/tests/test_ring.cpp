#include <gtest/gtest.h>

#include <random>

#include "finring/ring.hpp"

using namespace finring;

namespace {

FiniteRing::Table zmod_table(std::size_t n, bool mul) {
  FiniteRing::Table t(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[a][b] = static_cast<Elem>(mul ? (a * b) % n : (a + b) % n);
  return t;
}

std::size_t additive_order_of_one(const FiniteRing& r) { return element_profile(r, r.one()).additive_order; }

}  // namespace

TEST(Zmod, SmallestField) {
  auto r = zmod(2);
  EXPECT_EQ(r->order(), 2u);
  EXPECT_EQ(r->one(), 1u);
  EXPECT_EQ(r->zero(), 0u);
}

TEST(Zmod, UnitsOfZ6) { EXPECT_EQ(units(*zmod(6)), (std::vector<Elem>{1, 5})); }

TEST(Zmod, RejectsZeroRing) {
  EXPECT_THROW(zmod(1), PreconditionError);
  EXPECT_THROW(zmod(0), PreconditionError);
}

TEST(Zmod, CapIsEnforced) {
  BuildOptions opts;
  opts.max_order = 10;
  EXPECT_THROW(zmod(11, opts), CapExceeded);
  EXPECT_NO_THROW(zmod(10, opts));
}

TEST(GaloisField, PrimeFieldMatchesZmod) { EXPECT_TRUE(galois_field(2, 1)->same_tables(*zmod(2))); }

TEST(GaloisField, F4EveryNonzeroIsUnit) {
  auto f = galois_field(2, 2);
  EXPECT_EQ(f->order(), 4u);
  EXPECT_EQ(units(*f).size(), 3u);
}

TEST(GaloisField, F9HasCharacteristicThree) {
  auto f = galois_field(3, 2);
  EXPECT_EQ(f->order(), 9u);
  EXPECT_EQ(additive_order_of_one(*f), 3u);
  EXPECT_EQ(units(*f).size(), 8u);
}

TEST(GaloisField, ModulusIsLeastIrreducible) {
  // Coefficients c_0..c_k, compared from c_0: x^2+x+1, x^2+1, x^3+x^2+1.
  EXPECT_EQ(gf_modulus(2, 2), (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(gf_modulus(3, 2), (std::vector<std::size_t>{1, 0, 1}));
  EXPECT_EQ(gf_modulus(2, 3), (std::vector<std::size_t>{1, 0, 1, 1}));
}

TEST(GaloisField, RejectsNonPrimeCharacteristic) { EXPECT_THROW(galois_field(4, 1), PreconditionError); }

TEST(GaloisField, AllFieldsInTheCatalogAreFields) {
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4}}) {
    auto f = galois_field(p, k);
    EXPECT_TRUE(ring_predicates(f).is_field) << p << "^" << k;
    EXPECT_EQ(additive_order_of_one(*f), static_cast<std::size_t>(p));
  }
}

TEST(Product, Z2xZ3HasSixElementsAndTwoUnits) {
  auto p = product(zmod(2), zmod(3));
  EXPECT_EQ(p.ring->order(), 6u);
  EXPECT_EQ(units(*p.ring).size(), 2u);
  EXPECT_EQ(additive_order_of_one(*p.ring), 6u);
}

TEST(Product, Z2xZ2HasFourIdempotents) { EXPECT_EQ(idempotents(*product(zmod(2), zmod(2)).ring).size(), 4u); }

TEST(Product, OneIsPairOfOnes) {
  auto r = zmod(5);
  auto p = product(r, r);
  EXPECT_EQ(p.ring->one(), p.encode(1, 1));
  EXPECT_EQ(p.ring->zero(), p.encode(0, 0));
  EXPECT_EQ(p.proj_left(p.encode(3, 4)), 3u);
  EXPECT_EQ(p.proj_right(p.encode(3, 4)), 4u);
}

TEST(FromTables, AcceptsZ4) {
  auto r = FiniteRing::from_tables(zmod_table(4, false), zmod_table(4, true));
  EXPECT_TRUE(r.same_tables(*zmod(4)));
}

TEST(FromTables, NonCommutativeMultiplicationHasWitness) {
  auto mul = zmod_table(4, true);
  mul[1][2] = 3;
  try {
    FiniteRing::from_tables(zmod_table(4, false), mul);
    FAIL() << "expected AxiomViolation";
  } catch (const AxiomViolation& e) {
    EXPECT_EQ(e.axiom(), "multiplication commutative");
    EXPECT_EQ(e.witness(), (std::vector<Elem>{1, 2}));
  }
}

TEST(FromTables, DistributivityViolationHasTripleWitness) {
  // Commutative, associative, unital, but not distributive.
  auto mul = zmod_table(4, true);
  mul[2][2] = 2;
  mul[3][3] = 3;
  EXPECT_THROW(FiniteRing::from_tables(zmod_table(4, false), mul), AxiomViolation);
}

TEST(FromTables, DualNumbersOverF2) {
  // F2[x]/(x^2) with index a + 2b for a + bx.
  FiniteRing::Table add(4, std::vector<Elem>(4)), mul(4, std::vector<Elem>(4));
  for (Elem u = 0; u < 4; ++u)
    for (Elem v = 0; v < 4; ++v) {
      add[u][v] = u ^ v;
      const Elem a = (u & 1) & (v & 1);
      const Elem b = (((u & 1) & (v >> 1)) ^ ((u >> 1) & (v & 1)));
      mul[u][v] = a | (b << 1);
    }
  auto r = std::make_shared<const FiniteRing>(FiniteRing::from_tables(add, mul));
  std::size_t nilpotent = 0;
  for (Elem x = 0; x < 4; ++x) nilpotent += x != r->zero() && element_profile(*r, x).is_nilpotent;
  EXPECT_EQ(nilpotent, 1u);
  EXPECT_TRUE(ring_predicates(r).is_local);
  EXPECT_FALSE(ring_predicates(r).is_reduced);
}

TEST(FromTables, ZeroRingRejected) {
  FiniteRing::Table t(1, std::vector<Elem>(1, 0));
  EXPECT_THROW(FiniteRing::from_tables(t, t), Error);
}

TEST(FromTables, RaggedTableRejected) {
  auto add = zmod_table(3, false);
  add[1].pop_back();
  EXPECT_THROW(FiniteRing::from_tables(add, zmod_table(3, true)), Error);
}

TEST(FromTables, SampledAxiomCheckAboveSixtyFour) {
  // Order 81 is checked by sampling; a valid ring still passes.
  EXPECT_NO_THROW(galois_field(3, 4));
}

TEST(ElementProfile, Examples) {
  auto z6 = zmod(6);
  auto p = element_profile(*z6, 5);
  EXPECT_TRUE(p.is_unit);
  EXPECT_TRUE(p.is_regular);

  auto z4 = zmod(4);
  auto q = element_profile(*z4, 2);
  EXPECT_TRUE(q.is_nilpotent);
  EXPECT_EQ(q.nilpotency_index, 2u);
  EXPECT_TRUE(q.is_zero_divisor);
  EXPECT_FALSE(q.is_unit);

  auto one = element_profile(*z6, z6->one());
  EXPECT_TRUE(one.is_unit && one.is_idempotent && one.is_regular);
}

TEST(RingPredicates, Examples) {
  auto z6 = ring_predicates(zmod(6));
  EXPECT_FALSE(z6.is_field);
  EXPECT_TRUE(z6.is_reduced);
  EXPECT_TRUE(z6.is_vnr);
  EXPECT_FALSE(z6.is_local);

  auto z4 = ring_predicates(zmod(4));
  EXPECT_FALSE(z4.is_field);
  EXPECT_FALSE(z4.is_reduced);
  EXPECT_FALSE(z4.is_vnr);
  EXPECT_TRUE(z4.is_local);

  auto f4 = ring_predicates(galois_field(2, 2));
  EXPECT_TRUE(f4.is_field && f4.is_reduced && f4.is_vnr && f4.is_local);
}

TEST(EventualIdempotent, Examples) {
  EXPECT_EQ(eventual_idempotent(*zmod(6), 3), 3u);
  EXPECT_EQ(eventual_idempotent(*zmod(4), 2), 0u);
  auto z12 = zmod(12);
  for (Elem u : units(*z12)) EXPECT_EQ(eventual_idempotent(*z12, u), z12->one());
}

TEST(Properties, ProfileLawsOnRandomProducts) {
  std::mt19937_64 rng(7);
  const std::vector<std::size_t> sizes{2, 3, 4, 5, 6, 8, 9};
  for (int trial = 0; trial < 20; ++trial) {
    auto a = zmod(sizes[rng() % sizes.size()]);
    auto b = zmod(sizes[rng() % sizes.size()]);
    auto r = product(a, b).ring;
    const auto preds = ring_predicates(r);
    if (preds.is_field) EXPECT_TRUE(preds.is_vnr);
    if (preds.is_vnr) EXPECT_TRUE(preds.is_reduced);
    for (Elem x = 0; x < r->order(); ++x) {
      const auto p = element_profile(*r, x);
      EXPECT_EQ(p.is_regular, p.is_unit);
      EXPECT_NE(p.is_unit, p.is_zero_divisor || x == r->zero());
      const Elem e = eventual_idempotent(*r, x);
      EXPECT_EQ(r->mul(e, e), e);
      EXPECT_EQ(r->times(p.additive_order, x), r->zero());
    }
  }
}

TEST(RingHom, RejectsNonUnitalMap) {
  auto r = zmod(6);
  auto p = product(r, r);
  std::vector<Elem> images(6);
  for (Elem x = 0; x < 6; ++x) images[x] = p.encode(x, 0);
  EXPECT_THROW(make_hom(r, p.ring, images), HomViolation);
}

TEST(Mask, OrderIsLexicographicOnMemberLists) {
  EXPECT_LT(Mask::of(6, {0, 2, 4}), Mask::of(6, {0, 3}));
  EXPECT_LT(Mask::of(6, {0, 2}), Mask::of(6, {0, 2, 4}));
  EXPECT_FALSE(Mask::of(6, {0, 3}) < Mask::of(6, {0, 2, 4}));
  EXPECT_FALSE(Mask::of(6, {0, 3}) < Mask::of(6, {0, 3}));
  EXPECT_LT(Mask::of(6, {0, 1, 5}), Mask::of(6, {0, 2}));
}
