#include <gtest/gtest.h>

#include "finring/ideal.hpp"

using namespace finring;

namespace {
std::vector<Elem> members(const Ideal& i) { return i.members.members(); }
}  // namespace

TEST(IdealGenerated, Examples) {
  auto z6 = zmod(6);
  EXPECT_EQ(members(ideal_generated(z6, {2})), (std::vector<Elem>{0, 2, 4}));
  EXPECT_EQ(members(ideal_generated(z6, {})), (std::vector<Elem>{0}));
  EXPECT_EQ(ideal_generated(z6, {5}).size(), 6u);
  EXPECT_EQ(members(ideal_generated(z6, {2, 3})).size(), 6u);
}

TEST(IdealGenerated, ProductIdealsAreIdeals) {
  auto p = product(zmod(4), zmod(6));
  for (Elem x = 0; x < p.ring->order(); ++x) {
    const Ideal i = ideal_generated(p.ring, {x});
    EXPECT_TRUE(is_ideal_mask(*p.ring, i.members));
    EXPECT_TRUE(i.contains(x));
  }
}

TEST(IdealFromMask, RejectsNonIdeal) {
  auto z6 = zmod(6);
  EXPECT_THROW(ideal_from_mask(z6, Mask::of(6, {0, 2})), PreconditionError);
  auto i = ideal_from_mask(z6, Mask::of(6, {0, 2, 4}));
  EXPECT_EQ(i.generators, (std::vector<Elem>{2}));
}

TEST(Quotient, Examples) {
  auto z6 = zmod(6);
  auto q = quotient(ideal_generated(z6, {2}));
  EXPECT_EQ(q.ring->order(), 2u);
  EXPECT_TRUE(ring_predicates(q.ring).is_field);

  auto same = quotient(ideal_generated(z6, {}));
  EXPECT_EQ(same.ring->order(), 6u);
  EXPECT_TRUE(same.surjection.is_injective());
  EXPECT_TRUE(same.ring->same_tables(*z6));

  auto z4 = zmod(4);
  auto q4 = quotient(ideal_generated(z4, {2}));
  EXPECT_EQ(q4.ring->order(), 2u);
  EXPECT_EQ(q4.representatives, (std::vector<Elem>{0, 1}));
  EXPECT_EQ(q4.surjection(3), 1u);
}

TEST(Quotient, ByWholeRingThrows) { EXPECT_THROW(quotient(ideal_generated(zmod(6), {1})), PreconditionError); }

TEST(Maximality, Examples) {
  auto z6 = zmod(6);
  EXPECT_TRUE(is_maximal(ideal_generated(z6, {2})));
  EXPECT_TRUE(is_prime(ideal_generated(z6, {2})));
  EXPECT_FALSE(is_prime(ideal_generated(z6, {0})));
  EXPECT_FALSE(is_maximal(ideal_generated(z6, {1})));
  EXPECT_TRUE(is_maximal(ideal_generated(zmod(4), {2})));
}

TEST(Maximality, OracleAgreesOnPrincipalIdeals) {
  for (std::size_t n : {4, 6, 8, 9, 10, 12}) {
    auto r = zmod(n);
    for (Elem x = 0; x < n; ++x) {
      const Ideal i = ideal_generated(r, {x});
      EXPECT_EQ(is_maximal(i), is_maximal_by_generation(i)) << "Z/" << n << " <" << x << ">";
      EXPECT_EQ(is_maximal(i), is_prime(i)) << "Z/" << n << " <" << x << ">";
    }
  }
}

TEST(MaxSpectrum, Examples) {
  auto s6 = max_spectrum(zmod(6));
  ASSERT_EQ(s6.size(), 2u);
  EXPECT_EQ(members(s6[0]), (std::vector<Elem>{0, 2, 4}));
  EXPECT_EQ(members(s6[1]), (std::vector<Elem>{0, 3}));

  auto sf = max_spectrum(galois_field(2, 2));
  ASSERT_EQ(sf.size(), 1u);
  EXPECT_EQ(members(sf[0]), (std::vector<Elem>{0}));

  auto z12 = zmod(12);
  auto s12 = max_spectrum(z12);
  ASSERT_EQ(s12.size(), 2u);
  EXPECT_EQ(s12[0], ideal_generated(z12, {2}));
  EXPECT_EQ(s12[1], ideal_generated(z12, {3}));
}

TEST(MaxSpectrum, ProductOfFieldsHasOneIdealPerFactor) {
  auto p = product(product(zmod(2), zmod(3)).ring, galois_field(2, 2));
  EXPECT_EQ(max_spectrum(p.ring).size(), 3u);
  for (const Ideal& m : max_spectrum(p.ring)) EXPECT_TRUE(is_maximal_by_generation(m));
}

TEST(Pullback, AlongQuotient) {
  auto z12 = zmod(12);
  auto q = quotient(ideal_generated(z12, {4}));  // Z/4
  auto back = pullback(q.surjection, Mask::of(q.ring->order(), {0, 2}));
  EXPECT_EQ(back, ideal_generated(z12, {2}));
}

TEST(Idealization, DualNumbers) {
  auto z2 = zmod(2);
  auto id = idealization(module_r(z2));
  EXPECT_EQ(id.ring->order(), 4u);
  const Elem x = id.encode(0, id.coset_of[1]);
  EXPECT_EQ(id.ring->mul(x, x), id.ring->zero());
  EXPECT_FALSE(ring_predicates(id.ring).is_reduced);
  for (Elem r = 0; r < 2; ++r) EXPECT_EQ(id.embed(r), id.encode(r, id.coset_of[0]));
}

TEST(Idealization, Z4OverResidueField) {
  auto z4 = zmod(4);
  auto id = idealization(CyclicModuleSpec{z4, ideal_generated(z4, {2})});
  EXPECT_EQ(id.ring->order(), 8u);
  EXPECT_EQ(id.module_size, 2u);
  EXPECT_TRUE(ring_predicates(id.ring).is_local);
}

TEST(Idealization, MultiplicationRule) {
  auto z6 = zmod(6);
  auto id = idealization(module_r(z6));
  const FiniteRing& t = *id.ring;
  for (Elem r1 = 0; r1 < 6; ++r1)
    for (Elem e1 = 0; e1 < 6; ++e1)
      for (Elem r2 = 0; r2 < 6; ++r2)
        for (Elem e2 = 0; e2 < 6; ++e2) {
          const Elem x = id.encode(r1, id.coset_of[e1]), y = id.encode(r2, id.coset_of[e2]);
          const Elem expect = id.encode((r1 * r2) % 6, id.coset_of[(r1 * e2 + r2 * e1) % 6]);
          ASSERT_EQ(t.mul(x, y), expect);
        }
}

TEST(Idealization, CapEnforced) {
  BuildOptions opts;
  opts.max_order = 30;
  EXPECT_THROW(idealization(module_r(zmod(6)), opts), CapExceeded);
}
