#include <gtest/gtest.h>

#include "finring/local.hpp"

using namespace finring;

namespace {

Extension z6_into_z6_x_z2() {
  auto r = zmod(6);
  auto p = product(r, zmod(2));
  std::vector<Elem> images(6);
  for (Elem x = 0; x < 6; ++x) images[x] = p.encode(x, x % 2);
  return make_extension(make_hom(r, p.ring, images));
}

}  // namespace

TEST(Corner, Z6AtThree) {
  auto c = corner_ring(zmod(6), 3);
  EXPECT_EQ(c.ring->order(), 2u);
  EXPECT_EQ(c.members, (std::vector<Elem>{0, 3}));
  EXPECT_EQ(c.hom(5), c.ring->one());
}

TEST(Localize, Examples) {
  auto z6 = zmod(6);
  const Elem three[] = {3};
  auto l = localize(z6, three);
  EXPECT_EQ(l.idempotent, 3u);
  EXPECT_EQ(l.ring()->order(), 2u);
  EXPECT_TRUE(ring_predicates(l.ring()).is_field);

  const Elem one[] = {1};
  auto same = localize(z6, one);
  EXPECT_EQ(same.idempotent, 1u);
  EXPECT_TRUE(same.ring()->same_tables(*z6));

  const Elem two[] = {2};
  EXPECT_THROW(localize(zmod(4), two), DegenerateLocalization);
}

TEST(LocalizeAtPrime, Examples) {
  auto z6 = zmod(6);
  auto at2 = localize_at_prime(z6, ideal_generated(z6, {2}));
  EXPECT_EQ(at2.ring()->order(), 2u);
  EXPECT_EQ(at2.idempotent, 3u);

  auto z4 = zmod(4);
  auto l4 = localize_at_prime(z4, ideal_generated(z4, {2}));
  EXPECT_EQ(l4.idempotent, 1u);
  EXPECT_EQ(l4.ring()->order(), 4u);

  auto f = galois_field(3, 2);
  EXPECT_EQ(localize_at_prime(f, ideal_generated(f, {})).ring()->order(), 9u);
}

TEST(LocalizeAtPrime, EveryLocalizationIsLocal) {
  for (std::size_t n : {6, 10, 12}) {
    auto r = product(zmod(n), zmod(4)).ring;
    for (const Ideal& m : max_spectrum(r)) EXPECT_TRUE(ring_predicates(localize_at_prime(r, m).ring()).is_local);
  }
}

TEST(LocalDecomposition, Examples) {
  auto d6 = local_decomposition(zmod(6));
  ASSERT_EQ(d6.factors.size(), 2u);
  std::vector<Elem> idem{d6.factors[0].idempotent, d6.factors[1].idempotent};
  std::sort(idem.begin(), idem.end());
  EXPECT_EQ(idem, (std::vector<Elem>{3, 4}));
  EXPECT_TRUE(d6.reassembly.is_injective() && d6.reassembly.is_surjective());

  auto d9 = local_decomposition(zmod(9));
  ASSERT_EQ(d9.factors.size(), 1u);
  EXPECT_EQ(d9.factors[0].idempotent, 1u);

  auto d22 = local_decomposition(product(zmod(2), zmod(2)).ring);
  ASSERT_EQ(d22.factors.size(), 2u);
  EXPECT_EQ(d22.factors[0].corner.ring->order(), 2u);
  EXPECT_EQ(d22.factors[1].corner.ring->order(), 2u);
}

TEST(LocalDecomposition, FactorOrdersMultiplyToRingOrder) {
  auto r = product(product(zmod(12), zmod(5)).ring, zmod(2)).ring;
  auto d = local_decomposition(r);
  std::size_t total = 1;
  for (const auto& f : d.factors) total *= f.corner.ring->order();
  EXPECT_EQ(total, r->order());
  EXPECT_EQ(d.factors.size(), max_spectrum(r).size());
}

TEST(CrucialIdeal, Z6IntoZ6xZ2) {
  auto ext = z6_into_z6_x_z2();
  auto report = crucial_maximal_ideal(ext);
  auto z6 = ext.small;
  EXPECT_EQ(report.crucial, ideal_generated(z6, {2}));
  ASSERT_EQ(report.table.size(), 2u);
  for (const auto& row : report.table)
    EXPECT_EQ(row.isomorphism, !(row.prime == ideal_generated(z6, {2})));
}

TEST(CrucialIdeal, LocalBase) {
  auto r = zmod(2);
  auto p = product(r, r);
  auto ext = make_extension(make_hom(r, p.ring, {p.encode(0, 0), p.encode(1, 1)}));
  EXPECT_TRUE(crucial_maximal_ideal(ext).crucial.is_zero());

  auto dual = idealization_extension(module_r(r)).ext;
  EXPECT_TRUE(crucial_maximal_ideal(dual).crucial.is_zero());
}

TEST(CrucialIdeal, NonMinimalRejected) {
  auto r = zmod(6);
  auto p = product(r, r);
  std::vector<Elem> diag(6);
  for (Elem x = 0; x < 6; ++x) diag[x] = p.encode(x, x);
  auto ext = make_extension(make_hom(r, p.ring, diag));
  EXPECT_THROW(crucial_maximal_ideal(ext), PreconditionError);
}

TEST(TotalQuotient, IsTheRingItself) {
  for (auto r : {zmod(6), zmod(4), galois_field(2, 3), product(zmod(4), zmod(3)).ring}) {
    auto tq = total_quotient_ring(r);
    EXPECT_EQ(tq.ring->order(), r->order());
    EXPECT_TRUE(tq.hom.is_injective() && tq.hom.is_surjective());
  }
}
