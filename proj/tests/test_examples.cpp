// Worked examples: small instances whose values are known by hand or by a
// separate brute-force scan.

#include <gtest/gtest.h>

#include "nearring/build.hpp"
#include "nearring/catalog.hpp"
#include "nearring/classify.hpp"
#include "oracle.hpp"

using namespace nearring;

TEST(Examples, TrivialAndKleinGroups) {
  Table one(1, 1);
  EXPECT_TRUE(std::holds_alternative<FiniteGroup>(validate_group(one)));
  const auto K = builtin("klein4_ring");
  const auto& G = K.group();
  for (Elem i = 0; i < 4; ++i) EXPECT_EQ(G.neg(i), i);
  Table bad = G.add_table();
  bad(1, 2) = 1;
  auto v = validate_group(bad);
  ASSERT_TRUE(std::holds_alternative<AxiomViolation>(v));
  const Law law = std::get<AxiomViolation>(v).law;
  EXPECT_TRUE(law == Law::add_inverse || law == Law::add_assoc || law == Law::add_identity);
}

TEST(Examples, M0Sizes) {
  EXPECT_EQ(build_M0(cyclic_group(2)).order(), 2u);
  EXPECT_EQ(build_M0(cyclic_group(3)).order(), 9u);
  const auto K = builtin("klein4_ring");
  EXPECT_EQ(build_M0(K.group()).order(), 64u);
  // M0(Z2) is the field with two elements.
  EXPECT_TRUE(build_M0(cyclic_group(2)).same_tables(builtin("zn_ring(2)")));
}

TEST(Examples, ProductUnityAndSingleFactor) {
  auto K = builtin("klein4_ring");
  auto P = builtin("klein4_x_f2");
  ASSERT_EQ(P.order(), 8u);
  EXPECT_EQ(P.one(), std::optional<Elem>(product_index({4, 2}, {2, 1})));  // (b, 1)
  EXPECT_TRUE(build_product({K}).same_tables(K));
}

TEST(Examples, ExtensionNotZeroSymmetricWitness) {
  auto N = builtin("ext_f2_f2");
  // <1,1> <0,0> = <0,1>.
  EXPECT_EQ(N.mul(3, 0), 1u);
}

TEST(Examples, ExtensionRejectsNonRingBase) {
  auto R = builtin("m0_z3");
  auto M = regular_representation(R);
  EXPECT_THROW(build_extension(R, M), Error);
}

TEST(Examples, AnnihilatorsAndOrbits) {
  auto K = builtin("klein4_ring");
  EXPECT_EQ(annihilator(K, Side::left, Subset(4, {3})), Subset(4, {0, 1}));
  EXPECT_EQ(annihilator(K, Side::left, Subset(4, {0})), Subset::full(4));
  auto Z = builtin("m0_z3");
  EXPECT_EQ(annihilator(Z, Side::left, Subset(9, {5})), Subset(9, {0}));
  oracle::Tables T(Z);
  EXPECT_EQ(oracle::to_set(orbit(Z, Side::left, 4).members()), T.orbit(4));
  for (const auto& N : default_corpus())
    if (N.is_unital()) EXPECT_EQ(orbit(N, Side::left, N.unity()), Subset::full(N.order()));
}

TEST(Examples, F5OrbitVerdictAndNoIsomorphism) {
  auto N = builtin("m0_z3");
  auto R = regular_representation(N);
  const Elem f5 = 4;
  Subset Nf5 = orbit(N, Side::left, f5);
  auto verdict = is_N_ideal(N, R, Nf5);
  auto m = is_left_morphic(N, f5, true);
  EXPECT_FALSE(m.is_morphic());
  if (verdict.is_ideal()) {
    EXPECT_EQ(m.status, MorphicVerdict::Status::no_witness);
    auto q = quotient_module(N, R, Nf5);
    Elem gen = q.coset_of[N.unity()];
    Subset ann = annihilator(N, Side::left, f5);
    ann.for_each([&](Elem b) {
      auto h = hom_from_cyclic_generator(N, q.module, gen, R, b);
      if (!h.well_defined) return;
      EXPECT_FALSE(is_module_isomorphism(N, q.module, R, ann, h.map)) << "b=" << b;
    });
  } else {
    EXPECT_EQ(m.status, MorphicVerdict::Status::na_not_ideal);
  }
}

TEST(Examples, IdealsOfSmallRings) {
  auto K = builtin("klein4_ring");
  auto e = enumerate_left_ideals(K);
  auto has = [&](const Subset& s) {
    return std::find(e.ideals.begin(), e.ideals.end(), s) != e.ideals.end();
  };
  EXPECT_TRUE(has(Subset(4, {0})));
  EXPECT_TRUE(has(Subset(4, {0, 1})));
  EXPECT_TRUE(has(Subset(4, {0, 3})));
  EXPECT_TRUE(has(Subset::full(4)));
  for (Elem a = 0; a < 4; ++a)
    EXPECT_EQ(is_ideal(K, annihilator(K, Side::left, a)).kind, IdealKind::two_sided_ideal);
  EXPECT_EQ(enumerate_left_ideals(builtin("zn_ring(2)")).ideals.size(), 2u);
  EXPECT_EQ(is_ideal(K, Subset(4, {0})).kind, IdealKind::two_sided_ideal);
}

TEST(Examples, AnnihilatorIsAlwaysAnIdeal) {
  for (const auto& N : default_corpus()) {
    auto R = regular_representation(N);
    for (Elem a = 0; a < N.order(); ++a)
      EXPECT_TRUE(is_N_ideal(N, R, annihilator(N, Side::left, a)).is_ideal()) << N.name();
    EXPECT_TRUE(is_N_ideal(N, R, Subset(N.order(), {0})).is_ideal());
  }
}

TEST(Examples, Quotients) {
  auto K = builtin("klein4_ring");
  auto R = regular_representation(K);
  EXPECT_EQ(quotient_module(K, R, Subset(4, {0})).module.order(), 4u);
  EXPECT_EQ(quotient_module(K, R, Subset::full(4)).module.order(), 1u);
  auto q = quotient_module(K, R, orbit(K, Side::left, 1));
  EXPECT_EQ(q.module.order(), 2u);
  // N/Na -> (0:_l a) sending the coset of 1 to c.
  auto h = hom_from_cyclic_generator(K, q.module, q.coset_of[2], R, 3);
  ASSERT_TRUE(h.well_defined);
  EXPECT_TRUE(is_module_isomorphism(K, q.module, R, Subset(4, {0, 3}), h.map));
  auto zero = hom_from_cyclic_generator(K, q.module, q.coset_of[2], R, 0);
  EXPECT_TRUE(zero.well_defined);
  // N/N against the zero module.
  auto qq = quotient_module(K, R, Subset::full(4));
  EXPECT_TRUE(modules_isomorphic(K, qq.module, R, Subset(4, {0}), IsoMode::automatic));
  EXPECT_TRUE(modules_isomorphic(K, q.module, R, Subset(4, {0, 3}), IsoMode::automatic));
}

TEST(Examples, UnitsOfSmallRings) {
  EXPECT_EQ(units(builtin("klein4_ring")).units, Subset(4, {2}));
  auto F5 = units(builtin("zn_ring(5)"));
  EXPECT_EQ(F5.units, Subset(5, {1, 2, 3, 4}));
  EXPECT_EQ(F5.inverse[2], std::optional<Elem>(3));
}

TEST(Examples, ElementProfiles) {
  auto f5 = element_profile(builtin("m0_z3"), 4);
  EXPECT_TRUE(f5.is_idempotent);
  EXPECT_TRUE(f5.is_unit_regular());
  EXPECT_FALSE(f5.is_left_morphic());
  auto e12 = element_profile(builtin("mat2_f2"), 4);
  EXPECT_EQ(e12.nilpotency_index, 2u);
  EXPECT_FALSE(e12.is_lsr());
  // 0 = 0 1 0 and, zero-symmetric, N0 = (0:_l 1), N1 = (0:_l 0).
  for (const auto& N : default_corpus()) {
    if (!N.flags().zero_symmetric.holds) continue;
    auto z = element_profile(N, 0);
    EXPECT_TRUE(z.is_regular() && z.is_unit_regular() && z.is_left_morphic()) << N.name();
    EXPECT_TRUE(N.mul(0, z.morphic->witness) == 0);
  }
}

TEST(Examples, MorphicWitnesses) {
  Analysis K(builtin("klein4_ring"));
  EXPECT_EQ(K.morphic(1).witness, 3u);  // a -> c
  EXPECT_EQ(K.morphic(2).witness, 0u);  // b -> 0
  // Units are left morphic in every zero-symmetric unital builtin.
  for (const auto& N : default_corpus()) {
    if (!N.flags().zero_symmetric.holds) continue;
    Analysis A(N);
    A.units().for_each([&](Elem u) { EXPECT_TRUE(A.morphic(u).is_morphic()) << N.name(); });
  }
}

TEST(Examples, StructureProfiles) {
  auto k = structure_profile(builtin("klein4_ring"));
  EXPECT_TRUE(k.boolean.holds && k.is_ring.holds && k.reduced.holds && k.is_left_morphic() &&
              k.left_strongly_regular.holds);
  auto m = structure_profile(builtin("m0_z3"));
  EXPECT_TRUE(m.is_unit_regular());
  EXPECT_FALSE(m.is_left_morphic());
  EXPECT_FALSE(m.has_ifp.holds);
  // The triple f3 f4 = 0, f3 f8 f4 != 0 is also an IFP violation.
  auto Z = builtin("m0_z3");
  EXPECT_EQ(Z.mul(2, 3), 0u);
  EXPECT_NE(Z.mul(2, 7, 3), 0u);
  auto mat = structure_profile(builtin("mat2_f2"));
  EXPECT_TRUE(mat.regular.holds && mat.is_left_morphic());
  EXPECT_FALSE(mat.left_strongly_regular.holds);
  ASSERT_TRUE(mat.left_duo);
  EXPECT_FALSE(mat.left_duo->holds);
}
