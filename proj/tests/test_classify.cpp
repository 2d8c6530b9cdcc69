#include <gtest/gtest.h>

#include "nearring/catalog.hpp"
#include "nearring/classify.hpp"
#include "oracle.hpp"

using namespace nearring;

TEST(Classify, M0Z3PrintedValues) {
  Analysis A(builtin("m0_z3"));
  // Units f6, f8; idempotents f1, f3, f4, f5, f6, f9.
  EXPECT_EQ(A.units().members(), (std::vector<Elem>{5, 7}));
  EXPECT_EQ(A.idempotents(), (std::vector<Elem>{0, 2, 3, 4, 5, 8}));
  for (Elem a = 0; a < 9; ++a) EXPECT_TRUE(A.profile(a).is_unit_regular()) << a;
  // f2 and f7 are unit-regular using f8.
  EXPECT_EQ(A.ring().mul(1, 7, 1), 1u);
  EXPECT_EQ(A.ring().mul(6, 7, 6), 6u);
  EXPECT_FALSE(A.morphic(4).is_morphic());  // f5
  EXPECT_TRUE(A.structure().is_unit_regular());
  EXPECT_FALSE(A.structure().is_left_morphic());
}

TEST(Classify, KleinRingEveryElementMorphic) {
  Analysis A(builtin("klein4_ring"));
  EXPECT_TRUE(A.structure().is_left_morphic());
  EXPECT_EQ(A.morphic(1).witness, 3u);  // a with witness c
  EXPECT_EQ(A.morphic(3).witness, 1u);
  EXPECT_TRUE(A.structure().boolean.holds);
  EXPECT_TRUE(A.structure().left_strongly_regular.holds);
}

TEST(Classify, MatrixRing) {
  Analysis A(builtin("mat2_f2"));
  const auto& s = A.structure();
  EXPECT_TRUE(s.regular.holds);
  EXPECT_TRUE(s.is_left_morphic());
  EXPECT_FALSE(s.left_strongly_regular.holds);
  EXPECT_FALSE(s.reduced.holds);
  ASSERT_TRUE(s.left_duo);
  EXPECT_FALSE(s.left_duo->holds);
  EXPECT_EQ(A.profile(4).nilpotency_index, 2u);  // [01;00]
  EXPECT_EQ(A.units().size(), 6u);               // GL2(F2)
}

TEST(Classify, ProfilesMatchOracle) {
  for (const auto& name : {"klein4_ring", "m0_z3", "mat2_f2", "ext_f2_f2", "z2_x_z4", "klein4_x_f2",
                           "zn_ring(12)", "m0_z3_x_f2"}) {
    auto N = builtin(name);
    oracle::Tables T(N);
    Analysis A(N);
    for (Elem a = 0; a < N.order(); ++a) {
      const auto& p = A.profile(a);
      EXPECT_EQ(p.is_unit(), T.is_unit(a)) << name << " " << a;
      EXPECT_EQ(p.is_regular(), T.regular(a)) << name << " " << a;
      EXPECT_EQ(p.is_unit_regular(), T.unit_regular(a)) << name << " " << a;
      EXPECT_EQ(p.is_lsr(), T.lsr(a)) << name << " " << a;
      EXPECT_EQ(p.is_left_morphic(), T.morphic(a)) << name << " " << a;
      if (p.is_left_morphic()) EXPECT_EQ(p.morphic->witness, *T.morphic_witness(a));
      EXPECT_EQ(p.left_orbit_size, T.orbit(a).size());
      EXPECT_EQ(p.left_ann_size, T.ann(a).size());
    }
  }
}

TEST(Classify, SerialAndParallelAnalysesAgree) {
  for (const auto& N : default_corpus()) {
    Analysis s(N, Exec::serial), p(N, Exec::parallel);
    for (Elem a = 0; a < N.order(); ++a) {
      EXPECT_EQ(s.profile(a).regular, p.profile(a).regular);
      EXPECT_EQ(s.profile(a).unit_regular, p.profile(a).unit_regular);
      EXPECT_EQ(s.profile(a).is_left_morphic(), p.profile(a).is_left_morphic());
    }
    EXPECT_EQ(s.structure().has_ifp.witness, p.structure().has_ifp.witness) << N.name();
    EXPECT_EQ(s.structure().weakly_divisible.witness, p.structure().weakly_divisible.witness);
    EXPECT_EQ(s.structure().idempotents_central.witness, p.structure().idempotents_central.witness);
  }
}

TEST(Classify, FirstWitnessesInScanOrder) {
  // The first IFP violation in lexicographic (a, b, n) order on M0(Z3) is
  // f2 f2 = 0 with f2 f7 f2 != 0.
  Analysis A(builtin("m0_z3"));
  EXPECT_EQ(A.structure().has_ifp.witness, (std::vector<Elem>{1, 1, 6}));
  // Z6: 2 and 3 do not divide each other.
  Analysis Z6(builtin("zn_ring(6)"));
  EXPECT_EQ(Z6.structure().weakly_divisible.witness, (std::vector<Elem>{2, 3}));
  Analysis Z4(builtin("zn_ring(4)"));
  EXPECT_TRUE(Z4.structure().weakly_divisible.holds);
}

TEST(Classify, CrossCheckedMorphicAgrees) {
  for (const auto& name : {"klein4_ring", "m0_z2", "ext_f2_f2", "z2_x_z4", "zn_ring(8)"}) {
    auto N = builtin(name);
    for (Elem a = 0; a < N.order(); ++a) {
      auto v = is_left_morphic(N, a, true);
      EXPECT_TRUE(v.cross_checked);
    }
  }
}

TEST(Classify, NonUnitalRefusesMorphic) {
  // Z2 with zero multiplication has no unity.
  Table add(2, 2), mul(2, 2);
  add(0, 1) = add(1, 0) = 1;
  auto N = std::get<NearRing>(validate_nearring(add, mul));
  ASSERT_FALSE(N.is_unital());
  Analysis A(N);
  EXPECT_THROW(A.morphic(0), PreconditionError);
  EXPECT_THROW(A.units(), PreconditionError);
  EXPECT_THROW(is_left_morphic(N, 0), PreconditionError);
  EXPECT_FALSE(A.structure().left_morphic);
  EXPECT_TRUE(A.structure().reduced.holds == false);  // 1 * 1 = 0
}

TEST(Classify, OrderCap) {
  Caps caps;
  caps.classify = 8;
  EXPECT_THROW(Analysis(builtin("mat2_f2"), Exec::parallel, caps), CapExceeded);
}

TEST(Classify, LeftDuoAbsentAboveEnumerationCap) {
  Caps caps;
  caps.ideal_enumeration = 8;
  Analysis A(builtin("mat2_f2"), Exec::parallel, caps);
  EXPECT_FALSE(A.structure().left_duo);
}
