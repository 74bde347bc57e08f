#include <random>

#include <gtest/gtest.h>

#include "fatpoints/degeneration.hpp"
#include "fatpoints/interpolation.hpp"
#include "fatpoints/system_syntax.hpp"

using namespace fatpoints;

namespace {

Integer random_even(std::mt19937_64& rng, long lo, long hi)
{
   return Integer(2 * (lo / 2 + static_cast<long>(rng() % static_cast<unsigned long>((hi - lo) / 2 + 1))));
}

}  // namespace

TEST(Invariants, Examples)
{
   EXPECT_EQ(invariants(6, 2), (Invariants{0, 2}));
   EXPECT_EQ(invariants(3162, 1000), (Invariants{162, 28}));
   for (int m = -5; m < 20; ++m) EXPECT_EQ(invariants(3 * m, m), (Invariants{0, m}));
}

TEST(NormalizeTwist, ClampThenDiagonal)
{
   const auto a = normalize_twist({5, 1, 2});
   EXPECT_EQ(a.clamped, (TwistSpec{4, 0, 2}));
   EXPECT_EQ(a.normalized, (TwistSpec{2, 2, 2}));
   ASSERT_EQ(a.log.size(), 3u);
   EXPECT_EQ(a.log[1], a.clamped);

   const auto b = normalize_twist({3, 1, 2});
   EXPECT_EQ(b.clamped, (TwistSpec{3, 1, 2}));
   EXPECT_EQ(b.normalized, (TwistSpec{2, 2, 2}));

   EXPECT_EQ(normalize_twist({2, 2, 2}).normalized, (TwistSpec{2, 2, 2}));
   EXPECT_THROW(normalize_twist({1, 0, 2}), InfeasibleTwist);
   EXPECT_THROW(normalize_twist({3, 4, 2}), InfeasibleTwist);
   EXPECT_THROW(normalize_twist({5, -1, 2}), InfeasibleTwist);
}

TEST(NormalizeTwist, NeverImposesMoreConditionsProperty)
{
   for (int h = 0; h <= 8; ++h)
      for (int u = 0; u <= 20; ++u)
         for (int v = 0; v <= 20; ++v) {
            const TwistSpec t{u, v, h};
            if (!t.feasible()) {
               EXPECT_THROW(normalize_twist(t), InfeasibleTwist);
               continue;
            }
            const auto n = normalize_twist(t);
            EXPECT_TRUE(n.clamped.feasible());
            EXPECT_EQ(n.clamped.u + n.clamped.v, 2 * h);
            EXPECT_TRUE(imposes_no_more_conditions(n.clamped, t));
            EXPECT_TRUE(imposes_no_more_conditions(n.normalized, n.clamped));
            EXPECT_TRUE(imposes_no_more_conditions(n.normalized, t));
         }
}

TEST(ExtremalFamily, SmallExample)
{
   const auto f = extremal_family(6, 2, 0);
   EXPECT_FALSE(f.scaled);
   EXPECT_EQ(f.d_Z, 0);
   EXPECT_EQ(f.mu, 0);
   EXPECT_EQ(f.q, 0);
   EXPECT_EQ(f.x, 1);
   EXPECT_EQ(f.d_V, -36);
   EXPECT_EQ(f.nu, -16);
   EXPECT_EQ(f.y, -8);
   EXPECT_EQ(f.z, 1);
   EXPECT_EQ(f.d_T, 2);
}

TEST(ExtremalFamily, MidRangeExample)
{
   const auto f = extremal_family(156, 50, 0);
   const std::array<Integer, 8> expected{60, 36, 18, 16, -252, -112, -56, 7};
   EXPECT_EQ(f.unknowns(), expected);
   EXPECT_EQ(f.d_T, 32);
   EXPECT_EQ(extremal_family(156, 50, 56).d_Z, -276);
}

TEST(ExtremalFamily, RestrictionShapes)
{
   const auto f = extremal_family(156, 50, 0);
   EXPECT_EQ(f.L_Z(), parse_system("L60(36,18^6,[16,16]^2)"));
   EXPECT_EQ(f.L_V(), parse_system("L-252(-112^4,[-56,-56]^2,[7,7]^8)"));
   EXPECT_EQ(f.L_T(), parse_system("L32([16,16]^2)"));
   EXPECT_EQ(f.L_U(), parse_system("L0"));
   EXPECT_EQ(f.L_Y(), parse_system("L0"));
}

TEST(ExtremalFamily, OddInputIsDoubled)
{
   const auto f = extremal_family(3, 1, 5);
   EXPECT_TRUE(f.scaled);
   EXPECT_EQ(f.d, 6);
   EXPECT_EQ(f.m, 2);
   EXPECT_EQ(f.unknowns(), extremal_family(6, 2, 5).unknowns());
}

TEST(ExtremalFamily, ThroughCurveDegreeIsTwiceXProperty)
{
   std::mt19937_64 rng(1);
   for (int t = 0; t < 500; ++t) {
      const auto f = extremal_family(random_even(rng, -4000, 4000), random_even(rng, -4000, 4000),
                                     static_cast<long>(rng() % 2000001) - 1000000);
      EXPECT_EQ(f.d_T, 2 * f.x);
   }
}

TEST(MatchingIdentities, Examples)
{
   const std::array<Integer, 7> zero{};
   EXPECT_EQ(verify_matching_identities(32, 10, 0), zero);
   EXPECT_EQ(verify_matching_identities(156, 50, 13), zero);
}

TEST(MatchingIdentities, ZeroOnRandomInputsProperty)
{
   std::mt19937_64 rng(2);
   const std::array<Integer, 7> zero{};
   for (int t = 0; t < 100; ++t) {
      const auto d = random_even(rng, -100000, 100000), m = random_even(rng, -100000, 100000);
      const Integer a = static_cast<long>(rng() % 2000001) - 1000000;
      EXPECT_EQ(verify_matching_identities(d, m, a), zero);
   }
}

TEST(MatchingIdentities, IndependentSolveRecoversFamily)
{
   std::mt19937_64 rng(3);
   const std::vector<Rational> direction{-6, -3, -2, -1, 9, 4, 2, 0};
   for (int t = 0; t < 30; ++t) {
      const auto d = random_even(rng, 2, 5000), m = random_even(rng, 2, 5000);
      const auto sol = solve_matching_system(d, m);
      EXPECT_EQ(sol.rank, 7u);
      ASSERT_EQ(sol.kernel.size(), 1u);
      EXPECT_EQ(sol.unit_direction, direction);
      // particular + a * direction is the closed-form family at a (free x fixed by a).
      const auto base = extremal_family(d, m, 0).unknowns();
      const Rational shift = sol.particular[3] - Rational(base[3]);
      for (std::size_t i = 0; i < 8; ++i)
         EXPECT_EQ(sol.particular[i], Rational(base[i]) + shift * -direction[i]) << "entry " << i;
      for (const Integer& a : {Integer(-7), Integer(0), Integer(41)}) {
         const auto fam = extremal_family(d, m, a).unknowns();
         for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(Rational(fam[i]) - Rational(base[i]), Rational(a) * direction[i]);
      }
   }
}

TEST(GammaTest, Examples)
{
   auto g = gamma_test(6, 2, 8);
   EXPECT_EQ(g.value, 0);
   EXPECT_TRUE(g.pass);
   g = gamma_test(6, 2, 7);
   EXPECT_EQ(g.value, -4);
   EXPECT_FALSE(g.pass);
   g = gamma_test(3162, 1000, 112);
   EXPECT_EQ(g.value, 0);
   EXPECT_TRUE(g.pass);
   EXPECT_EQ(g.gamma_self_intersection, 0);
   EXPECT_EQ(g.gamma_cross, gamma_transversal_points);
}

TEST(GammaTest, PairingMatchesClosedFormProperty)
{
   std::mt19937_64 rng(4);
   for (int t = 0; t < 1000; ++t) {
      const auto d = random_even(rng, -10000, 10000), m = random_even(rng, -10000, 10000);
      const Integer a = static_cast<long>(rng() % 200001) - 100000;
      const auto g = gamma_test(d, m, a);
      const Integer ell = 19 * m - 6 * d;
      EXPECT_EQ(g.value, 4 * a - 16 * ell);
      EXPECT_EQ(g.pass, a >= 4 * ell);
      EXPECT_EQ(g.gamma_self_intersection, 0);
   }
}

TEST(ZDegreeTest, Examples)
{
   auto z = z_degree_test(6, 2, -8);
   EXPECT_EQ(z.degree, 0);
   EXPECT_TRUE(z.pass);
   z = z_degree_test(6, 2, 0);
   EXPECT_EQ(z.degree, -24);
   EXPECT_FALSE(z.pass);
   z = z_degree_test(3162, 1000, 104);
   EXPECT_EQ(z.degree, 0);
   EXPECT_TRUE(z.pass);
   EXPECT_THROW(z_degree_test(7, 2, 0), OddDegreeInput);
   EXPECT_EQ(z_degree_test(6, 2, 0).degree, extremal_family(6, 2, 0).Z_model().degree());
}

TEST(Certificate, Examples)
{
   const auto small = emptiness_certificate(6, 2);
   EXPECT_EQ(small.v_threshold, 8);
   EXPECT_EQ(small.z_threshold_numerator, -24);
   EXPECT_EQ(small.verdict, CertificateVerdict::Empty);
   EXPECT_FALSE(small.witness);

   const auto edge = emptiness_certificate(3162, 1000);
   EXPECT_EQ(edge.v_threshold, 112);
   EXPECT_EQ(edge.z_threshold_numerator, 312);
   EXPECT_EQ(edge.a_max, 104);
   EXPECT_EQ(edge.verdict, CertificateVerdict::Empty);

   const auto past = emptiness_certificate(3164, 1000);
   EXPECT_EQ(past.v_threshold, 64);
   EXPECT_EQ(past.z_threshold_numerator, 464);
   ASSERT_TRUE(past.witness);
   EXPECT_EQ(*past.witness, 64);
   EXPECT_TRUE(gamma_test(3164, 1000, 64).pass);
   EXPECT_TRUE(z_degree_test(3164, 1000, 64).pass);
   EXPECT_EQ(past.verdict, CertificateVerdict::NotApplicable);

   const auto outside = emptiness_certificate(40, 10);  // l = -50
   EXPECT_EQ(outside.verdict, CertificateVerdict::NotApplicable);
}

TEST(Certificate, GridMatchesRatioBound)
{
   for (int m = 2; m <= 200; m += 2)
      for (int d = m + 2; d <= 4 * m; d += 2) {
         const auto c = emptiness_certificate(d, m);
         EXPECT_EQ(c.verdict == CertificateVerdict::Empty, 37 * d < 117 * m) << d << "," << m;
         EXPECT_TRUE(recheck(c));
      }
}

TEST(Certificate, AgreesWithBruteForceOverA)
{
   // Scan every a in the relevant window and apply both tests directly.
   for (int m = 2; m <= 20; m += 2)
      for (int d = m + 2; d <= 4 * m; d += 2) {
         const auto c = emptiness_certificate(d, m);
         const Integer ell = 19 * m - 6 * d;
         bool some_a_survives = false;
         for (long a = -1500; a <= 1500 && !some_a_survives; ++a)
            some_a_survives = gamma_test(d, m, a).pass && z_degree_test(d, m, a).pass;
         EXPECT_EQ(c.verdict == CertificateVerdict::Empty, ell > 0 && !some_a_survives) << d << "," << m;
      }
}

TEST(Certificate, RecheckCatchesTampering)
{
   auto c = emptiness_certificate(3162, 1000);
   EXPECT_TRUE(recheck(c));
   c.verdict = CertificateVerdict::NotApplicable;
   EXPECT_FALSE(recheck(c));
   c = emptiness_certificate(3164, 1000);
   c.witness = Integer(200);
   EXPECT_FALSE(recheck(c));
   c = emptiness_certificate(3164, 1000);
   c.ell += 2;
   EXPECT_FALSE(recheck(c));
}

TEST(Certificate, OddInputsScaled)
{
   const auto c = emptiness_certificate(117, 37);  // ratio exactly at the bound
   EXPECT_TRUE(c.scaled);
   EXPECT_EQ(c.working_d, 234);
   EXPECT_EQ(c.working_m, 74);
   EXPECT_EQ(c.verdict, CertificateVerdict::NotApplicable);
   EXPECT_TRUE(recheck(c));
   const auto e = emptiness_certificate(3, 1);
   EXPECT_TRUE(e.scaled);
   EXPECT_EQ(e.verdict, CertificateVerdict::Empty);
   EXPECT_TRUE(recheck(e));
}

TEST(EquivalenceModels, WorkedInstances)
{
   // l = 2, a = 8 at (6, 2).
   const auto v = extremal_family(6, 2, 8);
   EXPECT_EQ(v.V_model(), parse_system("L4([1,1]^8)"));
   EXPECT_EQ(virtual_dimension(v.L_V()), -2);
   EXPECT_TRUE(check_equivalence_invariants(v.L_V(), v.V_model()).virtual_dimension_equal);

   const auto z = extremal_family(32, 10, 0);
   EXPECT_EQ(z.L_Z(), parse_system("L20(12,6^6,[2,2]^2)"));
   EXPECT_EQ(z.Z_model(), parse_system("L32(6^6,14^4)"));
   const auto rep = check_equivalence_invariants(z.L_Z(), z.Z_model());
   EXPECT_EQ(rep.lhs_virtual_dimension, 14);
   EXPECT_TRUE(rep.virtual_dimension_equal);
}

TEST(EquivalenceModels, InvariantsAgreeProperty)
{
   std::mt19937_64 rng(5);
   for (int t = 0; t < 100; ++t) {
      // In range: m < d < (19/6) m, so l > 0.
      const auto m = random_even(rng, 10, 2000);
      Integer d;
      do d = random_even(rng, 0, 4 * 2000); while (!(d > m && 6 * d < 19 * m));
      const auto ell = 19 * m - 6 * d;
      const Integer a = floor_div(ell * 4 + 76 * d - 240 * m, Integer(6)) + static_cast<long>(rng() % 41) - 20;
      const auto f = extremal_family(d, m, a);
      const auto rv = check_equivalence_invariants(f.L_V(), f.V_model());
      const auto rz = check_equivalence_invariants(f.L_Z(), f.Z_model());
      EXPECT_TRUE(rv.virtual_dimension_equal && rv.quadratic_form_equal) << d << "," << m << "," << a;
      EXPECT_TRUE(rz.virtual_dimension_equal && rz.quadratic_form_equal) << d << "," << m << "," << a;
   }
}

TEST(CrossValidation, EmptyCertificatesConfirmedByInterpolation)
{
   int confirmed = 0;
   for (int d = 2; d <= 30; d += 2)
      for (int m = 2; m <= d; m += 2) {
         if (emptiness_certificate(d, m).verdict != CertificateVerdict::Empty) continue;
         const auto s = PlaneSystem::homogeneous(d, m, 10);
         EXPECT_EQ(certify_empty_interpolation(s, Configuration::general(s)).verdict, InterpolationVerdict::Certified)
            << format_system(s);
         ++confirmed;
      }
   EXPECT_GE(confirmed, 20);
}
