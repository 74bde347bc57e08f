#include <random>

#include <gtest/gtest.h>

#include "fatpoints/system_syntax.hpp"

using namespace fatpoints;

TEST(ParseSystem, Homogeneous)
{
   const auto s = parse_system("L6(2^10)");
   EXPECT_EQ(s.degree(), 6);
   ASSERT_EQ(s.points().size(), 1u);
   EXPECT_EQ(s.points()[0], PointSpec::free(2, 10));
   EXPECT_EQ(s.expanded_size(), 10u);
}

TEST(ParseSystem, MixedSpecs)
{
   const auto s = parse_system("L4(2^3,1,[1,1]^2)");
   const PlaneSystem expected(4, {PointSpec::free(2, 3), PointSpec::free(1), PointSpec::pair(1, 1, 2)});
   EXPECT_EQ(s, expected);
}

TEST(ParseSystem, WhitespaceIgnored)
{
   EXPECT_EQ(parse_system("  L 2 ( 1 ^ 4 , [ 1 , 0 ] , [0,0] ) "), parse_system("L2(1^4,[1,0],[0,0])"));
}

TEST(ParseSystem, NegativeValuesAndUnderscore)
{
   const auto s = parse_system("L_-3(-2,[4,-1])");
   EXPECT_EQ(s.degree(), -3);
   EXPECT_EQ(s.points()[0], PointSpec::free(-2));
   EXPECT_EQ(s.points()[1], PointSpec::pair(4, -1));
}

TEST(ParseSystem, NoPoints)
{
   EXPECT_EQ(parse_system("L0"), PlaneSystem(0, {}));
   EXPECT_EQ(parse_system("L7()"), PlaneSystem(7, {}));
}

TEST(ParseSystem, HugeIntegers)
{
   const auto s = parse_system("L100000000000000000000(99999999999999999999^10)");
   EXPECT_EQ(s.degree(), Integer("100000000000000000000"));
}

TEST(ParseSystem, ErrorsCarryPosition)
{
   auto position_of = [](const char* text) {
      try {
         parse_system(text);
      } catch (const ParseError& e) {
         return static_cast<long>(e.position());
      }
      return -1L;
   };
   EXPECT_EQ(position_of("M6(2)"), 0);
   EXPECT_EQ(position_of("L(2)"), 1);
   EXPECT_EQ(position_of("L6(2^0)"), 5);
   EXPECT_EQ(position_of("L6(2,)"), 5);
   EXPECT_EQ(position_of("L6([1 2])"), 7);
   EXPECT_EQ(position_of("L6(2"), 4);
   EXPECT_EQ(position_of("L6(2)x"), 5);
   EXPECT_EQ(position_of("L6(2) )"), 6);
}

TEST(FormatSystem, RoundTripProperty)
{
   std::mt19937_64 rng(5);
   for (int t = 0; t < 500; ++t) {
      std::vector<PointSpec> pts;
      const int groups = static_cast<int>(rng() % 5);
      for (int g = 0; g < groups; ++g) {
         const std::size_t count = 1 + rng() % 4;
         if (rng() % 2) pts.push_back(PointSpec::free(static_cast<int>(rng() % 30) - 10, count));
         else pts.push_back(PointSpec::pair(static_cast<int>(rng() % 30) - 10, static_cast<int>(rng() % 30) - 10, count));
      }
      const PlaneSystem s(static_cast<int>(rng() % 100) - 20, pts);
      EXPECT_EQ(parse_system(format_system(s)), s);
      EXPECT_EQ(normalized(s).expand(), s.expand());
   }
}

TEST(FormatSystem, Canonical)
{
   EXPECT_EQ(format_system(parse_system("L 4 (2^3, 1, [1,1]^2)")), "L4(2^3,1,[1,1]^2)");
   EXPECT_EQ(format_system(normalized(parse_system("L2(1,1,1,[0,0],[0,0])"))), "L2(1^3,[0,0]^2)");
   EXPECT_EQ(format_system(system_from_class(LatticeClass(2, {1, 0, 0, 1, 1, 1, 1}))), "L2(1,0^2,1^4)");
}
