#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "fatpoints/cache.hpp"

using namespace fatpoints;

namespace {

struct TempDir {
   std::filesystem::path path;
   TempDir()
   {
      path = std::filesystem::temp_directory_path() /
             ("fatpoints-cache-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" +
              ::testing::UnitTest::GetInstance()->current_test_info()->name());
      std::filesystem::remove_all(path);
   }
   ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST(Fnv1a, KnownVectors)
{
   EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
   EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
   EXPECT_EQ(fnv1a_hex("foobar"), "85944171f73967e8");
}

TEST(Fingerprint, SensitiveToArgumentBoundaries)
{
   EXPECT_NE(command_fingerprint({"certify", "31", "2"}), command_fingerprint({"certify", "3", "12"}));
   EXPECT_EQ(command_fingerprint({"certify", "6", "2"}), command_fingerprint({"certify", "6", "2"}));
}

TEST(ResultCache, StoreThenLoad)
{
   TempDir tmp;
   ResultCache cache(tmp.path, true);
   const std::vector<std::string> argv{"certify", "6", "2"};
   EXPECT_FALSE(cache.load(argv));
   nlohmann::ordered_json result{{"verdict", "Empty"}, {"d", "6"}};
   cache.store(argv, {result, 0});
   const auto hit = cache.load(argv);
   ASSERT_TRUE(hit);
   EXPECT_EQ(hit->result.dump(), result.dump());
   EXPECT_EQ(hit->exit_code, 0);
   EXPECT_FALSE(cache.load({"certify", "6", "4"}));
}

TEST(ResultCache, DisabledNeverTouchesDisk)
{
   TempDir tmp;
   ResultCache cache(tmp.path, false);
   cache.store({"bounds"}, {nlohmann::ordered_json::object(), 0});
   EXPECT_FALSE(cache.load({"bounds"}));
   EXPECT_FALSE(std::filesystem::exists(cache.file()));
}

TEST(ResultCache, CorruptedLineWarnsAndIsSkipped)
{
   TempDir tmp;
   std::vector<std::string> warnings;
   ResultCache cache(tmp.path, true, [&](const std::string& w) { warnings.push_back(w); });
   cache.store({"certify", "6", "2"}, {nlohmann::ordered_json{{"verdict", "Empty"}}, 0});
   {
      std::ofstream out(cache.file(), std::ios::app);
      out << "{not json\n";
   }
   cache.store({"certify", "3164", "1000"}, {nlohmann::ordered_json{{"verdict", "NotApplicable"}}, 2});
   const auto hit = cache.load({"certify", "3164", "1000"});
   ASSERT_TRUE(hit);
   EXPECT_EQ(hit->exit_code, 2);
   ASSERT_EQ(warnings.size(), 1u);
   EXPECT_NE(warnings[0].find("line 2"), std::string::npos);
}

TEST(ResultCache, RecordFields)
{
   TempDir tmp;
   ResultCache cache(tmp.path, true);
   cache.store({"bounds"}, {nlohmann::ordered_json{{"x", 1}}, 0});
   std::ifstream in(cache.file());
   std::string line;
   std::getline(in, line);
   const auto rec = nlohmann::ordered_json::parse(line);
   for (const char* key : {"fingerprint", "argv", "result", "exit_code", "timestamp"}) EXPECT_TRUE(rec.contains(key)) << key;
   EXPECT_EQ(rec["fingerprint"], command_fingerprint({"bounds"}));
}
