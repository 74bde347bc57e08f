#pragma once

// Append-only JSON-lines cache of CLI results. Each line is
//   {"fingerprint", "argv", "result", "exit_code", "timestamp"}
// and a hit requires an exact fingerprint and argv match. Unreadable lines
// are reported through the warning callback and skipped.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace fatpoints {

inline constexpr const char* code_version_tag = "fatpoints-1.0.0";

/// FNV-1a, 64 bit, as 16 hex digits.
inline std::string fnv1a_hex(const std::string& data)
{
   std::uint64_t h = 0xcbf29ce484222325ULL;
   for (unsigned char c : data) {
      h ^= c;
      h *= 0x100000001b3ULL;
   }
   std::ostringstream out;
   out << std::hex << std::setw(16) << std::setfill('0') << h;
   return out.str();
}

inline std::string command_fingerprint(const std::vector<std::string>& canonical_argv)
{
   std::string key = code_version_tag;
   for (const auto& a : canonical_argv) {
      key += '\x1f';
      key += a;
   }
   return fnv1a_hex(key);
}

struct CachedResult {
   nlohmann::ordered_json result;
   int exit_code = 0;
};

class ResultCache {
public:
   using Warn = std::function<void(const std::string&)>;

   ResultCache(std::filesystem::path dir, bool enabled, Warn warn = {})
      : dir_(std::move(dir)), enabled_(enabled), warn_(std::move(warn))
   {
   }

   bool enabled() const noexcept { return enabled_; }
   std::filesystem::path file() const { return dir_ / "results.jsonl"; }

   std::optional<CachedResult> load(const std::vector<std::string>& argv) const
   {
      if (!enabled_) return std::nullopt;
      std::ifstream in(file());
      if (!in) return std::nullopt;
      const auto fp = command_fingerprint(argv);
      std::string line;
      std::size_t lineno = 0;
      std::optional<CachedResult> hit;
      while (std::getline(in, line)) {
         ++lineno;
         if (line.empty()) continue;
         try {
            const auto rec = nlohmann::ordered_json::parse(line);
            if (rec.at("fingerprint").get<std::string>() != fp) continue;
            if (rec.at("argv").get<std::vector<std::string>>() != argv) continue;
            hit = CachedResult{rec.at("result"), rec.at("exit_code").get<int>()};
         } catch (const std::exception&) {
            warn("cache line " + std::to_string(lineno) + " in " + file().string() + " is corrupted; ignoring it");
         }
      }
      return hit;
   }

   void store(const std::vector<std::string>& argv, const CachedResult& r) const
   {
      if (!enabled_) return;
      try {
         std::filesystem::create_directories(dir_);
         nlohmann::ordered_json rec;
         rec["fingerprint"] = command_fingerprint(argv);
         rec["argv"] = argv;
         rec["result"] = r.result;
         rec["exit_code"] = r.exit_code;
         rec["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(
                               std::chrono::system_clock::now().time_since_epoch())
                               .count();
         std::ofstream out(file(), std::ios::app);
         out << rec.dump() << '\n';
         if (!out) warn("could not write cache file " + file().string());
      } catch (const std::exception& e) {
         warn(std::string("cache write failed: ") + e.what());
      }
   }

private:
   void warn(const std::string& msg) const
   {
      if (warn_) warn_(msg);
   }

   std::filesystem::path dir_;
   bool enabled_;
   Warn warn_;
};

}  // namespace fatpoints
