// fatpoints: batch verification of emptiness for plane systems with ten
// equal-multiplicity general base points.
//
// Exit codes: 0 success, 2 NotApplicable / Inconclusive, 1 error.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fatpoints/cache.hpp"
#include "fatpoints/config_json.hpp"
#include "fatpoints/fatpoints.hpp"
#include "fatpoints/json_io.hpp"

namespace {

using fatpoints::Integer;
using fatpoints::Json;

struct Options {
   std::uint64_t prime = fatpoints::default_prime;
   std::uint64_t seed = 1;
   std::size_t trials = 1;
   bool no_cache = false;
   std::string cache_dir;
   bool pretty = false;
   bool compact = false;
   std::string config_path;
};

struct Outcome {
   Json result;
   int exit_code = 0;
};

Integer parse_integer(const std::string& text, const char* what)
{
   static const std::regex pattern(R"(\s*[-+]?[0-9]+\s*)");
   if (!std::regex_match(text, pattern)) throw std::invalid_argument(std::string(what) + " must be an integer, got '" + text + "'");
   std::string t = text;
   t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c) || c == '+'; }), t.end());
   return Integer(t);
}

std::string read_file(const std::string& path)
{
   std::ifstream in(path);
   if (!in) throw std::runtime_error("cannot read " + path);
   std::ostringstream buf;
   buf << in.rdbuf();
   return buf.str();
}

Outcome run_certify(const Integer& d, const Integer& m)
{
   const auto cert = fatpoints::emptiness_certificate(d, m);
   Json j = fatpoints::to_json(cert);
   if (cert.scaled)
      j["note"] = "odd input: closed forms need even (d, m), so (" + cert.working_d.str() + ", " + cert.working_m.str() +
                  ") was certified instead; emptiness of the doubled system implies emptiness of the original";
   return {j, cert.verdict == fatpoints::CertificateVerdict::Empty ? 0 : 2};
}

Outcome run_sweep(const Integer& mmax)
{
   if (mmax < 2) throw std::invalid_argument("sweep: mmax must be at least 2");
   if (mmax > Integer(100'000)) throw std::invalid_argument("sweep: mmax too large");
   std::size_t pairs = 0, empty = 0, not_applicable = 0;
   Json mismatches = Json::array();
   Json boundary = Json::array();
   Integer best_d = 0, best_m = 1;
   for (Integer m = 2; m <= mmax; m += 2) {
      Integer max_empty_d = -1;
      for (Integer d = m + 2; d <= 4 * m; d += 2) {
         ++pairs;
         const auto cert = fatpoints::emptiness_certificate(d, m);
         const bool is_empty = cert.verdict == fatpoints::CertificateVerdict::Empty;
         if (is_empty) {
            ++empty;
            max_empty_d = d;
            if (d * best_m > best_d * m) {
               best_d = d;
               best_m = m;
            }
         } else {
            ++not_applicable;
         }
         if (is_empty != (37 * d < 117 * m) || !fatpoints::recheck(cert))
            mismatches.push_back({{"d", d.str()}, {"m", m.str()}});
      }
      boundary.push_back({{"m", m.str()}, {"max_empty_d", max_empty_d >= 0 ? Json(max_empty_d.str()) : Json(nullptr)}});
   }
   Json j;
   j["mmax"] = mmax.str();
   j["range"] = "even d, m with 2 <= m <= mmax and m < d <= 4m";
   j["pairs"] = pairs;
   j["empty"] = empty;
   j["not_applicable"] = not_applicable;
   j["mismatches"] = mismatches;
   j["largest_empty_ratio"] = best_d.str() + "/" + best_m.str();
   j["largest_empty_ratio_decimal"] = fatpoints::decimal_approximation(best_d, best_m);
   j["boundary"] = boundary;
   return {j, mismatches.empty() ? 0 : 1};
}

Outcome run_interp(const std::string& text, const Options& opt)
{
   const auto system = fatpoints::parse_system(text);
   fatpoints::Configuration cfg;
   if (!opt.config_path.empty()) {
      cfg = fatpoints::configuration_from_json(nlohmann::json::parse(read_file(opt.config_path)));
   } else {
      cfg = fatpoints::Configuration::general(system, opt.prime, opt.seed);
   }
   Json j;
   j["system"] = fatpoints::format_system(system);
   j["prime"] = cfg.prime;
   j["seed"] = cfg.seed;
   j["trials"] = opt.trials;
   if (system.degree() < 0) {
      j["rows"] = 0;
      j["cols"] = 0;
      j["rank"] = 0;
      j["verdict"] = "Certified";
      j["estimated_dimension"] = -1;
      j["dimension_upper_bound"] = -1;
      j["reason"] = "negative degree";
      return {j, 0};
   }
   fatpoints::InterpolationResult best;
   std::int64_t estimated = std::numeric_limits<std::int64_t>::min();
   for (std::size_t t = 0; t < opt.trials; ++t) {
      const auto r = fatpoints::certify_empty_interpolation(system, cfg.with_seed(cfg.seed + t));
      estimated = std::max(estimated, r.estimated_dimension);
      if (t == 0 || r.rank > best.rank) best = r;
   }
   j["rows"] = best.rows;
   j["cols"] = best.cols;
   j["rank"] = best.rank;
   j["verdict"] = fatpoints::to_string(best.verdict);
   j["estimated_dimension"] = estimated;
   j["dimension_upper_bound"] = best.estimated_dimension;
   j["reason"] = best.verdict == fatpoints::InterpolationVerdict::Certified
                    ? "full column rank at a sampled configuration: empty for general points"
                    : "rank deficit at sampled configurations: inconclusive (does not prove non-emptiness)";
   return {j, best.verdict == fatpoints::InterpolationVerdict::Certified ? 0 : 2};
}

Outcome run_reduce(const std::string& text)
{
   const auto system = fatpoints::parse_system(text);
   const auto red = fatpoints::cremona_reduce(system);
   Json j;
   j["input"] = fatpoints::format_system(system);
   const Json body = fatpoints::to_json(red);
   for (const auto& [k, v] : body.items()) j[k] = v;
   return {j, 0};
}

Outcome run_extremal(const Integer& d, const Integer& m, const Integer& a)
{
   const auto fam = fatpoints::extremal_family(d, m, a);
   Json j = fatpoints::to_json(fam);
   Json residuals = Json::array();
   for (const auto& r : fatpoints::verify_matching_identities(fam.d, fam.m, a)) residuals.push_back(r.str());
   j["matching_residuals"] = residuals;
   const auto gamma = fatpoints::gamma_test(fam.d, fam.m, a);
   const auto zdeg = fatpoints::z_degree_test(fam.d, fam.m, a);
   j["tests"] = Json{{"gamma", {{"value", gamma.value.str()}, {"pass", gamma.pass}, {"gamma_squared", gamma.gamma_self_intersection.str()}}},
                     {"z_degree", {{"degree", zdeg.degree.str()}, {"pass", zdeg.pass}}}};
   j["equivalence"] = Json{{"V", fatpoints::to_json(fatpoints::check_equivalence_invariants(fam.L_V(), fam.V_model()))},
                           {"Z", fatpoints::to_json(fatpoints::check_equivalence_invariants(fam.L_Z(), fam.Z_model()))}};
   if (fam.scaled) j["note"] = "odd input: (d, m) doubled to (" + fam.d.str() + ", " + fam.m.str() + ")";
   return {j, 0};
}

Outcome run_bounds()
{
   Json rows = Json::array();
   for (const auto& b : fatpoints::bounds_table()) rows.push_back(fatpoints::to_json(b));
   return {Json{{"bounds", rows}}, 0};
}

Json error_json(const std::string& kind, const std::string& message)
{
   return Json{{"error", kind}, {"message", message}};
}

void emit(const Json& j, const Options& opt) { std::cout << (opt.pretty && !opt.compact ? j.dump(2) : j.dump()) << '\n'; }

}  // namespace

int main(int argc, char** argv)
{
   CLI::App app{"Emptiness verifier for plane systems L_d(m^10) with general base points"};
   app.fallthrough();
   app.require_subcommand(1);
   Options opt;
   app.add_option("--prime", opt.prime, "prime field modulus for interpolation")->capture_default_str();
   app.add_option("--seed", opt.seed, "seed for sampled configurations")->capture_default_str();
   app.add_option("--trials", opt.trials, "number of sampled configurations")->check(CLI::PositiveNumber)->capture_default_str();
   app.add_flag("--no-cache", opt.no_cache, "always recompute");
   app.add_option("--cache-dir", opt.cache_dir, "cache directory (default $FATPOINTS_CACHE_DIR or .fatpoints-cache)");
   app.add_flag("--json", opt.compact, "compact JSON output (default)");
   app.add_flag("--pretty", opt.pretty, "indented JSON output");

   std::string d_text, m_text, a_text, mmax_text, system_text;
   auto* certify = app.add_subcommand("certify", "certify emptiness of L_d(m^10)");
   certify->add_option("d", d_text)->required();
   certify->add_option("m", m_text)->required();
   auto* sweep = app.add_subcommand("sweep", "certify all even m < d <= 4m with m <= mmax");
   sweep->add_option("mmax", mmax_text)->required();
   auto* interp = app.add_subcommand("interp", "interpolation-matrix rank check of a system");
   interp->add_option("system", system_text)->required();
   interp->add_option("--config", opt.config_path, "JSON configuration recipe; its prime and seed replace --prime/--seed");
   auto* reduce = app.add_subcommand("reduce", "Cremona reduction with transform log");
   reduce->add_option("system", system_text)->required();
   auto* extremal = app.add_subcommand("extremal", "extremal limit bundle restrictions for (d, m, a)");
   extremal->add_option("d", d_text)->required();
   extremal->add_option("m", m_text)->required();
   extremal->add_option("a", a_text)->required();
   auto* bounds = app.add_subcommand("bounds", "known emptiness bounds");

   try {
      app.parse(argc, argv);
   } catch (const CLI::CallForHelp& e) {
      return app.exit(e);
   } catch (const CLI::CallForAllHelp& e) {
      return app.exit(e);
   } catch (const CLI::ParseError& e) {
      app.exit(e);
      return 1;
   }

   std::vector<std::string> key;
   try {
      std::function<Outcome()> job;
      if (certify->parsed()) {
         const auto d = parse_integer(d_text, "d"), m = parse_integer(m_text, "m");
         key = {"certify", d.str(), m.str()};
         job = [=] { return run_certify(d, m); };
      } else if (sweep->parsed()) {
         const auto mmax = parse_integer(mmax_text, "mmax");
         key = {"sweep", mmax.str()};
         job = [=] { return run_sweep(mmax); };
      } else if (interp->parsed()) {
         const auto canonical = fatpoints::format_system(fatpoints::parse_system(system_text));
         key = {"interp", canonical, "--prime=" + std::to_string(opt.prime), "--seed=" + std::to_string(opt.seed),
                "--trials=" + std::to_string(opt.trials)};
         if (!opt.config_path.empty()) key.push_back("--config=" + fatpoints::fnv1a_hex(read_file(opt.config_path)));
         job = [&, system_text] { return run_interp(system_text, opt); };
      } else if (reduce->parsed()) {
         key = {"reduce", fatpoints::format_system(fatpoints::parse_system(system_text))};
         job = [system_text] { return run_reduce(system_text); };
      } else if (extremal->parsed()) {
         const auto d = parse_integer(d_text, "d"), m = parse_integer(m_text, "m"), a = parse_integer(a_text, "a");
         key = {"extremal", d.str(), m.str(), a.str()};
         job = [=] { return run_extremal(d, m, a); };
      } else if (bounds->parsed()) {
         emit(run_bounds().result, opt);
         return 0;
      }

      std::string dir = opt.cache_dir;
      if (dir.empty()) {
         const char* env = std::getenv("FATPOINTS_CACHE_DIR");
         dir = env && *env ? env : ".fatpoints-cache";
      }
      const fatpoints::ResultCache cache(dir, !opt.no_cache, [](const std::string& w) { std::cerr << "warning: " << w << '\n'; });
      if (auto hit = cache.load(key)) {
         emit(hit->result, opt);
         return hit->exit_code;
      }
      const Outcome out = job();
      if (out.exit_code != 1) cache.store(key, {out.result, out.exit_code});
      emit(out.result, opt);
      return out.exit_code;
   } catch (const fatpoints::ParseError& e) {
      Json j = error_json("ParseError", e.what());
      j["position"] = e.position();
      emit(j, opt);
   } catch (const fatpoints::OddDegreeInput& e) {
      emit(error_json("OddDegreeInput", std::string(e.what()) + " (certify and extremal double odd inputs automatically)"), opt);
   } catch (const fatpoints::ResamplingExhausted& e) {
      emit(error_json("ResamplingExhausted", e.what()), opt);
   } catch (const fatpoints::ConfigError& e) {
      emit(error_json("ConfigError", e.what()), opt);
   } catch (const std::exception& e) {
      emit(error_json("Error", e.what()), opt);
   }
   return 1;
}
