#pragma once

// JSON recipes for sample_configuration:
//   {"prime": 65537, "seed": 1, "anchors": 4, "max_attempts": 64,
//    "placements": [{"type": "general"}, {"type": "on_curve", "curve": 0},
//                   {"type": "inf_near", "base": 0, "direction": "tangent", "curve": 0}],
//    "curves": [{"type": "conic", "through": [0, 1, 2, 3]}]}
// `through` ids index the anchors, auxiliary general points that are not base points.

#include <set>
#include <string>

#include <json.hpp>

#include "error.hpp"
#include "interpolation.hpp"

namespace fatpoints {

namespace detail {

inline void only_keys(const nlohmann::json& j, const std::set<std::string>& allowed, const std::string& where)
{
   if (!j.is_object()) throw ConfigError(where + " must be an object");
   for (const auto& [key, _] : j.items())
      if (!allowed.count(key)) throw ConfigError(where + ": unknown key '" + key + "'");
}

inline std::size_t index_field(const nlohmann::json& j, const char* key, const std::string& where)
{
   if (!j.contains(key)) throw ConfigError(where + ": missing '" + key + "'");
   const auto& v = j.at(key);
   if (!v.is_number_unsigned()) throw ConfigError(where + ": '" + key + "' must be a nonnegative integer");
   return v.get<std::size_t>();
}

}  // namespace detail

inline Configuration configuration_from_json(const nlohmann::json& j)
{
   detail::only_keys(j, {"prime", "seed", "anchors", "max_attempts", "placements", "curves"}, "configuration");
   Configuration cfg;
   if (j.contains("prime")) cfg.prime = detail::index_field(j, "prime", "configuration");
   if (j.contains("seed")) cfg.seed = detail::index_field(j, "seed", "configuration");
   if (j.contains("anchors")) cfg.anchors = detail::index_field(j, "anchors", "configuration");
   if (j.contains("max_attempts")) cfg.max_attempts = detail::index_field(j, "max_attempts", "configuration");
   if (j.contains("curves")) {
      for (const auto& c : j.at("curves")) {
         const std::string where = "curve " + std::to_string(cfg.curves.size());
         detail::only_keys(c, {"type", "through"}, where);
         if (c.value("type", "conic") != "conic") throw ConfigError(where + ": only conics are supported");
         CurveSpec spec;
         if (c.contains("through"))
            for (const auto& id : c.at("through")) {
               if (!id.is_number_unsigned()) throw ConfigError(where + ": anchor ids must be nonnegative integers");
               spec.through.push_back(id.get<std::size_t>());
            }
         cfg.curves.push_back(std::move(spec));
      }
   }
   if (!j.contains("placements")) throw ConfigError("configuration: missing 'placements'");
   for (const auto& p : j.at("placements")) {
      const std::string where = "placement " + std::to_string(cfg.placements.size());
      detail::only_keys(p, {"type", "curve", "base", "direction"}, where);
      const std::string type = p.value("type", "");
      Placement pl;
      if (type == "general") {
         pl = Placement::general();
      } else if (type == "on_curve") {
         pl = Placement::on_curve(detail::index_field(p, "curve", where));
      } else if (type == "inf_near") {
         const std::string dir = p.value("direction", "general");
         const auto base = detail::index_field(p, "base", where);
         if (dir == "general") pl = Placement::inf_near(base);
         else if (dir == "tangent") pl = Placement::inf_near_tangent(base, detail::index_field(p, "curve", where));
         else throw ConfigError(where + ": direction must be 'general' or 'tangent'");
      } else {
         throw ConfigError(where + ": unknown type '" + type + "'");
      }
      cfg.placements.push_back(pl);
   }
   return cfg;
}

inline nlohmann::ordered_json configuration_to_json(const Configuration& cfg)
{
   nlohmann::ordered_json j;
   j["prime"] = cfg.prime;
   j["seed"] = cfg.seed;
   j["anchors"] = cfg.anchors;
   j["max_attempts"] = cfg.max_attempts;
   j["placements"] = nlohmann::ordered_json::array();
   for (const auto& p : cfg.placements) {
      nlohmann::ordered_json e;
      switch (p.kind) {
      case Placement::Kind::General: e["type"] = "general"; break;
      case Placement::Kind::OnCurve:
         e["type"] = "on_curve";
         e["curve"] = *p.curve;
         break;
      case Placement::Kind::InfNear:
         e["type"] = "inf_near";
         e["base"] = *p.base;
         e["direction"] = p.direction == DirectionRule::Tangent ? "tangent" : "general";
         if (p.curve) e["curve"] = *p.curve;
         break;
      }
      j["placements"].push_back(e);
   }
   j["curves"] = nlohmann::ordered_json::array();
   for (const auto& c : cfg.curves) j["curves"].push_back({{"type", "conic"}, {"through", c.through}});
   return j;
}

}  // namespace fatpoints
