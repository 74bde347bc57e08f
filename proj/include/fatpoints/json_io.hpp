#pragma once

// JSON renderings of results. Field order is fixed; integers are decimal strings.

#include <string>

#include <json.hpp>

#include "bounds.hpp"
#include "cremona.hpp"
#include "degeneration.hpp"
#include "interpolation.hpp"
#include "system_syntax.hpp"

namespace fatpoints {

using Json = nlohmann::ordered_json;

inline Json to_json(const Integer& v) { return v.str(); }

inline Json to_json(const LatticeClass& c)
{
   Json mults = Json::array();
   for (const auto& m : c.mults()) mults.push_back(m.str());
   return Json{{"d", c.degree().str()}, {"mults", mults}};
}

inline Json to_json(const EmptinessCertificate& c)
{
   Json checks = Json::array();
   checks.push_back({{"name", "working_pair"}, {"d", to_json(c.working_d)}, {"m", to_json(c.working_m)}});
   checks.push_back({{"name", "ell_positive"}, {"pass", c.ell > 0}});
   checks.push_back({{"name", "v_side"}, {"condition", "a >= 4*ell"}, {"a_min", to_json(c.v_threshold)}});
   checks.push_back({{"name", "z_side"}, {"condition", "3*a <= 76*d - 240*m"}, {"a_max", to_json(c.a_max)}});
   checks.push_back({{"name", "interval"},
                     {"a_min", to_json(c.v_threshold)},
                     {"a_max", to_json(c.a_max)},
                     {"empty", !c.witness.has_value()},
                     {"witness", c.witness ? Json(c.witness->str()) : Json(nullptr)}});
   checks.push_back({{"name", "ratio"}, {"condition", "37*d < 117*m"}, {"pass", 37 * c.working_d < 117 * c.working_m}});
   checks.push_back({{"name", "recheck"}, {"pass", recheck(c)}});
   Json j;
   j["d"] = to_json(c.d);
   j["m"] = to_json(c.m);
   j["scaled"] = c.scaled;
   j["alpha"] = to_json(c.alpha);
   j["ell"] = to_json(c.ell);
   j["v_threshold"] = to_json(c.v_threshold);
   j["z_threshold_numerator"] = to_json(c.z_threshold_numerator);
   j["verdict"] = to_string(c.verdict);
   j["checks"] = checks;
   return j;
}

inline Json to_json(const EquivalenceReport& r)
{
   return Json{{"lhs_virtual_dimension", to_json(r.lhs_virtual_dimension)},
               {"rhs_virtual_dimension", to_json(r.rhs_virtual_dimension)},
               {"virtual_dimension_equal", r.virtual_dimension_equal},
               {"lhs_self_intersection", to_json(r.lhs_self_intersection)},
               {"rhs_self_intersection", to_json(r.rhs_self_intersection)},
               {"lhs_canonical_degree", to_json(r.lhs_canonical_degree)},
               {"rhs_canonical_degree", to_json(r.rhs_canonical_degree)},
               {"quadratic_form_equal", r.quadratic_form_equal}};
}

inline Json to_json(const ExtremalFamily& f)
{
   Json j;
   j["d"] = to_json(f.d);
   j["m"] = to_json(f.m);
   j["a"] = to_json(f.a);
   j["scaled"] = f.scaled;
   j["alpha"] = to_json(f.inv.alpha);
   j["ell"] = to_json(f.inv.ell);
   j["d_Z"] = to_json(f.d_Z);
   j["mu"] = to_json(f.mu);
   j["q"] = to_json(f.q);
   j["x"] = to_json(f.x);
   j["d_V"] = to_json(f.d_V);
   j["nu"] = to_json(f.nu);
   j["y"] = to_json(f.y);
   j["z"] = to_json(f.z);
   j["d_T"] = to_json(f.d_T);
   j["restrictions"] = Json{{"L_Z", format_system(f.L_Z())},
                            {"L_V", format_system(f.L_V())},
                            {"L_T", format_system(f.L_T())},
                            {"L_U", format_system(f.L_U())},
                            {"L_Y", format_system(f.L_Y())}};
   j["models"] = Json{{"V", format_system(f.V_model())}, {"Z", format_system(f.Z_model())}};
   return j;
}

inline Json to_json(const TransformStep& s)
{
   return Json{{"kind", s.kind == TransformStep::Kind::Quadratic ? "quadratic" : "clamp"},
               {"indices", s.indices},
               {"before", to_json(s.before)},
               {"after", to_json(s.after)}};
}

inline Json to_json(const ReductionResult& r)
{
   Json log = Json::array();
   for (const auto& s : r.log) log.push_back(to_json(s));
   return Json{{"final", to_json(r.final_class)},
               {"final_system", format_system(system_from_class(r.final_class))},
               {"verdict", to_string(r.verdict)},
               {"log", log}};
}

inline Json to_json(const TwistSpec& t) { return Json{{"u", to_json(t.u)}, {"v", to_json(t.v)}, {"h", to_json(t.h)}}; }

inline Json to_json(const BoundEntry& b)
{
   return Json{{"label", b.label}, {"ratio", b.ratio}, {"decimal", b.decimal}};
}

}  // namespace fatpoints
