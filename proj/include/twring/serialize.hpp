#pragma once

#include <string>

#include "json.hpp"
#include "twring/extension.hpp"
#include "twring/report.hpp"
#include "twring/twisted_ring.hpp"

namespace twring {

using json = nlohmann::ordered_json;

// Wherever a group, cocycle, ring or extension is expected, a string is read
// as a path to a JSON file (tried as given, then relative to base_dir).
json deref(const json& j, const std::string& base_dir = "");
std::string dir_of(const std::string& path);

// {"order": n, "mul": [[...]], "labels": [...]} ("table" also accepted) or
// {"preset": name, "params": [...], "factors": [<group>, ...]}
GroupPtr group_from_json(const json& j, int cap = FiniteGroup::kMaxOrder, const std::string& base_dir = "");
json group_to_json(const FiniteGroup& g);

// {"m": m, "table": [[...]]} (exponents of zeta_m), or {"named": "relations" | "q8"},
// or {"trivial": true}
Cocycle cocycle_from_json(const json& j, GroupPtr g, const std::string& base_dir = "");
json cocycle_to_json(const Cocycle& c);

// {"group": ..., "cocycle": ..., "conductor": M}
RingPtr ring_from_json(const json& j, int group_cap = FiniteGroup::kMaxOrder, int conductor_cap = kMaxConductor,
                       const std::string& base_dir = "");

// [c_1, ..., c_n] integer coefficients per group element, or
// {"coeffs": [{"g": id, "m": m, "c": [c_0, c_1, ...]}]} meaning sum c_k zeta_m^k u_g,
// or {"coords": [...]} in the Z-basis zeta^j u_g, or {"terms": {"label": c, ...}}
TwElement element_from_json(const RingPtr& r, const json& j);
json element_to_json(const TwElement& x);

// {"group": ..., "normal": [ids], "section": [ids]?} or {"hom": {"target": ..., "images": [...]}}
ExtensionData extension_from_json(const json& j, const std::string& base_dir = "");

json report_to_json(const Report& r);

json read_json_file(const std::string& path);

}  // namespace twring
