#include "twring/serialize.hpp"

#include <filesystem>
#include <fstream>

#include "twring/gl2_case.hpp"

namespace twring {

namespace {

template <class T>
T need(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string(what) + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(std::string(what) + ": bad field '" + key + "': " + e.what());
  }
}

}  // namespace

json deref(const json& j, const std::string& base_dir) {
  if (!j.is_string()) return j;
  std::filesystem::path p(j.get<std::string>());
  if (p.is_relative() && !base_dir.empty() && !std::filesystem::exists(p)) p = std::filesystem::path(base_dir) / p;
  return read_json_file(p.string());
}

std::string dir_of(const std::string& path) { return std::filesystem::path(path).parent_path().string(); }

GroupPtr group_from_json(const json& jr, int cap, const std::string& base_dir) {
  json j = deref(jr, base_dir);
  GroupPtr g;
  if (j.is_object() && j.contains("preset")) {
    std::vector<int> params = j.value("params", std::vector<int>{});
    std::vector<GroupPtr> factors;
    if (j.contains("factors"))
      for (const auto& f : j.at("factors")) factors.push_back(group_from_json(f, cap, base_dir));
    g = build_preset(need<std::string>(j, "preset", "group"), params, factors);
  } else {
    auto t = need<std::vector<std::vector<int>>>(j, j.is_object() && j.contains("mul") ? "mul" : "table", "group");
    if (j.contains("order") && need<int>(j, "order", "group") != static_cast<int>(t.size()))
      throw Error("group: 'order' does not match the table size");
    if (static_cast<int>(t.size()) > cap)
      throw CapExceeded("group-order", "group order " + std::to_string(t.size()) + " above cap " + std::to_string(cap));
    g = std::make_shared<const FiniteGroup>(std::move(t), j.value("labels", std::vector<std::string>{}));
  }
  if (g->order() > cap)
    throw CapExceeded("group-order", "group order " + std::to_string(g->order()) + " above cap " + std::to_string(cap));
  return g;
}

json group_to_json(const FiniteGroup& g) { return json{{"order", g.order()}, {"labels", g.labels()}, {"table", g.table()}}; }

Cocycle cocycle_from_json(const json& jr, GroupPtr g, const std::string& base_dir) {
  json j = deref(jr, base_dir);
  if (j.is_object() && j.contains("named")) {
    std::string n = j.at("named").get<std::string>();
    Cocycle c = n == "relations" ? alpha_relations(j.value("n", 0)) : n == "q8" ? q8_twist() : throw Error("cocycle: unknown named cocycle " + n);
    if (c.group->order() != g->order()) throw Error("cocycle: named cocycle does not fit the group");
    return Cocycle(g, c.m, c.table);
  }
  if (j.is_object() && j.value("trivial", false)) return trivial_cocycle(g);
  int m = need<int>(j, "m", "cocycle");
  auto t = need<std::vector<std::vector<int>>>(j, "table", "cocycle");
  return Cocycle(g, m, t);
}

json cocycle_to_json(const Cocycle& c) {
  int n = c.group->order();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) t[g][h] = c.at(g, h);
  return json{{"m", c.m}, {"table", t}};
}

RingPtr ring_from_json(const json& jr, int group_cap, int conductor_cap, const std::string& base_dir) {
  json j = deref(jr, base_dir);
  GroupPtr g = group_from_json(need<json>(j, "group", "ring"), group_cap, base_dir);
  Cocycle a = j.contains("cocycle") ? cocycle_from_json(j.at("cocycle"), g, base_dir) : trivial_cocycle(g);
  int M = j.value("conductor", 1);
  if (M > conductor_cap)
    throw CapExceeded("conductor", "conductor " + std::to_string(M) + " above cap " + std::to_string(conductor_cap));
  return make_ring(g, a, M);
}

TwElement element_from_json(const RingPtr& r, const json& j) {
  if (j.is_array()) return TwElement::from_ints(r, j.get<std::vector<std::int64_t>>());
  if (j.is_object() && j.contains("coords")) return TwElement::from_coords(r, j.at("coords").get<std::vector<std::int64_t>>());
  if (j.is_object() && j.contains("coeffs")) {
    // sparse: c[k] is the coefficient of zeta_m^k on u_g
    TwElement x(r);
    int M = r->conductor();
    for (const auto& t : j.at("coeffs")) {
      int g = need<int>(t, "g", "element coeffs");
      if (g < 0 || g >= r->order()) throw Error("element: group id out of range");
      int m = t.value("m", 1);
      if (m < 1 || roots_order(M) % m != 0)
        throw Error("element: zeta_" + std::to_string(m) + " is not in the coefficient ring");
      auto c = need<std::vector<std::int64_t>>(t, "c", "element coeffs");
      for (size_t k = 0; k < c.size(); ++k)
        if (c[k]) x[g] += CycInt::root(M, m, static_cast<int>(k % m)).scaled(c[k]);
    }
    return x;
  }
  if (j.is_object() && j.contains("terms")) {
    TwElement x(r);
    for (const auto& [k, v] : j.at("terms").items()) {
      int g = r->group()->find_label(k);
      if (g < 0) throw Error("element: unknown group label " + k);
      x += TwElement::basis(r, g, v.get<std::int64_t>());
    }
    return x;
  }
  throw Error("element: expected an array, {coords}, or {terms}");
}

json element_to_json(const TwElement& x) { return json{{"coords", x.coords()}, {"str", x.str()}}; }

ExtensionData extension_from_json(const json& jr, const std::string& base_dir) {
  json j = deref(jr, base_dir);
  GroupPtr gam = group_from_json(need<json>(j, "group", "extension"), FiniteGroup::kMaxOrder, base_dir);
  if (j.contains("hom")) {
    const json& h = j.at("hom");
    GroupPtr tgt = group_from_json(need<json>(h, "target", "extension hom"), FiniteGroup::kMaxOrder, base_dir);
    GroupHom lam = make_hom(gam, tgt, need<std::vector<int>>(h, "images", "extension hom"));
    std::optional<std::vector<int>> sec;
    if (j.contains("section")) sec = j.at("section").get<std::vector<int>>();
    return build_extension_from_hom(lam, sec);
  }
  IdSet n = need<std::vector<int>>(j, "normal", "extension");
  std::sort(n.begin(), n.end());
  if (!gam->is_subgroup(n)) throw Error("extension: N is not a subgroup");
  if (!gam->is_normal(n)) throw Error("extension: N is not normal");
  std::optional<std::vector<int>> tr;
  if (j.contains("section")) tr = j.at("section").get<std::vector<int>>();
  return build_extension(gam, n, tr);
}

json report_to_json(const Report& r) {
  json items = json::array();
  for (const auto& i : r.items) {
    json it{{"name", i.name}};
    it["paper_claim"] = i.paper_claim ? json(*i.paper_claim) : json(nullptr);
    it["oracle_value"] = i.oracle_value;
    it["status"] = status_name(i.status);
    it["anchor"] = i.anchor;
    if (i.discrepancy) it["discrepancy"] = true;
    items.push_back(std::move(it));
  }
  json inputs = json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  json out{{"command", r.command}, {"inputs", inputs}};
  for (const auto& [k, v] : r.summary) {
    if (v == "true" || v == "false") out[k] = v == "true";
    else if (!v.empty() && v.find_first_not_of("-0123456789") == std::string::npos && v.size() < 18) out[k] = std::stoll(v);
    else out[k] = v;
  }
  out["items"] = items;
  if (r.timing_ms) out["timing_ms"] = *r.timing_ms;
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(path + ": " + e.what());
  }
}

}  // namespace twring
