// twring_cli: front end for the twisted group ring toolkit.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "twring/cocycle.hpp"
#include "twring/extension.hpp"
#include "twring/gl2_case.hpp"
#include "twring/serialize.hpp"
#include "twring/tower.hpp"
#include "twring/unit_theory.hpp"

using namespace twring;

namespace {

struct Opts {
  bool json_out = false;
  bool timing = false;
  std::uint64_t seed = 0;
  int cap_group = FiniteGroup::kMaxOrder;
  int cap_conductor = kMaxConductor;
  long long cap_coboundary = 10'000'000;
  int cap_word = 12;
};

// everything the subcommands may read
struct Args {
  std::string action, which, preset, other, elem, chi, alpha;
  std::vector<std::string> files;
  std::vector<int> params;
  int m = 2, conductor = 0, g = 1, h = 2, bound = 1, n = 0, i = 3, samples = 20;
  bool no_scan = false;

  const std::string& file(size_t k, const char* what) const {
    if (files.size() <= k) throw Error(std::string("missing input: ") + what);
    return files[k];
  }
};

std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string hist_str(const std::map<int, int>& h) {
  std::string s = "{";
  for (auto [k, v] : h) s += (s.size() > 1 ? "," : "") + std::to_string(k) + ":" + std::to_string(v);
  return s + "}";
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string t;
  while (std::getline(ss, t, ','))
    if (!t.empty()) v.push_back(std::stoi(t));
  return v;
}

std::string pad(int k) {
  char b[16];
  std::snprintf(b, sizeof b, "%04d", k);
  return b;
}

// ---- inputs

GroupPtr checked_preset(const Opts& o, const std::string& name, const std::vector<int>& params) {
  GroupPtr g = build_preset(name, params);
  if (g->order() > o.cap_group)
    throw CapExceeded("group-order", "group order " + std::to_string(g->order()) + " above cap " + std::to_string(o.cap_group));
  return g;
}

RingPtr ring_file(const Opts& o, const std::string& path) {
  return ring_from_json(read_json_file(path), o.cap_group, o.cap_conductor, dir_of(path));
}

// {"group": <ref>, "m": m, "table": [[...]]}; a nested {"cocycle": {...}} is also accepted
Cocycle cocycle_file(const Opts& o, const std::string& path, GroupPtr g = nullptr) {
  json j = read_json_file(path);
  std::string dir = dir_of(path);
  if (!g) g = group_from_json(j.at("group"), o.cap_group, dir);
  return cocycle_from_json(j.contains("cocycle") ? j.at("cocycle") : j, g, dir);
}

// {"ring": <ref>, "coeffs": [...]}
TwElement element_file(const Opts& o, const std::string& path) {
  json j = read_json_file(path);
  if (!j.contains("ring")) throw Error(path + ": element file needs a 'ring'");
  RingPtr R = ring_from_json(j.at("ring"), o.cap_group, o.cap_conductor, dir_of(path));
  return element_from_json(R, j);
}

// element given inline (--element '<json>') or as a file; `R` fixes the ring when the file has none
TwElement element_in(const Opts& o, const std::string& spec, const RingPtr& R) {
  if (!spec.empty() && (spec[0] == '[' || spec[0] == '{')) return element_from_json(R, json::parse(spec));
  json j = read_json_file(spec);
  if (j.contains("ring")) {
    TwElement x = element_file(o, spec);
    if (!x.ring()->same_as(*R)) throw Error(spec + ": element lives in a different ring");
    return x;
  }
  return element_from_json(R, j);
}

// {"extension": <ref>, "chi": [...], "m": m, "conductor": M}
PsiMap psi_file(const std::string& path) {
  json j = read_json_file(path);
  std::string dir = dir_of(path);
  ExtensionData e = extension_from_json(j.contains("extension") ? j.at("extension") : j, dir);
  int m = j.value("m", 2);
  std::vector<int> vals = j.value("chi", std::vector<int>(e.sub.size(), 0));
  LinearCharacter chi{e.normal.group, m, vals};
  require_character(chi);
  return make_psi(e, chi, std::nullopt, j.value("conductor", 0));
}

// ---- group

Report cmd_group(const Opts& o, const Args& a) {
  Report r;
  r.command = "group " + a.action;
  GroupPtr g;
  if (!a.preset.empty()) {
    r.inputs.push_back({"preset", a.preset});
    if (!a.params.empty()) r.inputs.push_back({"params", join(a.params)});
    g = checked_preset(o, a.preset, a.params);
  } else {
    const auto& f = a.file(0, "group file or --preset");
    r.inputs.push_back({"file", f});
    json j = read_json_file(f);
    g = group_from_json(j, o.cap_group, dir_of(f));
  }
  r.summary.push_back({"valid", "true"});
  r.summary.push_back({"order", std::to_string(g->order())});
  r.add("order", std::to_string(g->order()), Status::verified);
  r.add("abelian", g->is_abelian() ? "true" : "false", Status::verified);
  r.add("exponent", std::to_string(g->exponent()), Status::verified);
  r.add("order_histogram", hist_str(g->order_histogram()), Status::verified);
  if (a.action == "info") {
    r.add("center", join(g->center()), Status::verified);
    r.add("hamiltonian", g->is_hamiltonian() ? "true" : "false", Status::verified);
    std::string lab;
    for (int x = 0; x < g->order(); ++x) lab += (x ? " " : "") + g->label(x);
    r.add("labels", lab, Status::verified);
  }
  return r;
}

// ---- cocycle

Report cmd_cocycle(const Opts& o, const Args& a) {
  Report r;
  r.command = "cocycle " + a.action;
  const auto& f = a.file(0, "cocycle file");
  r.inputs.push_back({"file", f});
  Cocycle c = cocycle_file(o, f);
  const auto& g = c.group;
  auto rep = validate_cocycle(c);
  std::string where = "ok";
  if (rep.violation)
    where = "fails at (" + g->label((*rep.violation)[0]) + "," + g->label((*rep.violation)[1]) + "," +
            g->label((*rep.violation)[2]) + ")";
  add_check(r, "cocycle_condition", rep.cocycle_ok, where);
  add_check(r, "normalized", rep.normalized, rep.normalized ? "ok" : "not normalized at " + g->label(*rep.unnormalized_at));
  r.summary.push_back({"valid", rep.ok() ? "true" : "false"});
  if (a.action == "validate" || !rep.ok()) return r;
  if (a.action == "order") {
    int k = cocycle_order(c);
    r.summary.push_back({"order", std::to_string(k)});
    r.add("class_order", std::to_string(k), Status::verified);
  } else if (a.action == "galpha") {
    GAlpha ga = build_G_alpha(c);
    // G_alpha depends on the representative, so echo it
    r.inputs.push_back({"representative", "[" + join(c.table) + "] mod " + std::to_string(c.m)});
    r.summary.push_back({"order", std::to_string(ga.group->order())});
    r.add("galpha.order", std::to_string(ga.group->order()), Status::verified);
    r.add("galpha.histogram", hist_str(ga.group->order_histogram()), Status::verified);
    r.add("galpha.abelian", ga.group->is_abelian() ? "true" : "false", Status::verified);
    r.add("galpha.hamiltonian", ga.group->is_hamiltonian() ? "true" : "false", Status::verified);
  } else if (a.action == "cohomologous") {
    const std::string& other = a.files.size() > 1 ? a.files[1] : a.other;
    if (other.empty()) throw Error("cocycle cohomologous: needs a second cocycle file");
    r.inputs.push_back({"other", other});
    r.inputs.push_back({"m", std::to_string(a.m)});
    Cocycle d = cocycle_file(o, other, g);
    require_cocycle(d, "second cocycle");
    auto w = are_cohomologous(c, d, a.m, o.cap_coboundary);
    r.summary.push_back({"cohomologous", w ? "true" : "false"});
    // exhaustive search: "none" is a proof
    r.add("witness", w ? "f = [" + join(w->values) + "] (exponents mod " + std::to_string(a.m) + ")" : "none exists",
          Status::verified);
  }
  return r;
}

// ---- ring

Report cmd_ring(const Opts& o, const Args& a) {
  Report r;
  r.command = "ring " + a.action;
  const auto& f = a.file(0, a.action == "info" || a.action == "scan" ? "ring file" : "element file");
  r.inputs.push_back({"file", f});
  if (a.action == "info" || a.action == "scan") {
    RingPtr R = ring_file(o, f);
    r.add("ring", R->describe(), Status::verified);
    if (a.action == "info") {
      for (auto& [j, ids] : partition_by_self_twist(*R)) r.add("self_twist." + std::to_string(j), join(ids), Status::verified);
      r.add("g_zero", join(g_zero(*R)), Status::verified);
      return r;
    }
    r.inputs.push_back({"bound", std::to_string(a.bound)});
    auto us = enumerate_units(R, a.bound);
    int torsion = 0;
    for (const auto& u : us) torsion += torsion_order(u).has_value();
    r.summary.push_back({"units", std::to_string(us.size())});
    r.add("units_in_box", std::to_string(us.size()), Status::verified);
    r.add("torsion_units_in_box", std::to_string(torsion), Status::verified);
    if (R->conductor() == 1) {
      auto bh = berman_higman_scan(R, a.bound);
      add_check(r, "berman_higman", bh.empty(),
                bh.empty() ? "no torsion unit with identity coefficient outside {0,+-1}" : bh.front().str());
    }
    return r;
  }
  TwElement x = element_file(o, f);
  r.add("element", x.str(), Status::verified);
  if (a.action == "mul") {
    const auto& f2 = a.file(1, "second element file");
    r.inputs.push_back({"other", f2});
    TwElement y = element_in(o, f2, x.ring());
    r.add("product", (x * y).str(), Status::verified);
    return r;
  }
  auto inv = is_unit(x);
  r.summary.push_back({"unit", inv ? "true" : "false"});
  if (a.action == "unit") {
    r.add("unit", inv ? "true" : "false", Status::verified);
    if (inv) r.add("inverse", inv->str(), Status::verified);
  }
  if (a.action == "torsion") {
    auto t = inv ? torsion_order(x) : std::nullopt;
    r.summary.push_back({"order", t ? std::to_string(*t) : "infinite"});
    r.add("order", !inv ? "not a unit" : t ? std::to_string(*t) : "infinite", Status::verified);
  }
  return r;
}

// ---- ext

Report cmd_ext(const Opts& o, const Args& a) {
  Report r;
  r.command = "ext " + a.action;
  const auto& f = a.file(0, "extension file");
  r.inputs.push_back({"file", f});
  ExtensionData e = extension_from_json(read_json_file(f), dir_of(f));
  if (e.total->order() > o.cap_group) throw CapExceeded("group-order", "extension order above cap");
  r.add("orders", "|Gamma|=" + std::to_string(e.total->order()) + " |N|=" + std::to_string(e.sub.size()) +
                      " |G|=" + std::to_string(e.quotient()->order()),
        Status::verified);
  r.add("central", e.central() ? "true" : "false", Status::verified);
  if (a.action == "build") {
    r.add("section", join(e.section.map), Status::verified);
    r.add("alpha", join(e.alpha), Status::verified);
    return r;
  }
  if (a.action == "components") {
    r.inputs.push_back({"m", std::to_string(a.m)});
    auto t = component_table(e, std::nullopt, a.m);
    for (size_t i = 0; i < t.rows.size(); ++i)
      r.add("component." + pad(static_cast<int>(i)),
            "chi=[" + join(t.rows[i].chi.values) + "] mod " + std::to_string(t.rows[i].chi.m) + ", field Q(zeta_" +
                std::to_string(t.rows[i].field_conductor) + "), degree " + std::to_string(t.rows[i].orbit_size),
            Status::verified);
    add_check(r, "dimension_identity", t.identity_holds(), std::to_string(t.lhs_dim) + " = " + std::to_string(t.rhs_dim));
    return r;
  }
  std::vector<int> vals = a.chi.empty() ? std::vector<int>(e.sub.size(), 0) : parse_ints(a.chi);
  LinearCharacter chi{e.normal.group, std::max(1, a.m), vals};
  require_character(chi);
  r.inputs.push_back({"chi", join(vals) + " mod " + std::to_string(chi.m)});
  PsiMap p = make_psi(e, chi, std::nullopt, a.conductor);
  r.add("target", p.target->describe(), Status::verified);
  auto bad = psi_multiplicativity_failure(p);
  add_check(r, "psi.multiplicative", !bad,
            bad ? "fails at (" + std::to_string(bad->first) + "," + std::to_string(bad->second) + ")"
                : std::to_string(p.source->order() * p.source->order()) + " basis pairs");
  if (a.action == "kernel") {
    auto kb = kernel_basis(p);
    int want = (static_cast<int>(e.sub.size()) - 1) * e.quotient()->order();
    add_check(r, "kernel.rank", static_cast<int>(kb.size()) == want, std::to_string(kb.size()));
    if (e.central()) {
      std::string s;
      for (const auto& x : torsion_kernel_units(p)) s += (s.empty() ? "" : ", ") + x.str();
      r.add("kernel.torsion", "{" + s + "}", Status::verified);
      auto v = kernel_finiteness_predicate(p);
      r.summary.push_back({"finite", v.finite ? "true" : "false"});
      r.add("kernel.finite", (v.finite ? "finite: " : "no criterion applies: ") + v.clause,
            v.finite ? Status::verified : Status::inconclusive);
    }
  }
  return r;
}

// ---- units

Report cmd_units(const Opts& o, const Args& a) {
  Report r;
  r.command = "units " + a.action;
  const auto& f = a.file(0, a.action == "obstruct" ? "psi file" : "ring file");
  r.inputs.push_back({"file", f});
  if (a.action == "obstruct") {
    PsiMap p = psi_file(f);
    std::string es = a.files.size() > 1 ? a.files[1] : a.elem;
    if (es.empty()) throw Error("units obstruct: needs an element");
    r.inputs.push_back({"element", es});
    TwElement y = element_in(o, es, p.target);
    auto c = parity_obstruction(p, y);
    r.summary.push_back({"certified", c.certified ? "true" : "false"});
    r.add("certificate", c.reason, c.certified ? Status::verified : Status::inconclusive);
    r.add("mod2_support", join(c.reduction), Status::verified);
    r.add("identity_coefficient_odd", c.identity_coefficient_odd ? "true" : "false", Status::verified);
    return r;
  }
  RingPtr R = ring_file(o, f);
  if (a.action == "finiteness") {
    auto v = decide_finiteness(*R);
    r.summary.push_back({"finite", v.finite ? "true" : "false"});
    r.summary.push_back({"case", v.case_name});
    r.add("finite", v.finite ? "true" : "false", Status::verified);
    r.add("case", v.case_name, Status::verified);
    r.add("galpha", "order " + std::to_string(v.galpha_order) + " " + hist_str(v.histogram), Status::verified);
    r.add("witness", v.witness, Status::verified);
  } else if (a.action == "bicyclic") {
    r.inputs.push_back({"g", std::to_string(a.g)});
    r.inputs.push_back({"h", std::to_string(a.h)});
    bool ok = bicyclic_admissible(*R, a.g, a.h);
    r.summary.push_back({"admissible", ok ? "true" : "false"});
    r.add("admissible", ok ? "g in G_0, h in C_g^-" : "not admissible", ok ? Status::verified : Status::inconclusive);
    if (!ok) return r;
    BicyclicSpec s{R, a.g, TwElement::zero(R), TwElement::basis(R, a.h)};
    TwElement d = bicyclic_increment(s);
    r.add("unit", twisted_bicyclic(s).str(), Status::verified);
    add_check(r, "increment_square_zero", (d * d).is_zero(), "(u - 1)^2 = 0");
    add_check(r, "rewriting_identity", rewriting_identity_holds(R, a.g, a.h), "(o - u~_g) u_h u~_g = o u_h u~_g");
  }
  return r;
}

// ---- tower

Report cmd_tower(const Opts& o, const Args& a) {
  Report r;
  r.command = "tower " + a.action;
  RingPtr R;
  if (!a.alpha.empty() || !a.preset.empty()) {
    GroupPtr G = a.preset.empty() ? nullptr : checked_preset(o, a.preset, a.params);
    if (!a.preset.empty()) r.inputs.push_back({"G", a.preset + (a.params.empty() ? "" : "(" + join(a.params) + ")")});
    Cocycle c = a.alpha.empty() ? trivial_cocycle(G) : cocycle_file(o, a.alpha, G);
    if (!a.alpha.empty()) r.inputs.push_back({"alpha", a.alpha});
    require_cocycle(c, "tower cocycle");
    R = make_ring(c.group, c, 1);
  } else {
    const auto& f = a.file(0, "ring file or --G/--alpha");
    r.inputs.push_back({"file", f});
    R = ring_file(o, f);
  }
  int n = std::max(1, a.n);
  r.inputs.push_back({"n", std::to_string(n)});
  r.inputs.push_back({"samples", std::to_string(a.samples)});
  r.inputs.push_back({"seed", std::to_string(o.seed)});
  TowerContext c = make_tower(R, n);
  std::mt19937_64 rng(o.seed);
  int ok = 0, u2 = 0, torsion = 0;
  for (int s = 0; s < a.samples; ++s) {
    TwElement u = random_tower_unit(c, n, rng);
    std::string tr = "u = " + u.str();
    if (a.action == "split") {
      auto sp = split_unit(c, n, u);
      TwElement y = kernel_embed(c, n, sp.k);
      tr += " | k = " + sp.k.str() + " | s = " + sp.s.str() + " | phi(k) = " + y.str();
    } else {
      TwElement x = u * u;  // mod 2 the ring is commutative of exponent 2, so x is in U_1
      if (a.action == "usplit") {
        auto us = u_split(c, 1, n, x);
        tr += " | x = u^2 | a = " + us.a.str() + " | b = " + us.b.str();
      } else {
        for (const auto& p : iterated_split(c, 1, n, x)) {
          tr += " | U" + std::to_string(p.k) + ": " + p.x.str();
          if (p.k >= 2 && !p.x.is_one()) {
            ++u2;
            torsion += torsion_order(p.x).has_value();
          }
        }
      }
    }
    r.add("trace." + pad(s), tr, Status::verified);
    ++ok;
  }
  add_check(r, "factorizations", ok == a.samples, std::to_string(ok) + "/" + std::to_string(a.samples));
  if (a.action == "scan")
    add_check(r, "torsion_free_U2", torsion == 0,
              std::to_string(torsion) + " torsion among " + std::to_string(u2) + " nontrivial U_2 parts");
  return r;
}

// ---- case

Report cmd_case(const Opts& o, const Args& a) {
  if (a.which == "c2c2") {
    Report r = c2c2_report();
    if (o.cap_word != 12) {
      auto sc = sanov_scan(o.cap_word);
      add_check(r, "sanov.round_trip_cap", sc.round_trip_failures == 0 && sc.identity_collisions == 0,
                std::to_string(sc.words) + " words up to length " + std::to_string(o.cap_word));
      r.finalize();
    }
    return r;
  }
  if (a.which == "d8") return d8_case_study(a.n, !a.no_scan);
  return congruence_report(a.i);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twisted group ring toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Opts o;
  Args a;
  app.add_flag("--json", o.json_out, "JSON report on stdout");
  app.add_flag("--timing", o.timing, "include wall-clock timing in the report");
  app.add_option("--seed", o.seed, "seed for sampled suites (default 0)");
  app.add_option("--cap-group-order", o.cap_group, "maximum group order")->check(CLI::Range(1, FiniteGroup::kMaxOrder));
  app.add_option("--cap-conductor", o.cap_conductor, "maximum conductor")->check(CLI::Range(1, kMaxConductor));
  app.add_option("--cap-coboundary", o.cap_coboundary, "coboundary search cap")->check(CLI::PositiveNumber);
  app.add_option("--cap-word-length", o.cap_word, "Sanov word length")->check(CLI::Range(0, 14));

  auto* grp = app.add_subcommand("group", "validate or describe a group");
  grp->add_option("action", a.action)->required()->check(CLI::IsMember({"validate", "info"}));
  grp->add_option("file", a.files, "group JSON");
  grp->add_option("--preset", a.preset);
  grp->add_option("--param", a.params);

  auto* coc = app.add_subcommand("cocycle", "2-cocycle checks");
  coc->add_option("action", a.action)->required()->check(CLI::IsMember({"validate", "order", "galpha", "cohomologous"}));
  coc->add_option("files", a.files, "cocycle JSON (a second one for cohomologous)")->required();
  coc->add_option("--other", a.other, "second cocycle JSON");
  coc->add_option("--m", a.m, "coboundary values in mu_m");

  auto* rng = app.add_subcommand("ring", "twisted group ring arithmetic");
  rng->add_option("action", a.action)->required()->check(CLI::IsMember({"info", "mul", "unit", "torsion", "scan"}));
  rng->add_option("files", a.files, "element JSON (ring JSON for info/scan)")->required();
  rng->add_option("--bound", a.bound, "coefficient box for scan")->check(CLI::Range(0, 3));

  auto* ext = app.add_subcommand("ext", "extensions and the transgression map");
  ext->add_option("action", a.action)->required()->check(CLI::IsMember({"build", "psi", "kernel", "components"}));
  ext->add_option("files", a.files, "extension JSON")->required();
  ext->add_option("--chi", a.chi, "character exponents on N, comma separated");
  ext->add_option("--m", a.m, "character modulus / field conductor");
  ext->add_option("--conductor", a.conductor, "coefficient conductor (0 = smallest)");

  auto* uni = app.add_subcommand("units", "unit group questions");
  uni->set_help_flag("--help", "Print this help message and exit");  // frees --h
  uni->add_option("action", a.action)->required()->check(CLI::IsMember({"finiteness", "bicyclic", "obstruct"}));
  uni->add_option("files", a.files, "ring JSON; psi JSON and element for obstruct")->required();
  uni->add_option("--g", a.g, "group id of g");
  uni->add_option("--h", a.h, "group id of h");
  uni->add_option("--element", a.elem, "element JSON (inline or file)");

  auto* tow = app.add_subcommand("tower", "C2 tower factorizations");
  tow->add_option("action", a.action)->required()->check(CLI::IsMember({"split", "usplit", "scan"}));
  tow->add_option("files", a.files, "base ring JSON (alternative to --G/--alpha)");
  tow->add_option("--G", a.preset, "base group preset");
  tow->add_option("--param", a.params);
  tow->add_option("--alpha", a.alpha, "cocycle JSON on the base group");
  tow->add_option("--n", a.n, "levels")->check(CLI::Range(1, 4));
  tow->add_option("--samples", a.samples)->check(CLI::Range(1, 10000));

  auto* cas = app.add_subcommand("case", "case studies");
  cas->add_option("which", a.which)->required()->check(CLI::IsMember({"c2c2", "d8", "congruence"}));
  cas->add_flag("--check-all", "run every check (the default)");
  cas->add_option("--n", a.n)->check(CLI::Range(0, 4));
  cas->add_option("--i", a.i)->check(CLI::Range(1, 4));
  cas->add_flag("--no-scan", a.no_scan, "skip the bounded kernel scan");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  Report rep;
  try {
    if (grp->parsed()) rep = cmd_group(o, a);
    else if (coc->parsed()) rep = cmd_cocycle(o, a);
    else if (rng->parsed()) rep = cmd_ring(o, a);
    else if (ext->parsed()) rep = cmd_ext(o, a);
    else if (uni->parsed()) rep = cmd_units(o, a);
    else if (tow->parsed()) rep = cmd_tower(o, a);
    else rep = cmd_case(o, a);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded [" << e.cap << "]: " << e.what() << "\n";
    return 3;
  } catch (const std::overflow_error& e) {
    std::cerr << "cap exceeded [int64]: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }
  rep.finalize();
  if (o.timing)
    rep.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (o.json_out) std::cout << report_to_json(rep).dump(2) << "\n";
  else std::cout << rep.table();
  return rep.any_refuted() ? 1 : 0;
}
