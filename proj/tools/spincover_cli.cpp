// Batch verifier: reads diagram JSON, dispatches to the toolkit modules and
// emits deterministic machine-readable reports (or human-readable text).
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 input error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spincover/amalgam.hpp"
#include "spincover/clifford.hpp"
#include "spincover/closure.hpp"
#include "spincover/diagram_json.hpp"
#include "spincover/matgroups.hpp"
#include "spincover/spinrep.hpp"
#include "spincover/suite.hpp"
#include "spincover/transform.hpp"
#include "spincover/weyl.hpp"

using json = nlohmann::json;
using namespace spincover;

namespace {

struct Options {
  std::string input;
  std::string colouring = "file";  // file | max | trivial | <json array>
  std::string family = "wspin";
  std::string format = "json";
  size_t cap = 1000000;
};

uint64_t fnv1a(const std::string& data) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InputError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct LoadedInput {
  DiagramDocument doc;
  std::string digest;
};

LoadedInput load_input(const Options& opt) {
  if (opt.input.empty()) throw Error(ErrorCode::InputError, "an input file is required");
  std::string raw = read_file(opt.input);
  char hex[32];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(fnv1a(raw)));
  json j;
  try {
    j = json::parse(raw);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InputError, opt.input + ": " + e.what());
  }
  return {parse_diagram_json(j), hex};
}

Colouring pick_colouring(const Options& opt, const DiagramDocument& doc) {
  const CartanMatrix& cm = doc.cm;
  if (opt.colouring == "max") return kappa_max(cm);
  if (opt.colouring == "trivial") return Colouring::constant(cm.size(), 1);
  if (opt.colouring == "file") {
    if (doc.colouring) return *doc.colouring;
    return kappa_max(cm);
  }
  json j;
  try {
    j = json::parse(opt.colouring);
  } catch (const json::exception&) {
    throw Error(ErrorCode::InputError, "--colouring must be max, trivial or a JSON array");
  }
  if (!j.is_array() || static_cast<int>(j.size()) != cm.size())
    throw Error(ErrorCode::InputError, "--colouring array must list one value per vertex");
  Colouring k;
  for (const auto& v : j) {
    if (!v.is_number_integer() || (v != 1 && v != 2))
      throw Error(ErrorCode::InputError, "--colouring entries must be 1 or 2");
    k.values.push_back(v.get<int>());
  }
  require_admissible(cm, k);
  return k;
}

Family parse_family(const std::string& s) {
  if (s == "w") return Family::W;
  if (s == "wext") return Family::Wext;
  if (s == "wspin") return Family::Wspin;
  if (s == "wspin-coloured") return Family::WspinColoured;
  throw Error(ErrorCode::InputError, "unknown family: " + s);
}

void print_text(const json& report) {
  const json& res = report.at("results");
  std::cout << "command:  " << report.at("command").get<std::string>() << "\n";
  std::cout << "input:    " << report.at("input").get<std::string>() << "\n";
  std::cout << "pass:     " << (report.at("pass").get<bool>() ? "yes" : "no") << "\n";
  std::cout << "results:  " << res.dump(2) << "\n";
}

int emit(const Options& opt, const std::string& command, const std::string& digest,
         json results, bool pass) {
  json report;
  report["command"] = command;
  report["input"] = digest;
  report["results"] = std::move(results);
  report["pass"] = pass;
  if (opt.format == "text")
    print_text(report);
  else
    std::cout << report.dump(2) << "\n";
  return pass ? 0 : 1;
}

json relation_report_json(const RelationReport& rep) {
  json lines = json::array();
  for (const auto& l : rep.lines)
    lines.push_back({{"context", l.context}, {"relation", l.relation}, {"pass", l.pass}});
  return {{"lines", lines}, {"pass", rep.all_pass()}};
}

// -- subcommand bodies -------------------------------------------------------

int cmd_diagram_validate(const Options& opt) {
  LoadedInput in = load_input(opt);
  const CartanMatrix& cm = in.doc.cm;
  AugmentedDiagram d = augmented_diagram(cm);
  json edges = json::array();
  for (const auto& e : d.edges) {
    json ej;
    ej["pair"] = {e.i, e.j};
    ej["class"] = edge_kind_name(e.cls.kind);
    ej["q"] = e.cls.qij;
    if (e.cls.kind == EdgeKind::Infinity) ej["annotations"] = {e.cls.ann_ij, e.cls.ann_ji};
    if (e.directed) ej["direction"] = e.from_i ? "i->j" : "j->i";
    ej["m"] = e.m;
    ej["n"] = {e.n_ij, e.n_ji};
    edges.push_back(ej);
  }
  json results;
  results["n"] = cm.size();
  results["valid"] = true;
  results["edges"] = edges;
  results["components"] = components(cm);
  results["round_trip_exact"] = d.to_matrix() == cm;
  return emit(opt, "diagram validate", in.digest, results, true);
}

int cmd_colourings(const Options& opt) {
  LoadedInput in = load_input(opt);
  const CartanMatrix& cm = in.doc.cm;
  AdmGraph g = adm_graph(cm);
  Colouring kmax = kappa_max(cm);
  auto adm = enumerate_admissible(cm);
  json results;
  results["kappa_max"] = kmax.values;
  results["c_of_kappa_max"] = c_value(cm, kmax);
  results["forced_ones"] = forced_ones(cm);
  results["adm_components"] = g.comps;
  json all = json::array();
  for (const auto& k : adm)
    all.push_back({{"colouring", k.values},
                   {"c", c_value(cm, k)},
                   {"proper", is_proper(cm, k)}});
  results["admissible"] = all;
  results["count"] = adm.size();
  if (in.doc.colouring) {
    results["input_colouring_admissible"] = is_admissible(cm, *in.doc.colouring);
  }
  return emit(opt, "colourings", in.digest, results, true);
}

int cmd_transform(const Options& opt, bool do_unfold) {
  LoadedInput in = load_input(opt);
  Colouring k = pick_colouring(opt, in.doc);
  json results;
  if (do_unfold) {
    UnfoldResult un = unfold(in.doc.cm, k);
    results = diagram_to_json(un.cm, un.colouring);
    results["origin"] = un.origin;
  } else {
    CartanMatrix dl = dl_reduce(in.doc.cm, k);
    results = diagram_to_json(dl, k);
    results["c_preserved"] = check_c_preserved(in.doc.cm, k);
  }
  return emit(opt, do_unfold ? "transform unfold" : "transform dl", in.digest, results, true);
}

int cmd_clifford_check(const Options& opt) {
  json checks = json::array();
  bool all = true;
  auto add = [&](const std::string& name, bool ok) {
    checks.push_back({{"check", name}, {"pass", ok}});
    all &= ok;
  };
  CliffordElement s = spin_generator_S(1);
  add("S(pi/4)^2 = e1e2", s * s == CliffordElement::blade(2, {1, 2}));
  CliffordElement s8 = CliffordElement::one(2);
  for (int t = 0; t < 8; ++t) s8 = s8 * s;
  add("S(pi/4)^8 = 1", s8 == CliffordElement::one(2));
  for (long k = 0; k < 8; ++k)
    add("rho2(S(" + std::to_string(k) + "pi/4)) = D(" + std::to_string(k) + "pi/2)",
        spin_generator_S(k).twisted_adjoint() == rot_D(2 * k));
  IdentityReport conj = conjugation_identity_suite();
  add("conjugation identity suite (" + std::to_string(conj.lines.size()) + " identities)",
      conj.all_pass());
  for (long k = 0; k < 8; ++k) {
    add("rho^.zeta~_p = zeta_p.rho2 (k=" + std::to_string(k) + ")",
        rho_hat(zeta_tilde_p(k)) == zeta_p(2 * k));
    SO2xSU2Element sq = zeta_tilde_l(k) * zeta_tilde_l(k);
    add("rho^.zeta~_l.sq = zeta_l.rho2 (k=" + std::to_string(k) + ")",
        rho_hat(sq) == zeta_l(2 * k));
    add("zeta~_p = eps~_34 in Spin(4) (k=" + std::to_string(k) + ")",
        so2xsu2_to_spin4(zeta_tilde_p(k)) == spin_generator_S(k).embed(4, {3, 4}));
    add("right proj . eta~_p = eps~_12 (k=" + std::to_string(k) + ")",
        spin4_project(spin_generator_S(k).embed(4, {3, 4}), Spin4Side::Right) ==
            spin_generator_S(k).embed(3, {1, 2}));
  }
  std::string digest = "0000000000000000";
  return emit(opt, "clifford check", digest, json{{"checks", checks}, {"pass", all}}, all);
}

int cmd_rank2_verify(const Options& opt) {
  LoadedInput in = load_input(opt);
  Colouring k = pick_colouring(opt, in.doc);
  json results;
  bool all = true;
  for (Family f : {Family::W, Family::Wext, Family::Wspin, Family::WspinColoured}) {
    RelationReport rep = verify_relations(in.doc.cm, k, f);
    results[family_name(f)] = relation_report_json(rep);
    all &= rep.all_pass();
  }
  results["colouring"] = k.values;
  return emit(opt, "rank2 verify", in.digest, results, all);
}

int cmd_amalgam_utilde(const Options& opt) {
  LoadedInput in = load_input(opt);
  const CartanMatrix& cm = in.doc.cm;
  if (cm.size() != 2)
    throw Error(ErrorCode::RankTwoOnly, "amalgam utilde needs a rank-2 diagram");
  long r = -cm.a(1, 2), s = -cm.a(2, 1);
  Colouring k = pick_colouring(opt, in.doc);
  auto g = AmalgamGroup::build(r, s, true, &k);
  auto st = g->utilde_structure();
  json orders = json::array();
  for (const auto& [o, c] : st.element_orders) orders.push_back({{"order", o}, {"count", c}});
  json results;
  results["r"] = r;
  results["s"] = s;
  results["order"] = st.order;
  results["abelian"] = st.abelian;
  results["iso_tag"] = utilde_kind_name(st.iso_tag);
  results["element_orders"] = orders;
  results["torus_order"] = 4;
  return emit(opt, "amalgam utilde", in.digest, results, true);
}

int cmd_spinrep_image(const Options& opt) {
  LoadedInput in = load_input(opt);
  SpinRep rep = SpinRep::build(in.doc.cm);
  auto img = rep.xi_image(opt.cap);
  json results;
  results["dimension"] = rep.dimension();
  results["order"] = img.order();
  results["cap_hit"] = img.cap_hit;
  results["generator_count"] = in.doc.cm.size();
  return emit(opt, "spinrep image", in.digest, results, !img.cap_hit);
}

int cmd_weyl_orders(const Options& opt) {
  LoadedInput in = load_input(opt);
  Colouring k = pick_colouring(opt, in.doc);
  OrderFormulaReport rep = order_formula_check(in.doc.cm, k, opt.cap);
  json results;
  results["W"] = rep.w;
  results["Wtilde"] = rep.wtilde;
  results["What"] = rep.what;
  results["c"] = rep.c;
  results["formula"] = rep.pass() ? "pass" : "fail";
  return emit(opt, "weyl orders", in.digest, results, rep.pass());
}

int cmd_weyl_verify(const Options& opt) {
  LoadedInput in = load_input(opt);
  Colouring k = pick_colouring(opt, in.doc);
  Family f = parse_family(opt.family);
  RelationReport rep = verify_relations(in.doc.cm, k, f);
  json results = relation_report_json(rep);
  results["family"] = family_name(f);
  results["colouring"] = k.values;
  return emit(opt, "weyl verify", in.digest, results, rep.all_pass());
}

int cmd_weyl_presentation(const Options& opt) {
  LoadedInput in = load_input(opt);
  Family f = parse_family(opt.family);
  Colouring k = pick_colouring(opt, in.doc);
  Presentation p =
      presentation(in.doc.cm, f, f == Family::WspinColoured ? &k : nullptr);
  json gens = json::array();
  for (int i = 1; i <= p.n; ++i) gens.push_back(p.generator_prefix() + std::to_string(i));
  json results;
  results["family"] = family_name(f);
  results["generators"] = gens;
  results["relators"] = p.relators;
  return emit(opt, "weyl presentation", in.digest, results, true);
}

int cmd_suite(const Options& opt) {
  SuiteResult res = run_acceptance_suite();
  for (const auto& c : res.criteria)
    std::fprintf(stderr, "%s criterion %2d: %s (%.0f ms)\n", c.pass ? "PASS" : "FAIL",
                 c.number, c.name.c_str(), c.ms);
  json j = suite_to_json(res);
  return emit(opt, "suite", "0000000000000000", j, res.all_pass());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computational toolkit for spin covers and spin-extended Weyl groups"};
  app.require_subcommand(1);
  Options opt;
  // SPINCOVER_SEED is reserved; the exact pipelines take no randomness from
  // the environment.
  [[maybe_unused]] const char* seed_env = std::getenv("SPINCOVER_SEED");

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) sub->add_option("input", opt.input, "diagram JSON file")->required();
    else sub->add_option("input", opt.input, "diagram JSON file (ignored)");
    sub->add_option("--colouring", opt.colouring, "max | trivial | <json array> (default: file)");
    sub->add_option("--family", opt.family, "w | wext | wspin | wspin-coloured");
    sub->add_option("--cap", opt.cap, "closure cap (default 10^6)");
    sub->add_option("--format", opt.format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* diagram = app.add_subcommand("diagram", "diagram operations");
  diagram->require_subcommand(1);
  CLI::App* dval = diagram->add_subcommand("validate", "validate a generalized Cartan matrix");
  add_common(dval, true);
  CLI::App* col = app.add_subcommand("colourings", "admissible colourings and c values");
  add_common(col, true);
  CLI::App* transform = app.add_subcommand("transform", "diagram transforms");
  transform->require_subcommand(1);
  CLI::App* tdl = transform->add_subcommand("dl", "doubly laced reduction");
  add_common(tdl, true);
  CLI::App* tun = transform->add_subcommand("unfold", "simply laced unfolding");
  add_common(tun, true);
  CLI::App* cliff = app.add_subcommand("clifford", "Clifford/matrix kernel checks");
  cliff->require_subcommand(1);
  CLI::App* ccheck = cliff->add_subcommand("check", "identity battery");
  add_common(ccheck, false);
  CLI::App* rank2 = app.add_subcommand("rank2", "rank-2 model checks");
  rank2->require_subcommand(1);
  CLI::App* r2v = rank2->add_subcommand("verify", "verify all family relations per pair");
  add_common(r2v, true);
  CLI::App* ama = app.add_subcommand("amalgam", "rank-2 amalgam operations");
  ama->require_subcommand(1);
  CLI::App* aut = ama->add_subcommand("utilde", "structure of the amalgamated subgroup");
  add_common(aut, true);
  CLI::App* srep = app.add_subcommand("spinrep", "generalized spin representation");
  srep->require_subcommand(1);
  CLI::App* simg = srep->add_subcommand("image", "finite image of the spin-extended Weyl group");
  add_common(simg, true);
  CLI::App* weyl = app.add_subcommand("weyl", "Weyl group tower");
  weyl->require_subcommand(1);
  CLI::App* worders = weyl->add_subcommand("orders", "orders of W, W~, W^ and the formulas");
  add_common(worders, true);
  CLI::App* wverify = weyl->add_subcommand("verify", "relation verification for one family");
  add_common(wverify, true);
  CLI::App* wpres = weyl->add_subcommand("presentation", "emit the family presentation");
  add_common(wpres, true);
  CLI::App* suite = app.add_subcommand("suite", "full acceptance battery");
  add_common(suite, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (dval->parsed()) return cmd_diagram_validate(opt);
    if (col->parsed()) return cmd_colourings(opt);
    if (tdl->parsed()) return cmd_transform(opt, false);
    if (tun->parsed()) return cmd_transform(opt, true);
    if (ccheck->parsed()) return cmd_clifford_check(opt);
    if (r2v->parsed()) return cmd_rank2_verify(opt);
    if (aut->parsed()) return cmd_amalgam_utilde(opt);
    if (simg->parsed()) return cmd_spinrep_image(opt);
    if (worders->parsed()) return cmd_weyl_orders(opt);
    if (wverify->parsed()) return cmd_weyl_verify(opt);
    if (wpres->parsed()) return cmd_weyl_presentation(opt);
    if (suite->parsed()) return cmd_suite(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no subcommand\n";
  return 2;
}
