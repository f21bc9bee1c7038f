#include "homlong/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <ostream>
#include <sstream>

#include "homlong/error.hpp"

namespace homlong::cli {

using io::Json;
namespace fs = std::filesystem;

Json to_json(const RunReport& r) {
  Json j;
  j["command"] = r.command;
  j["inputs"] = r.inputs;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e;
    e["id"] = c.id;
    e["passed"] = c.passed;
    e["witness"] = c.witness;
    e["detail"] = c.detail;
    e["informational"] = c.informational;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["messages"] = r.messages;
  j["exit_code"] = r.exit_code;
  return j;
}

RunReport report_from_json(const Json& j) {
  try {
    RunReport r;
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs").get<std::vector<std::string>>();
    for (const auto& e : j.at("checks")) {
      AxiomCheck c;
      c.id = e.at("id").get<std::string>();
      c.passed = e.at("passed").get<bool>();
      c.witness = e.at("witness").get<std::vector<std::size_t>>();
      c.detail = e.at("detail").get<std::string>();
      c.informational = e.at("informational").get<bool>();
      r.checks.push_back(std::move(c));
    }
    r.messages = j.at("messages").get<std::vector<std::string>>();
    r.exit_code = j.at("exit_code").get<int>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed report: ") + e.what());
  }
}

std::string render_text(const RunReport& r, bool verbose) {
  std::ostringstream os;
  os << r.command;
  for (const auto& in : r.inputs) os << " " << in;
  os << "\n";
  std::size_t passed = 0, failed = 0;
  for (const auto& c : r.checks) {
    const char* tag = c.informational ? (c.passed ? "INFO yes" : "INFO no ") : (c.passed ? "PASS    " : "FAIL    ");
    if (!c.informational) ++(c.passed ? passed : failed);
    os << tag << " " << c.id;
    if (!c.passed && !c.witness.empty()) os << "  witness " << format_witness(c.witness);
    if (!c.detail.empty() && (verbose || !c.passed || c.informational)) {
      constexpr std::size_t kShort = 160;
      if (verbose || c.detail.size() <= kShort)
        os << "  " << c.detail;
      else
        os << "  " << c.detail.substr(0, kShort) << " ...";
    }
    os << "\n";
  }
  for (const auto& m : r.messages) os << m << "\n";
  os << passed << " passed, " << failed << " failed, exit " << r.exit_code << "\n";
  return os.str();
}

int verdict_code(const std::vector<AxiomCheck>& checks) {
  for (const auto& c : checks)
    if (!c.informational && !c.passed) return 1;
  return 0;
}

namespace {

struct Options {
  std::string format = "text";
  bool verbose = false;
  bool diagnose = false;

  std::string file, kind;
  std::string subject, what;
  std::string ctx, u, v, w, m, n, r, d, base, phi, module, comodule, out;
  std::vector<std::string> x;
  std::string side = "both";
  std::string mu, set, shape = "diagonal";
  unsigned threads = 1;
  std::uint64_t seed = 0;
};

class Session {
 public:
  explicit Session(RunReport& report) : report_(report) {}

  Json read(const std::string& path) {
    report_.inputs.push_back(path);
    return io::read_json_file(path);
  }
  static fs::path dir(const std::string& path) { return fs::path(path).parent_path(); }

  BraidingContext context(const std::string& path) {
    need(path, "--ctx");
    return io::parse_context(read(path), dir(path));
  }
  HomLongDimodule dimodule(const std::string& path, const char* flag) {
    need(path, flag);
    Json j = read(path);
    const std::string k = io::detect_kind(j);
    if (k != "long-dimodule" && k != "halpha-dimodule")
      throw Error(ErrorKind::ParseError, path + ": expected a long-dimodule, found " + k);
    if (k == "halpha-dimodule") return io::parse_halpha(j, dir(path)).as_long();
    return io::parse_dimodule(j, dir(path));
  }

  static void need(const std::string& value, const char* flag) {
    if (value.empty()) throw Error(ErrorKind::ParseError, std::string("missing ") + flag);
  }

 private:
  RunReport& report_;
};

void require_over_context(const BraidingContext& ctx, const HomLongDimodule& m) {
  HomLongDimodule probe{ctx.H, ctx.B, 0, {}, {}, {}, {}};
  if (!same_base(probe, m))
    throw Error(ErrorKind::MismatchedBase, "a dimodule does not live over the (H, B) of the context");
}

void add(RunReport& r, const AxiomReport& rep, const std::string& prefix = "") {
  for (auto c : rep.checks()) {
    c.id = prefix + c.id;
    r.checks.push_back(std::move(c));
  }
}

HomBialgebra as_algebra_only(const HomAlgebra& a) {
  HomBialgebra h;
  h.dim = a.dim;
  h.mult = a.mult;
  h.unit = a.unit;
  h.twist = a.twist;
  h.basis = a.basis;
  return h;
}

void cmd_validate(const Options& o, RunReport& r) {
  Session s(r);
  Session::need(o.file, "<file>");
  const Json j = s.read(o.file);
  const fs::path base = Session::dir(o.file);
  const std::string kind = o.kind.empty() ? io::detect_kind(j) : o.kind;
  r.messages.push_back("kind: " + kind);
  if (kind == "hom-algebra" || kind == "hom-coalgebra" || kind == "hom-bialgebra" || kind == "hom-hopf") {
    Json copy = j;
    copy["kind"] = kind;
    io::AlgebraDocument doc = io::parse_algebra(copy, base);
    if (kind == "hom-algebra") {
      add(r, validate_hom_algebra(doc.algebra.algebra()));
    } else if (kind == "hom-coalgebra") {
      add(r, validate_hom_coalgebra(doc.algebra.coalgebra()));
    } else {
      add(r, validate_tower(doc.algebra));
      if (doc.R) add(r, validate_quasitriangular(doc.algebra, *doc.R));
      if (doc.form) add(r, validate_coquasitriangular(doc.algebra, *doc.form));
    }
  } else if (kind == "hom-module") {
    io::ModuleDocument doc = io::parse_module(j, base);
    add(r, validate_hom_module(doc.over->algebra(), doc.module));
  } else if (kind == "hom-comodule") {
    io::ComoduleDocument doc = io::parse_comodule(j, base);
    add(r, validate_hom_comodule(doc.over->coalgebra(), doc.comodule));
  } else if (kind == "yd-module") {
    io::YDDocument doc = io::parse_yd(j, base);
    add(r, validate_hom_module(doc.over->algebra(), doc.yd.module()), "module:");
    add(r, validate_hom_comodule(doc.over->coalgebra(), doc.yd.comodule()), "comodule:");
    add(r, check_yd(*doc.over, doc.yd));
  } else if (kind == "long-dimodule") {
    add(r, validate_long_dimodule(io::parse_dimodule(j, base)));
  } else if (kind == "halpha-dimodule") {
    add(r, validate_halpha_dimodule(io::parse_halpha(j, base)));
  } else if (kind == "operator") {
    add(r, check_long_equation(io::parse_operator(j)));
  } else if (kind == "context") {
    io::ContextDocument doc = io::parse_context_document(j, base);
    add(r, validate_quasitriangular(*doc.H, doc.R), "H:");
    add(r, validate_coquasitriangular(*doc.B, doc.form), "B:");
  } else {
    throw Error(ErrorKind::ParseError, "unknown kind '" + kind + "'");
  }
}

void cmd_check(const Options& o, RunReport& r) {
  Session s(r);
  const std::string& sub = o.subject;
  if (sub == "ybe" || sub == "hexagon") {
    BraidingContext ctx = s.context(o.ctx);
    HomLongDimodule u = s.dimodule(o.u, "-U"), v = s.dimodule(o.v, "-V"), w = s.dimodule(o.w, "-W");
    for (const auto* m : {&u, &v, &w}) require_over_context(ctx, *m);
    add(r, sub == "ybe" ? check_qybe(ctx, u, v, w) : check_hexagons(ctx, u, v, w));
  } else if (sub == "symmetry") {
    BraidingContext ctx = s.context(o.ctx);
    HomLongDimodule m = s.dimodule(o.m, "-M"), n = s.dimodule(o.n, "-N");
    require_over_context(ctx, m);
    require_over_context(ctx, n);
    AxiomReport rep = check_symmetry(ctx, m, n, o.diagnose);
    add(r, rep);
    if (const AxiomCheck* h = rep.find("hypotheses"); h && !h->passed) {
      r.messages.push_back("hypotheses unmet: C² evaluated for diagnosis only");
      r.exit_code = 2;
    }
  } else if (sub == "braid") {
    BraidingContext ctx = s.context(o.ctx);
    HomLongDimodule m = s.dimodule(o.m, "-M"), n = s.dimodule(o.n, "-N");
    require_over_context(ctx, m);
    require_over_context(ctx, n);
    add(r, check_braid_morphism(ctx, m, n));
    add(r, check_braid_inverse(ctx, m, n));
  } else if (sub == "embedding") {
    BraidingContext ctx = s.context(o.ctx);
    HomLongDimodule m = s.dimodule(o.m, "-M");
    require_over_context(ctx, m);
    add(r, check_hb_yd(ctx, m));
    if (!o.n.empty()) {
      HomLongDimodule n = s.dimodule(o.n, "-N");
      require_over_context(ctx, n);
      add(r, check_braiding_compatibility(ctx, m, n));
    }
  } else if (sub == "longeq") {
    Session::need(o.r, "-R");
    add(r, check_long_equation(io::parse_operator(s.read(o.r))));
  } else if (sub == "yd") {
    if (!o.ctx.empty()) {
      BraidingContext ctx = s.context(o.ctx);
      HomLongDimodule m = s.dimodule(o.m, "-M");
      require_over_context(ctx, m);
      add(r, check_hb_yd(ctx, m));
    } else {
      Session::need(o.m, "-M");
      io::YDDocument doc = io::parse_yd(s.read(o.m), Session::dir(o.m));
      add(r, check_yd(*doc.over, doc.yd));
    }
  } else if (sub == "snake") {
    HomLongDimodule m = s.dimodule(o.m, "-M");
    if (o.side == "left" || o.side == "both") {
      DualityData d = left_dual(m);
      add(r, check_snake(m, d, DualSide::Left), "left:");
      add(r, check_duality_morphisms(m, d), "left:");
    }
    if (o.side == "right" || o.side == "both") {
      DualityData d = right_dual(m);
      add(r, check_snake(m, d, DualSide::Right), "right:");
      add(r, check_duality_morphisms(m, d), "right:");
    }
  } else if (sub == "roundtrip") {
    HomLongDimodule m = s.dimodule(o.m, "-M");
    HomModule smash = to_smash_module(m);
    add(r, validate_hom_module(smash_algebra(*m.H, *m.B), smash), "smash:");
    HomLongDimodule back = from_smash_module(smash, m.H, m.B);
    AxiomReport rep;
    if (same_structure(back, m))
      rep.pass("dimodule-roundtrip");
    else
      rep.fail("dimodule-roundtrip", {}, "dimodule differs after passing through the smash module");
    HomModule again = to_smash_module(back);
    if (again.action == smash.action && again.nu == smash.nu)
      rep.pass("module-roundtrip");
    else
      rep.fail("module-roundtrip", {}, "smash module differs after passing through the dimodule");
    add(r, rep);
  } else if (sub == "coherence") {
    HomLongDimodule u = s.dimodule(o.u, "-U"), v = s.dimodule(o.v, "-V"), w = s.dimodule(o.w, "-W");
    std::vector<HomLongDimodule> fourth;
    for (const auto& p : o.x) fourth.push_back(s.dimodule(p, "-X"));
    if (fourth.empty()) fourth.push_back(w);
    require_same_base(u, v);
    require_same_base(u, w);
    for (const auto& x : fourth) require_same_base(u, x);
    add(r, check_coherence(u, v, w, fourth));
  } else {
    throw Error(ErrorKind::ParseError, "unknown subject '" + sub + "'");
  }
}

void cmd_build(const Options& o, RunReport& r) {
  Session s(r);
  Session::need(o.out, "-o");
  const std::string& what = o.what;
  Json result;
  if (what == "braid") {
    BraidingContext ctx = s.context(o.ctx);
    HomLongDimodule m = s.dimodule(o.m, "-M"), n = s.dimodule(o.n, "-N");
    require_over_context(ctx, m);
    require_over_context(ctx, n);
    BraidOperator c = long_braiding(ctx, m, n);
    result = io::map_to_json(c.matrix, io::tensor_basis(m.basis, n.basis), io::tensor_basis(n.basis, m.basis));
    add(r, check_braid_morphism(ctx, m, n));
    add(r, check_braid_inverse(ctx, m, n));
  } else if (what == "dual") {
    HomLongDimodule m = s.dimodule(o.m, "-M");
    const bool right = o.side == "right";
    DualityData d = right ? right_dual(m) : left_dual(m);
    result = io::to_json(d.dual);
    add(r, validate_long_dimodule(d.dual), "dual:");
    add(r, check_snake(m, d, right ? DualSide::Right : DualSide::Left));
    add(r, check_duality_morphisms(m, d));
  } else if (what == "tensor") {
    HomLongDimodule m = s.dimodule(o.m, "-M"), n = s.dimodule(o.n, "-N");
    require_same_base(m, n);
    HomLongDimodule t = tensor_dimodule(m, n);
    result = io::to_json(t);
    add(r, validate_long_dimodule(t));
  } else if (what == "twist") {
    Session::need(o.base, "--base");
    Session::need(o.phi, "--phi");
    io::AlgebraDocument doc = io::parse_algebra(s.read(o.base), Session::dir(o.base));
    Matrix phi = io::parse_matrix_file(s.read(o.phi), "phi");
    HomBialgebra h = yau_twist(doc.algebra, phi);
    result = io::to_json(h, h.is_hopf() ? "hom-hopf" : "hom-bialgebra");
    add(r, validate_tower(h));
  } else if (what == "dimodule-solution") {
    Session::need(o.d, "-D");
    HAlphaLongDimodule d = io::parse_halpha(s.read(o.d), Session::dir(o.d));
    add(r, validate_halpha_dimodule(d), "dimodule:");
    OperatorOnTensorSquare sol = dimodule_solution(d);
    result = io::to_json(sol);
    add(r, check_long_equation(sol));
  } else if (what == "extension") {
    HAlphaLongDimodule ext;
    if (!o.module.empty()) {
      io::ModuleDocument doc = io::parse_module(s.read(o.module), Session::dir(o.module));
      ext = module_extension(doc.over, doc.module);
    } else if (!o.comodule.empty()) {
      io::ComoduleDocument doc = io::parse_comodule(s.read(o.comodule), Session::dir(o.comodule));
      ext = comodule_extension(doc.over, doc.comodule);
    } else {
      throw Error(ErrorKind::ParseError, "missing --module or --comodule");
    }
    result = io::to_json(ext);
    add(r, validate_halpha_dimodule(ext));
  } else if (what == "smash") {
    HomLongDimodule m = s.dimodule(o.m, "-M");
    HomAlgebra a = smash_algebra(*m.H, *m.B);
    HomModule sm = to_smash_module(m);
    result = io::to_json(sm, io::to_json(as_algebra_only(a), "hom-algebra"));
    add(r, validate_hom_module(a, sm));
  } else {
    throw Error(ErrorKind::ParseError, "unknown construction '" + what + "'");
  }
  io::write_json_file(o.out, result);
  r.messages.push_back("wrote " + o.out);
}

std::vector<Scalar> parse_set(const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = item.find_last_not_of(" \t");
    out.push_back(Scalar::parse(item.substr(b, e - b + 1)));
  }
  return out;
}

void cmd_search(const Options& o, RunReport& r) {
  Session s(r);
  Matrix mu = Matrix::identity(1);
  if (!o.mu.empty()) mu = io::parse_matrix_file(s.read(o.mu), "mu");
  if (o.shape != "diagonal" && o.shape != "full")
    throw Error(ErrorKind::ParseError, "--shape must be diagonal or full");
  const SearchShape shape = o.shape == "full" ? SearchShape::Full : SearchShape::Diagonal;
  std::vector<OperatorOnTensorSquare> found = search_solutions(mu, parse_set(o.set), shape, o.threads);
  std::size_t bad = 0;
  Json list = Json::array();
  for (const auto& op : found) {
    if (!solves_long_equation(op)) ++bad;
    list.push_back(io::to_json(op));
  }
  AxiomReport rep;
  if (bad == 0)
    rep.pass("solutions-verified", std::to_string(found.size()) + " solutions re-checked");
  else
    rep.fail("solutions-verified", {}, std::to_string(bad) + " returned operators fail the long equation");
  add(r, rep);
  r.messages.push_back(std::to_string(found.size()) + " solutions");
  if (!o.out.empty()) {
    io::write_json_file(o.out, list);
    r.messages.push_back("wrote " + o.out);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact checks for Hom-Hopf algebras, Hom-Long dimodules and the Hom-Long equation", "homlong"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--verbose", o.verbose, "show details of passing checks");
  app.add_flag("--diagnose", o.diagnose, "evaluate identities whose hypotheses are unmet");
  app.add_option("--seed", o.seed, "accepted for scripting parity; no command is randomized");

  auto* validate = app.add_subcommand("validate", "check every axiom of a definition file");
  validate->add_option("file", o.file)->required();
  validate->add_option("--kind", o.kind, "override the detected kind");

  auto* check = app.add_subcommand("check", "check one identity");
  check->add_option("subject", o.subject,
                    "ybe|hexagon|symmetry|longeq|yd|snake|roundtrip|coherence|braid|embedding")
      ->required();
  check->add_option("--ctx", o.ctx);
  check->add_option("-U", o.u);
  check->add_option("-V", o.v);
  check->add_option("-W", o.w);
  check->add_option("-M", o.m);
  check->add_option("-N", o.n);
  check->add_option("-R", o.r);
  check->add_option("-X", o.x, "extra fourth objects for the pentagon");
  check->add_option("--side", o.side, "left|right|both")->check(CLI::IsMember({"left", "right", "both"}));

  auto* build = app.add_subcommand("build", "construct a map or object and write it as JSON");
  build->add_option("what", o.what, "braid|dual|tensor|twist|dimodule-solution|extension|smash")->required();
  build->add_option("--ctx", o.ctx);
  build->add_option("-M", o.m);
  build->add_option("-N", o.n);
  build->add_option("-D", o.d);
  build->add_option("--base", o.base);
  build->add_option("--phi", o.phi);
  build->add_option("--module", o.module);
  build->add_option("--comodule", o.comodule);
  build->add_option("--side", o.side)->check(CLI::IsMember({"left", "right", "both"}));
  build->add_option("-o", o.out);

  auto* search = app.add_subcommand("search", "enumerate solutions of the long equation on a grid");
  search->add_option("--mu", o.mu, "matrix file (default the 1x1 identity)");
  search->add_option("--set", o.set, "comma separated coefficients")->required();
  search->add_option("--shape", o.shape, "diagonal|full")->check(CLI::IsMember({"diagonal", "full"}));
  search->add_option("-o", o.out);
  search->add_option("--threads", o.threads)->check(CLI::Range(1u, 64u));

  std::vector<std::string> argv_store{"homlong"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  RunReport r;
  std::function<void(const Options&, RunReport&)> handler;
  if (validate->parsed()) {
    r.command = "validate";
    handler = cmd_validate;
  } else if (check->parsed()) {
    r.command = "check " + o.subject;
    handler = cmd_check;
  } else if (build->parsed()) {
    r.command = "build " + o.what;
    handler = cmd_build;
  } else {
    r.command = "search";
    handler = cmd_search;
  }

  try {
    handler(o, r);
    if (r.exit_code == 0) r.exit_code = verdict_code(r.checks);
  } catch (const std::exception& e) {
    r.exit_code = 2;
    r.messages.push_back(std::string("error: ") + e.what());
  }

  if (o.format == "json")
    out << to_json(r).dump(2) << "\n";
  else
    out << render_text(r, o.verbose);
  return r.exit_code;
}

}  // namespace homlong::cli
