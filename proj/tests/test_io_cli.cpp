#include <doctest.h>

#include <fstream>
#include <optional>
#include <sstream>
#include <unistd.h>

#include "homlong/cli.hpp"
#include "homlong/error.hpp"
#include "homlong/fixtures.hpp"
#include "homlong/io.hpp"
#include "support.hpp"

using namespace homlong;
namespace fx = homlong::fixtures;
namespace fs = std::filesystem;
using io::Json;

namespace {

struct Run {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Run cli_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  return invoke(std::move(args));
}

std::string d(const std::string& name) { return testing::data(name); }

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / ("homlong-io-" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string write_text(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::optional<Json> check_line(const Json& report, const std::string& id) {
  for (const auto& c : report["checks"])
    if (c["id"] == id) return c;
  return std::nullopt;
}

bool has_message(const Json& report, const std::string& needle) {
  for (const auto& m : report["messages"])
    if (m.get<std::string>().find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("scalars and matrices in JSON") {
  CHECK(io::scalar_from_json(Json(3), "x") == Scalar(3));
  CHECK(io::scalar_from_json(Json("3/6"), "x") == Scalar(1, 2));
  CHECK(io::scalar_from_json(Json("-4"), "x") == Scalar(-4));
  CHECK(io::to_json(Scalar(1, 2)) == Json("1/2"));
  CHECK(io::to_json(Scalar(-7)) == Json(-7));
  for (const Json& bad : {Json("a/b"), Json("1/0"), Json(1.5), Json::array(), Json(nullptr)}) {
    try {
      io::scalar_from_json(bad, "entry");
      FAIL("expected ParseError for " << bad.dump());
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
    }
  }
  testing::Rng rng(testing::seed());
  for (int t = 0; t < 20; ++t) {
    Matrix m = testing::random_matrix(rng, 1 + t % 3, 1 + t % 4);
    CHECK(io::matrix_from_json(io::to_json(m), "m") == m);
  }
  CHECK_THROWS_AS(io::matrix_from_json(Json::parse("[[1,2],[3]]"), "m"), Error);
}

TEST_CASE("malformed files report line and column") {
  const std::string p = write_text("bad.json", "{\n  \"a\": [1,\n  2,,]\n}");
  try {
    io::read_json_file(p);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("bad.json:3:5") != std::string::npos);
  }
  CHECK_THROWS_AS(io::read_json_file(scratch() / "missing.json"), Error);
}

TEST_CASE("structures survive a JSON round trip") {
  for (const HomBialgebra& h : {fx::cyclic_group(2), fx::twisted_z4(), fx::twisted_sweedler()}) {
    Json j = io::to_json(h, "hom-hopf");
    io::AlgebraDocument doc = io::parse_algebra(j);
    CHECK(doc.kind == "hom-hopf");
    CHECK(doc.algebra == h);
    CHECK(io::detect_kind(j) == "hom-hopf");
  }
  Json q = io::to_json(fx::cyclic_group(2), "hom-hopf", fx::r_z2(), fx::form_z2());
  io::AlgebraDocument qd = io::parse_algebra(q);
  REQUIRE(qd.R);
  REQUIRE(qd.form);
  CHECK(*qd.R == fx::r_z2());
  CHECK(*qd.form == fx::form_z2());

  OperatorOnTensorSquare r = diagonal_solution(Vector{1, Scalar(2, 3)}, Matrix{{1, 3}, {5, Scalar(-7, 2)}});
  OperatorOnTensorSquare back = io::parse_operator(io::to_json(r));
  CHECK(back.matrix == r.matrix);
  CHECK(back.mu == r.mu);
  CHECK(io::detect_kind(io::to_json(r)) == "operator");

  AlgebraRef h = share(fx::cyclic_group(2));
  HomLongDimodule c = canonical_dimodule(h, h);
  Json cj = io::to_json(c);
  HomLongDimodule cb = io::parse_dimodule(cj);
  CHECK(same_structure(cb, c));
  CHECK(io::detect_kind(cj) == "long-dimodule");

  HAlphaLongDimodule e = comodule_extension(h, fx::sign_comodule());
  HAlphaLongDimodule eb = io::parse_halpha(io::to_json(e));
  CHECK(eb.action == e.action);
  CHECK(eb.coaction == e.coaction);
  CHECK(eb.mu == e.mu);
}

TEST_CASE("fixture files parse into the structures they name") {
  io::AlgebraDocument kz2 = io::parse_algebra(io::read_json_file(d("kz2_hopf.json")));
  CHECK(kz2.algebra == fx::cyclic_group(2));
  CHECK(*kz2.R == fx::r_z2());
  BraidingContext ctx = io::parse_context(io::read_json_file(d("ctx.json")), testing::data_dir());
  CHECK(ctx.H->dim == 2);
  CHECK(ctx.B->dim == 2);
  HomLongDimodule sign = io::load<HomLongDimodule>(d("sign.json"), io::parse_dimodule);
  CHECK(sign.action == fx::sign_dimodule().action);
  CHECK(sign.coaction == fx::sign_dimodule().coaction);
}

TEST_CASE("validate exit codes") {
  Run ok = cli_json({"validate", d("kz2.json")});
  CHECK(ok.code == 0);
  CHECK(ok.json()["checks"].size() == 12);
  CHECK(ok.json()["exit_code"] == 0);

  Run broken = cli_json({"validate", d("broken.json")});
  CHECK(broken.code == 1);
  std::optional<Json> inv = check_line(broken.json(), "alpha-invertible");
  REQUIRE(inv);
  CHECK((*inv)["passed"] == false);
  CHECK((*inv)["witness"] == Json::array({1}));

  CHECK(invoke({"validate", d("nosuch.json")}).code == 2);
  CHECK(invoke({"validate", write_text("bad2.json", "{\"mult\": [[1,")}).code == 2);
  // a kind override that does not fit the file
  CHECK(invoke({"validate", d("kz2.json"), "--kind", "hom-module"}).code == 2);

  for (const char* f : {"kz2_hopf.json", "kz4.json", "sign.json", "canonical.json", "unit.json", "sign_module.json",
                        "sign_comodule.json", "sign_ext.json", "ctx.json", "z4_modreg.json", "kz4h_ctx.json"}) {
    CAPTURE(f);
    CHECK(invoke({"validate", d(f)}).code == 0);
  }
  CHECK(invoke({"validate", d("flip12.json")}).code == 1);
}

TEST_CASE("check subcommands") {
  const std::string ctx = d("ctx.json");
  CHECK(invoke({"check", "ybe", "--ctx", ctx, "-U", d("unit.json"), "-V", d("sign.json"), "-W", d("canonical.json")})
            .code == 0);
  CHECK(invoke({"check", "hexagon", "--ctx", ctx, "-U", d("sign.json"), "-V", d("canonical.json"), "-W",
             d("sign.json")})
            .code == 0);
  CHECK(invoke({"check", "braid", "--ctx", ctx, "-M", d("canonical.json"), "-N", d("sign.json")}).code == 0);
  CHECK(invoke({"check", "symmetry", "--ctx", ctx, "-M", d("canonical.json"), "-N", d("canonical.json")}).code == 0);
  CHECK(invoke({"check", "embedding", "--ctx", ctx, "-M", d("canonical.json"), "-N", d("sign.json")}).code == 0);
  CHECK(invoke({"check", "snake", "-M", d("canonical.json")}).code == 0);
  CHECK(invoke({"check", "roundtrip", "-M", d("sign2.json")}).code == 0);

  Run flip = cli_json({"check", "longeq", "-R", d("flip12.json")});
  CHECK(flip.code == 1);
  std::optional<Json> line = check_line(flip.json(), "long-equation");
  REQUIRE(line);
  CHECK((*line)["witness"] == Json::array({0, 0, 1}));

  // mixed pairs fail the triangle, so coherence is a failing check rather than an error
  CHECK(invoke({"check", "coherence", "-U", d("sign.json"), "-V", d("sign2.json"), "-W", d("sign.json")}).code == 1);
  CHECK(invoke({"check", "coherence", "-U", d("sign.json"), "-V", d("sign.json"), "-W", d("unit.json")}).code == 0);

  // dimodules over another algebra than the context
  CHECK(invoke({"check", "ybe", "--ctx", ctx, "-U", d("z4_unit.json"), "-V", d("sign.json"), "-W", d("sign.json")})
            .code == 2);
  CHECK(invoke({"check", "ybe", "--ctx", ctx, "-U", d("sign.json")}).code == 2);
  CHECK(invoke({"check", "nonsense"}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
}

TEST_CASE("symmetry on a non-triangular context") {
  const std::string ctx = d("ctx_klein.json");
  Run plain = cli_json({"check", "symmetry", "--ctx", ctx, "-M", d("klein_unit.json"), "-N", d("klein_unit.json")});
  CHECK(plain.code == 2);
  Run diag = cli_json(
      {"--diagnose", "check", "symmetry", "--ctx", ctx, "-M", d("klein_unit.json"), "-N", d("klein_unit.json")});
  CHECK(diag.code == 2);
  Json j = diag.json();
  CHECK(check_line(j, "symmetry").has_value());
  std::optional<Json> hyp = check_line(j, "hypotheses");
  REQUIRE(hyp);
  CHECK((*hyp)["passed"] == false);
}

TEST_CASE("build pipelines") {
  const fs::path dir = scratch();
  const std::string r = (dir / "r.json").string();
  Run b = cli_json({"build", "dimodule-solution", "-D", d("sign_ext.json"), "-o", r});
  CHECK(b.code == 0);
  REQUIRE(fs::exists(r));
  CHECK(invoke({"check", "longeq", "-R", r}).code == 0);

  const std::string tw = (dir / "kz4h.json").string();
  CHECK(invoke({"build", "twist", "--base", d("kz4.json"), "--phi", d("inv.json"), "-o", tw}).code == 0);
  Run v = cli_json({"validate", tw});
  CHECK(v.code == 0);
  CHECK(io::read_json_file(tw)["kind"] == "hom-hopf");
  CHECK(io::parse_algebra(io::read_json_file(tw)).algebra == fx::twisted_z4());

  const std::string c = (dir / "c.json").string();
  Run br = cli_json({"build", "braid", "--ctx", d("ctx.json"), "-M", d("canonical.json"), "-N", d("sign.json"),
                     "-o", c});
  CHECK(br.code == 0);
  Json cj = io::read_json_file(c);
  CHECK(cj["matrix"].size() == 4);

  const std::string du = (dir / "dual.json").string();
  CHECK(invoke({"build", "dual", "-M", d("canonical.json"), "--side", "left", "-o", du}).code == 0);
  CHECK(invoke({"validate", du}).code == 0);

  const std::string t = (dir / "t.json").string();
  CHECK(invoke({"build", "tensor", "-M", d("sign.json"), "-N", d("canonical.json"), "-o", t}).code == 0);
  CHECK(invoke({"validate", t}).code == 0);

  const std::string ext = (dir / "ext.json").string();
  CHECK(invoke({"build", "extension", "--comodule", d("sign_comodule.json"), "-o", ext}).code == 0);
  CHECK(invoke({"validate", ext}).code == 0);

  const std::string sm = (dir / "smash.json").string();
  CHECK(invoke({"build", "smash", "-M", d("canonical.json"), "-o", sm}).code == 0);
  CHECK(invoke({"validate", sm}).code == 0);

  // invalid inputs leave no file behind
  const std::string none = (dir / "none.json").string();
  CHECK(invoke({"build", "twist", "--base", d("kz2.json"), "--phi", d("inv.json"), "-o", none}).code == 2);
  CHECK_FALSE(fs::exists(none));
  CHECK(invoke({"build", "braid", "--ctx", d("ctx.json"), "-M", d("canonical.json"), "-N", d("sign.json")}).code == 2);
}

TEST_CASE("search counts") {
  Run diag = cli_json({"search", "--mu", d("id2.json"), "--set", "0,1", "--shape", "diagonal"});
  CHECK(diag.code == 0);
  CHECK(has_message(diag.json(), "16 solutions"));

  const std::string out = (scratch() / "found.json").string();
  Run full = cli_json({"search", "--mu", d("diag12.json"), "--set", "0,1", "--shape", "full", "--threads", "4",
                       "-o", out});
  CHECK(full.code == 0);
  CHECK(has_message(full.json(), "18 solutions"));
  Json found = io::read_json_file(out);
  REQUIRE(found.size() == 18);
  for (const auto& op : found) CHECK(solves_long_equation(io::parse_operator(op)));

  Run empty = cli_json({"search", "--set", ""});
  CHECK(empty.code == 0);
  CHECK(has_message(empty.json(), "0 solutions"));

  std::string big = "0";
  for (int i = 1; i <= 64; ++i) big += "," + std::to_string(i);
  Run cap = cli_json({"search", "--mu", d("id2.json"), "--set", big});
  CHECK(cap.code == 2);
  CHECK(cap.out.find("65^4") != std::string::npos);
  CHECK(invoke({"search", "--set", "0,x"}).code == 2);
}

TEST_CASE("reports round trip and are deterministic") {
  const std::vector<std::vector<std::string>> commands{
      {"validate", d("kz2.json")},
      {"validate", d("broken.json")},
      {"check", "longeq", "-R", d("flip12.json")},
      {"check", "ybe", "--ctx", d("ctx.json"), "-U", d("sign.json"), "-V", d("sign.json"), "-W", d("sign.json")},
      {"search", "--mu", d("diag12.json"), "--set", "0,1", "--shape", "full"},
      {"validate", d("nosuch.json")},
  };
  for (const auto& args : commands) {
    CAPTURE(args.front());
    Run a = cli_json(args), b = cli_json(args);
    CHECK(a.out == b.out);
    Json j = a.json();
    CHECK(cli::to_json(cli::report_from_json(j)).dump(2) == j.dump(2));
    CHECK(j["exit_code"] == a.code);
    Run ta = invoke(args), tb = invoke(args);
    CHECK(ta.out == tb.out);
    CHECK(ta.code == a.code);
  }
  Run one = cli_json({"search", "--mu", d("diag12.json"), "--set", "0,1", "--shape", "full", "--threads", "1"});
  Run four = cli_json({"search", "--mu", d("diag12.json"), "--set", "0,1", "--shape", "full", "--threads", "4"});
  CHECK(one.json()["checks"] == four.json()["checks"]);
  CHECK(one.json()["messages"] == four.json()["messages"]);
  CHECK_THROWS_AS(cli::report_from_json(Json::parse("{\"command\": 3}")), Error);
}

TEST_CASE("text rendering") {
  Run ok = invoke({"validate", d("kz2.json")});
  CHECK(ok.out.find("PASS     HA1-mult") != std::string::npos);
  CHECK(ok.out.find("12 passed, 0 failed, exit 0") != std::string::npos);
  Run broken = invoke({"validate", d("broken.json")});
  CHECK(broken.out.find("FAIL     alpha-invertible  witness (1)") != std::string::npos);
  Run err = invoke({"validate", d("nosuch.json")});
  CHECK(err.out.find("error:") != std::string::npos);
  Run help = invoke({"--help"});
  CHECK(help.code == 0);
  CHECK(invoke({"--seed", "5", "validate", d("kz2.json")}).code == 0);
}
