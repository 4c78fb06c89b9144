#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "catloc/cli.hpp"
#include "catloc/expr.hpp"
#include "catloc/io.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace catloc;
using namespace catloc::testing;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "catloc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string a3_file() {
  static const std::string path = [] {
    auto p = (std::filesystem::temp_directory_path() / "catloc_cli_a3.json").string();
    save_category(cluster(3), p);
    return p;
  }();
  return path;
}

std::string status_of(const json& report, const std::string& name) {
  for (const auto& c : report["clauses"])
    if (c["name"] == name) return c["status"];
  return "missing";
}

struct ConfigEnv {
  explicit ConfigEnv(const std::string& path) { setenv("CATLOC_CONFIG", path.c_str(), 1); }
  ~ConfigEnv() { unsetenv("CATLOC_CONFIG"); }
};

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("generate") {
    const auto path = (std::filesystem::temp_directory_path() / "catloc_cli_gen.json").string();
    for (auto [n, count] : {std::pair{2, 5}, std::pair{3, 9}}) {
      auto r = run({"generate", "--n", std::to_string(n), "--field", "Fp:101", "--out", path});
      CHECK(r.code == kExitPass);
      CHECK(load_category(path).size() == static_cast<std::size_t>(count));
    }
    auto a = run({"generate", "--n", "3", "--out", "-"});
    auto b = run({"generate", "--n", "3", "--out", "-"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(run({"generate", "--n", "0", "--out", path}).code == kExitUsage);
    CHECK(run({"generate", "--n", "3", "--orientation", "LQ", "--out", path}).code == kExitUsage);
    CHECK(run({"generate"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
  }

  TEST_CASE("verify: cluster-tilting T") {
    auto r = run({"verify", a3_file(), "--T", "P1+P2+P3"});
    CHECK(r.code == kExitPass);
    const json rep = json::parse(r.out);
    for (const char* c : {"rigidity", "quotient", "preabelian", "integral", "fractions", "abelian", "equivalence"})
      CHECK(status_of(rep, c) == "pass");
    CHECK(rep["flags"]["every_regular_invertible"] == true);
    CHECK(rep["regular_noninvertible"].empty());
  }

  TEST_CASE("verify: two-summand rigid T lists a regular non-invertible witness") {
    auto r = run({"verify", a3_file(), "--T", "P1+P2"});
    CHECK(r.code == kExitPass);
    const json rep = json::parse(r.out);
    CHECK(rep["flags"]["every_regular_invertible"] == false);
    CHECK_FALSE(rep["regular_noninvertible"].empty());
  }

  TEST_CASE("verify: U-perp quotient fails the preabelian clause at P3 -> I2") {
    auto r = run({"verify", a3_file(), "--perp-of", "P2,P3,SigmaP3", "--search"});
    CHECK(r.code == kExitClauseFailure);
    const json rep = json::parse(r.out);
    CHECK(status_of(rep, "preabelian") == "fail");
    CHECK(status_of(rep, "preabelian_search") == "fail");
    CHECK(status_of(rep, "integral") == "skipped");
    CHECK(rep["subcategory"] == json::array({"P1", "P2", "S2"}));
    const std::string dump = rep.dump();
    CHECK(dump.find("P3->I2#0") != std::string::npos);
  }

  TEST_CASE("verify: non-rigid T and bad input") {
    auto r = run({"verify", a3_file(), "--T", "P1+SigmaP1"});
    CHECK(r.code == kExitClauseFailure);
    CHECK(status_of(json::parse(r.out), "rigidity") == "not-rigid");
    CHECK(run({"verify", a3_file()}).code == kExitUsage);
    CHECK(run({"verify", a3_file(), "--T", "X9"}).code == kExitUsage);
    CHECK(run({"verify", "/nonexistent/file.json", "--T", "P1"}).code == kExitUsage);
    CHECK(run({"verify", a3_file(), "--T", "P1", "--subcat", "P2"}).code == kExitUsage);
  }

  TEST_CASE("verify reports are deterministic and written to --report") {
    const auto path = (std::filesystem::temp_directory_path() / "catloc_cli_report.json").string();
    auto a = run({"verify", a3_file(), "--T", "P2", "--seed", "9"});
    auto b = run({"verify", a3_file(), "--T", "P2", "--seed", "9"});
    CHECK(a.out == b.out);
    auto c = run({"verify", a3_file(), "--T", "P2", "--seed", "9", "--report", path});
    CHECK(c.code == 0);
    std::ifstream in(path);
    CHECK(json::parse(in) == json::parse(a.out));
    CHECK(c.out.find("equivalence: pass") != std::string::npos);
  }

  TEST_CASE("config file and flag overrides") {
    const auto cfg = (std::filesystem::temp_directory_path() / "catloc_cli_config.json").string();
    {
      std::ofstream(cfg) << R"({"seed": 42, "max_instances": 5})";
      ConfigEnv env(cfg);
      auto r = run({"verify", a3_file(), "--T", "P1"});
      const json rep = json::parse(r.out);
      CHECK(rep["budgets"]["seed"] == 42);
      CHECK(rep["budgets"]["max_instances"] == 5);
      CHECK(status_of(rep, "integral") == "bounded-pass");
      auto s = run({"verify", a3_file(), "--T", "P1", "--seed", "7", "--max-instances", "0"});
      const json rep2 = json::parse(s.out);
      CHECK(rep2["budgets"]["seed"] == 7);
      CHECK(status_of(rep2, "integral") == "pass");
    }
    {
      std::ofstream(cfg) << R"({"sed": 42})";
      ConfigEnv env(cfg);
      CHECK(run({"verify", a3_file(), "--T", "P1"}).code == kExitUsage);
    }
  }

  TEST_CASE("cotorsion") {
    auto r = run({"cotorsion", a3_file(), "--U", "P2,P3,SigmaP3"});
    CHECK(r.code == kExitPass);
    const json rep = json::parse(r.out);
    CHECK(rep["V"] == json::array({"P1", "P2", "S2"}));
    CHECK(rep["clauses"][2]["status"] == "unchecked");
    CHECK(run({"cotorsion", a3_file(), "--U", "all"}).code == kExitPass);
    CHECK(json::parse(run({"cotorsion", a3_file(), "--U", "all"}).out)["V"].empty());
    CHECK(run({"cotorsion", a3_file(), "--U", "P1"}).code == kExitPass);
    CHECK(run({"cotorsion", a3_file(), "--U", "P1,S2"}).code == kExitClauseFailure);
    CHECK(run({"cotorsion", a3_file(), "--U", "P2,P3,SigmaP3", "--V", "P1"}).code == kExitClauseFailure);
  }

  TEST_CASE("cotorsion without a suspension") {
    json j = to_json(cluster(2));
    j.erase("sigma");
    j["metadata"].erase("two_calabi_yau");
    const auto path = (std::filesystem::temp_directory_path() / "catloc_cli_nosigma.json").string();
    std::ofstream(path) << j.dump();
    auto r = run({"cotorsion", path, "--U", "P1"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("suspension") != std::string::npos);
  }

  TEST_CASE("fraction expressions") {
    auto r = run({"fraction", a3_file(), "--T", "P1+P2", "-e", "let f = P2->P3#0", "-e", "let g = P3->I2#0", "-e",
                  "equal? [id,f] [id,f]", "-e", "equal? (compose [id,g] [id,f])", "-e", "x"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("column 8") != std::string::npos);
    auto s = run({"fraction", a3_file(), "--T", "P1+P2", "-e", "let f = P2->P3#0", "-e", "let g = P3->I2#0", "-e",
                  "equal? [id,f] [id,f]", "-e", "compose [f,id] [id,f]", "-e", "equal? [id, g∘f] [id, g.f]", "-e",
                  "regular? f", "-e", "invert [id,f]"});
    CHECK(s.code == kExitPass);
    CHECK(s.out == "f = P2->P3#0\ng = P3->I2#0\ntrue\n[id, id]\ntrue\ntrue\n[P2->P3#0, id]\n");
    auto t = run({"fraction", a3_file(), "--T", "P1+P2", "-e", "[P3->I2#0, P3->I2#0]"});
    CHECK(t.code == kExitUsage);
    CHECK(t.err.find("not regular") != std::string::npos);
  }
}

TEST_SUITE("expr") {
  TEST_CASE("evaluator") {
    const auto& P = cluster(3);
    const Obj T = obj(P, {"P1", "P2"});
    const auto Q = build_quotient(P, T);
    FractionEvaluator ev(Q, T);
    CHECK(ev.eval("let f = P2->P3#0").text == "f = P2->P3#0");
    CHECK(ev.eval("equal? [id, f] [id, f]").text == "true");
    CHECK(ev.eval("let e = P3->P3#0").text == "e = id");
    CHECK(ev.eval("equal? [f, f] [e, e]").text == "true");
    CHECK(ev.eval("equal? [f, 2*f] [e, 2*id]").text == "true");
    CHECK(ev.eval("equal? [id, f - f] [id, 0*f]").text == "true");
    CHECK(ev.eval("equal? [f, id] [f, 2*id]").text == "false");
    CHECK(ev.eval("regular? f").text == "true");
    CHECK(ev.eval("regular? P3->I2#0").text == "false");
    CHECK(ev.eval("cokernel [id, f]").text.rfind("0 via", 0) == 0);
    CHECK(ev.eval("kernel [id, P2->S2#0]").text.rfind("0 via", 0) != 0);
    CHECK(ev.eval("invert [id, P2->S2#0]").text == "not invertible");
    CHECK(ev.eval("(f)").text == "P2->P3#0");
    CHECK(ev.eval("M[1,3]->I2#0").text == "P3->I2#0");
  }

  TEST_CASE("errors carry columns") {
    const auto& P = cluster(3);
    const Obj T = obj(P, {"P1", "P2"});
    const auto Q = build_quotient(P, T);
    FractionEvaluator ev(Q, T);
    auto col = [&](const std::string& s) -> std::size_t {
      try {
        ev.eval(s);
      } catch (const ExprError& e) {
        return e.column();
      }
      return 0;
    };
    CHECK(col("equal? [id,") == 12);
    CHECK(col("P2->Q9#0") == 5);
    CHECK(col("P2->P3#4") == 8);
    CHECK(col("compose [id, P2->P3#0] [id, P2->P3#0]") == 1);
    CHECK(col("[id, id]") == 2);
    CHECK(col("P2->P3#0 $") == 10);
    CHECK(col("unknown") == 1);
    CHECK_THROWS_AS(ev.eval("[P3->I2#0, P3->I2#0]"), NotRegular);
  }
}
