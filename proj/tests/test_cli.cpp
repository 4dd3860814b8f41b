#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nsym/runner.hpp"

using namespace nsym;
using namespace nsym::runner;

TEST_CASE("bracket command emits the canonical table entry") {
  RunConfig cfg;
  cfg.space = "frame:2";
  Report r = run_command(cfg, "bracket", {"pi_1", "q^1"});
  CHECK(r.ok);
  CHECK(r.json["result"]["rank"] == 1);
  CHECK(r.json["result"]["components"]["1"] == "1");
  CHECK(r.json["result"]["components"]["2"] == "0");
}

TEST_CASE("identical config gives byte-identical output") {
  RunConfig cfg;
  cfg.space = "circle";
  cfg.format = "json";
  Report a = run_command(cfg, "verify", {"e2"});
  Report b = run_command(cfg, "verify", {"e2"});
  CHECK(a.json.dump() == b.json.dump());
  CHECK(a.text == b.text);
  CHECK(a.ok);
}

TEST_CASE("verify suite names resolve") {
  RunConfig cfg;
  for (const char* name : {"gvh", "jacobi", "leibniz", "e2", "dirac", "su2", "jform", "antisym"}) {
    Report r = run_command(cfg, "verify", {name});
    CHECK(r.ok);
    CHECK(!r.json["checks"].empty());
  }
  CHECK_THROWS_AS(run_command(cfg, "verify", {"nonsense"}), std::invalid_argument);
}

TEST_CASE("invalid pairings are rejected") {
  RunConfig cfg;
  cfg.space = "circle";
  CHECK_THROWS_AS(run_command(cfg, "project", {"x"}), std::invalid_argument);
  CHECK_THROWS_AS(run_command(cfg, "bracket", {"pi_1", "q^1"}), std::invalid_argument);
  cfg.space = "frame:2";
  CHECK_THROWS_AS(run_command(cfg, "bracket", {"x", "p"}), std::invalid_argument);
  CHECK_THROWS_AS(run_command(cfg, "frobnicate", {}), std::invalid_argument);
}

TEST_CASE("quantize in both modes") {
  RunConfig cfg;
  cfg.space = "frame:2";
  Report sym = run_command(cfg, "quantize", {"pi_1 (*) pi_1 (*) q^1 (*) q^1"});
  CHECK(sym.ok);
  bool has_kappa = false;
  for (const auto& term : sym.json["result"])
    if (term["word"] == "I1" && term["coeff"] == "-1/2*hbar^2") has_kappa = true;
  CHECK(has_kappa);
  CHECK(!sym.json["paper_notes"].empty());

  cfg.mode = "antisym";
  Report anti = run_command(cfg, "quantize", {"pi_1 (^) q^1"});
  CHECK(anti.ok);
  REQUIRE(anti.json["result"].size() == 1);
  CHECK(anti.json["result"][0]["word"] == "I1");
  CHECK(anti.json["result"][0]["coeff"] == "-1/2i*hbar");
}

TEST_CASE("project honours the alpha gauge") {
  RunConfig cfg;
  cfg.space = "frame:2";
  Report sym = run_command(cfg, "project", {"pi_1 (*) I_2"});
  CHECK(sym.json["result"] == "p1*al2");
  cfg.alpha = {Rational(1), Rational(2)};
  Report num = run_command(cfg, "project", {"pi_1 (*) I_2"});
  CHECK(num.json["result"] == "2*p1");
  cfg.alpha = {Rational(0), Rational(0)};
  CHECK_THROWS(run_command(cfg, "project", {"pi_1"}));
}

TEST_CASE("kernel commands") {
  RunConfig cfg;
  cfg.space = "circle";
  cfg.max_mode = 4;
  cfg.max_deg = 4;
  Report j = run_command(cfg, "kernel", {});
  CHECK(j.json["result"]["dimension"] == 2);

  cfg.space = "c2";
  cfg.max_deg = 2;
  Report s = run_command(cfg, "kernel", {});
  CHECK(s.json["result"]["dimension"] == 5);
  CHECK(s.json["result"]["spin_dimension"] == 3);
}

TEST_CASE("hvf with a component-function pair runs the structure solver") {
  RunConfig cfg;
  cfg.space = "circle";
  Report ok = run_command(cfg, "hvf",
                          {"q1 (*) sinphi - q2 (*) cosphi", "q1 (*) cosphi + q2 (*) sinphi"});
  CHECK(ok.ok);
  CHECK(ok.json["result"]["accepted"] == true);
  CHECK(ok.json["result"]["A"] == "1");
  CHECK(ok.json["result"]["X_phi"] == "(1)");

  Report bad = run_command(cfg, "hvf", {"q1", "q2"});
  CHECK_FALSE(bad.ok);
  CHECK(bad.json["result"]["accepted"] == false);
  CHECK(bad.json["result"]["violated_equation"] == 1);
}

TEST_CASE("s3 space brackets through the solved observables") {
  RunConfig cfg;
  cfg.space = "s3";
  Report r = run_command(cfg, "bracket", {"x1", "x2"});
  CHECK(r.ok);
  // {y^1, y^2} = 2 y^3, whose first component is 2(q1 q3 + q2 q4)
  CHECK(r.json["result"][0] == "2*q2*q4 + 2*q1*q3");
}
