#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hopfca/io.hpp"

using namespace hopfca;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::string kData = std::string(HOPFCA_SOURCE_DIR) + "/data";

bool same_hopf(const HopfAlgebraData& a, const HopfAlgebraData& b) {
  return a.name == b.name && a.field == b.field && a.dim == b.dim && a.mult == b.mult &&
         a.unit == b.unit && a.comult == b.comult && a.counit == b.counit &&
         a.antipode == b.antipode;
}

}  // namespace

TEST_CASE("emit then parse is the identity on every registry object") {
  for (const auto& name : registry_hopf_names()) {
    HopfAlgebraData h = build_hopf(name);
    CHECK(same_hopf(parse_hopf(emit_hopf(h)), h));
  }
  for (const auto& name : registry_pairing_names()) {
    HopfPairing p = build_pairing(name);
    HopfPairing q = parse_pairing(emit_pairing(p));
    CHECK(q.name == p.name);
    CHECK(same_hopf(q.k_alg, p.k_alg));
    CHECK(same_hopf(q.h_alg, p.h_alg));
    CHECK(q.form == p.form);
  }
}

TEST_CASE("shipped documents match the registry builders") {
  CHECK(same_hopf(parse_hopf(slurp(kData + "/examples/c2.hopf")), build_hopf("c2")));
  CHECK(same_hopf(parse_hopf(slurp(kData + "/examples/sweedler4.hopf")), build_hopf("sweedler4")));
  HopfPairing p = parse_pairing(slurp(kData + "/examples/eval-c2.pairing"));
  CHECK(p.form == build_pairing("eval-c2").form);
}

TEST_CASE("malformed documents fail with a position") {
  // a truncated mult block runs into the next key
  std::string text =
      "hopf {\n  name broken\n  field Q\n  dim 2\n  mult 1 0 0 1 0 1 1\n  unit 1 0\n}\n";
  try {
    parse_hopf(text);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 6);
    CHECK(e.col > 0);
  }
  CHECK_THROWS_AS(parse_hopf("hopf { name x dim 2 }"), ParseError);     // field missing
  CHECK_THROWS_AS(parse_hopf("hopf { field Q mult 1 }"), ParseError);   // dim after tensor
  CHECK_THROWS_AS(parse_hopf("hopf { field Fp 6 }"), ParseError);       // composite modulus
  CHECK_THROWS_AS(parse_input("pairing { name x }"), ParseError);
  CHECK_THROWS_AS(parse_input(""), ParseError);
  CHECK_THROWS_AS(parse_input("module {}"), ParseError);
}

TEST_CASE("documents that parse but break the axioms are rejected") {
  HopfAlgebraData h = build_hopf("c3");
  h.mult.at(0, 0) += Scalar::one(h.field);
  std::string text = emit_hopf(h);
  CHECK_THROWS_AS(parse_hopf(text), ValidationError);
}

TEST_CASE("report rendering is pinned by golden files") {
  VerificationReport rep = run_suite("axioms", "c2");
  CHECK(emit_report(rep, ReportFormat::text) == slurp(kData + "/golden/axioms-c2.txt"));
  CHECK(emit_report(rep, ReportFormat::machine) == slurp(kData + "/golden/axioms-c2.kv"));
  VerificationReport mut = run_suite("pams", "mutant-1");
  CHECK(emit_report(mut, ReportFormat::text) == slurp(kData + "/golden/pams-mutant-1.txt"));
}

TEST_CASE("reports are byte-deterministic across runs") {
  std::string a = emit_report(run_suite("yd-rep", "eval-c2"), ReportFormat::machine);
  std::string b = emit_report(run_suite("yd-rep", "eval-c2"), ReportFormat::machine);
  CHECK(a == b);
}

TEST_CASE("failing entries render their witness") {
  VerificationReport r("demo");
  r.add_fail("mismatch", {{1, 2}, "0", "1/2"});
  std::string text = emit_report(r, ReportFormat::text);
  CHECK(text.find("fail mismatch  at (1,2) lhs=0 rhs=1/2") != std::string::npos);
  CHECK(text.find("overall FAIL") != std::string::npos);
  std::string kv = emit_report(r, ReportFormat::machine);
  CHECK(kv.find("indices 1 2") != std::string::npos);
  VerificationReport empty("empty");
  CHECK(emit_report(empty, ReportFormat::text) == "report empty\noverall PASS\n");
}

TEST_CASE("suite and target resolution errors") {
  CHECK_THROWS_AS(run_suite("no-such-suite", "c2"), UnknownSuite);
  CHECK_THROWS_AS(resolve_target("no-such-target"), UnknownExample);
  CHECK_THROWS_AS(run_suite("pairing", "c2"), BadParams);
  CHECK(suite_names().size() == 8);
}

TEST_CASE("suites pass on registry targets and fail on mutants") {
  CHECK(run_suite("axioms", "taft-3-7-2").overall());
  CHECK(run_suite("realization", "eval-c2").overall());
  CHECK(run_suite("pairing", "quot-c4-c2").overall());
  CHECK(run_suite("schauenburg", "eval-sweedler4").overall());
  for (int i = 1; i <= 3; ++i)
    CHECK_FALSE(run_suite("pams", "mutant-" + std::to_string(i)).overall());
}

TEST_CASE("cli exit codes follow the pass/fail contract") {
  CHECK(run_cli({"verify", "c2"}) == 0);
  CHECK(run_cli({"verify", kData + "/examples/sweedler4.hopf"}) == 0);
  CHECK(run_cli({"check", "--suite", "pairing", "--target", "eval-c2", "--json"}) == 0);
  CHECK(run_cli({"check", "--suite", "pams", "--target", "mutant-2"}) == 1);
  CHECK(run_cli({"verify", "no-such-thing"}) == 2);
  CHECK(run_cli({"check", "--suite", "bogus", "--target", "c2"}) == 2);
  CHECK(run_cli({"frobnicate"}) == 2);
  CHECK(run_cli({"examples", "list"}) == 0);
}

TEST_CASE("the double command emits a parseable document") {
  std::string path = "emitted_double.hopf";
  CHECK(run_cli({"double", "--pairing", "eval-c2", "--emit", path}) == 0);
  HopfAlgebraData d = parse_hopf(slurp(path));
  CHECK(same_hopf(d, quantum_double(build_pairing("eval-c2"))));
  std::remove(path.c_str());
  CHECK(run_cli({"partial-dual", "--pairing", "eval-c2"}) == 0);
}
