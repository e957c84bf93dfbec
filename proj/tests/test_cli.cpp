#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jetline/atlas_io.hpp"
#include "jetline/emit.hpp"
#include "jetline/errors.hpp"
#include "jetline/verify.hpp"
#include "oracles.hpp"

using namespace jetline;
using nlohmann::json;

namespace {

const std::string kData = JETLINE_DATA_DIR;

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::UnknownSuite;
}

}  // namespace

TEST_CASE("emit cmz as JSON") {
  const json j = json::parse(emit_operator("cmz", 3, "json"));
  CHECK(j["kind"] == "cmz");
  CHECK(j["n"] == 3);
  CHECK(j["coefficients"] == json::parse("[[0, 60, 1], [1, 60, 1], [2, 12, 1]]"));
  CHECK(j["weights"] == json::parse("[0, 0]"));
  for (int n = 1; n <= 6; ++n) {
    const json e = json::parse(emit_operator("cmz", n, "json"));
    REQUIRE(e["coefficients"].size() == static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const auto& row = e["coefficients"][static_cast<std::size_t>(i)];
      CHECK(row[0] == i);
      CHECK(Rational(row[1].get<long>(), row[2].get<long>()) == oracle::cmz(n, i));
    }
  }
}

TEST_CASE("emit bol as JSON and LaTeX") {
  const json j = json::parse(emit_operator("bol", 2, "json"));
  CHECK(j["kind"] == "bol");
  CHECK(j["weights"] == json::parse("[2, -4]"));
  CHECK(j["coefficients"] == json::parse("[[3, 1, 1]]"));
  CHECK(emit_operator("bol", 2, "latex").find("\\partial^{3} \\colon \\mathcal{L}^{2} \\to \\mathcal{L}^{-4}") !=
        std::string::npos);
  CHECK(emit_operator("cmz", 1, "latex").find("2\\, f\\, \\partial") != std::string::npos);
}

TEST_CASE("emit rejects bad input") {
  CHECK(kind_of([] { (void)emit_operator("rc", 2, "json"); }) == ErrorKind::UnknownOperatorKind);
  CHECK(kind_of([] { (void)emit_operator("cmz", 0, "json"); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { (void)emit_operator("bol", -1, "json"); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { (void)emit_operator("cmz", 2, "xml"); }) == ErrorKind::UnknownFormat);
}

TEST_CASE("reports are deterministic without the timestamp") {
  VerifyParams p;
  p.seed = 42;
  p.n = 3;
  const auto a = run_verify("splitting", p).to_json(false).dump(2);
  const auto b = run_verify("splitting", p).to_json(false).dump(2);
  CHECK(a == b);
  const json j = json::parse(a);
  CHECK(!j.contains("timestamp"));
  CHECK(j["suite"] == "splitting");
  CHECK(j["seed"] == 42);
  CHECK(j["summary"]["failed"] == 0);
  CHECK(j["witnesses"].empty());
  CHECK(run_verify("splitting", p).to_json(true).contains("timestamp"));
  // check ids are sorted, digests are 16 hex digits
  std::string prev;
  for (const auto& c : j["checks"]) {
    const std::string id = c["id"];
    CHECK(prev <= id);
    prev = id;
    CHECK(c["inputs_digest"].get<std::string>().size() == 16);
  }
  p.seed = 43;
  CHECK(run_verify("splitting", p).to_json(false).dump(2) != a);
}

TEST_CASE("failing checks carry witnesses") {
  VerificationReport r;
  r.suite = "x";
  r.add(make_check("b", "in", false, "1", "2"));
  r.add(make_check("a", "in", true, "ignored", "ignored"));
  r.normalize();
  const json j = json::parse(r.to_json(false).dump());
  CHECK(j["checks"][0]["id"] == "a");
  CHECK(j["summary"]["total"] == 2);
  CHECK(j["summary"]["failed"] == 1);
  REQUIRE(j["witnesses"].size() == 1);
  CHECK(j["witnesses"][0]["id"] == "b");
  CHECK(j["witnesses"][0]["lhs"] == "1");
  CHECK(j["witnesses"][0]["rhs"] == "2");
  CHECK(digest("in") == digest("in"));
  CHECK(digest("in") != digest("out"));
}

TEST_CASE("run_verify suites pass on small parameters") {
  VerifyParams p;
  p.seed = 7;
  p.n = 2;
  CHECK(run_verify("equivariance-cmz", p).passed());
  CHECK(run_verify("bol", p).passed());
  p.k = 3;
  CHECK(run_verify("casimir", p).passed());
  p.atlas_paths = {kData + "/atlases/projline.json"};
  const VerificationReport atlas = run_verify("atlas", p);
  CHECK(atlas.passed());
  CHECK(atlas.params["atlases"].size() == 1);
}

TEST_CASE("run_verify reports an invalid atlas and rejects unknown suites") {
  VerifyParams p;
  p.seed = 1;
  p.n = 1;
  p.atlas_paths = {kData + "/atlases/bad_lift.json"};
  const VerificationReport r = run_verify("atlas", p);
  CHECK(!r.passed());
  CHECK(kind_of([] { (void)run_verify("nope", VerifyParams{}); }) == ErrorKind::UnknownSuite);
  p.atlas_paths = {kData + "/atlases/missing.json"};
  CHECK(kind_of([&] { (void)run_verify("atlas", p); }) == ErrorKind::AtlasParseError);
}
