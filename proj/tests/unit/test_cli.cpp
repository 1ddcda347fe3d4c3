#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fstruct/cli.hpp"

using namespace fstruct;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json golden(int id) {
  std::ifstream in(fs::path(FSTRUCT_GOLDEN_DIR) / ("example" + std::to_string(id) + ".json"));
  REQUIRE(in);
  return nlohmann::json::parse(in);
}

fs::path write_temp(const std::string& name, const std::string& content) {
  auto dir = fs::temp_directory_path() / "fstruct_cli_test";
  fs::create_directories(dir);
  auto p = dir / name;
  std::ofstream(p) << content;
  return p;
}

const char* kExample1 =
    R"({"chart":{"vars":["x","y"],"nonvanishing":["y"]},"F":[["-1","y"],["-1/y","2"]],"alpha":"1","beta":"-2","K":3})";

}  // namespace

TEST_CASE("reports match the golden files") {
  for (int id = 1; id <= 4; ++id) {
    CAPTURE(id);
    auto r = run({"example", std::to_string(id), "--json"});
    CHECK(r.code == kExitOk);
    CHECK(nlohmann::json::parse(r.out) == golden(id));

    // Emitted manifest, reloaded from disk, gives the same report.
    auto emitted = run({"example", std::to_string(id), "--emit"});
    REQUIRE(emitted.code == kExitOk);
    auto path = write_temp("example" + std::to_string(id) + ".json", emitted.out);
    auto again = run({"report", path.string(), "--json"});
    CHECK(again.code == kExitOk);
    CHECK(nlohmann::json::parse(again.out) == golden(id));
  }
}

TEST_CASE("report key order is stable") {
  auto r = run({"example", "1", "--json"});
  auto j = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"structure_ok", "equation", "rank", "rank_warning", "dims", "flags",
                                         "classification", "consistency_ok", "issues", "evidence", "l", "m",
                                         "distributions", "nijenhuis", "identities", "cr"});
}

TEST_CASE("text report mirrors the JSON") {
  auto r = run({"example", "3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("structure: F^6 + F^5 + F = 0 holds") != std::string::npos);
  CHECK(r.out.find("Dl basis: {∂x, ∂z}") != std::string::npos);
  CHECK(r.out.find("Dm basis: {∂y}") != std::string::npos);
  CHECK(r.out.find("flags: Dl_integrable=true Dm_integrable=true partially=true completely=true integrable=true") !=
        std::string::npos);
  CHECK(r.out.find("consistency: ok") != std::string::npos);
}

TEST_CASE("verify and manifest errors") {
  auto good = write_temp("good.json", kExample1);
  auto r = run({"verify", good.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("ok: F^4 - 2*F^3 + F = 0") != std::string::npos);
  CHECK(r.out.find("rank: 2") != std::string::npos);

  std::string k2 = kExample1;
  k2.replace(k2.find("\"K\":3"), 5, "\"K\":2");
  r = run({"verify", write_temp("k2.json", k2).string()});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("/K") != std::string::npos);

  std::string altered = kExample1;
  altered.replace(altered.find("\"2\"]]"), 3, "\"3\"");
  r = run({"verify", write_temp("altered.json", altered).string()});
  CHECK(r.code == kExitStructure);
  // Residual of the altered matrix, from an independent symbolic expansion:
  // F^4 - 2F^3 + F = [[-1, 5y], [-5/y, 19]].
  CHECK(r.err.find("residual entry (0,0) of alpha F^(K+1) + beta F^K + F is -1") != std::string::npos);

  std::string bad_expr = kExample1;
  bad_expr.replace(bad_expr.find("\"y\"],["), 3, "\"y+\"");
  r = run({"verify", write_temp("bad_expr.json", bad_expr).string()});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("/F/0/1") != std::string::npos);

  r = run({"verify", write_temp("broken.json", "{not json").string()});
  CHECK(r.code == kExitUsage);
  r = run({"verify", "/nonexistent/manifest.json"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("cannot open") != std::string::npos);
}

TEST_CASE("nijenhuis command") {
  auto path = write_temp("ex4.json", run({"example", "4", "--emit"}).out);
  auto r = run({"nijenhuis", path.string(), "--pair", "z", "t"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "N_F(∂z,∂t) = (1/x)*∂y\n");
  CHECK(run({"nijenhuis", path.string(), "--pair", "3", "4"}).out == r.out);
  auto all = run({"nijenhuis", path.string()});
  CHECK(all.out.find("N_F(∂x,∂t) = 0\n") != std::string::npos);
  CHECK(run({"nijenhuis", path.string(), "--pair", "w", "t"}).code == kExitUsage);
  CHECK(run({"nijenhuis", path.string(), "--pair", "z"}).code == kExitUsage);
}

TEST_CASE("cr command") {
  auto path = write_temp("ex2.json", run({"example", "2", "--emit"}).out);
  auto r = run({"cr", path.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("H basis: (1, j)") != std::string::npos);
  CHECK(r.out.find("complex dim: 1") != std::string::npos);
  CHECK(r.out.find("is_cr: true") != std::string::npos);
  auto no_fhat = write_temp("ex1.json", kExample1);
  CHECK(run({"cr", no_fhat.string()}).code == kExitUsage);
}

TEST_CASE("classify command") {
  auto r = run({"classify", "--alpha", "0", "--beta", "1", "--K", "3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("F³+F=0 (Yano)\n", 0) == 0);
  CHECK(r.out.find("also matches cases: 3 7 9") != std::string::npos);
  CHECK(run({"classify", "--alpha", "1", "--beta", "0", "--K", "4"}).out == "F^{K+1}+F=0 with K=4\n");
  CHECK(run({"classify", "--alpha", "1", "--beta", "-2", "--K", "3"}).out == "generic\n");
  CHECK(run({"classify", "--alpha", "1", "--beta", "-2", "--K", "2"}).code == kExitUsage);
  CHECK(run({"classify", "--alpha", "1.5", "--beta", "-2", "--K", "3"}).code == kExitUsage);
}

TEST_CASE("fuzz command") {
  auto r = run({"fuzz", "--n", "3", "--K", "3", "--alpha", "0", "--beta", "1", "--count", "5", "--seed", "4",
                "--position-dependent"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("instances: 5, failed: 0") != std::string::npos);
  auto again = run({"fuzz", "--n", "3", "--K", "3", "--alpha", "0", "--beta", "1", "--count", "5", "--seed", "4",
                    "--position-dependent"});
  CHECK(again.out == r.out);
  CHECK(run({"fuzz", "--n", "2", "--K", "5", "--alpha", "1", "--beta", "1", "--count", "1"}).code == kExitUsage);
  CHECK(run({"fuzz", "--n", "4", "--K", "3", "--alpha", "0", "--beta", "0", "--count", "1"}).code == kExitUsage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"example", "5"}).code == kExitUsage);
  auto help = run({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("report") != std::string::npos);
}
