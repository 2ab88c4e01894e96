#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "gwa/json_io.hpp"
#include "gwa/morita.hpp"
#include "support/generators.hpp"
#include "support/golden_cases.hpp"

using namespace gwa;
using testing::run_cli;

TEST_CASE("golden JSON reports") {
  // GWA_UPDATE_GOLDEN=1 rewrites the files instead of comparing.
  const bool update = std::getenv("GWA_UPDATE_GOLDEN") != nullptr;
  for (const auto& c : testing::golden_cases()) {
    CAPTURE(c.name);
    const auto r = run_cli(c.args);
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    if (update) {
      std::ofstream(testing::golden_path(c.name), std::ios::binary) << r.out;
      continue;
    }
    CHECK(r.out == testing::read_file(testing::golden_path(c.name)));
  }
}

TEST_CASE("reports parse back") {
  for (const auto& c : testing::golden_cases()) {
    const auto r = run_cli(c.args);
    const Json j = Json::parse(r.out);
    CHECK(j.dump(2) + "\n" == r.out);
    CHECK(j.contains("command"));
    CHECK(j.contains("inputs"));
    CHECK(j.contains("result"));
  }
}

TEST_CASE("reference pair through the front end") {
  const auto equiv = run_cli({"--json", "equiv", "h(h+1)", "h(h+2)", "--witness"});
  REQUIRE(equiv.code == 0);
  const Json j = Json::parse(equiv.out);
  CHECK(j["result"]["equivalent"] == true);
  CHECK(j["result"]["b"] == "0");
  CHECK(j["result"]["witness"]["steps"].size() == 5);

  // verify accepts the full report as emitted.
  const auto path = std::filesystem::temp_directory_path() / "gwa_equiv_report.json";
  std::ofstream(path) << equiv.out;
  const auto verified = run_cli({"--json", "verify", "h(h+1)", "h(h+2)", path.string()});
  CHECK(verified.code == 0);
  CHECK(Json::parse(verified.out)["result"]["valid"] == true);
  std::filesystem::remove(path);

  const auto iso = run_cli({"--json", "iso", "h(h+1)", "h(h+2)"});
  CHECK(iso.code == 0);
  CHECK(Json::parse(iso.out)["result"]["isomorphic"] == false);
}

TEST_CASE("round trip of witnesses for random pairs") {
  testing::Rng rng(59);
  const auto path = std::filesystem::temp_directory_path() / "gwa_witness_rt.json";
  for (int round = 0; round < 20; ++round) {
    const FactoredPoly v1 = testing::random_mixed_poly(rng, 5);
    const FactoredPoly v2 = testing::same_type_partner(rng, v1);
    const auto equiv = run_cli({"--json", "equiv", v1.to_string(), v2.to_string(), "--witness"});
    REQUIRE(equiv.code == 0);
    const Json report = Json::parse(equiv.out);
    REQUIRE(report["result"]["equivalent"] == true);
    const MoritaWitness w = witness_from_json(report["result"]["witness"]);
    CHECK(w == *witness_chain(v1, v2));
    std::ofstream(path) << report["result"]["witness"].dump();
    const auto verified = run_cli({"verify", v1.to_string(), v2.to_string(), path.string()});
    CHECK(verified.code == 0);
    CHECK(verified.out.rfind("witness valid", 0) == 0);
  }
  std::filesystem::remove(path);
}

TEST_CASE("plain text output") {
  const auto r = run_cli({"module", "h", "w"});
  CHECK(r.code == 0);
  CHECK(r.out.find("simple") != std::string::npos);
  const auto q = run_cli({"quiver", testing::data_path("triangle.json"), "--pair", "0", "1"});
  CHECK(q.code == 0);
  const bool labelled = q.out.find("per n=2 pattern") != std::string::npos ||
                        q.out.find("no conclusion") != std::string::npos;
  CHECK(labelled);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"frobnicate"}).code == 1);
  CHECK(run_cli({"equiv", "h"}).code == 1);
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"equiv", "--help"}).code == 0);
  CHECK(run_cli({"type", "(h+"}).code == 2);
  CHECK(run_cli({"type", "(h+1)^0"}).code == 2);
  CHECK(run_cli({"module", "h", "2**w"}).code == 2);
  CHECK(run_cli({"blocks", "h", "--label", "0"}).code == 2);
  CHECK(run_cli({"verma", "h", "1"}).code == 3);
  CHECK(run_cli({"proj", "h(h+1)", "w"}).code == 3);
  CHECK(run_cli({"ann", "h", "0"}).code == 3);
  CHECK(run_cli({"equiv", "1", "h"}).code == 3);
  CHECK(run_cli({"quiver", testing::data_path("move_lemma.json"), "--pair", "0", "0"}).code == 3);
  CHECK(run_cli({"quiver", testing::data_path("move_lemma.json"), "--vertex", "4"}).code == 3);
  CHECK(run_cli({"quiver", testing::data_path("missing.json")}).code == 1);
  CHECK(run_cli({"verify", "h(h+1)", "h(h+2)", testing::data_path("triangle.json")}).code == 2);
  // Negative verdicts are answers.
  CHECK(run_cli({"equiv", "h^2(h-1)", "h(h-1)^2"}).code == 0);
  CHECK(run_cli({"verify", "h(h+1)", "h(h+2)", testing::data_path("pair_witness_bad.json")}).code == 0);
  const auto wrong = run_cli({"--json", "quiver", testing::data_path("triangle_wrong_v.json"), "--check"});
  CHECK(wrong.code == 0);
  CHECK(Json::parse(wrong.out)["result"]["identities"]["hold"] == false);
}

TEST_CASE("selftest is reproducible by seed") {
  const auto a = run_cli({"--json", "--seed", "5", "selftest", "--rounds", "10"});
  const auto b = run_cli({"--json", "selftest", "--rounds", "10", "--seed", "5"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out)["result"]["passed"] == true);
}
