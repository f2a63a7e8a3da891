#include "doctest.h"
#include "support.hpp"
#include "toricflow/cli.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace toricflow;
using namespace toricflow::testing;

namespace {

const std::string kScenes = TORICFLOW_SCENE_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string scene(const std::string& name) { return kScenes + "/" + name + ".json"; }

std::string temp_scene(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("toricflow_test_" + name + ".json");
  std::ofstream(path) << body;
  return path.string();
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("scene parsing") {
  const Scene s = load_scene(scene("quadric"));
  CHECK(s.rank == 2);
  REQUIRE(s.cone_rays);
  CHECK(*s.cone_rays == nvecs({{0, 1}, {2, -1}}));
  CHECK(s.points.at("x1").torus == std::vector<Rational>{3, 2});
  CHECK(s.subgroups.at("l1") == nvec({0, 1}));
  CHECK(s.digest.rfind("sha256:", 0) == 0);
  CHECK(s.digest.size() == 7 + 64);

  // Whitespace and key order do not change the digest.
  const Scene t = parse_scene(R"({"subgroups": {"l1": [0, 1]}, "rank": 2,
      "points": {"x1": {"torus": ["3", "2"]}}, "cone_rays": [[0, 1], [2, -1]]})");
  CHECK(t == s);

  CHECK(scene_monoid(s).generators() == mvecs({{1, 0}, {1, 1}, {1, 2}}));
  CHECK(scene_point(s, scene_monoid(s), "x1") == ToricPoint{{3, 6, 12}});
}

TEST_CASE("rationals and vectors") {
  CHECK(parse_rational("7/3") == Rational(7, 3));
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK(parse_rational("5") == 5);
  for (const char* bad : {"", "1/0", "a", "1/-2", "1.5", "/3", "--1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), Error);
  }
  CHECK(parse_vector("1,0", Side::N, 2) == nvec({1, 0}));
  CHECK(parse_vector("(0, -1)", Side::M, 2) == mvec({0, -1}));
  CHECK_THROWS_AS(parse_vector("1,0,0", Side::N, 2), Error);
}

TEST_CASE("classify on the plane") {
  const Result r = cli({"classify", scene("a2"), "--l", "1,0"});
  REQUIRE(r.code == 0);
  const auto c = json_of(r)["classification"][0];
  CHECK(c["kind"] == "Parabolic");
  CHECK(c["zero_face"] == nlohmann::json::parse("[[0,1]]"));
  CHECK(c["fixed_locus"] == "x1 = 0");
  CHECK(c["fixed_divisor_s"] == 1);

  CHECK(json_of(cli({"classify", scene("a2"), "--l", "hyperbolic"}))["classification"][0]["kind"] ==
        "Hyperbolic");
  CHECK(json_of(cli({"classify", scene("a3"), "--l", "degenerate"}))["classification"][0]["kind"] ==
        "DegenerateNonnegative");
  const Result text = cli({"classify", scene("a2"), "--l", "1,0", "--format", "text"});
  CHECK(text.out.find("Parabolic") != std::string::npos);
}

TEST_CASE("roots, lnd, flow and limit subcommands") {
  const auto roots = json_of(cli({"roots", scene("a2"), "--box", "5"}))["roots"];
  CHECK(roots["roots"].size() == 12);
  CHECK(roots["growth"].size() == 2);
  CHECK(roots["growth"][0]["count1"] == 6);
  CHECK(roots["growth"][0]["count2"] == 11);
  const auto ray2 = json_of(cli({"roots", scene("quadric"), "--box", "3", "--ray", "1"}))["roots"]["roots"];
  CHECK(ray2 == nlohmann::json::parse(
                    R"([{"s":1,"e":[0,-1]},{"s":1,"e":[1,-1]},{"s":1,"e":[2,-1]},{"s":1,"e":[3,-1]}])"));
  CHECK(cli({"roots", scene("quadric"), "--ray", "3"}).code == kExitMalformed);

  const auto lnd = json_of(cli({"lnd", scene("quadric"), "--root", "0,-1"}))["witness_lnd"][0];
  CHECK(lnd["generators"][1]["image"] == nlohmann::json::parse(R"j({"(1,0)": "1"})j"));
  CHECK(lnd["generators"][2]["image"] == nlohmann::json::parse(R"j({"(1,1)": "2"})j"));
  CHECK(lnd["generators"][2]["nilpotency"] == 3);
  CHECK(lnd["kernel_rank"] == 1);
  CHECK(cli({"lnd", scene("quadric"), "--root", "1,0"}).code == kExitHypothesis);

  const auto flow = json_of(cli({"flow", scene("quadric"), "--point", "x1", "--root", "0,-1", "--s", "-2"}))["flow"];
  CHECK(flow["image"] == nlohmann::json::parse(R"(["3","0","0"])"));
  const auto limit = json_of(cli({"limit", scene("a2"), "--point", "x1", "--l", "l1"}))["limit"];
  CHECK(limit["limit"] == nlohmann::json::parse(R"(["0","5"])"));
  CHECK(json_of(cli({"limit", scene("a2"), "--point", "x1", "--l", "1,-1"}))["limit"]["limit"].is_null());
}

TEST_CASE("geometry subcommands") {
  CHECK(json_of(cli({"dual", scene("quadric")}))["geometry"]["dual_rays"] == nlohmann::json::parse("[[1,0],[1,2]]"));
  CHECK(json_of(cli({"facets", scene("quadric")}))["geometry"]["facets"].size() == 2);
  CHECK(json_of(cli({"hilbert", scene("quadric")}))["geometry"]["hilbert_basis"] ==
        nlohmann::json::parse("[[1,0],[1,1],[1,2]]"));
  const auto sat = json_of(cli({"saturation", scene("cuspidal")}))["geometry"];
  CHECK(sat["saturated"] == false);
  CHECK(sat["saturation_witness"] == nlohmann::json::parse("[1]"));
  CHECK(json_of(cli({"straightening", scene("quadric")}))["straightening"].size() == 2);
  CHECK(cli({"straightening", scene("cuspidal")}).code == kExitHypothesis);
}

TEST_CASE("verify subcommand") {
  const Result ok = cli({"verify", scene("quadric"), "--l", "l1", "--point", "x1"});
  REQUIRE(ok.code == 0);
  const auto doc = json_of(ok);
  CHECK(doc["verification"][0]["verdict"] == "PASS");
  CHECK(doc["verification"][0]["flow_parameter"] == "-2");
  CHECK(doc["verification"][0]["limit"] == nlohmann::json::parse(R"(["3","0","0"])"));
  REQUIRE(doc["derived_facts"].size() == 2);
  for (const auto& f : doc["derived_facts"]) CHECK(f["label"] == "derived consequence");

  const Result cusp = cli({"verify", scene("cuspidal"), "--l", "1", "--point", "x1"});
  CHECK(cusp.code == kExitHypothesis);
  CHECK(cusp.err.find("NormalityRequired") != std::string::npos);
  CHECK(cusp.err.find("not normal") != std::string::npos);
  CHECK(cusp.out.empty());

  const Result hyp = cli({"verify", scene("a2"), "--l", "1,-1", "--point", "x1"});
  CHECK(hyp.code == kExitHypothesis);
  CHECK(hyp.err.find("NotParabolic") != std::string::npos);
  CHECK(hyp.err.find("Hyperbolic") != std::string::npos);
}

TEST_CASE("exit codes for malformed scenes and resource bounds") {
  CHECK(cli({"report", temp_scene("broken", "{\"rank\": 2,")}).code == kExitMalformed);
  CHECK(cli({"report", temp_scene("norank", R"({"cone_rays": [[1]]})")}).code == kExitMalformed);
  CHECK(cli({"report", temp_scene("both", R"({"rank": 1, "cone_rays": [[1]], "monoid_generators": [[1]]})")}).code ==
        kExitMalformed);
  CHECK(cli({"report", temp_scene("rank", R"({"rank": 2, "cone_rays": [[1, 0], [0]]})")}).code == kExitMalformed);
  CHECK(cli({"report", temp_scene("float", R"({"rank": 1, "monoid_generators": [[1.5]]})")}).code == kExitMalformed);
  CHECK(cli({"report", temp_scene("unknown", R"({"rank": 1, "monoid_generators": [[1]], "extra": 1})")}).code ==
        kExitMalformed);
  CHECK(cli({"report", kScenes + "/does_not_exist.json"}).code == kExitMalformed);
  CHECK(cli({"dual", temp_scene("line", R"({"rank": 2, "cone_rays": [[1, 0], [-1, 0], [0, 1]]})")}).code ==
        kExitHypothesis);
  const std::string rank4 = temp_scene("rank4", R"({"rank": 4, "cone_rays": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]})");
  CHECK(cli({"dual", rank4}).code == 0);
  CHECK(cli({"hilbert", rank4}).code == kExitResource);
  CHECK(cli({"roots", scene("a3"), "--box", "100000"}).code == kExitResource);
  CHECK(cli({"frobnicate", scene("a2")}).code == kExitMalformed);
  CHECK(cli({"classify", scene("a2")}).code == kExitMalformed);
  CHECK(cli({"report", scene("a2"), "--format", "yaml"}).code == kExitMalformed);
  CHECK(cli({"--help"}).code == 0);

  for (int k = 0; k <= static_cast<int>(ErrorKind::SafetyBoundExceeded); ++k) {
    const int code = exit_code(static_cast<ErrorKind>(k));
    CHECK((code == kExitMalformed || code == kExitHypothesis || code == kExitResource));
  }
  CHECK(exit_code(ErrorKind::NotPointed) == kExitHypothesis);
  CHECK(exit_code(ErrorKind::NormalityRequired) == kExitHypothesis);
  CHECK(exit_code(ErrorKind::NotParabolic) == kExitHypothesis);
  CHECK(exit_code(ErrorKind::RankLimitExceeded) == kExitResource);
  CHECK(exit_code(ErrorKind::BoundExceeded) == kExitResource);
}

TEST_CASE("report documents are deterministic and round-trip") {
  for (const char* name : {"a2", "quadric", "cuspidal", "a3", "conifold"}) {
    CAPTURE(name);
    const Result first = cli({"report", scene(name)});
    REQUIRE(first.code == 0);
    CHECK(cli({"report", scene(name)}).out == first.out);
    const Report parsed = report_from_json(first.out);
    CHECK(parsed == build_report(load_scene(scene(name))));
    CHECK(to_json(parsed) == first.out);
    const auto doc = json_of(first);
    for (const char* key : {"scene_digest", "classification", "straightening", "roots", "witness_lnd",
                            "verification", "warnings", "derived_facts"}) {
      CHECK(doc.contains(key));
    }
    CHECK(cli({"report", scene(name), "--format", "text"}).out == to_text(parsed));
  }
  CHECK_THROWS_AS(report_from_json("{}"), Error);
  CHECK_THROWS_AS(report_from_json("[1"), Error);
}

TEST_CASE("report contents") {
  const Report q = build_report(load_scene(scene("quadric")));
  REQUIRE(q.verification);
  REQUIRE(q.verification->size() == 1);
  CHECK(q.verification->front().verdict == "PASS");
  CHECK(q.derived_facts.size() == 2);
  REQUIRE(q.witness_lnd);
  CHECK(q.witness_lnd->front().root == mvec({0, -1}));

  const Report c = build_report(load_scene(scene("cuspidal")));
  CHECK_FALSE(c.straightening);
  CHECK(c.derived_facts.empty());
  REQUIRE_FALSE(c.warnings.empty());
  CHECK(c.warnings.front().find("not saturated") != std::string::npos);

  const Report a = build_report(load_scene(scene("a2")));
  std::map<std::string, std::string> verdicts;
  for (const auto& v : *a.verification) verdicts[v.subgroup] = v.verdict;
  CHECK(verdicts == std::map<std::string, std::string>{{"elliptic", "NotParabolic"},
                                                       {"hyperbolic", "NotParabolic"},
                                                       {"l1", "PASS"}});

  const Scene ne = parse_scene(R"({"rank": 2, "monoid_generators": [[1,0],[0,1]], "subgroups": {"l": [3,0]}})");
  const Report n = build_report(ne);
  CHECK(std::any_of(n.warnings.begin(), n.warnings.end(),
                    [](const std::string& w) { return w.find("not effective") != std::string::npos; }));
}
