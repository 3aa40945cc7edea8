#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "hpl/harness.hpp"
#include "hpl/gauges.hpp"

using namespace hpl;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int cli(std::vector<std::string> args) {
    std::vector<char*> argv;
    args.insert(args.begin(), "verify");
    for (auto& a : args) argv.push_back(a.data());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

SuiteConfig quick_cfg(const std::string& suite) {
    SuiteConfig cfg;
    cfg.suite = suite;
    cfg.n = 2;
    cfg.m = 1;
    cfg.bodies = {"square", "triangle"};
    cfg.samples = 2000;
    cfg.seed = 11;
    return cfg;
}

}  // namespace

TEST_CASE("config validation") {
    SuiteConfig cfg = quick_cfg("petty-zhang");
    cfg.suite = "nope";
    CHECK_THROWS_AS(run_suite(cfg), ConfigError);
    cfg = quick_cfg("petty-zhang");
    cfg.n = 4;
    CHECK_THROWS_AS(run_suite(cfg), ConfigError);
    cfg = quick_cfg("petty-zhang");
    cfg.m = 5;  // nm = 10 > 9
    CHECK_THROWS_AS(run_suite(cfg), ConfigError);
    cfg = quick_cfg("petty-zhang");
    cfg.samples = 10;
    CHECK_THROWS_AS(run_suite(cfg), ConfigError);
    cfg = quick_cfg("petty-zhang");
    cfg.z = -1;
    CHECK_THROWS_AS(run_suite(cfg), ConfigError);
}

TEST_CASE("unknown bodies are configuration errors") {
    SuiteConfig cfg = quick_cfg("petty-zhang");
    cfg.bodies = {"square", "not-a-body"};
    CHECK_THROWS_AS(run_suite(cfg), ConfigError);
}

TEST_CASE("a body failing at compute time yields a FAIL record, not an abort") {
    const auto path = std::filesystem::temp_directory_path() / "hpl_degenerate.json";
    {
        std::ofstream out(path);
        // resolvable name whose hull is degenerate (collinear points)
        out << R"({"flat": {"type": "vertices", "data": [[0,0],[1,1],[2,2],[3,3]]},
                   "square": {"type": "vertices", "data": [[-1,-1],[1,-1],[1,1],[-1,1]]}})";
    }
    SuiteConfig cfg = quick_cfg("petty-zhang");
    cfg.catalog_path = path.string();
    cfg.bodies = {"square", "flat"};
    const SuiteReport r = run_suite(cfg);
    std::filesystem::remove(path);
    CHECK(r.any_fail());
    bool square_ok = false, flat_failed = false;
    for (const auto& c : r.checks) {
        if (c.name.find("square") != std::string::npos && c.verdict == Verdict::Pass)
            square_ok = true;
        if (c.name.find("flat") != std::string::npos && c.verdict == Verdict::Fail)
            flat_failed = true;
    }
    CHECK(square_ok);
    CHECK(flat_failed);
}

TEST_CASE("reports are deterministic byte for byte") {
    const SuiteConfig cfg = quick_cfg("petty-zhang");
    const SuiteReport a = run_suite(cfg);
    const SuiteReport b = run_suite(cfg);
    CHECK(a.to_json(false) == b.to_json(false));
    CHECK(a.to_csv() == b.to_csv());
    // changing the seed changes the payload
    SuiteConfig other = cfg;
    other.seed = 12;
    CHECK(run_suite(other).to_json(false) != a.to_json(false));
}

TEST_CASE("report serialization carries the schema and anchors") {
    const SuiteReport r = run_suite(quick_cfg("petty-zhang"));
    const std::string json = r.to_json(true);
    CHECK(json.find("\"schema\": \"hpl-report/1\"") != std::string::npos);
    CHECK(json.find("\"generated_at\"") != std::string::npos);
    CHECK(r.to_json(false).find("generated_at") == std::string::npos);
    for (const auto& c : r.checks) CHECK_FALSE(c.anchor.empty());
    const std::string csv = r.to_csv();
    CHECK(csv.rfind("name,anchor,lhs,rhs,sigma,verdict\n", 0) == 0);
}

TEST_CASE("report json round-trips") {
    const SuiteReport r = run_suite(quick_cfg("petty-zhang"));
    for (bool with_meta : {true, false}) {
        const std::string payload = r.to_json(with_meta);
        const SuiteReport back = SuiteReport::from_json(payload);
        CHECK(back.to_json(with_meta) == payload);
        CHECK(back.checks.size() == r.checks.size());
        CHECK(back.seed == r.seed);
    }
    CHECK_THROWS_AS(SuiteReport::from_json("{\"schema\":\"other/9\"}"), ConfigError);
}

TEST_CASE("direction tuples round-trip their blocks") {
    Vec a(3), b(3);
    a << 1, -2, 0.5;
    b << 0, 4, -1;
    const DirectionTuple t = DirectionTuple::from_blocks({a, b});
    CHECK(t.n == 3);
    CHECK(t.m == 2);
    CHECK(t.flat.size() == 6);
    CHECK((t.block(0) - a).norm() == 0.0);
    CHECK((t.block(1) - b).norm() == 0.0);
    CHECK(t.norm() == doctest::Approx(std::sqrt(a.squaredNorm() + b.squaredNorm())));
    CHECK_THROWS_AS(DirectionTuple(2, 2, a), DimensionMismatch);
}

TEST_CASE("catalog file loading") {
    const std::filesystem::path path =
        std::filesystem::temp_directory_path() / "hpl_catalog_test.json";
    {
        std::ofstream out(path);
        out << R"({
          "box": {"type": "vertices", "data": [[0,0],[2,0],[2,1],[0,1]]},
          "halfsq": {"type": "halfspaces",
                     "normals": [[1,0],[-1,0],[0,1],[0,-1]],
                     "offsets": [1, 0, 1, 0]},
          "roundish": {"type": "ball", "radius": 2.0, "n": 2},
          "octagon": {"type": "builtin", "name": "kgon", "n": 2, "params": {"k": 8}}
        })";
    }
    const Catalog cat = Catalog::from_file(path.string());
    CHECK(cat.body("box", 2).volume() == doctest::Approx(2.0));
    CHECK(cat.body("halfsq", 2).volume() == doctest::Approx(1.0));
    CHECK(cat.body("roundish", 2).volume() == doctest::Approx(4 * 3.14159265).epsilon(1e-5));
    CHECK(cat.body("octagon", 2).polytope().vertices().size() == 8);
    // builtin fallback still works behind a file catalog
    CHECK(cat.body("cube", 3).volume() == doctest::Approx(8.0));
    CHECK_THROWS_AS(cat.body("box", 3), ConfigError);
    CHECK_THROWS_AS(cat.body("missing", 2), ConfigError);
    const auto defaults = cat.default_bodies(2);
    CHECK(defaults.size() == 4);
    std::filesystem::remove(path);

    CHECK_THROWS_AS(Catalog::from_file("/nonexistent/catalog.json"), ConfigError);
    CHECK_THROWS_AS(Catalog::builtin().body("kgon2", 2), ConfigError);
}

TEST_CASE("six suites are registered") { CHECK(suite_names().size() == 6); }

TEST_CASE("the shipped example catalog parses") {
    const auto path = std::filesystem::path(__FILE__).parent_path().parent_path() /
                      "data" / "catalog.json";
    const Catalog cat = Catalog::from_file(path.string());
    CHECK(cat.body("square", 2).volume() == doctest::Approx(4.0));
    CHECK(cat.body("diamond", 2).volume() == doctest::Approx(2.0));
    CHECK(cat.body("kgon64", 2).polytope().vertices().size() == 64);
    CHECK_FALSE(cat.body("ball", 2).is_polytope());
}

TEST_CASE("finer polygonal balls close the isoperimetric gap") {
    SuiteConfig cfg;
    cfg.suite = "petty-isoperimetric";
    cfg.n = 2;
    cfg.m = 2;
    cfg.bodies = {"square", "kgon256", "ball"};
    cfg.samples = 20000;
    cfg.seed = 99;
    const SuiteReport r = run_suite(cfg);
    CHECK_FALSE(r.any_fail());
    bool gap_record = false;
    for (const auto& c : r.checks)
        if (c.name.rfind("gap", 0) == 0) {
            gap_record = true;
            CHECK(c.verdict == Verdict::Pass);
            CHECK(c.lhs > c.rhs);  // the square sits well above the 256-gon
        }
    CHECK(gap_record);
}

TEST_CASE("builtin catalog defaults") {
    const Catalog cat = Catalog::builtin();
    CHECK(cat.default_bodies(2) ==
          std::vector<std::string>{"square", "triangle", "ball", "cross", "kgon256"});
    CHECK(cat.default_bodies(3) ==
          std::vector<std::string>{"cube", "simplex", "cross", "ball"});
    CHECK(cat.body("simplex", 3).volume() == doctest::Approx(1.0 / 6.0));
    CHECK_FALSE(cat.body("ball", 3).is_polytope());
}

TEST_CASE("cli behaviors") {
    const auto tmp = std::filesystem::temp_directory_path();
    const auto out1 = tmp / "hpl_r1.json";
    const auto out2 = tmp / "hpl_r2.json";

    CHECK(cli({"--list-suites"}) == 0);
    CHECK(cli({"--suite", "petty-zhang", "--n", "2", "--m", "1", "--bodies",
               "square,triangle", "--samples", "2000", "--seed", "42", "--no-meta",
               "--out", out1.string()}) == 0);
    CHECK(cli({"--suite", "petty-zhang", "--n", "2", "--m", "1", "--bodies",
               "square,triangle", "--samples", "2000", "--seed", "42", "--no-meta",
               "--out", out2.string()}) == 0);
    CHECK(slurp(out1) == slurp(out2));
    CHECK_FALSE(slurp(out1).empty());

    // config errors exit 2
    CHECK(cli({"--suite", "bogus"}) == 2);
    CHECK(cli({"--weird-flag"}) == 2);
    CHECK(cli({}) == 2);
    CHECK(cli({"--suite", "petty-zhang", "--n", "7"}) == 2);
    CHECK(cli({"--suite", "petty-zhang", "--catalog", "/no/such/file.json"}) == 2);

    // an unknown body name is a configuration error
    CHECK(cli({"--suite", "petty-zhang", "--n", "2", "--m", "1", "--bodies",
               "unknown-body", "--samples", "2000"}) == 2);

    // csv output
    const auto out_csv = tmp / "hpl_r.csv";
    CHECK(cli({"--suite", "variational", "--n", "2", "--m", "1", "--samples", "2000",
               "--seed", "3", "--format", "csv", "--out", out_csv.string()}) == 0);
    CHECK(slurp(out_csv).rfind("name,anchor", 0) == 0);

    std::filesystem::remove(out1);
    std::filesystem::remove(out2);
    std::filesystem::remove(out_csv);
}

TEST_CASE("strict checks on indistinguishable quantities are inconclusive") {
    SuiteConfig cfg;
    cfg.suite = "mixed";
    cfg.n = 3;
    cfg.m = 1;
    cfg.bodies = {"cube", "cube"};
    cfg.samples = 2000;
    cfg.pointwise_samples = 50;
    cfg.seed = 5;
    const SuiteReport r = run_suite(cfg);
    CHECK_FALSE(r.any_fail());
    CHECK(r.any_inconclusive());
    bool strict_inconclusive = false;
    for (const auto& c : r.checks)
        if (c.name.rfind("strict", 0) == 0 && c.verdict == Verdict::Inconclusive)
            strict_inconclusive = true;
    CHECK(strict_inconclusive);
}

TEST_CASE("HPL_CATALOG environment override") {
    const auto path = std::filesystem::temp_directory_path() / "hpl_env_catalog.json";
    {
        std::ofstream out(path);
        out << R"({"lone": {"type": "vertices", "data": [[0,0],[1,0],[0,1]]}})";
    }
    setenv("HPL_CATALOG", path.string().c_str(), 1);
    SuiteConfig cfg = quick_cfg("petty-zhang");
    cfg.bodies.clear();  // defaults come from the env catalog now
    const SuiteReport r = run_suite(cfg);
    unsetenv("HPL_CATALOG");
    std::filesystem::remove(path);
    REQUIRE(!r.checks.empty());
    for (const auto& c : r.checks)
        CHECK(c.name.find("lone") != std::string::npos);
    CHECK_FALSE(r.any_fail());
}
