#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "szego/harness.hpp"

using namespace szego;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path &p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool has(const std::vector<std::string> &errors, const std::string &needle) {
    for (const auto &e : errors)
        if (e.find(needle) != std::string::npos)
            return true;
    return false;
}

} // namespace

TEST_CASE("validate reports every error") {
    auto v = validate_config(R"({
        "name": "bad", "kind": "first_column",
        "symbol": {"factors": [{"theta_over_pi": "1/2", "alpha": 0.5},
                               {"theta_over_pi": "1", "alpha": 0.1},
                               {"theta_over_pi": "1", "alpha": 0.2}]},
        "N": [64, 32], "x": [0.2, 1.5], "tolerance": {"dense": -1}, "colour": 3})");
    CHECK_FALSE(v.ok());
    CHECK(has(v.errors, "alpha must lie in (-1/2, 1/2)"));
    CHECK(has(v.errors, "duplicate theta at indices 1 and 2"));
    CHECK(has(v.errors, "N: values must be strictly ascending"));
    CHECK(has(v.errors, "x[1]"));
    CHECK(has(v.errors, "tolerance.dense"));
    CHECK(has(v.errors, "colour: unknown field"));
}

TEST_CASE("validate malformed input") {
    CHECK(has(validate_config("{not json").errors, "malformed JSON"));
    CHECK(has(validate_config("[1, 2]").errors, "expected a JSON object"));
    CHECK(has(validate_config(R"({"name": "a", "kind": "nope", "N": [1]})").errors, "kind"));
    CHECK(has(validate_config(R"({"name": "a", "kind": "small_k", "symbol": {}, "N": [8]})").errors,
              "k: required"));
    CHECK(has(validate_config(R"({"name": "a", "kind": "f_kernel_table", "N": [8], "alpha": 0.6, "z": [0]})")
                  .errors,
              "alpha"));
}

TEST_CASE("validate parses a good config") {
    auto v = validate_config(R"({
        "name": "ok", "kind": "convergence_x",
        "symbol": {"factors": [{"theta_over_pi": "1/2", "alpha": 0.25}]},
        "N": [16, 32], "truncation": {"L": 4096, "s_max": 8},
        "tolerance": {"ratio_band": 0.1}})");
    REQUIRE(v.ok());
    CHECK(v.config->symbol->factors()[0].theta == std::numbers::pi / 2);
    CHECK(v.config->L == 4096);
    CHECK(v.config->s_max == 8);
    CHECK(v.config->tol.ratio_band == 0.1);
    CHECK(v.config->output == "ok");
    CHECK(v.config->x == std::vector<double>{0.3, 0.5, 0.7});
}

TEST_CASE("demo configs validate") {
    auto demos = demo_configs();
    CHECK(demos.size() >= 12);
    for (const auto &[name, text] : demos) {
        CAPTURE(name);
        auto v = validate_config(text);
        CHECK(v.ok());
    }
}

TEST_CASE("first column of the identity") {
    auto v = validate_config(R"({"name": "identity", "kind": "first_column",
                                 "symbol": {"factors": []}, "N": [8]})");
    REQUIRE(v.ok());
    fs::path dir = fs::temp_directory_path() / "szego_harness_identity";
    fs::remove_all(dir);
    auto rep = run(*v.config, dir.string());
    CHECK(rep.all_pass());
    std::string csv = slurp(dir / "first_column_identity.csv");
    std::string expect = "k,re,im\n0,1,0\n";
    for (int k = 1; k <= 8; ++k)
        expect += std::to_string(k) + ",0,0\n";
    CHECK(csv == expect);
    auto summary = nlohmann::json::parse(slurp(dir / "summary.json"));
    CHECK(summary["experiment"] == "identity");
    CHECK(summary["predicates"].size() == rep.predicates.size());
    for (const auto &p : summary["predicates"]) {
        CHECK(p.contains("name"));
        CHECK(p.contains("pass"));
        CHECK(p.contains("value"));
        CHECK(p.contains("threshold"));
    }
    CHECK(summary.contains("timing_ms"));
}

TEST_CASE("runs are deterministic") {
    auto v = validate_config(R"({"name": "det", "kind": "small_k",
        "symbol": {"factors": [{"theta_over_pi": "1/3", "alpha": 0.25}, {"theta_over_pi": "1", "alpha": -0.1}],
                   "regular": {"p": [1, 0.5], "q": [1, -0.3]}},
        "N": [32, 64, 128], "k": [0, 3]})");
    REQUIRE(v.ok());
    fs::path a = fs::temp_directory_path() / "szego_det_a", b = fs::temp_directory_path() / "szego_det_b";
    fs::remove_all(a);
    fs::remove_all(b);
    run(*v.config, a.string(), {1});
    run(*v.config, b.string(), {4});
    auto body = slurp(a / "small_k_det.csv");
    CHECK_FALSE(body.empty());
    CHECK(body == slurp(b / "small_k_det.csv"));
}

TEST_CASE("a failing predicate fails the run") {
    auto v = validate_config(R"({"name": "strict", "kind": "small_k",
        "symbol": {"factors": [{"theta_over_pi": "1/2", "alpha": 0.25}, {"theta_over_pi": "3/2", "alpha": 0.25}]},
        "N": [32, 64, 128], "k": [0], "tolerance": {"slope_band": 0}})");
    REQUIRE(v.ok());
    fs::path dir = fs::temp_directory_path() / "szego_strict";
    auto rep = run(*v.config, dir.string());
    CHECK_FALSE(rep.all_pass());
    auto summary = nlohmann::json::parse(slurp(dir / "summary.json"));
    CHECK(summary["predicates"][0]["pass"] == false);
}

TEST_CASE("kind names") {
    CHECK(to_string(ExperimentKind::gegenbauer_phase) == "gegenbauer_phase");
    CHECK(to_string(ExperimentKind::f_kernel_table) == "f_kernel_table");
}
