#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <spdlog/spdlog.h>

#include "szego/harness.hpp"

namespace {

std::optional<std::string> slurp(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::optional<szego::ExperimentConfig> load(const std::string &path) {
    auto text = slurp(path);
    if (!text) {
        std::cerr << "cannot read " << path << "\n";
        return std::nullopt;
    }
    auto v = szego::validate_config(*text);
    for (const auto &e : v.errors)
        std::cerr << path << ": " << e << "\n";
    if (!v.ok())
        return std::nullopt;
    return v.config;
}

int run_one(const szego::ExperimentConfig &cfg, const std::string &out, unsigned threads) {
    try {
        auto report = szego::run(cfg, out, {threads});
        for (const auto &p : report.predicates)
            std::cout << (p.pass ? "PASS " : "FAIL ") << cfg.name << " " << p.name << " value=" << p.value
                      << " threshold=" << p.threshold << "\n";
        std::cout << cfg.name << ": " << report.timing_ms << " ms\n";
        return report.all_pass() ? 0 : 1;
    } catch (const std::exception &e) {
        std::cerr << cfg.name << ": " << e.what() << "\n";
        return 2;
    }
}

} // namespace

int main(int argc, char **argv) {
    szego::init_logging();
    CLI::App app{"Toeplitz inverses of Fisher-Hartwig symbols: exact and asymptotic"};
    app.require_subcommand(1);

    std::string config, out;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    long seed = 0;
    auto *run = app.add_subcommand("run", "run one experiment config");
    run->add_option("--config", config, "experiment JSON")->required();
    run->add_option("--out", out, "output directory")->required();
    run->add_option("--threads", threads, "worker threads");
    run->add_option("--seed", seed, "ignored; all paths are deterministic");

    std::string vconfig;
    auto *validate = app.add_subcommand("validate", "check a config and list every error");
    validate->add_option("--config", vconfig, "experiment JSON")->required();

    std::string dout;
    bool drun = false;
    auto *demo = app.add_subcommand("demo", "write the fixture configs");
    demo->add_option("--out", dout, "output directory")->required();
    demo->add_flag("--run", drun, "also run every fixture into <out>/<name>/");

    CLI11_PARSE(app, argc, argv);

    if (*run) {
        auto cfg = load(config);
        return cfg ? run_one(*cfg, out, threads) : 2;
    }
    if (*validate) {
        auto cfg = load(vconfig);
        if (!cfg)
            return 1;
        std::cout << vconfig << ": ok (" << szego::to_string(cfg->kind) << ")\n";
        return 0;
    }
    namespace fs = std::filesystem;
    fs::create_directories(dout);
    int status = 0;
    for (const auto &[file, text] : szego::demo_configs()) {
        auto path = (fs::path(dout) / file).string();
        std::ofstream(path) << text;
        std::cout << path << "\n";
        if (drun) {
            auto cfg = load(path);
            int s = cfg ? run_one(*cfg, (fs::path(dout) / fs::path(file).stem()).string(), threads) : 2;
            status = std::max(status, s);
        }
    }
    return status;
}
