#include "szego/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>

#include <spdlog/spdlog.h>

#include "experiments.hpp"
#include "szego/symbol_io.hpp"

namespace szego {

using nlohmann::json;

namespace {

const std::vector<std::pair<std::string, ExperimentKind>> kinds = {
    {"first_column", ExperimentKind::first_column},
    {"convergence_x", ExperimentKind::convergence_x},
    {"small_k", ExperimentKind::small_k},
    {"gegenbauer_phase", ExperimentKind::gegenbauer_phase},
    {"neumann_crosscheck", ExperimentKind::neumann_crosscheck},
    {"f_kernel_table", ExperimentKind::f_kernel_table},
};

template <class T>
std::optional<std::vector<T>> read_list(const json &j, const std::string &key,
                                        std::vector<std::string> &errors) {
    const json &v = j[key];
    if (!v.is_array() || v.empty()) {
        errors.push_back(key + ": expected a nonempty array");
        return std::nullopt;
    }
    std::vector<T> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        bool ok = std::is_integral_v<T> ? v[i].is_number_integer() : v[i].is_number();
        if (!ok) {
            errors.push_back(key + "[" + std::to_string(i) + "]: expected " +
                             (std::is_integral_v<T> ? "an integer" : "a number"));
            return std::nullopt;
        }
        out.push_back(v[i].get<T>());
    }
    return out;
}

void read_tolerances(const json &t, Tolerances &tol, std::vector<std::string> &errors) {
    if (!t.is_object()) {
        errors.push_back("tolerance: expected an object");
        return;
    }
    const std::vector<std::pair<std::string, double *>> fields = {
        {"dense", &tol.dense},
        {"neumann", &tol.neumann},
        {"ratio_band", &tol.ratio_band},
        {"noise_band", &tol.noise_band},
        {"slope", &tol.slope},
        {"slope_band", &tol.slope_band},
        {"crossing_fraction", &tol.crossing_fraction},
        {"crossing_index", &tol.crossing_index},
        {"frequency", &tol.frequency},
        {"f_alpha2", &tol.f_alpha2},
    };
    for (auto it = t.begin(); it != t.end(); ++it) {
        auto f = std::find_if(fields.begin(), fields.end(),
                              [&](const auto &p) { return p.first == it.key(); });
        if (f == fields.end())
            errors.push_back("tolerance." + it.key() + ": unknown field");
        else if (!it->is_number() || !(it->get<double>() >= 0.0 || f->first == "slope"))
            errors.push_back("tolerance." + it.key() + ": expected a nonnegative number");
        else
            *f->second = it->get<double>();
    }
}

} // namespace

std::string to_string(ExperimentKind k) {
    for (const auto &p : kinds)
        if (p.second == k)
            return p.first;
    return "unknown";
}

ValidationResult validate_config(const std::string &raw) {
    ValidationResult res;
    auto &errors = res.errors;
    json j;
    try {
        j = json::parse(raw);
    } catch (const json::parse_error &e) {
        errors.push_back(std::string("malformed JSON: ") + e.what());
        return res;
    }
    if (!j.is_object()) {
        errors.push_back("config: expected a JSON object");
        return res;
    }
    static const std::set<std::string> known = {"name", "kind",       "symbol",    "N",     "k",
                                                "x",    "z",          "alpha",     "truncation",
                                                "tolerance", "output"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.count(it.key()))
            errors.push_back(it.key() + ": unknown field");

    ExperimentConfig cfg;
    if (j.contains("name") && j["name"].is_string() && !j["name"].get<std::string>().empty())
        cfg.name = j["name"].get<std::string>();
    else
        errors.push_back("name: expected a nonempty string");

    bool have_kind = false;
    if (j.contains("kind") && j["kind"].is_string()) {
        auto s = j["kind"].get<std::string>();
        for (const auto &p : kinds)
            if (p.first == s) {
                cfg.kind = p.second;
                have_kind = true;
            }
        if (!have_kind)
            errors.push_back("kind: unknown experiment kind \"" + s + "\"");
    } else {
        errors.push_back("kind: expected a string");
    }
    const bool fk = have_kind && cfg.kind == ExperimentKind::f_kernel_table;

    if (j.contains("symbol")) {
        cfg.symbol = parse_symbol(j["symbol"], errors, "symbol");
    } else if (have_kind && !fk) {
        errors.push_back("symbol: required for kind " + to_string(cfg.kind));
    }

    if (!j.contains("N")) {
        errors.push_back("N: expected a nonempty array");
    } else if (auto N = read_list<long>(j, "N", errors)) {
        cfg.N = *N;
        bool ok = true;
        for (std::size_t i = 0; i < cfg.N.size(); ++i) {
            if (cfg.N[i] < (fk ? 1 : 0)) {
                errors.push_back("N[" + std::to_string(i) + "]: must be " + (fk ? "positive" : "nonnegative"));
                ok = false;
            }
            if (i > 0 && cfg.N[i] <= cfg.N[i - 1])
                ok = false;
        }
        if (ok && !std::is_sorted(cfg.N.begin(), cfg.N.end()))
            ok = false;
        if (!std::is_sorted(cfg.N.begin(), cfg.N.end(), std::less_equal<long>()) ||
            std::adjacent_find(cfg.N.begin(), cfg.N.end()) != cfg.N.end())
            errors.push_back("N: values must be strictly ascending");
    }

    if (j.contains("k")) {
        if (auto k = read_list<long>(j, "k", errors)) {
            cfg.k = *k;
            for (std::size_t i = 0; i < cfg.k.size(); ++i)
                if (cfg.k[i] < 0 || (!cfg.N.empty() && cfg.k[i] > cfg.N.front()))
                    errors.push_back("k[" + std::to_string(i) + "]: must lie in [0, min N]");
        }
    } else if (have_kind && cfg.kind == ExperimentKind::small_k) {
        errors.push_back("k: required for kind small_k");
    }

    if (j.contains("x")) {
        if (auto x = read_list<double>(j, "x", errors)) {
            cfg.x = *x;
            for (std::size_t i = 0; i < cfg.x.size(); ++i)
                if (!(cfg.x[i] > 0.0 && cfg.x[i] < 1.0))
                    errors.push_back("x[" + std::to_string(i) + "]: must lie in (0, 1)");
        }
    } else {
        cfg.x = {0.3, 0.5, 0.7};
    }

    if (fk) {
        if (j.contains("z")) {
            if (auto z = read_list<double>(j, "z", errors)) {
                cfg.z = *z;
                for (std::size_t i = 0; i < cfg.z.size(); ++i)
                    if (!(cfg.z[i] >= 0.0 && cfg.z[i] < 1.0))
                        errors.push_back("z[" + std::to_string(i) + "]: must lie in [0, 1)");
                if (!std::is_sorted(cfg.z.begin(), cfg.z.end()))
                    errors.push_back("z: values must be ascending");
            }
        } else {
            errors.push_back("z: required for kind f_kernel_table");
        }
        if (j.contains("alpha") && j["alpha"].is_number()) {
            cfg.alpha = j["alpha"].get<double>();
            if (!(cfg.alpha > -0.5 && cfg.alpha < 0.5) || cfg.alpha == 0.0)
                errors.push_back("alpha: alpha must lie in (-1/2, 1/2) and be nonzero");
        } else {
            errors.push_back("alpha: required number for kind f_kernel_table");
        }
    }

    if (j.contains("truncation")) {
        const json &t = j["truncation"];
        if (!t.is_object()) {
            errors.push_back("truncation: expected an object");
        } else {
            for (auto it = t.begin(); it != t.end(); ++it) {
                if (!it->is_number_integer() || it->get<long>() < 0) {
                    errors.push_back("truncation." + it.key() + ": expected a nonnegative integer");
                    continue;
                }
                if (it.key() == "L")
                    cfg.L = it->get<long>();
                else if (it.key() == "s_max")
                    cfg.s_max = it->get<int>();
                else if (it.key() == "n_max")
                    cfg.n_max = it->get<long>();
                else
                    errors.push_back("truncation." + it.key() + ": unknown field");
            }
            if (cfg.L > 0 && !cfg.N.empty() && cfg.L < 2 * cfg.N.back())
                errors.push_back("truncation.L: must be at least 2 max(N)");
        }
    }
    if (j.contains("tolerance"))
        read_tolerances(j["tolerance"], cfg.tol, errors);

    if (j.contains("output")) {
        if (j["output"].is_string() && !j["output"].get<std::string>().empty() &&
            j["output"].get<std::string>().find('/') == std::string::npos)
            cfg.output = j["output"].get<std::string>();
        else
            errors.push_back("output: expected a file stem without '/'");
    }
    if (cfg.output.empty())
        cfg.output = cfg.name;

    if (have_kind && cfg.kind == ExperimentKind::gegenbauer_phase && cfg.symbol) {
        const auto &f = cfg.symbol->factors();
        bool pair = f.size() == 2 && f[0].alpha == f[1].alpha &&
                    std::fabs(std::remainder(f[0].theta + f[1].theta, 2 * std::numbers::pi)) <= 1e-12;
        if (!pair)
            errors.push_back("symbol: gegenbauer_phase needs a conjugate pair with equal alpha");
    }
    if (have_kind && (cfg.kind == ExperimentKind::convergence_x ||
                      cfg.kind == ExperimentKind::gegenbauer_phase) && cfg.symbol &&
        cfg.symbol->M() == 0)
        errors.push_back("symbol: " + to_string(cfg.kind) + " needs at least one singular factor");
    for (long n : cfg.N)
        if (have_kind && cfg.kind == ExperimentKind::convergence_x && n < 2) {
            errors.push_back("N: convergence_x needs N >= 2");
            break;
        }

    if (errors.empty())
        res.config = std::move(cfg);
    return res;
}

bool RunReport::all_pass() const {
    return std::all_of(predicates.begin(), predicates.end(), [](const Predicate &p) { return p.pass; });
}

json RunReport::summary() const {
    json preds = json::array();
    for (const auto &p : predicates)
        preds.push_back({{"name", p.name},
                         {"pass", p.pass},
                         {"value", std::isfinite(p.value) ? json(p.value) : json(nullptr)},
                         {"threshold", p.threshold}});
    return {{"experiment", experiment}, {"predicates", preds}, {"timing_ms", timing_ms}};
}

namespace detail {

std::string RunContext::file(const std::string &suffix) const {
    return (std::filesystem::path(dir) / (to_string(cfg.kind) + "_" + stem + suffix + ".csv")).string();
}

void RunContext::check(const std::string &name, bool pass, double value, double threshold) const {
    report.predicates.push_back({name, pass, value, threshold});
    spdlog::info("{}: {} (value {:.6g}, threshold {:.6g})", name, pass ? "pass" : "FAIL", value, threshold);
}

} // namespace detail

RunReport run(const ExperimentConfig &cfg, const std::string &out_dir, RunOptions opts) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    RunReport report;
    report.experiment = cfg.name;
    detail::RunContext ctx{cfg, out_dir, cfg.output, std::max(1u, opts.threads), report};
    spdlog::info("experiment {} ({})", cfg.name, to_string(cfg.kind));
    auto t0 = std::chrono::steady_clock::now();
    switch (cfg.kind) {
    case ExperimentKind::first_column:
        detail::run_first_column(ctx);
        break;
    case ExperimentKind::convergence_x:
        detail::run_convergence_x(ctx);
        break;
    case ExperimentKind::small_k:
        detail::run_small_k(ctx);
        break;
    case ExperimentKind::gegenbauer_phase:
        detail::run_gegenbauer_phase(ctx);
        break;
    case ExperimentKind::neumann_crosscheck:
        detail::run_neumann_crosscheck(ctx);
        break;
    case ExperimentKind::f_kernel_table:
        detail::run_f_kernel_table(ctx);
        break;
    }
    report.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    auto summary_path = (fs::path(out_dir) / "summary.json").string();
    std::ofstream(summary_path) << report.summary().dump(2) << '\n';
    report.files.push_back(summary_path);
    return report;
}

void init_logging() {
    const char *env = std::getenv("SZEGO_FH_LOG");
    std::string level = env ? env : "error";
    if (level == "debug")
        spdlog::set_level(spdlog::level::debug);
    else if (level == "info")
        spdlog::set_level(spdlog::level::info);
    else
        spdlog::set_level(spdlog::level::err);
}

} // namespace szego
