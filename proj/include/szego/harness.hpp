#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "szego/symbol.hpp"

namespace szego {

enum class ExperimentKind {
    first_column,
    convergence_x,
    small_k,
    gegenbauer_phase,
    neumann_crosscheck,
    f_kernel_table
};

std::string to_string(ExperimentKind k);

struct Tolerances {
    double dense = 1e-9;          // Levinson vs dense
    double neumann = 1e-6;        // Neumann vs Levinson
    double ratio_band = 0.05;     // median ratio in [1 - band, 1 + band]
    double noise_band = 0.10;     // nonincreasing within this factor
    double slope = -1.0;
    double slope_band = 0.2;
    double crossing_fraction = 0.9;
    double crossing_index = 1.0;
    double frequency = 0.02;
    double f_alpha2 = 0.15;
};

struct ExperimentConfig {
    std::string name;
    ExperimentKind kind = ExperimentKind::first_column;
    std::optional<FHSymbol> symbol;
    std::vector<long> N;
    std::vector<long> k;
    std::vector<double> x;  // window for convergence_x and gegenbauer_phase
    std::vector<double> z;  // f_kernel_table
    double alpha = 0.0;     // f_kernel_table
    long L = 0;             // 0: default_series_length(N)
    int s_max = 16;
    long n_max = 0;         // 0: max(4N, 2048)
    std::string output;     // file stem, defaults to name
    Tolerances tol;
};

struct ValidationResult {
    std::optional<ExperimentConfig> config;
    std::vector<std::string> errors;
    bool ok() const { return config.has_value() && errors.empty(); }
};

ValidationResult validate_config(const std::string &raw);

struct Predicate {
    std::string name;
    bool pass = false;
    double value = 0.0;
    double threshold = 0.0;
};

struct RunReport {
    std::string experiment;
    std::vector<Predicate> predicates;
    double timing_ms = 0.0;
    std::vector<std::string> files;

    bool all_pass() const;
    nlohmann::json summary() const;
};

struct RunOptions {
    unsigned threads = 1;
};

RunReport run(const ExperimentConfig &config, const std::string &out_dir, RunOptions opts = {});

// fixture configs of the acceptance criteria: (file name, JSON text)
std::vector<std::pair<std::string, std::string>> demo_configs();

// the six symbols of the oracle suite, in symbol JSON form
std::vector<std::pair<std::string, nlohmann::json>> fixture_symbols();

} // namespace szego

namespace szego {

// level from SZEGO_FH_LOG (error, info, debug); default error
void init_logging();

} // namespace szego
