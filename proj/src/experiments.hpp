#pragma once

#include <string>

#include "szego/harness.hpp"

namespace szego::detail {

struct RunContext {
    const ExperimentConfig &cfg;
    std::string dir;
    std::string stem;
    unsigned threads;
    RunReport &report;

    std::string file(const std::string &suffix = "") const;
    void check(const std::string &name, bool pass, double value, double threshold) const;
};

void run_first_column(const RunContext &ctx);
void run_convergence_x(const RunContext &ctx);
void run_small_k(const RunContext &ctx);
void run_gegenbauer_phase(const RunContext &ctx);
void run_neumann_crosscheck(const RunContext &ctx);
void run_f_kernel_table(const RunContext &ctx);

} // namespace szego::detail
