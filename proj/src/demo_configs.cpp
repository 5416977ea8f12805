#include "szego/harness.hpp"

namespace szego {

using nlohmann::json;

namespace {

json factor(const char *theta_over_pi, double alpha) {
    return {{"theta_over_pi", theta_over_pi}, {"alpha", alpha}};
}

const json rational = {{"p", {1.0, 0.5}}, {"q", {1.0, -0.3}}};

json gegenbauer() { return {{"factors", {factor("1/2", 0.25), factor("3/2", 0.25)}}}; }

json at_pi() { return {{"factors", {factor("1", 0.25)}}}; }

} // namespace

std::vector<std::pair<std::string, json>> fixture_symbols() {
    return {
        {"m1_pi", at_pi()},
        {"m1_negative_rational", {{"factors", {factor("1/2", -0.25)}}, {"regular", rational}}},
        {"gegenbauer", gegenbauer()},
        {"m2_mixed_rational",
         {{"factors", {factor("1/3", 0.4), factor("1", -0.25)}}, {"regular", rational}}},
        {"m3_mixed", {{"factors", {factor("1/4", 0.4), factor("1", 0.25), factor("3/2", -0.25)}}}},
        {"m3_negative_rational",
         {{"factors", {factor("1/2", -0.25), factor("1", -0.25), factor("3/2", -0.25)}},
          {"regular", rational}}},
    };
}

std::vector<std::pair<std::string, std::string>> demo_configs() {
    std::vector<std::pair<std::string, std::string>> out;
    auto add = [&](const std::string &name, json j) {
        j["name"] = name;
        out.emplace_back(name + ".json", j.dump(2) + "\n");
    };
    for (const auto &[name, sym] : fixture_symbols())
        add("oracle_" + name, {{"kind", "first_column"}, {"symbol", sym}, {"N", {64}}});
    add("neumann_gegenbauer", {{"kind", "neumann_crosscheck"},
                               {"symbol", gegenbauer()},
                               {"N", {16}},
                               {"truncation", {{"s_max", 16}, {"n_max", 4096}}}});
    const json ladder = {512, 1024, 2048, 4096};
    add("coef_gegenbauer",
        {{"kind", "convergence_x"}, {"symbol", gegenbauer()}, {"N", ladder}, {"x", {0.3, 0.5, 0.7}}});
    add("coef_m1_pi",
        {{"kind", "convergence_x"}, {"symbol", at_pi()}, {"N", ladder}, {"x", {0.3, 0.5, 0.7}}});
    add("gegen_phase",
        {{"kind", "gegenbauer_phase"}, {"symbol", gegenbauer()}, {"N", {2048}}, {"x", {0.3, 0.7}}});
    add("small_k_gegenbauer", {{"kind", "small_k"},
                               {"symbol", gegenbauer()},
                               {"N", {128, 256, 512, 1024, 2048, 4096}},
                               {"k", {0, 5, 17}}});
    add("f_kernel_quarter", {{"kind", "f_kernel_table"},
                             {"alpha", 0.25},
                             {"N", {64, 256, 1024}},
                             {"z", {0.0, 0.25, 0.5, 0.75, 0.9}}});
    return out;
}

} // namespace szego
