#include "szego/symbol_io.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "szego/errors.hpp"

namespace szego {

using nlohmann::json;

namespace {

std::optional<long long> parse_int(std::string_view s) {
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        return std::nullopt;
    return v;
}

std::optional<std::vector<double>> number_list(const json &j, const std::string &path,
                                               std::vector<std::string> &errors) {
    if (!j.is_array() || j.empty()) {
        errors.push_back(path + ": expected a nonempty array of numbers");
        return std::nullopt;
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number()) {
            errors.push_back(path + "[" + std::to_string(i) + "]: expected a number");
            return std::nullopt;
        }
        out.push_back(j[i].get<double>());
    }
    return out;
}

} // namespace

std::optional<double> parse_theta_over_pi(const std::string &text) {
    auto slash = text.find('/');
    auto num = parse_int(std::string_view(text).substr(0, slash));
    long long den = 1;
    if (slash != std::string::npos) {
        auto d = parse_int(std::string_view(text).substr(slash + 1));
        if (!d || *d <= 0)
            return std::nullopt;
        den = *d;
    }
    if (!num)
        return std::nullopt;
    // reduce p/q mod 2 first so the product with pi stays in range
    long long p = *num % (2 * den);
    if (p < 0)
        p += 2 * den;
    return std::numbers::pi * static_cast<double>(p) / static_cast<double>(den);
}

std::optional<FHSymbol> parse_symbol(const json &j, std::vector<std::string> &errors,
                                     const std::string &path) {
    std::size_t before = errors.size();
    if (!j.is_object()) {
        errors.push_back(path + ": expected an object");
        return std::nullopt;
    }
    std::vector<SingularFactor> factors;
    std::vector<std::size_t> factor_index;
    if (j.contains("factors")) {
        const json &fs = j["factors"];
        if (!fs.is_array()) {
            errors.push_back(path + ".factors: expected an array");
        } else {
            for (std::size_t i = 0; i < fs.size(); ++i) {
                std::string fp = path + ".factors[" + std::to_string(i) + "]";
                const json &f = fs[i];
                if (!f.is_object()) {
                    errors.push_back(fp + ": expected an object");
                    continue;
                }
                std::optional<double> theta;
                if (f.contains("theta") && f.contains("theta_over_pi")) {
                    errors.push_back(fp + ": give either theta or theta_over_pi, not both");
                } else if (f.contains("theta")) {
                    if (f["theta"].is_number())
                        theta = f["theta"].get<double>();
                    else
                        errors.push_back(fp + ".theta: expected a number");
                } else if (f.contains("theta_over_pi")) {
                    if (f["theta_over_pi"].is_string())
                        theta = parse_theta_over_pi(f["theta_over_pi"].get<std::string>());
                    if (!theta)
                        errors.push_back(fp + ".theta_over_pi: expected a rational string \"p/q\"");
                } else {
                    errors.push_back(fp + ": missing theta");
                }
                if (theta && !(*theta > 0.0 && *theta < 2.0 * std::numbers::pi))
                    errors.push_back(fp + ".theta: theta must lie in (0, 2 pi)");
                if (!f.contains("alpha") || !f["alpha"].is_number()) {
                    errors.push_back(fp + ".alpha: expected a number");
                    continue;
                }
                double alpha = f["alpha"].get<double>();
                if (!(alpha > -0.5 && alpha < 0.5))
                    errors.push_back(fp + ".alpha: alpha must lie in (-1/2, 1/2)");
                if (theta && alpha != 0.0) {
                    factors.push_back({*theta, alpha});
                    factor_index.push_back(i);
                }
            }
        }
    }
    for (std::size_t a = 0; a < factors.size(); ++a)
        for (std::size_t b = a + 1; b < factors.size(); ++b)
            if (std::fabs(std::remainder(factors[a].theta - factors[b].theta,
                                         2.0 * std::numbers::pi)) <= 1e-9)
                errors.push_back(path + ".factors: duplicate theta at indices " +
                                 std::to_string(factor_index[a]) + " and " +
                                 std::to_string(factor_index[b]));

    RationalRegularPart reg;
    if (j.contains("regular")) {
        const json &r = j["regular"];
        if (!r.is_object()) {
            errors.push_back(path + ".regular: expected an object");
        } else {
            if (r.contains("p")) {
                if (auto v = number_list(r["p"], path + ".regular.p", errors))
                    reg.p = *v;
            }
            if (r.contains("q")) {
                if (auto v = number_list(r["q"], path + ".regular.q", errors))
                    reg.q = *v;
            }
            if (errors.size() == before)
                for (auto &e : check_regular_part(reg))
                    errors.push_back(path + "." + e);
        }
    }
    if (errors.size() != before)
        return std::nullopt;
    try {
        return FHSymbol(factors, reg);
    } catch (const DomainError &e) {
        errors.push_back(path + ": " + e.what());
        return std::nullopt;
    }
}

json symbol_to_json(const FHSymbol &s) {
    json fs = json::array();
    for (const auto &f : s.factors())
        fs.push_back({{"theta", f.theta}, {"alpha", f.alpha}});
    return {{"factors", fs}, {"regular", {{"p", s.regular().p}, {"q", s.regular().q}}}};
}

} // namespace szego
