#include "experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include <spdlog/spdlog.h>

#include "szego/analysis.hpp"
#include "szego/series.hpp"
#include "szego/toeplitz.hpp"
#include "szego/wiener_hopf.hpp"
#include "tails.hpp"

namespace szego::detail {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ToeplitzSystem system_for(const RunContext &ctx, long N) {
    long L = ctx.cfg.L > 0 ? ctx.cfg.L : default_series_length(N);
    return build_system(*ctx.cfg.symbol, N, L, ctx.threads);
}

PredictorPolynomial solve(const RunContext &ctx, long N) {
    auto pred = levinson_first_column(system_for(ctx, N));
    if (pred.ill_conditioned)
        spdlog::warn("N = {}: reflection coefficient close to the unit circle", N);
    return pred;
}

std::string suffix_N(const RunContext &ctx, long N) {
    return ctx.cfg.N.size() > 1 ? "_N" + std::to_string(N) : "";
}

std::vector<double> sorted_window(const std::vector<double> &x) {
    auto w = x;
    std::sort(w.begin(), w.end());
    if (w.size() == 1)
        w.push_back(w.front());
    return w;
}

} // namespace

void run_first_column(const RunContext &ctx) {
    for (long N : ctx.cfg.N) {
        auto sys = system_for(ctx, N);
        auto pred = levinson_first_column(sys);
        auto path = ctx.file(suffix_N(ctx, N));
        write_first_column_csv(path, pred);
        ctx.report.files.push_back(path);
        const std::string tag = "_N" + std::to_string(N);

        double rmax = 0.0;
        for (cplx r : pred.reflection)
            rmax = std::max(rmax, std::abs(r));
        ctx.check("reflection_inside_disk" + tag, rmax < 1.0, rmax, 1.0);

        if (N <= 512) {
            Eigen::MatrixXcd inv = dense_inverse_oracle(sys);
            double d = 0.0;
            for (long k = 0; k <= N; ++k)
                d = std::max(d, std::abs(inv(k, 0) - pred.first_column[k]));
            ctx.check("levinson_vs_dense" + tag, d <= ctx.cfg.tol.dense, d, ctx.cfg.tol.dense);
        }
        if (N >= 1 && N <= 64) {
            double zmax = 0.0;
            for (cplx z : szego_zeros(pred))
                zmax = std::max(zmax, std::abs(z));
            ctx.check("szego_zeros_inside_disk" + tag, zmax < 1.0, zmax, 1.0);
        }
    }
}

void run_convergence_x(const RunContext &ctx) {
    const auto &sym = *ctx.cfg.symbol;
    const auto w = sorted_window(ctx.cfg.x);
    std::vector<ComparisonRecord> rows;
    std::vector<double> errs;
    double median = 0.0;
    for (long N : ctx.cfg.N) {
        auto pred = solve(ctx, N);
        auto stats = coef_window(sym, pred, w.front(), w.back());
        spdlog::info("N = {}: median ratio {:.6f}, max window error {:.4g}", N, stats.median_ratio,
                     stats.max_norm_err);
        errs.push_back(stats.max_norm_err);
        median = stats.median_ratio;
        rows.insert(rows.end(), stats.records.begin(), stats.records.end());
    }
    auto path = ctx.file();
    write_comparison_csv(path, rows);
    ctx.report.files.push_back(path);

    const double band = ctx.cfg.tol.ratio_band;
    ctx.check("median_ratio_N" + std::to_string(ctx.cfg.N.back()),
              std::fabs(median - 1.0) <= band, median, band);
    double worst = errs.size() > 1 ? 0.0 : 1.0;
    for (std::size_t i = 1; i < errs.size(); ++i)
        worst = std::max(worst, errs[i] / errs[i - 1]);
    ctx.check("window_error_nonincreasing", nonincreasing_within(errs, ctx.cfg.tol.noise_band), worst,
              1.0 + ctx.cfg.tol.noise_band);
}

void run_small_k(const RunContext &ctx) {
    const auto &sym = *ctx.cfg.symbol;
    const double b0 = beta0_of(sym);
    const auto &ks = ctx.cfg.k;
    std::vector<std::vector<double>> diffs(ks.size());
    std::vector<double> Ns;
    std::vector<ComparisonRecord> rows;
    for (long N : ctx.cfg.N) {
        auto pred = solve(ctx, N);
        Ns.push_back(static_cast<double>(N));
        for (std::size_t i = 0; i < ks.size(); ++i) {
            auto p = small_k_entry(sym, N, ks[i]);
            auto rec = compare(normalized_entry(pred.first_column, ks[i], b0), p);
            diffs[i].push_back(rec.abs_err);
            rows.push_back(rec);
        }
    }
    auto path = ctx.file();
    write_comparison_csv(path, rows);
    ctx.report.files.push_back(path);
    for (std::size_t i = 0; i < ks.size(); ++i) {
        double s = loglog_slope(Ns, diffs[i]);
        ctx.check("slope_k" + std::to_string(ks[i]),
                  std::isfinite(s) && std::fabs(s - ctx.cfg.tol.slope) <= ctx.cfg.tol.slope_band, s,
                  ctx.cfg.tol.slope);
    }
}

void run_gegenbauer_phase(const RunContext &ctx) {
    const auto &sym = *ctx.cfg.symbol;
    const double b0 = beta0_of(sym);
    const auto w = sorted_window(ctx.cfg.x);
    double theta0 = 0.0, alpha = sym.factors().front().alpha;
    for (const auto &f : sym.factors())
        if (f.theta > 0.0 && f.theta < std::numbers::pi)
            theta0 = f.theta;
    const auto &tol = ctx.cfg.tol;

    std::vector<ComparisonRecord> closed_rows, special_rows;
    for (long N : ctx.cfg.N) {
        auto pred = solve(ctx, N);
        long k0 = std::max<long>(1, static_cast<long>(std::ceil(w.front() * N)));
        long k1 = std::min<long>(N - 1, static_cast<long>(std::floor(w.back() * N)));
        std::vector<double> values;
        double omega = 0.0;
        for (long k = k0; k <= k1; ++k) {
            cplx exact = normalized_entry(pred.first_column, k, b0);
            values.push_back(exact.real());
            auto g = gegenbauer_asymptotic(alpha, theta0, sym.regular(), N, k);
            omega = g.omega;
            closed_rows.push_back(compare(exact, g.closed_form));
            special_rows.push_back(compare(exact, g.specialized));
        }
        auto exact_zeros = sign_changes(values, k0);
        auto closed_zeros = cosine_zeros(theta0, omega, k0, k1);
        auto special_zeros = cosine_zeros(theta0, -omega, k0, k1);
        auto fraction = [&](const std::vector<double> &z) {
            return std::min(matched_fraction(z, exact_zeros, tol.crossing_index),
                            matched_fraction(exact_zeros, z, tol.crossing_index));
        };
        const std::string tag = "_N" + std::to_string(N);
        double fp = fraction(closed_zeros), fs = fraction(special_zeros);
        ctx.check("crossings_closed_form_phase" + tag, fp >= tol.crossing_fraction, fp, tol.crossing_fraction);
        ctx.check("crossings_specialized_phase" + tag, fs >= tol.crossing_fraction, fs,
                  tol.crossing_fraction);
        double freq = crossing_frequency(exact_zeros);
        double rel = std::fabs(freq * std::numbers::pi / theta0 - 1.0);
        ctx.check("crossing_frequency" + tag, rel <= tol.frequency, rel, tol.frequency);
    }
    auto path = ctx.file();
    write_comparison_csv(path, closed_rows);
    ctx.report.files.push_back(path);
    path = ctx.file("_specialized");
    write_comparison_csv(path, special_rows);
    ctx.report.files.push_back(path);
}

void run_neumann_crosscheck(const RunContext &ctx) {
    const auto &sym = *ctx.cfg.symbol;
    auto path = ctx.file();
    std::ofstream out(path);
    out << "N,k,levinson_re,levinson_im,neumann_re,neumann_im,abs_err,tail_estimate,contraction_ratio\n";
    for (long N : ctx.cfg.N) {
        auto pred = solve(ctx, N);
        NeumannOptions opts;
        opts.s_max = ctx.cfg.s_max;
        opts.cutoff = ctx.cfg.n_max;
        NeumannInverter inv(sym, N, opts);
        std::vector<long> ks = ctx.cfg.k;
        if (ks.empty())
            for (long k = 0; k <= N; ++k)
                ks.push_back(k);
        std::vector<NeumannResult> res(ks.size());
        parallel_chunks(static_cast<long>(ks.size()), ctx.threads, [&](long a, long b) {
            for (long i = a; i < b; ++i)
                res[i] = inv.entry(ks[i], 0);
        });
        double dmax = 0.0, rho = 0.0;
        for (std::size_t i = 0; i < ks.size(); ++i) {
            cplx lev = std::conj(pred.first_column[ks[i]]);
            double d = std::abs(res[i].value - lev);
            dmax = std::max(dmax, d);
            rho = std::max(rho, res[i].contraction_ratio);
            out << N << ',' << ks[i] << ',' << fmt17(lev.real()) << ',' << fmt17(lev.imag()) << ','
                << fmt17(res[i].value.real()) << ',' << fmt17(res[i].value.imag()) << ',' << fmt17(d)
                << ',' << fmt17(res[i].tail_estimate) << ',' << fmt17(res[i].contraction_ratio) << '\n';
        }
        const std::string tag = "_N" + std::to_string(N);
        ctx.check("neumann_vs_levinson" + tag, dmax <= ctx.cfg.tol.neumann, dmax, ctx.cfg.tol.neumann);
        ctx.check("contraction" + tag, rho < 1.0, rho, 1.0);
    }
    ctx.report.files.push_back(path);
}

void run_f_kernel_table(const RunContext &ctx) {
    const auto &cfg = ctx.cfg;
    const double alpha = cfg.alpha;
    std::vector<double> z = cfg.z;
    const bool has_origin = !z.empty() && z.front() == 0.0;
    if (!has_origin)
        z.insert(z.begin(), 0.0);
    const double zmax = z.back();

    auto path = ctx.file();
    std::ofstream out(path);
    out << "N,z,F,weighted,log_shape,ratio,truncation_error,far_field\n";
    std::vector<double> K0_by_N, lip_by_N;
    for (long N : cfg.N) {
        const double a = (1.0 + alpha) / static_cast<double>(N);
        auto res = F_kernel_grid(N, alpha, z, cfg.s_max, cfg.n_max);
        double K0 = 0.0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            double shape = 1.0 + std::fabs(std::log(1.0 - z[i] + a));
            double ratio = std::fabs(res[i].value) / shape;
            K0 = std::max(K0, ratio);
            if (i > 0 || has_origin)
                out << N << ',' << fmt17(z[i]) << ',' << fmt17(res[i].value) << ','
                    << fmt17(res[i].weighted) << ',' << fmt17(shape) << ',' << fmt17(ratio) << ','
                    << fmt17(res[i].truncation_error) << ',' << fmt17(res[i].far_field) << '\n';
        }
        K0_by_N.push_back(K0);
        double lip = 0.0;
        for (std::size_t i = 1; i < z.size(); ++i)
            lip = std::max(lip, std::fabs(res[i].value - res[i - 1].value) / (z[i] - z[i - 1]));
        lip *= (1.0 - zmax) / (1.0 + std::fabs(std::log(1.0 - zmax + a)));
        lip_by_N.push_back(lip);

        const std::string tag = "_N" + std::to_string(N);
        if (N >= 256) {
            double a2 = alpha * alpha;
            double rel = std::fabs(res[0].weighted - a2) / a2;
            ctx.check("F0_near_alpha2" + tag, rel <= cfg.tol.f_alpha2, rel, cfg.tol.f_alpha2);
        }
        spdlog::info("N = {}: K0 = {:.6g}, Lipschitz constant {:.6g}", N, K0, lip);
    }
    ctx.report.files.push_back(path);

    // K0 fitted on the smallest N must bound every larger N within the noise band
    const double K0 = K0_by_N.front();
    ctx.check("eq_F_K0_fitted", std::isfinite(K0) && K0 > 0.0, K0, 0.0);
    double spread = 0.0;
    for (double k : K0_by_N)
        spread = std::max(spread, k / K0);
    ctx.check("eq_F_bound_across_N", spread <= 1.0 + cfg.tol.noise_band, spread,
              1.0 + cfg.tol.noise_band);
    if (cfg.N.size() > 1 && z.size() > 1) {
        double lo = *std::min_element(lip_by_N.begin(), lip_by_N.end());
        double hi = *std::max_element(lip_by_N.begin(), lip_by_N.end());
        double r = lo > 0.0 ? hi / lo : INFINITY;
        ctx.check("lipschitz_constant_stable", r <= 1.0 + cfg.tol.noise_band, r,
                  1.0 + cfg.tol.noise_band);
    }
}

} // namespace szego::detail
