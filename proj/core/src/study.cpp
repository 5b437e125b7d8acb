#include "fracgreen/study.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "fracgreen/errors.hpp"
#include "fracgreen/format.hpp"
#include "fracgreen/galerkin.hpp"

namespace fracgreen {

double rmse(std::span<const double> approx, std::span<const double> exact) {
    if (approx.size() != exact.size()) throw ConfigError("rmse: length mismatch");
    if (approx.empty()) throw ConfigError("rmse: empty input");
    double sum = 0.0;
    for (std::size_t i = 0; i < approx.size(); ++i) {
        const double d = approx[i] - exact[i];
        sum += d * d;
    }
    return std::sqrt(sum / static_cast<double>(approx.size()));
}

double convergence_rate(double e1, double h1, double e2, double h2) {
    if (!(e1 > 0.0 && e2 > 0.0 && h1 > 0.0 && h2 > 0.0))
        throw DomainError("convergence_rate needs positive errors and fill distances");
    if (!(h1 > h2)) throw DomainError("convergence_rate needs h1 > h2");
    return std::log(e1 / e2) / std::log(h1 / h2);
}

double fitted_slope(std::span<const StudyRow> rows) {
    if (rows.size() < 2) throw ConfigError("fitted_slope needs at least two rows");
    double sx = 0, sy = 0;
    for (const auto& r : rows) {
        if (!(r.error > 0.0 && r.h > 0.0)) throw DomainError("fitted_slope needs positive data");
        sx += std::log(r.h);
        sy += std::log(r.error);
    }
    const double m = static_cast<double>(rows.size());
    const double mx = sx / m;
    const double my = sy / m;
    double sxx = 0, sxy = 0;
    for (const auto& r : rows) {
        const double dx = std::log(r.h) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(r.error) - my);
    }
    return sxy / sxx;
}

std::string_view to_string(EvalDomain d) { return d == EvalDomain::Full ? "full" : "interior"; }

std::optional<EvalDomain> parse_eval_domain(std::string_view name) {
    if (name == "full") return EvalDomain::Full;
    if (name == "interior") return EvalDomain::Interior;
    return std::nullopt;
}

std::vector<double> error_grid(EvalDomain domain) {
    std::vector<double> grid = evaluation_grid(kEvalPoints);
    if (domain == EvalDomain::Interior) {
        std::erase_if(grid, [](double x) { return x < kInteriorLo || x > kInteriorHi; });
    }
    return grid;
}

void StudyConfig::validate() const {
    if (n_list.empty()) throw ConfigError("study needs at least one N");
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        if (n_list[i] < 1) throw ConfigError("N must be positive");
        if (i > 0 && n_list[i] <= n_list[i - 1]) throw ConfigError("N list must be strictly increasing");
    }
    if (nodes == NodeKind::Explicit) throw ConfigError("studies use uniform or Chebyshev nodes");
    rule.validate();
    switch (benchmark) {
        case BenchmarkId::BvpLeft:
            if (spec.kind() != KernelKind::RiemannLiouvilleLeft)
                throw ConfigError("bvp-left needs the rl-left kernel");
            break;
        case BenchmarkId::BvpRight:
            if (spec.kind() != KernelKind::RiemannLiouvilleRight)
                throw ConfigError("bvp-right needs the rl-right kernel");
            break;
        case BenchmarkId::Diffusion:
            if (spec.kind() != KernelKind::RiemannLiouvilleLeft)
                throw ConfigError("diffusion needs the rl-left kernel");
            if (!(t1 > t0)) throw ConfigError("diffusion needs t1 > t0");
            if (time_steps && *time_steps < 1) throw ConfigError("time steps must be positive");
            break;
        case BenchmarkId::F1:
        case BenchmarkId::F2:
            break;
    }
}

TestFunctions default_test_functions(BenchmarkId id) {
    // Adjoint slices make the stationary solve nodally exact; the diffusion
    // march needs the primal pair, whose symmetric mass keeps CN stable.
    return kind_of(id) == BenchmarkKind::Diffusion ? TestFunctions::Primal : TestFunctions::Adjoint;
}

namespace {

double cell_error(const StudyConfig& cfg, std::size_t n) {
    const NodeSet nodes = make_nodes(cfg.nodes, n);
    const std::vector<double> grid = error_grid(cfg.domain);
    std::vector<double> exact(grid.size());
    std::vector<std::vector<double>> history;
    std::optional<Interpolant> solution;
    const TestFunctions test = cfg.test_functions.value_or(default_test_functions(cfg.benchmark));

    switch (cfg.benchmark) {
        case BenchmarkId::F1:
        case BenchmarkId::F2: {
            double (*target)(double) = cfg.benchmark == BenchmarkId::F1 ? f1 : f2;
            std::vector<double> values(n);
            for (std::size_t j = 0; j < n; ++j) values[j] = target(nodes[j]);
            solution.emplace(fit_interpolant(cfg.spec, nodes, values));
            for (std::size_t i = 0; i < grid.size(); ++i) exact[i] = target(grid[i]);
            break;
        }
        case BenchmarkId::BvpLeft:
        case BenchmarkId::BvpRight: {
            const double alpha = cfg.spec.alpha();
            BvpProblem problem = cfg.benchmark == BenchmarkId::BvpLeft ? left_model_problem(alpha)
                                                                       : right_model_problem(alpha);
            solution.emplace(solve_bvp(problem, nodes, cfg.rule, test));
            for (std::size_t i = 0; i < grid.size(); ++i) exact[i] = bvp_exact(grid[i]);
            break;
        }
        case BenchmarkId::Diffusion: {
            const int nt = cfg.time_steps.value_or(static_cast<int>(n));
            const DiffusionProblem problem = diffusion_benchmark(cfg.spec.alpha(), cfg.t0, cfg.t1, nt);
            history = crank_nicolson(problem, nodes, cfg.rule, test);
            solution.emplace(cfg.spec, nodes, history.back());
            for (std::size_t i = 0; i < grid.size(); ++i) exact[i] = diffusion_exact(grid[i], cfg.t1);
            break;
        }
    }

    const std::vector<double> approx = solution->evaluate(grid);
    if (cfg.on_cell) {
        cfg.on_cell(CellResult{n, *solution, grid, approx, exact,
                               history.empty() ? nullptr : &history});
    }
    return rmse(approx, exact);
}

}  // namespace

std::vector<StudyRow> run_study(const StudyConfig& config) {
    config.validate();
    std::vector<StudyRow> rows;
    rows.reserve(config.n_list.size());
    for (std::size_t n : config.n_list) {
        StudyRow row;
        row.n = n;
        try {
            row.h = fill_distance(make_nodes(config.nodes, n));
            row.error = cell_error(config, n);
            if (!rows.empty()) {
                row.rate = convergence_rate(rows.back().error, rows.back().h, row.error, row.h);
            }
        } catch (const std::exception& e) {
            throw std::runtime_error("study cell " + std::string(to_string(config.benchmark)) +
                                     " N=" + std::to_string(n) + " failed: " + e.what());
        }
        rows.push_back(row);
    }
    return rows;
}

void write_csv(std::ostream& os, std::span<const StudyRow> rows) {
    os << "n,h,error,rate\n";
    for (const auto& r : rows) {
        os << r.n << ',' << format_full(r.h) << ',' << format_full(r.error) << ',';
        if (r.rate) os << format_full(*r.rate);
        os << '\n';
    }
}

void write_markdown(std::ostream& os, std::string_view title, std::span<const StudyRow> rows) {
    const StudyBlock block{"", {rows.begin(), rows.end()}};
    write_markdown_blocks(os, title, std::span<const StudyBlock>(&block, 1));
}

void write_markdown_blocks(std::ostream& os, std::string_view title, std::span<const StudyBlock> blocks) {
    if (!title.empty()) os << "**" << title << "**\n\n";
    const bool labelled = std::any_of(blocks.begin(), blocks.end(),
                                      [](const StudyBlock& b) { return !b.label.empty(); });
    auto column_names = [&] {
        os << '|';
        for (std::size_t b = 0; b < blocks.size(); ++b) os << " N | Error | Rate |";
        os << '\n';
    };
    auto separator = [&] {
        os << '|';
        for (std::size_t b = 0; b < blocks.size(); ++b) os << "---|---|---|";
        os << '\n';
    };
    if (labelled) {
        os << '|';
        for (const auto& b : blocks) os << ' ' << b.label << " | | |";
        os << '\n';
        separator();
        column_names();
    } else {
        column_names();
        separator();
    }
    std::size_t height = 0;
    for (const auto& b : blocks) height = std::max(height, b.rows.size());
    for (std::size_t i = 0; i < height; ++i) {
        os << '|';
        for (const auto& b : blocks) {
            if (i < b.rows.size()) {
                const auto& r = b.rows[i];
                os << ' ' << r.n << " | " << format_sci4(r.error) << " | "
                   << (r.rate ? format_fixed4(*r.rate) : std::string("--")) << " |";
            } else {
                os << "  |  |  |";
            }
        }
        os << '\n';
    }
}

}  // namespace fracgreen
