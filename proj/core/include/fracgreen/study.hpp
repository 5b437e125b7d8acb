#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fracgreen/galerkin.hpp"
#include "fracgreen/interpolation.hpp"
#include "fracgreen/kernels.hpp"
#include "fracgreen/problems.hpp"
#include "fracgreen/quadrature.hpp"

namespace fracgreen {

/// Root mean squared difference. Throws ConfigError on length mismatch or empty input.
double rmse(std::span<const double> approx, std::span<const double> exact);

/// log(e1/e2) / log(h1/h2) for consecutive fill distances h1 > h2.
/// Throws DomainError for non-positive inputs or h1 <= h2.
double convergence_rate(double e1, double h1, double e2, double h2);

/// One cell of a convergence table.
struct StudyRow {
    std::size_t n = 0;
    double h = 0.0;
    double error = 0.0;
    std::optional<double> rate;  // empty on the first row
};

/// Least-squares slope of log(error) against log(h) over all rows.
double fitted_slope(std::span<const StudyRow> rows);

enum class EvalDomain { Full, Interior };
std::string_view to_string(EvalDomain d);
std::optional<EvalDomain> parse_eval_domain(std::string_view name);

/// Error evaluation window.
inline constexpr double kInteriorLo = 0.01;
inline constexpr double kInteriorHi = 0.99;
inline constexpr std::size_t kEvalPoints = 1000;

/// The kEvalPoints-point grid, restricted to [0.01, 0.99] for Interior.
std::vector<double> error_grid(EvalDomain domain);

/// Everything one study cell produced, handed to StudyConfig::on_cell.
struct CellResult {
    std::size_t n;
    const Interpolant& solution;  // final-time solution for diffusion
    std::span<const double> grid;
    std::span<const double> approx;
    std::span<const double> exact;
    const std::vector<std::vector<double>>* history;  // diffusion only
};

struct StudyConfig {
    BenchmarkId benchmark = BenchmarkId::F1;
    KernelSpec spec = KernelSpec::rl_left(1.5);
    NodeKind nodes = NodeKind::Uniform;
    std::vector<std::size_t> n_list{20, 40, 80, 160, 320};
    EvalDomain domain = EvalDomain::Full;
    QuadratureRule rule{};
    std::optional<TestFunctions> test_functions;  // empty: default_test_functions(benchmark)
    double t0 = 0.0;
    double t1 = 1.0;
    std::optional<int> time_steps;  // default N_t = N
    std::function<void(const CellResult&)> on_cell;

    /// Throws ConfigError on an inconsistent configuration.
    void validate() const;
};

/// Test space used by a study when StudyConfig::test_functions is empty.
TestFunctions default_test_functions(BenchmarkId id);

/// Runs every cell of the study in order of n. A failing cell is rethrown as
/// std::runtime_error naming the cell.
std::vector<StudyRow> run_study(const StudyConfig& config);

/// Header n,h,error,rate; 17 significant digits; empty rate on the first row.
void write_csv(std::ostream& os, std::span<const StudyRow> rows);

/// Single N | Error | Rate block in 4-decimal scientific notation.
void write_markdown(std::ostream& os, std::string_view title, std::span<const StudyRow> rows);

struct StudyBlock {
    std::string label;
    std::vector<StudyRow> rows;
};

/// Side-by-side blocks (e.g. uniform / uniform interior / Chebyshev) sharing one title.
void write_markdown_blocks(std::ostream& os, std::string_view title, std::span<const StudyBlock> blocks);

}  // namespace fracgreen
