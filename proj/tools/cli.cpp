#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "fracgreen/errors.hpp"
#include "fracgreen/format.hpp"
#include "fracgreen/galerkin.hpp"
#include "fracgreen/kernels.hpp"
#include "fracgreen/study.hpp"

namespace fracgreen::cli {
namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadratureFlags {
    int gl_order = QuadratureRule{}.gl_order;
    double grading_ratio = QuadratureRule{}.grading_ratio;
    int grading_depth = QuadratureRule{}.grading_depth;

    void attach(CLI::App* app) {
        app->add_option("--gl-order", gl_order, "Gauss-Legendre points per panel")->capture_default_str();
        app->add_option("--grading-ratio", grading_ratio, "Geometric grading ratio in (0,1)")
            ->capture_default_str();
        app->add_option("--grading-depth", grading_depth, "Graded panels per segment end")
            ->capture_default_str();
    }

    QuadratureRule rule() const {
        QuadratureRule r;
        r.gl_order = gl_order;
        r.grading_ratio = grading_ratio;
        r.grading_depth = grading_depth;
        try {
            r.validate();
        } catch (const ConfigError& e) {
            throw UsageError(e.what());
        }
        return r;
    }
};

struct StudyFlags {
    std::string nodes = "uniform";
    std::string eval = "full";
    std::vector<std::size_t> n_list{20, 40, 80, 160, 320};
    std::string format = "csv";
    std::string out_path;
    std::string solution_out;
    std::string test_functions;
    bool table = false;
    double alpha = 1.5;

    void attach_common(CLI::App* app, bool with_eval) {
        app->add_option("--alpha", alpha, "Fractional order in (1,2]")->required();
        app->add_option("--nodes", nodes, "Node family")
            ->check(CLI::IsMember({"uniform", "chebyshev"}))
            ->capture_default_str();
        if (with_eval) {
            app->add_option("--eval", eval, "Error window: full [0,1] or interior [0.01,0.99]")
                ->check(CLI::IsMember({"full", "interior"}))
                ->capture_default_str();
        }
        app->add_option("--n", n_list, "Comma-separated node counts")->delimiter(',');
        app->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"csv", "markdown"}))
            ->capture_default_str();
        app->add_option("--out", out_path, "Write output to this file instead of stdout");
    }

    void attach_galerkin(CLI::App* app) {
        app->add_option("--test-functions", test_functions, "Galerkin test space")
            ->check(CLI::IsMember({"primal", "adjoint"}));
        app->add_flag("--table", table,
                      "Markdown table with uniform, uniform-interior and Chebyshev blocks");
        app->add_option("--solution-out", solution_out,
                        "CSV of x,u_N,u_exact,error on the evaluation grid for the largest N");
    }
};

FractionalOrder parse_alpha(double alpha) {
    try {
        return FractionalOrder(alpha);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

void check_n_list(const std::vector<std::size_t>& n) {
    if (n.empty()) throw UsageError("--n needs at least one value");
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (n[i] < 1) throw UsageError("--n values must be positive");
        if (i > 0 && n[i] <= n[i - 1]) throw UsageError("--n values must be strictly increasing");
    }
}

void write_solution_csv(std::ostream& os, const CellResult& cell) {
    os << "x,u_n,u_exact,error\n";
    for (std::size_t i = 0; i < cell.grid.size(); ++i) {
        os << format_full(cell.grid[i]) << ',' << format_full(cell.approx[i]) << ','
           << format_full(cell.exact[i]) << ',' << format_full(cell.approx[i] - cell.exact[i]) << '\n';
    }
}

std::ofstream open_output(const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    return f;
}

// Output goes through a buffer so a failing study never leaves partial files.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    auto f = open_output(path);
    f << text;
}

std::string study_title(const StudyConfig& cfg) {
    std::ostringstream os;
    os << to_string(cfg.benchmark) << ", " << cfg.spec.describe();
    return os.str();
}

struct StudyJob {
    StudyConfig base;
    StudyFlags flags;
    std::string interpolant_out;
    bool verbose = false;
};

std::string run_study_job(StudyJob& job, std::ostream& err) {
    StudyConfig cfg = job.base;
    const StudyFlags& f = job.flags;
    check_n_list(f.n_list);
    cfg.n_list = f.n_list;
    cfg.nodes = *parse_node_kind(f.nodes);
    cfg.domain = *parse_eval_domain(f.eval);
    if (!f.test_functions.empty()) cfg.test_functions = *parse_test_functions(f.test_functions);
    if (f.table && f.format != "markdown") throw UsageError("--table requires --format markdown");

    const std::size_t last_n = cfg.n_list.back();
    std::string solution_text;
    std::string interpolant_text;
    if (!f.solution_out.empty() || !job.interpolant_out.empty() || job.verbose) {
        cfg.on_cell = [&, last_n](const CellResult& cell) {
            if (job.verbose && cell.history) {
                for (std::size_t step = 0; step < cell.history->size(); ++step) {
                    err << "N=" << cell.n << " step=" << step;
                    for (double c : (*cell.history)[step]) err << ' ' << format_full(c);
                    err << '\n';
                }
            }
            if (cell.n != last_n) return;
            if (!f.solution_out.empty()) {
                std::ostringstream os;
                write_solution_csv(os, cell);
                solution_text = os.str();
            }
            if (!job.interpolant_out.empty()) {
                std::ostringstream os;
                write_interpolant_csv(os, cell.solution);
                interpolant_text = os.str();
            }
        };
    }

    std::ostringstream text;
    if (f.table) {
        std::vector<StudyBlock> blocks;
        const std::pair<NodeKind, EvalDomain> layout[] = {{NodeKind::Uniform, EvalDomain::Full},
                                                          {NodeKind::Uniform, EvalDomain::Interior},
                                                          {NodeKind::Chebyshev, EvalDomain::Full}};
        const char* labels[] = {"Uniform", "Uniform (interior)", "Chebyshev"};
        for (std::size_t b = 0; b < 3; ++b) {
            StudyConfig c = cfg;
            c.nodes = layout[b].first;
            c.domain = layout[b].second;
            if (b != 2) c.on_cell = nullptr;
            blocks.push_back({labels[b], run_study(c)});
        }
        write_markdown_blocks(text, study_title(cfg), blocks);
    } else {
        const std::vector<StudyRow> rows = run_study(cfg);
        if (f.format == "csv") {
            write_csv(text, rows);
        } else {
            std::string title = study_title(cfg) + ", " + std::string(to_string(cfg.nodes)) +
                                " nodes, " + std::string(to_string(cfg.domain)) + " domain";
            write_markdown(text, title, rows);
        }
    }
    if (!f.solution_out.empty()) emit(solution_text, f.solution_out, err);
    if (!job.interpolant_out.empty()) emit(interpolant_text, job.interpolant_out, err);
    return text.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Green's kernel interpolation and Galerkin solvers for fractional problems",
                 "fracgreen"};
    app.require_subcommand(1);

    // kernel-dump
    auto* dump = app.add_subcommand("kernel-dump", "CSV matrix of kernel values on an equispaced grid");
    std::string dump_kernel;
    double dump_alpha = 2.0;
    std::size_t grid = 0;
    std::string dump_out;
    dump->add_option("--kernel", dump_kernel, "Kernel")
        ->required()
        ->check(CLI::IsMember({"bb", "rl-left", "rl-right", "caputo"}));
    dump->add_option("--alpha", dump_alpha, "Fractional order in (1,2]")->capture_default_str();
    dump->add_option("--grid", grid, "Points per axis, endpoints included")->required();
    dump->add_option("--out", dump_out, "Write output to this file instead of stdout");

    // interp
    auto* interp = app.add_subcommand("interp", "Kernel interpolation convergence study");
    StudyJob interp_job;
    std::string target = "f1";
    std::string interp_kernel = "rl-left";
    interp->add_option("--target", target, "Target function")
        ->check(CLI::IsMember({"f1", "f2"}))
        ->capture_default_str();
    interp->add_option("--kernel", interp_kernel, "Kernel")
        ->check(CLI::IsMember({"bb", "rl-left", "rl-right", "caputo"}))
        ->capture_default_str();
    interp_job.flags.attach_common(interp, true);
    interp->add_option("--interpolant-out", interp_job.interpolant_out,
                       "CSV of node,coefficient for the largest N");

    // bvp
    auto* bvp = app.add_subcommand("bvp", "Kernel Galerkin two-point boundary value study");
    StudyJob bvp_job;
    std::string side = "left";
    QuadratureFlags bvp_quad;
    bvp->add_option("--problem", side, "Left or right Riemann-Liouville problem")
        ->check(CLI::IsMember({"left", "right"}))
        ->capture_default_str();
    bvp_job.flags.attach_common(bvp, true);
    bvp_job.flags.attach_galerkin(bvp);
    bvp_quad.attach(bvp);

    // diffusion
    auto* diff = app.add_subcommand("diffusion", "Crank-Nicolson kernel Galerkin diffusion study");
    StudyJob diff_job;
    QuadratureFlags diff_quad;
    double t0 = 0.0;
    double t1 = 1.0;
    std::optional<int> steps;
    diff_job.flags.attach_common(diff, true);
    diff_job.flags.attach_galerkin(diff);
    diff->add_option("--t0", t0, "Start time")->capture_default_str();
    diff->add_option("--t1", t1, "Final time")->capture_default_str();
    diff->add_option("--nt", steps, "Time steps per cell (default: N)");
    diff->add_flag("--verbose", diff_job.verbose, "Dump per-step coefficients to stderr");
    diff_quad.attach(diff);

    auto* selftest = app.add_subcommand("selftest", "Run the built-in oracle checks");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "fracgreen: " << e.what() << "\n";
        auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << sub->help();
        return kExitUsage;
    }

    try {
        if (dump->parsed()) {
            const auto kind = *parse_kernel_kind(dump_kernel);
            if (grid < 2) throw UsageError("--grid must be at least 2");
            const KernelSpec spec(kind, parse_alpha(kind == KernelKind::BrownianBridge ? 2.0 : dump_alpha));
            const Matrix values = kernel_grid(spec, grid, grid);
            std::ostringstream os;
            for (std::size_t i = 0; i < values.rows(); ++i) {
                for (std::size_t j = 0; j < values.cols(); ++j) {
                    if (j) os << ',';
                    os << format_full(values(i, j));
                }
                os << '\n';
            }
            emit(os.str(), dump_out, out);
            return kExitOk;
        }
        if (interp->parsed()) {
            const auto kind = *parse_kernel_kind(interp_kernel);
            const double alpha = kind == KernelKind::BrownianBridge ? 2.0 : interp_job.flags.alpha;
            interp_job.base.benchmark = *parse_benchmark(target);
            interp_job.base.spec = KernelSpec(kind, parse_alpha(alpha));
            const std::string text = run_study_job(interp_job, err);
            emit(text, interp_job.flags.out_path, out);
            return kExitOk;
        }
        if (bvp->parsed()) {
            const FractionalOrder order = parse_alpha(bvp_job.flags.alpha);
            const bool left = side == "left";
            bvp_job.base.benchmark = left ? BenchmarkId::BvpLeft : BenchmarkId::BvpRight;
            bvp_job.base.spec = KernelSpec(left ? KernelKind::RiemannLiouvilleLeft
                                                : KernelKind::RiemannLiouvilleRight,
                                           order);
            bvp_job.base.rule = bvp_quad.rule();
            const std::string text = run_study_job(bvp_job, err);
            emit(text, bvp_job.flags.out_path, out);
            return kExitOk;
        }
        if (diff->parsed()) {
            const FractionalOrder order = parse_alpha(diff_job.flags.alpha);
            if (!(t1 > t0)) throw UsageError("--t1 must exceed --t0");
            if (steps && *steps < 1) throw UsageError("--nt must be positive");
            diff_job.base.benchmark = BenchmarkId::Diffusion;
            diff_job.base.spec = KernelSpec(KernelKind::RiemannLiouvilleLeft, order);
            diff_job.base.rule = diff_quad.rule();
            diff_job.base.t0 = t0;
            diff_job.base.t1 = t1;
            diff_job.base.time_steps = steps;
            const std::string text = run_study_job(diff_job, err);
            emit(text, diff_job.flags.out_path, out);
            return kExitOk;
        }
        if (selftest->parsed()) {
            return run_selftest(out) ? kExitOk : kExitComputation;
        }
    } catch (const UsageError& e) {
        err << "fracgreen: usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "fracgreen: error: " << e.what() << "\n";
        return kExitComputation;
    }
    return kExitUsage;
}

}  // namespace fracgreen::cli
