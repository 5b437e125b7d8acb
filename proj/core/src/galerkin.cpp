#include "fracgreen/galerkin.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "fracgreen/errors.hpp"
#include "fracgreen/parallel.hpp"
#include "fracgreen/problems.hpp"

namespace fracgreen {

BvpProblem left_model_problem(double alpha) {
    return {KernelSpec::rl_left(alpha), [alpha](double x) { return problem1_forcing(alpha, x); },
            bvp_exact};
}

BvpProblem right_model_problem(double alpha) {
    return {KernelSpec::rl_right(alpha), [alpha](double x) { return problem2_forcing(alpha, x); },
            bvp_exact};
}

DiffusionProblem diffusion_benchmark(double alpha, double t0, double t1, int nt) {
    return {KernelSpec::rl_left(alpha),
            [alpha](double x, double t) { return diffusion_source(alpha, x, t); },
            diffusion_initial, t0, t1, nt};
}

std::string_view to_string(TestFunctions t) {
    return t == TestFunctions::Primal ? "primal" : "adjoint";
}

std::optional<TestFunctions> parse_test_functions(std::string_view name) {
    if (name == "primal") return TestFunctions::Primal;
    if (name == "adjoint") return TestFunctions::Adjoint;
    return std::nullopt;
}

double greens_integral(const KernelSpec& spec, const std::function<double(double)>& f, double x,
                       const CompositeGauss& quad) {
    const std::array<double, 1> bp{x};
    return quad.integrate([&](double z) { return spec(x, z) * f(z); }, bp);
}

namespace {

// Kernel slice v_i(z) of the chosen test function.
double test_slice(const KernelSpec& spec, TestFunctions test, double xi, double z) {
    return test == TestFunctions::Primal ? spec(z, xi) : spec(xi, z);
}

}  // namespace

std::vector<double> assemble_load(const std::function<double(double)>& f, const KernelSpec& spec,
                                  const NodeSet& nodes, const QuadratureRule& rule,
                                  TestFunctions test) {
    const CompositeGauss quad(rule);
    std::vector<double> load(nodes.size());
    parallel_for(nodes.size(), [&](std::size_t i) {
        const double xi = nodes[i];
        const std::array<double, 1> bp{xi};
        load[i] = quad.integrate([&](double z) { return test_slice(spec, test, xi, z) * f(z); }, bp);
    });
    return load;
}

Matrix assemble_stiffness(const KernelSpec& spec, const NodeSet& nodes, TestFunctions test) {
    Matrix g = kernel_matrix(spec, nodes);
    return test == TestFunctions::Primal ? g.transposed() : g;
}

Interpolant solve_bvp(const BvpProblem& problem, const NodeSet& nodes, const QuadratureRule& rule,
                      TestFunctions test) {
    if (!problem.forcing) throw ConfigError("solve_bvp: problem has no forcing");
    const std::vector<double> load = assemble_load(problem.forcing, problem.spec, nodes, rule, test);
    auto coeffs = lu_solve(assemble_stiffness(problem.spec, nodes, test), load);
    return {problem.spec, nodes, std::move(coeffs)};
}

double greens_reproduction(const BvpProblem& problem, const QuadratureRule& rule,
                           std::span<const double> test_points) {
    if (!problem.exact) throw ConfigError("greens_reproduction needs an exact solution");
    const CompositeGauss quad(rule);
    double worst = 0.0;
    for (double x : test_points) {
        const double u = greens_integral(problem.spec, problem.forcing, x, quad);
        worst = std::max(worst, std::abs(u - problem.exact(x)));
    }
    return worst;
}

Matrix assemble_mass(const KernelSpec& spec, const NodeSet& nodes, const QuadratureRule& rule,
                     TestFunctions test) {
    const CompositeGauss quad(rule);
    const std::size_t n = nodes.size();
    Matrix mass(n, n);
    const bool symmetric = test == TestFunctions::Primal;
    parallel_for(n, [&](std::size_t i) {
        const double xi = nodes[i];
        for (std::size_t j = symmetric ? i : 0; j < n; ++j) {
            const double xj = nodes[j];
            const std::array<double, 2> bp{xi, xj};
            mass(i, j) = quad.integrate(
                [&](double z) { return test_slice(spec, test, xi, z) * spec(z, xj); }, bp);
        }
    });
    if (symmetric) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) mass(i, j) = mass(j, i);
    }
    return mass;
}

std::vector<std::vector<double>> crank_nicolson(const DiffusionProblem& problem,
                                                const NodeSet& nodes, const QuadratureRule& rule,
                                                TestFunctions test, const StepObserver& observer) {
    if (problem.nt < 1) throw ConfigError("crank_nicolson needs nt >= 1");
    if (!(problem.t1 > problem.t0)) throw ConfigError("crank_nicolson needs t1 > t0");
    if (!problem.source || !problem.initial) throw ConfigError("diffusion problem is incomplete");

    const KernelSpec& spec = problem.spec;
    const std::size_t n = nodes.size();
    const double tau = (problem.t1 - problem.t0) / problem.nt;

    const Matrix kernel = kernel_matrix(spec, nodes);
    const Matrix stiffness = test == TestFunctions::Primal ? kernel.transposed() : kernel;
    const Matrix mass = assemble_mass(spec, nodes, rule, test);
    const LuFactorization implicit = lu_factor(add_scaled(mass, 0.5 * tau, stiffness));
    const Matrix explicit_part = add_scaled(mass, -0.5 * tau, stiffness);

    // Per-node quadrature points with the test slice folded into the weights.
    const CompositeGauss quad(rule);
    std::vector<QuadraturePoints> load_rules(n);
    parallel_for(n, [&](std::size_t i) {
        const std::array<double, 1> bp{nodes[i]};
        QuadraturePoints pts = quad.points(bp);
        for (std::size_t k = 0; k < pts.nodes.size(); ++k) {
            pts.weights[k] *= test_slice(spec, test, nodes[i], pts.nodes[k]);
        }
        load_rules[i] = std::move(pts);
    });

    std::vector<double> g(n);
    for (std::size_t j = 0; j < n; ++j) g[j] = problem.initial(nodes[j]);

    std::vector<std::vector<double>> history;
    history.reserve(static_cast<std::size_t>(problem.nt) + 1);
    history.push_back(lu_solve(kernel, g));
    if (observer) observer(0, history.back());

    std::vector<double> load(n);
    for (int step = 0; step < problem.nt; ++step) {
        const double t_mid = problem.t0 + tau * (step + 0.5);
        parallel_for(n, [&](std::size_t i) {
            load[i] = CompositeGauss::sum(load_rules[i],
                                          [&](double z) { return problem.source(z, t_mid); });
        });
        std::vector<double> rhs = multiply(explicit_part, history.back());
        for (std::size_t i = 0; i < n; ++i) rhs[i] += tau * load[i];
        history.push_back(implicit.solve(rhs));
        if (observer) observer(step + 1, history.back());
    }
    return history;
}

}  // namespace fracgreen
