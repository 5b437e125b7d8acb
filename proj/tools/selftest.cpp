#include <cmath>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "fracgreen/format.hpp"
#include "fracgreen/fractional.hpp"
#include "fracgreen/galerkin.hpp"
#include "fracgreen/kernels.hpp"
#include "fracgreen/quadrature.hpp"

namespace fracgreen::cli {
namespace {

struct Check {
    std::string name;
    std::function<double()> measure;  // returns the observed error
    double tolerance;
};

std::vector<double> probe_points() {
    std::vector<double> xs;
    for (int i = 1; i < 20; ++i) xs.push_back(i / 20.0);
    return xs;
}

double gl_exactness() {
    double worst = 0.0;
    for (int n = 1; n <= 20; ++n) {
        const GaussLegendre gl = gauss_legendre(n);
        for (int p = 0; p <= 2 * n - 1; ++p) {
            double s = 0.0;
            for (std::size_t k = 0; k < gl.nodes.size(); ++k) s += gl.weights[k] * std::pow(gl.nodes[k], p);
            const double exact = p % 2 ? 0.0 : 2.0 / (p + 1);
            worst = std::max(worst, std::abs(s - exact));
        }
    }
    return worst;
}

double graded_singular_integral() {
    // \int_0^1 x^{-1/2} dz = 2
    return std::abs(integrate([](double x) { return 1.0 / std::sqrt(x); }, QuadratureRule{}) - 2.0);
}

double kernel_reduction(KernelSpec spec) {
    const KernelSpec bb = KernelSpec::brownian_bridge();
    double worst = 0.0;
    for (int i = 0; i <= 10; ++i) {
        for (int j = 0; j <= 10; ++j) {
            const double x = i / 10.0;
            const double z = j / 10.0;
            worst = std::max(worst, std::abs(spec(x, z) - bb(x, z)));
        }
    }
    return worst;
}

double classical_derivatives() {
    // At alpha = 2 the operator is the second derivative.
    double worst = 0.0;
    for (double x : {0.1, 0.5, 0.9}) {
        worst = std::max(worst, std::abs(rl_left_monomial(2.0, 2.0, x) - 2.0));
        worst = std::max(worst, std::abs(rl_left_monomial(3.0, 2.0, x) - 6.0 * x));
        worst = std::max(worst, std::abs(rl_left_monomial(1.0, 2.0, x)));
    }
    return worst;
}

double reproduction(const BvpProblem& p) {
    const std::vector<double> xs = probe_points();
    return greens_reproduction(p, QuadratureRule{}, xs);
}

}  // namespace

bool run_selftest(std::ostream& out) {
    const std::vector<Check> checks{
        {"gauss-legendre exactness", gl_exactness, 1e-13},
        {"graded quadrature of x^-1/2", graded_singular_integral, 1e-8},
        {"rl-left kernel at alpha=2", [] { return kernel_reduction(KernelSpec::rl_left(2.0)); }, 1e-15},
        {"caputo kernel at alpha=2", [] { return kernel_reduction(KernelSpec::caputo(2.0)); }, 1e-15},
        {"rl-right kernel at alpha=2", [] { return kernel_reduction(KernelSpec::rl_right(2.0)); }, 1e-15},
        {"classical derivatives at alpha=2", classical_derivatives, 1e-12},
        {"green reproduction left alpha=1.5", [] { return reproduction(left_model_problem(1.5)); }, 1e-6},
        {"green reproduction right alpha=1.75", [] { return reproduction(right_model_problem(1.75)); }, 1e-6},
        {"green reproduction left alpha=2", [] { return reproduction(left_model_problem(2.0)); }, 1e-10},
    };
    bool all = true;
    for (const Check& c : checks) {
        double err = 0.0;
        bool ok = false;
        std::string detail;
        try {
            err = c.measure();
            ok = std::isfinite(err) && err <= c.tolerance;
            detail = "error " + format_sci4(err) + " tol " + format_sci4(c.tolerance);
        } catch (const std::exception& e) {
            detail = std::string("threw: ") + e.what();
        }
        all = all && ok;
        out << (ok ? "[PASS] " : "[FAIL] ") << c.name << ": " << detail << '\n';
    }
    out << (all ? "selftest passed\n" : "selftest FAILED\n");
    return all;
}

}  // namespace fracgreen::cli
