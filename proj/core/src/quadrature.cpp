#include "fracgreen/quadrature.hpp"

#include <algorithm>
#include <numbers>

namespace fracgreen {

void QuadratureRule::validate() const {
    if (gl_order < 2) throw ConfigError("gl_order must be >= 2");
    if (!(grading_ratio > 0.0 && grading_ratio < 1.0))
        throw ConfigError("grading_ratio must lie in (0, 1)");
    if (grading_depth < 1) throw ConfigError("grading_depth must be >= 1");
    if (!(abs_tol > 0.0)) throw ConfigError("abs_tol must be positive");
    for (double b : breakpoints)
        if (!std::isfinite(b)) throw ConfigError("breakpoints must be finite");
}

GaussLegendre gauss_legendre(int n) {
    if (n < 1) throw ConfigError("gauss_legendre needs n >= 1");
    GaussLegendre gl;
    gl.nodes.assign(static_cast<std::size_t>(n), 0.0);
    gl.weights.assign(static_cast<std::size_t>(n), 0.0);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Newton iteration on P_n from the Chebyshev-like initial guess.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // Recompute the derivative at the converged root for the weight.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        gl.nodes[static_cast<std::size_t>(i)] = -x;
        gl.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        gl.weights[static_cast<std::size_t>(i)] = w;
        gl.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    if (n % 2 == 1) gl.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    return gl;
}

CompositeGauss::CompositeGauss(QuadratureRule rule) : rule_(std::move(rule)) {
    rule_.validate();
    base_ = gauss_legendre(rule_.gl_order);
}

QuadraturePoints CompositeGauss::points(std::span<const double> extra) const {
    std::vector<double> cuts{0.0, 1.0};
    for (double b : rule_.breakpoints)
        if (b > 0.0 && b < 1.0) cuts.push_back(b);
    for (double b : extra)
        if (b > 0.0 && b < 1.0) cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    const auto depth = static_cast<std::size_t>(rule_.grading_depth);
    std::vector<double> edges;
    edges.reserve((cuts.size() - 1) * (2 * depth + 3));
    edges.push_back(0.0);
    std::vector<double> scale(depth + 1);
    scale[0] = 1.0;
    for (std::size_t k = 1; k <= depth; ++k) scale[k] = scale[k - 1] * rule_.grading_ratio;

    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        const double a = cuts[s];
        const double b = cuts[s + 1];
        const double half = 0.5 * (b - a);
        for (std::size_t k = depth; k >= 1; --k) edges.push_back(a + half * scale[k]);
        edges.push_back(a + half);
        for (std::size_t k = 1; k <= depth; ++k) edges.push_back(b - half * scale[k]);
        edges.push_back(b);
    }

    QuadraturePoints pts;
    const std::size_t order = base_.nodes.size();
    pts.nodes.reserve(edges.size() * order);
    pts.weights.reserve(edges.size() * order);
    for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
        const double lo = edges[e];
        const double hi = edges[e + 1];
        if (!(hi > lo)) continue;
        const double mid = 0.5 * (lo + hi);
        const double rad = 0.5 * (hi - lo);
        const double first = mid + rad * base_.nodes.front();
        const double last = mid + rad * base_.nodes.back();
        if (!(first > lo && last < hi)) continue;
        for (std::size_t k = 0; k < order; ++k) {
            pts.nodes.push_back(mid + rad * base_.nodes[k]);
            pts.weights.push_back(rad * base_.weights[k]);
        }
    }
    return pts;
}

double integrate(const std::function<double(double)>& f, const QuadratureRule& rule) {
    return CompositeGauss(rule).integrate(f);
}

}  // namespace fracgreen
