#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fracgreen/errors.hpp"

namespace fracgreen {

/// Parameters of a composite Gauss-Legendre rule on [0, 1].
struct QuadratureRule {
    int gl_order = 16;
    std::vector<double> breakpoints;  // interior kinks in (0,1)
    double grading_ratio = 0.15;
    int grading_depth = 40;
    double abs_tol = 1e-10;  // documented target; the rule is not adaptive

    /// Throws ConfigError when a parameter is out of range.
    void validate() const;
};

struct GaussLegendre {
    std::vector<double> nodes;    // ascending, on [-1, 1]
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1], exact for degree <= 2n-1.
GaussLegendre gauss_legendre(int n);

/// Flattened nodes and weights of a composite rule.
struct QuadraturePoints {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Composite Gauss-Legendre on [0, 1].
///
/// [0, 1] is cut at every breakpoint; each resulting segment is halved and
/// each half is graded geometrically toward its outer end, so every segment
/// end (0, 1, and each breakpoint) sees panels of width L r^depth, ..., L r, L
/// where L is the half-segment length. Panels too thin for their Gauss nodes
/// to be distinguishable from the panel ends in double precision are dropped.
class CompositeGauss {
public:
    explicit CompositeGauss(QuadratureRule rule);

    const QuadratureRule& rule() const noexcept { return rule_; }

    /// Nodes and weights with `extra` breakpoints merged into the rule's own.
    QuadraturePoints points(std::span<const double> extra = {}) const;

    /// Panel sum of f over [0, 1], left to right.
    template <class F>
    double integrate(F&& f, std::span<const double> extra = {}) const {
        const QuadraturePoints pts = points(extra);
        return sum(pts, f);
    }

    template <class F>
    static double sum(const QuadraturePoints& pts, F&& f) {
        double total = 0.0;
        for (std::size_t k = 0; k < pts.nodes.size(); ++k) {
            const double x = pts.nodes[k];
            const double v = f(x);
            if (!std::isfinite(v)) {
                throw QuadratureError("non-finite integrand value at x = " + std::to_string(x));
            }
            total += pts.weights[k] * v;
        }
        return total;
    }

private:
    QuadratureRule rule_;
    GaussLegendre base_;
};

/// Integral of f over (0, 1) with the composite rule described by `rule`.
double integrate(const std::function<double(double)>& f, const QuadratureRule& rule);

}  // namespace fracgreen
