#include "fracgreen/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include "fracgreen/errors.hpp"
#include "fracgreen/format.hpp"

namespace fracgreen {

std::string_view to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::Uniform: return "uniform";
        case NodeKind::Chebyshev: return "chebyshev";
        case NodeKind::Explicit: return "explicit";
    }
    return "unknown";
}

std::optional<NodeKind> parse_node_kind(std::string_view name) {
    if (name == "uniform") return NodeKind::Uniform;
    if (name == "chebyshev") return NodeKind::Chebyshev;
    return std::nullopt;
}

NodeSet::NodeSet(std::vector<double> points, NodeKind kind)
    : points_(std::move(points)), kind_(kind) {
    if (points_.empty()) throw ConfigError("node set must not be empty");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const double x = points_[i];
        if (!(x > 0.0 && x < 1.0)) {
            throw ConfigError("node " + std::to_string(i) + " is outside (0, 1)");
        }
        if (i > 0 && !(x > points_[i - 1])) {
            throw ConfigError("nodes must be strictly increasing");
        }
    }
}

NodeSet uniform_nodes(std::size_t n) {
    if (n < 1) throw ConfigError("uniform_nodes needs n >= 1");
    std::vector<double> pts(n);
    const double denom = static_cast<double>(n + 1);
    for (std::size_t j = 1; j <= n; ++j) pts[j - 1] = static_cast<double>(j) / denom;
    return {std::move(pts), NodeKind::Uniform};
}

NodeSet chebyshev_nodes(std::size_t n) {
    if (n < 1) throw ConfigError("chebyshev_nodes needs n >= 1");
    std::vector<double> pts(n);
    const double denom = 2.0 * static_cast<double>(n);
    for (std::size_t j = 1; j <= n; ++j) {
        const double theta = (2.0 * static_cast<double>(j) - 1.0) * std::numbers::pi / denom;
        pts[j - 1] = 0.5 * (1.0 - std::cos(theta));
    }
    // Exact midpoint for odd n; cos(pi/2) is not exactly zero in floating point.
    if (n % 2 == 1) pts[n / 2] = 0.5;
    std::sort(pts.begin(), pts.end());
    return {std::move(pts), NodeKind::Chebyshev};
}

NodeSet make_nodes(NodeKind kind, std::size_t n) {
    switch (kind) {
        case NodeKind::Uniform: return uniform_nodes(n);
        case NodeKind::Chebyshev: return chebyshev_nodes(n);
        case NodeKind::Explicit: break;
    }
    throw ConfigError("make_nodes: explicit node sets must be constructed directly");
}

double fill_distance(const NodeSet& nodes) {
    const auto pts = nodes.points();
    double h = std::max(pts.front(), 1.0 - pts.back());
    for (std::size_t i = 1; i < pts.size(); ++i) h = std::max(h, 0.5 * (pts[i] - pts[i - 1]));
    return h;
}

Matrix kernel_matrix(const KernelSpec& spec, const NodeSet& nodes) {
    const std::size_t n = nodes.size();
    Matrix k(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) k(i, j) = spec(nodes[i], nodes[j]);
    return k;
}

Interpolant::Interpolant(KernelSpec spec, NodeSet nodes, std::vector<double> coeffs)
    : spec_(spec), nodes_(std::move(nodes)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != nodes_.size())
        throw ConfigError("interpolant: coefficient count differs from node count");
    for (double c : coeffs_)
        if (!std::isfinite(c)) throw ConfigError("interpolant: non-finite coefficient");
}

double Interpolant::operator()(double x) const {
    double s = 0.0;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) s += coeffs_[j] * spec_(x, nodes_[j]);
    return s;
}

std::vector<double> Interpolant::evaluate(std::span<const double> xs) const {
    std::vector<double> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = (*this)(xs[i]);
    return out;
}

Interpolant fit_interpolant(const KernelSpec& spec, const NodeSet& nodes,
                            std::span<const double> values) {
    if (values.size() != nodes.size())
        throw ConfigError("fit_interpolant: value count differs from node count");
    auto coeffs = lu_solve(kernel_matrix(spec, nodes), values);
    return {spec, nodes, std::move(coeffs)};
}

double eval_interpolant(const Interpolant& s, double x) { return s(x); }

std::vector<double> evaluation_grid(std::size_t n) {
    if (n < 2) throw ConfigError("evaluation grid needs at least 2 points");
    std::vector<double> xs(n);
    const double denom = static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) xs[i] = static_cast<double>(i) / denom;
    return xs;
}

void write_interpolant_csv(std::ostream& os, const Interpolant& s) {
    os << "node,coefficient\n";
    const auto c = s.coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) {
        os << format_full(s.nodes()[j]) << ',' << format_full(c[j]) << '\n';
    }
}

}  // namespace fracgreen
