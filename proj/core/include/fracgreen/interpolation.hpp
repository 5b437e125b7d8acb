#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fracgreen/dense_linear.hpp"
#include "fracgreen/kernels.hpp"

namespace fracgreen {

enum class NodeKind { Uniform, Chebyshev, Explicit };

std::string_view to_string(NodeKind kind);
/// Accepts "uniform" and "chebyshev".
std::optional<NodeKind> parse_node_kind(std::string_view name);

/// Sorted, pairwise distinct centers strictly inside (0, 1).
class NodeSet {
public:
    /// Validates the invariant; throws ConfigError otherwise.
    NodeSet(std::vector<double> points, NodeKind kind = NodeKind::Explicit);

    std::span<const double> points() const noexcept { return points_; }
    NodeKind kind() const noexcept { return kind_; }
    std::size_t size() const noexcept { return points_.size(); }
    double operator[](std::size_t i) const { return points_[i]; }

private:
    std::vector<double> points_;
    NodeKind kind_;
};

/// x_j = j / (n + 1), j = 1..n.
NodeSet uniform_nodes(std::size_t n);

/// First-kind Chebyshev roots mapped to (0,1): (1 - cos((2j-1) pi / 2n)) / 2.
NodeSet chebyshev_nodes(std::size_t n);

NodeSet make_nodes(NodeKind kind, std::size_t n);

/// sup over [0,1] of the distance to the nearest node.
double fill_distance(const NodeSet& nodes);

/// G_ij = K(x_i, x_j).
Matrix kernel_matrix(const KernelSpec& spec, const NodeSet& nodes);

/// s(x) = sum_j c_j K(x, x_j).
class Interpolant {
public:
    Interpolant(KernelSpec spec, NodeSet nodes, std::vector<double> coeffs);

    const KernelSpec& spec() const noexcept { return spec_; }
    const NodeSet& nodes() const noexcept { return nodes_; }
    std::span<const double> coeffs() const noexcept { return coeffs_; }

    double operator()(double x) const;
    std::vector<double> evaluate(std::span<const double> xs) const;

private:
    KernelSpec spec_;
    NodeSet nodes_;
    std::vector<double> coeffs_;
};

/// Solves K c = y for the kernel interpolant of `values` at `nodes`.
Interpolant fit_interpolant(const KernelSpec& spec, const NodeSet& nodes,
                            std::span<const double> values);

double eval_interpolant(const Interpolant& s, double x);

/// n equispaced points on [0,1] including both endpoints.
std::vector<double> evaluation_grid(std::size_t n = 1000);

/// Writes "node,coefficient" rows with 17 significant digits.
void write_interpolant_csv(std::ostream& os, const Interpolant& s);

}  // namespace fracgreen
