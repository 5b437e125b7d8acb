#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "fracgreen/dense_linear.hpp"
#include "fracgreen/fractional.hpp"

namespace fracgreen {

enum class KernelKind {
    BrownianBridge,
    RiemannLiouvilleLeft,
    RiemannLiouvilleRight,
    Caputo,
};

/// CLI spelling: bb, rl-left, rl-right, caputo.
std::string_view to_string(KernelKind kind);
std::optional<KernelKind> parse_kernel_kind(std::string_view name);

/// Green's kernel of a two-point Dirichlet problem on [0, 1].
///
///  - BrownianBridge:        min(x,z) - xz, the kernel of -u''.
///  - RiemannLiouvilleLeft:  kernel of -0Dx^alpha u = f.
///  - RiemannLiouvilleRight: kernel of -xD1^alpha u = f, obtained from the
///                           left kernel by reflecting both arguments.
///  - Caputo:                kernel of the left Caputo problem.
///
/// The order is ignored by the Brownian bridge, which reports alpha = 2.
class KernelSpec {
public:
    KernelSpec(KernelKind kind, FractionalOrder order);

    static KernelSpec brownian_bridge() { return {KernelKind::BrownianBridge, FractionalOrder(2.0)}; }
    static KernelSpec rl_left(double alpha) { return {KernelKind::RiemannLiouvilleLeft, FractionalOrder(alpha)}; }
    static KernelSpec rl_right(double alpha) { return {KernelKind::RiemannLiouvilleRight, FractionalOrder(alpha)}; }
    static KernelSpec caputo(double alpha) { return {KernelKind::Caputo, FractionalOrder(alpha)}; }

    KernelKind kind() const noexcept { return kind_; }
    double alpha() const noexcept { return order_.value(); }

    /// G(x, z) for x, z in [0, 1].
    double operator()(double x, double z) const noexcept;

    std::string describe() const;

private:
    double rl_left(double x, double z) const noexcept;
    double caputo(double x, double z) const noexcept;

    KernelKind kind_;
    FractionalOrder order_;
    double exponent_;       // alpha - 1
    double inv_gamma_;      // 1 / Gamma(alpha)
};

double eval_kernel(const KernelSpec& spec, double x, double z);

/// Kernel values on equispaced grids of [0,1] (endpoints included):
/// entry (i, j) is G(i/(nx-1), j/(nz-1)). Requires nx, nz >= 2.
Matrix kernel_grid(const KernelSpec& spec, std::size_t nx, std::size_t nz);

}  // namespace fracgreen
