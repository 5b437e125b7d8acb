#include "fracgreen/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <utility>

#include "fracgreen/errors.hpp"

namespace fracgreen {
namespace {

constexpr std::array<std::pair<KernelKind, std::string_view>, 4> kKernelNames{{
    {KernelKind::BrownianBridge, "bb"},
    {KernelKind::RiemannLiouvilleLeft, "rl-left"},
    {KernelKind::RiemannLiouvilleRight, "rl-right"},
    {KernelKind::Caputo, "caputo"},
}};

// t^p with 0^p := 0; p = alpha - 1 > 0 so this is the continuous extension.
inline double frac_pow(double t, double p) noexcept {
    if (t <= 0.0) return 0.0;
    if (p == 1.0) return t;
    return std::pow(t, p);
}

}  // namespace

std::string_view to_string(KernelKind kind) {
    for (const auto& [k, name] : kKernelNames)
        if (k == kind) return name;
    return "unknown";
}

std::optional<KernelKind> parse_kernel_kind(std::string_view name) {
    for (const auto& [k, n] : kKernelNames)
        if (n == name) return k;
    return std::nullopt;
}

KernelSpec::KernelSpec(KernelKind kind, FractionalOrder order)
    : kind_(kind),
      order_(kind == KernelKind::BrownianBridge ? FractionalOrder(2.0) : order),
      exponent_(order_.value() - 1.0),
      inv_gamma_(1.0 / gamma_fn(order_.value())) {}

double KernelSpec::rl_left(double x, double z) const noexcept {
    const double outer = frac_pow(x * (1.0 - z), exponent_);
    if (z <= x) return (outer - frac_pow(x - z, exponent_)) * inv_gamma_;
    return outer * inv_gamma_;
}

double KernelSpec::caputo(double x, double z) const noexcept {
    const double outer = x * frac_pow(1.0 - z, exponent_);
    if (z <= x) return (outer - frac_pow(x - z, exponent_)) * inv_gamma_;
    return outer * inv_gamma_;
}

double KernelSpec::operator()(double x, double z) const noexcept {
    switch (kind_) {
        case KernelKind::BrownianBridge:
            return std::min(x, z) - x * z;
        case KernelKind::RiemannLiouvilleLeft:
            return rl_left(x, z);
        case KernelKind::RiemannLiouvilleRight:
            return rl_left(1.0 - x, 1.0 - z);
        case KernelKind::Caputo:
            return caputo(x, z);
    }
    return 0.0;
}

std::string KernelSpec::describe() const {
    std::ostringstream os;
    os << to_string(kind_);
    if (kind_ != KernelKind::BrownianBridge) os << "(alpha=" << alpha() << ")";
    return os.str();
}

double eval_kernel(const KernelSpec& spec, double x, double z) { return spec(x, z); }

Matrix kernel_grid(const KernelSpec& spec, std::size_t nx, std::size_t nz) {
    if (nx < 2 || nz < 2) throw ConfigError("kernel_grid needs at least 2 points per axis");
    Matrix out(nx, nz);
    for (std::size_t i = 0; i < nx; ++i) {
        const double x = static_cast<double>(i) / static_cast<double>(nx - 1);
        for (std::size_t j = 0; j < nz; ++j) {
            const double z = static_cast<double>(j) / static_cast<double>(nz - 1);
            out(i, j) = spec(x, z);
        }
    }
    return out;
}

}  // namespace fracgreen
