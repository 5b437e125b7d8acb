#include "fracgreen/problems.hpp"

#include <cmath>
#include <numbers>

#include "fracgreen/errors.hpp"
#include "fracgreen/fractional.hpp"

namespace fracgreen {

double f1(double x) { return std::sin(0.5 * std::numbers::pi * x) * x * (1.0 - x); }
double f2(double x) { return std::cos(0.5 * std::numbers::pi * x) * x * (1.0 - x); }

double bvp_exact(double x) { return x - x * x; }

double problem1_forcing(double alpha, double x) {
    if (!(x > 0.0)) throw DomainError("problem 1 forcing is singular at x = 0");
    return rl_left_monomial(2.0, alpha, x) - rl_left_monomial(1.0, alpha, x);
}

double problem2_forcing(double alpha, double x) { return rl_right_for_problem2(alpha, x); }

double diffusion_source(double alpha, double x, double t) {
    if (!(x > 0.0)) throw DomainError("diffusion source is singular at x = 0");
    // q = u_t - 0Dx^alpha u with u = e^-t (x - x^4).
    const double decay = std::exp(-t);
    const double u_t = -decay * (x - x * x * x * x);
    const double frac = decay * (rl_left_monomial(1.0, alpha, x) - rl_left_monomial(4.0, alpha, x));
    return u_t - frac;
}

double diffusion_initial(double x) { return x - x * x * x * x; }

double diffusion_exact(double x, double t) { return std::exp(-t) * diffusion_initial(x); }

std::string_view to_string(BenchmarkId id) {
    switch (id) {
        case BenchmarkId::F1: return "f1";
        case BenchmarkId::F2: return "f2";
        case BenchmarkId::BvpLeft: return "bvp-left";
        case BenchmarkId::BvpRight: return "bvp-right";
        case BenchmarkId::Diffusion: return "diffusion";
    }
    return "unknown";
}

std::optional<BenchmarkId> parse_benchmark(std::string_view name) {
    for (auto id : {BenchmarkId::F1, BenchmarkId::F2, BenchmarkId::BvpLeft,
                    BenchmarkId::BvpRight, BenchmarkId::Diffusion}) {
        if (to_string(id) == name) return id;
    }
    return std::nullopt;
}

BenchmarkKind kind_of(BenchmarkId id) {
    switch (id) {
        case BenchmarkId::F1:
        case BenchmarkId::F2: return BenchmarkKind::Interpolation;
        case BenchmarkId::BvpLeft:
        case BenchmarkId::BvpRight: return BenchmarkKind::Bvp;
        case BenchmarkId::Diffusion: return BenchmarkKind::Diffusion;
    }
    return BenchmarkKind::Interpolation;
}

}  // namespace fracgreen
