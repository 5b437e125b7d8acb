#pragma once

#include <optional>
#include <string_view>

namespace fracgreen {

/// Interpolation targets. Both vanish at 0 and 1; f1'(0) = 0 while f2'(0) = 1.
double f1(double x);  // sin(pi x / 2) x (1 - x)
double f2(double x);  // cos(pi x / 2) x (1 - x)

/// Exact solution shared by both boundary value problems: x - x^2.
double bvp_exact(double x);

/// Forcing f with -0Dx^alpha (x - x^2) = f. Singular like x^(1-alpha) at 0;
/// throws DomainError at x <= 0.
double problem1_forcing(double alpha, double x);

/// Forcing f with -xD1^alpha (x - x^2) = f. Singular at x = 1.
double problem2_forcing(double alpha, double x);

/// Source q of u_t = 0Dx^alpha u + q with exact solution e^-t (x - x^4).
/// Throws DomainError at x <= 0.
double diffusion_source(double alpha, double x, double t);
double diffusion_initial(double x);
double diffusion_exact(double x, double t);

enum class BenchmarkId { F1, F2, BvpLeft, BvpRight, Diffusion };
enum class BenchmarkKind { Interpolation, Bvp, Diffusion };

/// Names: f1, f2, bvp-left, bvp-right, diffusion.
std::string_view to_string(BenchmarkId id);
std::optional<BenchmarkId> parse_benchmark(std::string_view name);
BenchmarkKind kind_of(BenchmarkId id);

}  // namespace fracgreen
