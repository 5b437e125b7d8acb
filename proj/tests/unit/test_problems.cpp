#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fracgreen/errors.hpp"
#include "fracgreen/fractional.hpp"
#include "fracgreen/problems.hpp"

using namespace fracgreen;

namespace {

double derivative(double (*f)(double), double x) {
    const double h = 1e-5;
    return (f(x + h) - f(x - h)) / (2 * h);
}

}  // namespace

TEST_CASE("interpolation targets") {
    CHECK(f1(0.0) == 0.0);
    CHECK(std::abs(f1(1.0)) <= 1e-16);
    CHECK(f2(0.0) == 0.0);
    CHECK(std::abs(f2(1.0)) <= 1e-16);
    CHECK(f1(0.5) == doctest::Approx(std::sin(std::numbers::pi / 4) * 0.25).epsilon(1e-15));
    CHECK(std::abs(derivative(f1, 0.0)) <= 1e-6);
    CHECK(std::abs(derivative(f2, 0.0) - 1.0) <= 1e-6);
    CHECK(std::abs(derivative(f1, 1.0) + 1.0) <= 1e-6);
    CHECK(std::abs(derivative(f2, 1.0)) <= 1e-6);
}

TEST_CASE("bvp exact solution") {
    CHECK(bvp_exact(0.0) == 0.0);
    CHECK(bvp_exact(1.0) == 0.0);
    CHECK(bvp_exact(0.25) == 0.1875);
}

TEST_CASE("problem 1 forcing") {
    for (double x : {0.1, 0.5, 0.9}) CHECK(problem1_forcing(2.0, x) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(problem1_forcing(1.5, 1.0) ==
          doctest::Approx(-1.0 / std::tgamma(0.5) + 2.0 / std::tgamma(1.5)).epsilon(1e-14));
    CHECK_THROWS_AS(problem1_forcing(1.5, 0.0), DomainError);
}

TEST_CASE("problem 1 forcing residual") {
    for (double a : {1.1, 1.5, 1.75, 1.95}) {
        for (int i = 1; i <= 9; ++i) {
            const double x = i / 10.0;
            const double minus_du = -(rl_left_monomial(1, a, x) - rl_left_monomial(2, a, x));
            CHECK(std::abs(problem1_forcing(a, x) - minus_du) <= 1e-12);
            const double closed_form = -std::pow(x, 1 - a) / std::tgamma(2 - a) + 2 * std::pow(x, 2 - a) / std::tgamma(3 - a);
            CHECK(std::abs(problem1_forcing(a, x) - closed_form) <= 1e-10);
        }
    }
}

TEST_CASE("problem 2 forcing mirrors problem 1") {
    for (double a : {1.25, 1.5, 1.75}) {
        for (int i = 1; i <= 9; ++i) {
            const double x = i / 10.0;
            CHECK(std::abs(problem2_forcing(a, x) - problem1_forcing(a, 1 - x)) <= 1e-12);
            CHECK(problem2_forcing(a, x) == rl_right_for_problem2(a, x));
        }
    }
    CHECK_THROWS_AS(problem2_forcing(1.5, 1.0), DomainError);
}

TEST_CASE("diffusion benchmark") {
    for (double x : {0.0, 0.3, 1.0}) CHECK(diffusion_exact(x, 0.0) == diffusion_initial(x));
    for (double t : {0.0, 0.5, 1.0}) {
        CHECK(diffusion_exact(0.0, t) == 0.0);
        CHECK(diffusion_exact(1.0, t) == 0.0);
    }
    CHECK_THROWS_AS(diffusion_source(1.5, 0.0, 0.5), DomainError);
}

TEST_CASE("diffusion source residual") {
    for (double a : {1.3, 1.8}) {
        for (double x : {0.25, 0.5, 0.75}) {
            for (double t : {0.1, 0.5}) {
                const double ut = -std::exp(-t) * (x - std::pow(x, 4));
                const double du = std::exp(-t) * (rl_left_monomial(1, a, x) - rl_left_monomial(4, a, x));
                CHECK(std::abs(ut - du - diffusion_source(a, x, t)) <= 1e-10);
                // Closed form, with the time derivative and fractional term expanded.
                const double closed_form =
                    -std::exp(-t) * (x - std::pow(x, 4)) -
                    std::exp(-t) * (std::pow(x, 1 - a) / std::tgamma(2 - a) - 24 * std::pow(x, 4 - a) / std::tgamma(5 - a));
                CHECK(std::abs(closed_form - diffusion_source(a, x, t)) <= 1e-10);
            }
        }
    }
}

TEST_CASE("benchmark identifiers") {
    for (auto id : {BenchmarkId::F1, BenchmarkId::F2, BenchmarkId::BvpLeft, BenchmarkId::BvpRight,
                    BenchmarkId::Diffusion}) {
        CHECK(parse_benchmark(to_string(id)) == id);
    }
    CHECK(kind_of(BenchmarkId::F2) == BenchmarkKind::Interpolation);
    CHECK(kind_of(BenchmarkId::BvpRight) == BenchmarkKind::Bvp);
    CHECK(kind_of(BenchmarkId::Diffusion) == BenchmarkKind::Diffusion);
    CHECK_FALSE(parse_benchmark("f3").has_value());
}
