#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "fracgreen/errors.hpp"
#include "fracgreen/kernels.hpp"

using namespace fracgreen;

namespace {

double bb(double x, double z) { return std::min(x, z) - x * z; }

// Direct transcription of the left Riemann-Liouville Green's function.
double rl_left_reference(double a, double x, double z) {
    const double upper = std::pow(x * (1 - z), a - 1);
    const double value = z <= x ? upper - std::pow(x - z, a - 1) : upper;
    return value / std::tgamma(a);
}

double caputo_reference(double a, double x, double z) {
    const double upper = x * std::pow(1 - z, a - 1);
    const double value = z <= x ? upper - std::pow(x - z, a - 1) : upper;
    return value / std::tgamma(a);
}

}  // namespace

TEST_CASE("kernel names round trip") {
    for (auto k : {KernelKind::BrownianBridge, KernelKind::RiemannLiouvilleLeft,
                   KernelKind::RiemannLiouvilleRight, KernelKind::Caputo}) {
        CHECK(parse_kernel_kind(to_string(k)) == k);
    }
    CHECK_FALSE(parse_kernel_kind("gauss").has_value());
}

TEST_CASE("kernel examples") {
    CHECK(eval_kernel(KernelSpec::brownian_bridge(), 0.25, 0.5) == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(eval_kernel(KernelSpec::rl_left(1.5), 0.25, 0.5) ==
          doctest::Approx(0.3989422804014327).epsilon(1e-12));
    CHECK(KernelSpec::brownian_bridge().alpha() == 2.0);
}

TEST_CASE("kernels match their transcriptions") {
    for (double a : {1.1, 1.5, 1.9}) {
        const auto left = KernelSpec::rl_left(a);
        const auto cap = KernelSpec::caputo(a);
        const auto right = KernelSpec::rl_right(a);
        for (int i = 0; i <= 40; ++i) {
            for (int j = 0; j <= 40; ++j) {
                const double x = i / 40.0;
                const double z = j / 40.0;
                CHECK(std::abs(left(x, z) - rl_left_reference(a, x, z)) <= 1e-10);
                CHECK(std::abs(cap(x, z) - caputo_reference(a, x, z)) <= 1e-10);
                CHECK(std::abs(right(x, z) - rl_left_reference(a, 1 - x, 1 - z)) <= 1e-10);
                CHECK(std::abs(right(x, z) - left(z, x)) <= 1e-12);
            }
        }
    }
}

TEST_CASE("boundary vanishing") {
    for (double a : {1.1, 1.5, 1.9, 2.0}) {
        for (const auto& spec : {KernelSpec::rl_left(a), KernelSpec::rl_right(a), KernelSpec::caputo(a),
                                 KernelSpec::brownian_bridge()}) {
            for (int j = 0; j <= 100; ++j) {
                const double z = j / 100.0;
                CHECK(std::abs(spec(0.0, z)) <= 1e-14);
                CHECK(std::abs(spec(1.0, z)) <= 1e-14);
            }
            CHECK(spec(0.0, 0.37) == 0.0);
        }
    }
}

TEST_CASE("diagonal continuity") {
    for (double a : {1.25, 1.5, 1.75}) {
        for (int j = 1; j < 50; ++j) {
            const double z = j / 50.0;
            const double lower = std::pow(z * (1 - z), a - 1) / std::tgamma(a);
            CHECK(std::abs(KernelSpec::rl_left(a)(z, z) - lower) <= 1e-12);
            CHECK(std::abs(KernelSpec::caputo(a)(z, z) - z * std::pow(1 - z, a - 1) / std::tgamma(a)) <= 1e-12);
        }
    }
}

TEST_CASE("nonnegativity") {
    for (double a : {1.1, 1.5, 1.9, 2.0}) {
        const auto spec = KernelSpec::rl_left(a);
        const Matrix g = kernel_grid(spec, 201, 201);
        CHECK(*std::min_element(g.data().begin(), g.data().end()) >= -1e-14);
        const Matrix r = kernel_grid(KernelSpec::rl_right(a), 201, 201);
        CHECK(*std::min_element(r.data().begin(), r.data().end()) >= -1e-14);
    }
}

TEST_CASE("alpha = 2 reduction") {
    const auto left = KernelSpec::rl_left(2.0);
    const auto cap = KernelSpec::caputo(2.0);
    for (int i = 0; i <= 100; ++i) {
        for (int j = 0; j <= 100; ++j) {
            const double x = i / 100.0;
            const double z = j / 100.0;
            CHECK(std::abs(left(x, z) - bb(x, z)) <= 1e-12);
            CHECK(std::abs(cap(x, z) - bb(x, z)) <= 1e-12);
        }
    }
}

TEST_CASE("kernel grid") {
    const Matrix b = kernel_grid(KernelSpec::brownian_bridge(), 3, 3);
    CHECK(b(1, 1) == 0.25);
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(b(0, k) == 0.0);
        CHECK(b(2, k) == 0.0);
        CHECK(b(k, 0) == 0.0);
        CHECK(b(k, 2) == 0.0);
    }
    CHECK_THROWS_AS(kernel_grid(KernelSpec::brownian_bridge(), 1, 3), ConfigError);

    const Matrix sym = kernel_grid(KernelSpec::rl_left(2.0), 101, 101);
    double asym2 = 0.0;
    for (std::size_t i = 0; i < 101; ++i)
        for (std::size_t j = 0; j < 101; ++j) asym2 = std::max(asym2, std::abs(sym(i, j) - sym(j, i)));
    CHECK(asym2 <= 1e-12);

    for (double a : {1.25, 1.5, 1.75}) {
        const Matrix g = kernel_grid(KernelSpec::rl_left(a), 101, 101);
        double asym = 0.0;
        for (std::size_t i = 0; i < 101; ++i)
            for (std::size_t j = 0; j < 101; ++j) asym = std::max(asym, std::abs(g(i, j) - g(j, i)));
        CHECK(asym > 1e-3);
    }
}
