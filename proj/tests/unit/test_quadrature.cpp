#include <doctest.h>

#include <cmath>
#include <numeric>

#include "fracgreen/errors.hpp"
#include "fracgreen/quadrature.hpp"

using namespace fracgreen;

TEST_CASE("gauss-legendre closed forms") {
    const auto one = gauss_legendre(1);
    REQUIRE(one.nodes.size() == 1);
    CHECK(one.nodes[0] == 0.0);
    CHECK(one.weights[0] == doctest::Approx(2.0));

    const auto two = gauss_legendre(2);
    CHECK(two.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(two.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(two.weights[0] == doctest::Approx(1.0).epsilon(1e-15));

    const auto four = gauss_legendre(4);
    double s = 0.0;
    for (std::size_t k = 0; k < 4; ++k) s += four.weights[k] * std::pow(four.nodes[k], 6);
    CHECK(std::abs(s - 2.0 / 7.0) <= 1e-14);
    CHECK_THROWS_AS(gauss_legendre(0), ConfigError);
}

TEST_CASE("gauss-legendre exactness") {
    for (int n : {2, 4, 8, 16, 32}) {
        const auto gl = gauss_legendre(n);
        CHECK(std::accumulate(gl.weights.begin(), gl.weights.end(), 0.0) == doctest::Approx(2.0).epsilon(1e-14));
        for (int p = 0; p <= 2 * n - 1; ++p) {
            double s = 0.0;
            for (std::size_t k = 0; k < gl.nodes.size(); ++k) s += gl.weights[k] * std::pow(gl.nodes[k], p);
            CHECK(std::abs(s - (p % 2 ? 0.0 : 2.0 / (p + 1))) <= 1e-13);
        }
    }
}

TEST_CASE("composite rule on smooth and singular integrands") {
    const QuadratureRule rule;
    CHECK(std::abs(integrate([](double) { return 1.0; }, rule) - 1.0) <= 1e-14);
    for (int p = 0; p <= 31; ++p) {
        CHECK(std::abs(integrate([p](double x) { return std::pow(x, p); }, rule) - 1.0 / (p + 1)) <= 1e-13);
    }
    CHECK(std::abs(integrate([](double x) { return 1.0 / std::sqrt(x); }, rule) - 2.0) <= 1e-9);
    // Near 1 the grid cannot get closer than the double spacing 1.1e-16, which
    // leaves an unsampled tail of about 2 sqrt(1e-15).
    CHECK(std::abs(integrate([](double x) { return 1.0 / std::sqrt(1.0 - x); }, rule) - 2.0) <= 1e-6);
}

TEST_CASE("breakpoints make kinks exact") {
    QuadratureRule rule;
    rule.breakpoints = {0.3};
    CHECK(std::abs(integrate([](double x) { return std::abs(x - 0.3); }, rule) - 0.29) <= 1e-14);

    const CompositeGauss quad{QuadratureRule{}};
    const double bp[] = {0.6};
    const double v = quad.integrate([](double x) { return x < 0.6 ? x * x : 1.0 - x; }, bp);
    CHECK(std::abs(v - (0.072 + 0.08)) <= 1e-13);
}

TEST_CASE("grading convergence") {
    for (double beta : {-0.5, -0.25, 0.25}) {
        double previous = INFINITY;
        for (int depth = 10; depth <= 40; depth += 5) {
            QuadratureRule rule;
            rule.grading_depth = depth;
            const double err =
                std::abs(integrate([beta](double x) { return std::pow(x, beta); }, rule) - 1.0 / (beta + 1));
            CAPTURE(beta);
            CAPTURE(depth);
            // Non-increasing down to the rounding floor.
            CHECK(err <= std::max(previous, 1e-14));
            previous = err;
        }
        CHECK(previous <= 1e-9);
    }
}

TEST_CASE("quadrature nodes stay strictly inside panels") {
    const CompositeGauss quad{QuadratureRule{}};
    const double bp[] = {0.25, 0.5};
    const auto pts = quad.points(bp);
    for (double x : pts.nodes) {
        CHECK(x > 0.0);
        CHECK(x < 1.0);
        CHECK(x != 0.25);
        CHECK(x != 0.5);
    }
}

TEST_CASE("non-finite integrand is reported") {
    CHECK_THROWS_AS(integrate([](double x) { return x < 0.5 ? NAN : 1.0; }, QuadratureRule{}), QuadratureError);
}

TEST_CASE("rule validation") {
    QuadratureRule r;
    r.grading_ratio = 1.5;
    CHECK_THROWS_AS(r.validate(), ConfigError);
    r = {};
    r.gl_order = 1;
    CHECK_THROWS_AS(r.validate(), ConfigError);
    r = {};
    r.grading_depth = 0;
    CHECK_THROWS_AS(r.validate(), ConfigError);
}
