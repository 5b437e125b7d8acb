#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fracgreen/errors.hpp"
#include "fracgreen/fractional.hpp"
#include "fracgreen/quadrature.hpp"

using namespace fracgreen;

namespace {

// 1/Gamma(b) \int_0^x (x-t)^(b-1) t^g dt after s = (x-t)^b, which removes the
// endpoint singularity: (1/b) \int_0^{x^b} (x - s^(1/b))^g ds.
double rl_integral(double g, double b, double x) {
    const GaussLegendre gl = gauss_legendre(20);
    const int panels = 400;
    const double top = std::pow(x, b);
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double a = top * p / panels;
        const double w = top / panels;
        for (std::size_t k = 0; k < gl.nodes.size(); ++k) {
            const double s = a + 0.5 * w * (gl.nodes[k] + 1.0);
            total += 0.5 * w * gl.weights[k] * std::pow(x - std::pow(s, 1.0 / b), g);
        }
    }
    return total / b / std::tgamma(b);
}

// d^2/dx^2 of the fractional integral of order 2 - alpha, fourth-order stencil.
double numeric_rl_derivative(double g, double alpha, double x) {
    const double h = 1e-2;
    const double b = 2.0 - alpha;
    auto f = [&](double y) { return rl_integral(g, b, y); };
    return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) / (12 * h * h);
}

}  // namespace

TEST_CASE("fractional order range") {
    CHECK(FractionalOrder(1.5).value() == 1.5);
    CHECK(FractionalOrder(2.0).value() == 2.0);
    CHECK_THROWS_AS(FractionalOrder(1.0), DomainError);
    CHECK_THROWS_AS(FractionalOrder(2.0001), DomainError);
    CHECK_THROWS_AS(FractionalOrder(std::nan("")), DomainError);
}

TEST_CASE("gamma known values") {
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(gamma_fn(3.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(gamma_fn(0.5) == doctest::Approx(1.7724538509055159).epsilon(1e-15));
    CHECK_THROWS_AS(gamma_fn(0.0), DomainError);
    CHECK_THROWS_AS(gamma_fn(-1.5), DomainError);
}

TEST_CASE("gamma recurrence") {
    for (int i = 1; i <= 50; ++i) {
        const double x = i / 10.0;
        CHECK(std::abs(gamma_fn(x + 1) - x * gamma_fn(x)) <= 1e-12 * gamma_fn(x + 1));
    }
}

TEST_CASE("reciprocal gamma") {
    CHECK(reciprocal_gamma(0.0) == 0.0);
    CHECK(reciprocal_gamma(0.5) == doctest::Approx(1.0 / std::sqrt(std::numbers::pi)));
}

TEST_CASE("rl_left_monomial examples") {
    CHECK(rl_left_monomial(2.0, 2.0, 0.5) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(rl_left_monomial(2.0, 1.5, 0.25) == doctest::Approx(1.1283791670955126).epsilon(1e-12));
    CHECK_THROWS_AS(rl_left_monomial(1.0, 1.5, 0.0), DomainError);
    CHECK(rl_left_monomial(2.0, 1.5, 0.0) == 0.0);
    CHECK_THROWS_AS(rl_left_monomial(2.0, 1.5, -0.1), DomainError);
}

TEST_CASE("rl_left_monomial classical limits") {
    for (double g : {2.0, 3.0, 4.0}) {
        for (double x : {0.1, 0.3, 0.7, 1.0}) {
            CHECK(std::abs(rl_left_monomial(g, 2.0, x) - g * (g - 1) * std::pow(x, g - 2)) <= 1e-12);
        }
    }
    CHECK(rl_left_monomial(1.0, 2.0, 0.4) == 0.0);
}

TEST_CASE("rl_left_monomial against the integral definition") {
    for (double alpha : {1.25, 1.5, 1.75}) {
        for (double g : {1.0, 2.0, 4.0}) {
            for (double x : {0.25, 0.5, 0.9}) {
                const double expected = numeric_rl_derivative(g, alpha, x);
                CAPTURE(alpha);
                CAPTURE(g);
                CAPTURE(x);
                CHECK(rl_left_monomial(g, alpha, x) == doctest::Approx(expected).epsilon(1e-6));
            }
        }
    }
}

TEST_CASE("problem 2 forcing examples") {
    CHECK(rl_right_for_problem2(1.5, 0.0) == doctest::Approx(1.692569).epsilon(1e-6));
    CHECK(rl_right_for_problem2(2.0, 0.3) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK_THROWS_AS(rl_right_for_problem2(1.5, 1.0), DomainError);
}

TEST_CASE("problem 2 two-term form is the negated mirror form") {
    // Two-term form: f = xD1^a x - xD1^a x^2 with xD1^a x = (1-x)^(-a) [ (1-a) + ... ]
    // expanded through x = 1 - (1-x) and x^2 = 1 - 2(1-x) + (1-x)^2.
    auto right_monomial = [](double g, double a, double y) {
        return std::tgamma(g + 1) * std::pow(y, g - a) / std::tgamma(g + 1 - a);
    };
    for (double alpha : {1.25, 1.5, 1.75, 1.9}) {
        for (double x = 0.02; x < 0.99; x += 0.07) {
            const double y = 1.0 - x;
            const double d_x = right_monomial(0, alpha, y) - right_monomial(1, alpha, y);
            const double d_x2 = right_monomial(0, alpha, y) - 2 * right_monomial(1, alpha, y) +
                                right_monomial(2, alpha, y);
            const double two_term = d_x - d_x2;
            CHECK(std::abs(two_term + rl_right_for_problem2(alpha, x)) <= 1e-8);
        }
    }
}
