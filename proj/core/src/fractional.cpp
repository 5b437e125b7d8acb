#include "fracgreen/fractional.hpp"

#include <cmath>
#include <string>

#include "fracgreen/errors.hpp"

namespace fracgreen {

FractionalOrder::FractionalOrder(double alpha) : alpha_(alpha) {
    if (!(alpha > 1.0 && alpha <= 2.0)) {
        throw DomainError("fractional order must satisfy 1 < alpha <= 2, got " +
                          std::to_string(alpha));
    }
}

double gamma_fn(double x) {
    if (!(x > 0.0)) {
        throw DomainError("gamma_fn requires x > 0, got " + std::to_string(x));
    }
    return std::tgamma(x);
}

double reciprocal_gamma(double x) {
    if (x == 0.0) return 0.0;
    return 1.0 / gamma_fn(x);
}

double rl_left_monomial(double gamma_exp, double alpha, double x) {
    if (gamma_exp < 1.0) {
        throw DomainError("rl_left_monomial requires gamma >= 1");
    }
    if (!(x >= 0.0)) {
        throw DomainError("rl_left_monomial requires x >= 0");
    }
    const double shifted = gamma_exp + 1.0 - alpha;
    if (shifted < 0.0 && shifted == std::floor(shifted)) {
        return 0.0;
    }
    const double scale = gamma_fn(gamma_exp + 1.0) * reciprocal_gamma(shifted);
    if (scale == 0.0) return 0.0;
    const double power = gamma_exp - alpha;
    if (x == 0.0) {
        if (power < 0.0) {
            throw DomainError("rl_left_monomial is unbounded at x = 0 when gamma < alpha");
        }
        return power == 0.0 ? scale : 0.0;
    }
    return scale * std::pow(x, power);
}

double rl_right_for_problem2(double alpha, double x) {
    if (!(x >= 0.0) || x >= 1.0) {
        throw DomainError("problem 2 forcing is defined on [0, 1)");
    }
    // x - x^2 = (1-x) - (1-x)^2 and xD1^alpha (1-x)^g equals 0Dy^alpha y^g at y = 1-x.
    const double y = 1.0 - x;
    return rl_left_monomial(2.0, alpha, y) - rl_left_monomial(1.0, alpha, y);
}

}  // namespace fracgreen
