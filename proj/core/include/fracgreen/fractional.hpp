#pragma once

namespace fracgreen {

/// Order alpha of a fractional operator; always in (1, 2].
///
/// alpha = 2 is the classical second derivative, whose Green's kernel is
/// the Brownian bridge.
class FractionalOrder {
public:
    /// Throws DomainError unless 1 < alpha <= 2.
    explicit FractionalOrder(double alpha);

    double value() const noexcept { return alpha_; }

    friend bool operator==(FractionalOrder, FractionalOrder) = default;

private:
    double alpha_;
};

/// Gamma function for x > 0. Throws DomainError for x <= 0 or NaN.
double gamma_fn(double x);

/// 1 / Gamma(x) for x >= 0, with the pole at 0 mapped to 0.
double reciprocal_gamma(double x);

/// Left Riemann-Liouville derivative of order alpha of x^gamma_exp, based at 0:
///   Gamma(gamma_exp + 1) x^(gamma_exp - alpha) / Gamma(gamma_exp + 1 - alpha).
///
/// When gamma_exp + 1 - alpha == 0 the derivative vanishes identically
/// (e.g. the second derivative of x). Throws DomainError for x < 0, for
/// gamma_exp < 1, or for x == 0 with gamma_exp < alpha.
double rl_left_monomial(double gamma_exp, double alpha, double x);

/// Forcing of the right-sided model problem, -xD1^alpha (x - x^2), written
/// through the mirror monomials (1-x) and (1-x)^2:
///   -(1-x)^(1-alpha)/Gamma(2-alpha) + 2 (1-x)^(2-alpha)/Gamma(3-alpha).
///
/// Throws DomainError for x >= 1 or x < 0.
double rl_right_for_problem2(double alpha, double x);

}  // namespace fracgreen
