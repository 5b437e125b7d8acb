#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fracgreen/dense_linear.hpp"
#include "fracgreen/interpolation.hpp"
#include "fracgreen/kernels.hpp"
#include "fracgreen/quadrature.hpp"

namespace fracgreen {

/// Galerkin test space. Trial functions are always G(., x_j).
///
///  - Primal:  v_i = G(., x_i). Mass A_ij = \int G(z,x_i) G(z,x_j) dz is
///             symmetric; the operator term reduces to G(x_j, x_i), so the
///             system matrix is the transposed kernel matrix.
///  - Adjoint: v_i = G(x_i, .). The operator term reduces to u_N(x_i), the
///             system matrix is the kernel matrix itself and the load is the
///             exact solution at the nodes; the mass matrix is not symmetric.
enum class TestFunctions { Primal, Adjoint };

std::string_view to_string(TestFunctions t);
/// Accepts "primal" and "adjoint".
std::optional<TestFunctions> parse_test_functions(std::string_view name);

/// -L u = f on (0,1), u(0) = u(1) = 0, where `spec` is the Green's kernel
/// of L (left RL kernel for 0Dx^alpha, right RL kernel for xD1^alpha).
struct BvpProblem {
    KernelSpec spec;
    std::function<double(double)> forcing;
    std::function<double(double)> exact;  // empty when unknown
};

/// u_t - 0Dx^alpha u = q, u(x, t0) = g(x), homogeneous Dirichlet data, unit
/// diffusivity.
struct DiffusionProblem {
    KernelSpec spec;
    std::function<double(double, double)> source;  // q(x, t)
    std::function<double(double)> initial;         // g(x)
    double t0 = 0.0;
    double t1 = 1.0;
    int nt = 1;
};

/// Left-sided model problem with exact solution x - x^2.
BvpProblem left_model_problem(double alpha);
/// Right-sided model problem with exact solution x - x^2.
BvpProblem right_model_problem(double alpha);
/// Diffusion benchmark with exact solution e^-t (x - x^4).
DiffusionProblem diffusion_benchmark(double alpha, double t0, double t1, int nt);

/// \int_0^1 G(x, z) f(z) dz with x added as a breakpoint.
double greens_integral(const KernelSpec& spec, const std::function<double(double)>& f, double x,
                       const CompositeGauss& quad);

/// Load vector: f_i = \int f(z) G(z, x_i) dz (Primal) or \int G(x_i, z) f(z) dz
/// (Adjoint), each with x_i added as a breakpoint.
std::vector<double> assemble_load(const std::function<double(double)>& f, const KernelSpec& spec,
                                  const NodeSet& nodes, const QuadratureRule& rule,
                                  TestFunctions test);

/// System matrix of the stationary problem: G^T (Primal) or G (Adjoint) with
/// G_ij = G(x_i, x_j). Pure kernel evaluation; no quadrature.
Matrix assemble_stiffness(const KernelSpec& spec, const NodeSet& nodes, TestFunctions test);

/// Kernel Galerkin solution u_N = sum_j c_j G(., x_j).
Interpolant solve_bvp(const BvpProblem& problem, const NodeSet& nodes, const QuadratureRule& rule,
                      TestFunctions test = TestFunctions::Adjoint);

/// max_x |\int G(x,z) f(z) dz - u(x)| over the test points. Requires problem.exact.
double greens_reproduction(const BvpProblem& problem, const QuadratureRule& rule,
                           std::span<const double> test_points);

/// Mass matrix with breakpoints {x_i, x_j}:
///   Primal:  A_ij = \int G(z, x_i) G(z, x_j) dz, upper triangle computed and mirrored.
///   Adjoint: M_ij = \int G(x_i, z) G(z, x_j) dz, all entries computed.
Matrix assemble_mass(const KernelSpec& spec, const NodeSet& nodes, const QuadratureRule& rule,
                     TestFunctions test);

/// Per-step hook: step index n (0..nt) and c^n.
using StepObserver = std::function<void(int, std::span<const double>)>;

/// Crank-Nicolson march
///   (M + tau/2 S) c^{n+1} = (M - tau/2 S) c^n + tau f^{n+1/2}
/// with M, S and the load f^{n+1/2} (source sampled at t0 + tau (n + 1/2))
/// taken from the chosen test space. Starts from the nodal interpolant
/// G c^0 = g(x_j). Returns c^0..c^nt.
///
/// The Adjoint variant is not unconditionally stable: for small alpha its
/// generalized spectrum has eigenvalues with negative real part.
std::vector<std::vector<double>> crank_nicolson(const DiffusionProblem& problem,
                                                const NodeSet& nodes, const QuadratureRule& rule,
                                                TestFunctions test = TestFunctions::Primal,
                                                const StepObserver& observer = {});

}  // namespace fracgreen
