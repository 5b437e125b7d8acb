#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fracgreen {

/// Row-major dense matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    std::span<const double> data() const noexcept { return data_; }

    Matrix transposed() const;

    /// Max absolute row sum.
    double norm_inf() const;
    /// Max absolute column sum.
    double norm_one() const;
    /// Largest absolute entry.
    double max_abs() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// y = a x
std::vector<double> multiply(const Matrix& a, std::span<const double> x);

/// a + s b, elementwise.
Matrix add_scaled(const Matrix& a, double s, const Matrix& b);

double norm_inf(std::span<const double> v);

/// LU factorization with partial pivoting, P A = L U.
///
/// Immutable after construction and safe to share between threads.
class LuFactorization {
public:
    /// Throws SingularMatrixError when a pivot magnitude falls below
    /// 1e-14 times the largest entry of `a`; ConfigError when `a` is not square.
    explicit LuFactorization(Matrix a);

    std::size_t size() const noexcept { return lu_.rows(); }

    std::vector<double> solve(std::span<const double> b) const;
    /// Solves A^T x = b.
    std::vector<double> solve_transposed(std::span<const double> b) const;

    /// Estimate of the one-norm condition number (Hager's method).
    double condition_estimate() const;

private:
    Matrix lu_;
    std::vector<std::size_t> perm_;
    double norm_one_ = 0.0;
};

/// Condition estimates above this are reported on std::clog by lu_factor.
inline constexpr double kConditionWarningThreshold = 1e12;

/// Factor `a` for repeated solves; warns on std::clog when ill-conditioned.
LuFactorization lu_factor(Matrix a);

/// One-shot factor-and-solve of a x = b.
std::vector<double> lu_solve(const Matrix& a, std::span<const double> b);

}  // namespace fracgreen
