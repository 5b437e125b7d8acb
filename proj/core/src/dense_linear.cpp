#include "fracgreen/dense_linear.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>
#include <string>

#include "fracgreen/errors.hpp"

namespace fracgreen {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

double Matrix::norm_inf() const {
    double best = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        double s = 0.0;
        for (double v : row(i)) s += std::abs(v);
        best = std::max(best, s);
    }
    return best;
}

double Matrix::norm_one() const {
    std::vector<double> sums(cols_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) sums[j] += std::abs((*this)(i, j));
    return sums.empty() ? 0.0 : *std::max_element(sums.begin(), sums.end());
}

double Matrix::max_abs() const {
    double best = 0.0;
    for (double v : data_) best = std::max(best, std::abs(v));
    return best;
}

std::vector<double> multiply(const Matrix& a, std::span<const double> x) {
    if (x.size() != a.cols()) throw ConfigError("multiply: dimension mismatch");
    std::vector<double> y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto r = a.row(i);
        double s = 0.0;
        for (std::size_t j = 0; j < r.size(); ++j) s += r[j] * x[j];
        y[i] = s;
    }
    return y;
}

Matrix add_scaled(const Matrix& a, double s, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ConfigError("add_scaled: dimension mismatch");
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + s * b(i, j);
    return c;
}

double norm_inf(std::span<const double> v) {
    double best = 0.0;
    for (double x : v) best = std::max(best, std::abs(x));
    return best;
}

LuFactorization::LuFactorization(Matrix a) : lu_(std::move(a)) {
    if (!lu_.is_square()) throw ConfigError("LU factorization requires a square matrix");
    const std::size_t n = lu_.rows();
    for (double v : lu_.data()) {
        if (!std::isfinite(v)) throw ConfigError("LU factorization: non-finite matrix entry");
    }
    norm_one_ = lu_.norm_one();
    const double tiny = 1e-14 * lu_.max_abs();
    perm_.resize(n);
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::abs(lu_(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(lu_(i, k)) > best) {
                best = std::abs(lu_(i, k));
                p = i;
            }
        }
        if (best <= tiny || best == 0.0) {
            throw SingularMatrixError("matrix is singular to working precision (pivot " +
                                      std::to_string(k) + ")");
        }
        if (p != k) {
            std::swap_ranges(lu_.row(k).begin(), lu_.row(k).end(), lu_.row(p).begin());
            std::swap(perm_[k], perm_[p]);
        }
        const double pivot = lu_(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double m = lu_(i, k) / pivot;
            lu_(i, k) = m;
            if (m == 0.0) continue;
            for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= m * lu_(k, j);
        }
    }
}

std::vector<double> LuFactorization::solve(std::span<const double> b) const {
    const std::size_t n = size();
    if (b.size() != n) throw ConfigError("LU solve: right-hand side has wrong length");
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[perm_[i]];
    for (std::size_t i = 0; i < n; ++i) {
        double s = x[i];
        for (std::size_t j = 0; j < i; ++j) s -= lu_(i, j) * x[j];
        x[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
        double s = x[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= lu_(i, j) * x[j];
        x[i] = s / lu_(i, i);
    }
    return x;
}

std::vector<double> LuFactorization::solve_transposed(std::span<const double> b) const {
    // A^T = U^T L^T P, so solve U^T w = b, L^T v = w, x = P^T v.
    const std::size_t n = size();
    if (b.size() != n) throw ConfigError("LU solve: right-hand side has wrong length");
    std::vector<double> w(b.begin(), b.end());
    for (std::size_t i = 0; i < n; ++i) {
        double s = w[i];
        for (std::size_t j = 0; j < i; ++j) s -= lu_(j, i) * w[j];
        w[i] = s / lu_(i, i);
    }
    for (std::size_t i = n; i-- > 0;) {
        double s = w[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= lu_(j, i) * w[j];
        w[i] = s;
    }
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[perm_[i]] = w[i];
    return x;
}

double LuFactorization::condition_estimate() const {
    const std::size_t n = size();
    if (n == 0) return 0.0;
    // Hager / Higham one-norm estimate of ||A^{-1}||_1.
    std::vector<double> x(n, 1.0 / static_cast<double>(n));
    double estimate = 0.0;
    for (int iter = 0; iter < 5; ++iter) {
        std::vector<double> y = solve(x);
        double y_norm = 0.0;
        for (double v : y) y_norm += std::abs(v);
        if (iter > 0 && y_norm <= estimate) break;
        estimate = y_norm;
        std::vector<double> sign(n);
        for (std::size_t i = 0; i < n; ++i) sign[i] = y[i] >= 0.0 ? 1.0 : -1.0;
        std::vector<double> z = solve_transposed(sign);
        std::size_t jmax = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (std::abs(z[i]) > std::abs(z[jmax])) jmax = i;
        double zx = 0.0;
        for (std::size_t i = 0; i < n; ++i) zx += z[i] * x[i];
        if (std::abs(z[jmax]) <= zx) break;
        std::fill(x.begin(), x.end(), 0.0);
        x[jmax] = 1.0;
    }
    return estimate * norm_one_;
}

LuFactorization lu_factor(Matrix a) {
    LuFactorization fac(std::move(a));
    const double cond = fac.condition_estimate();
    if (cond > kConditionWarningThreshold) {
        std::clog << "fracgreen: warning: ill-conditioned system (n=" << fac.size()
                  << ", cond_1 ~ " << cond << ")\n";
    }
    return fac;
}

std::vector<double> lu_solve(const Matrix& a, std::span<const double> b) {
    return lu_factor(a).solve(b);
}

}  // namespace fracgreen
