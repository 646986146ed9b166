#include "ovenctl/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "ovenctl/errors.hpp"

namespace ovenctl {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0 || (rows == 0) != (cols == 0)) {
        throw std::invalid_argument("Matrix: invalid dimensions");
    }
    data_.assign(static_cast<std::size_t>(rows) * cols, 0.0);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(static_cast<int>(rows.size())) {
    cols_ = rows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
    data_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_) {
            throw std::invalid_argument("Matrix: ragged initializer");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
    check_finite();
}

void Matrix::check_finite() const {
    for (double v : data_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("Matrix: non-finite entry");
        }
    }
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::column(std::initializer_list<double> values) {
    Matrix m(static_cast<int>(values.size()), 1);
    int i = 0;
    for (double v : values) m(i++, 0) = v;
    m.check_finite();
    return m;
}

Matrix Matrix::row_vector(std::initializer_list<double> values) {
    Matrix m(1, static_cast<int>(values.size()));
    int j = 0;
    for (double v : values) m(0, j++) = v;
    m.check_finite();
    return m;
}

Matrix Matrix::diagonal(std::initializer_list<double> values) {
    Matrix m(static_cast<int>(values.size()), static_cast<int>(values.size()));
    int i = 0;
    for (double v : values) {
        m(i, i) = v;
        ++i;
    }
    m.check_finite();
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

double Matrix::trace() const {
    double sum = 0.0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) sum += (*this)(i, i);
    return sum;
}

double Matrix::norm_inf() const {
    double best = 0.0;
    for (int i = 0; i < rows_; ++i) {
        double row_sum = 0.0;
        for (int j = 0; j < cols_; ++j) row_sum += std::abs((*this)(i, j));
        best = std::max(best, row_sum);
    }
    return best;
}

double Matrix::max_abs() const {
    double best = 0.0;
    for (double v : data_) best = std::max(best, std::abs(v));
    return best;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    if (!same_shape(other)) throw DimensionMismatch("Matrix +=: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    if (!same_shape(other)) throw DimensionMismatch("Matrix -=: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(double scalar) {
    for (double& v : data_) v *= scalar;
    return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols_ != rhs.rows_) throw DimensionMismatch("Matrix *: inner dimensions differ");
    Matrix out(lhs.rows_, rhs.cols_);
    for (int i = 0; i < lhs.rows_; ++i) {
        for (int k = 0; k < lhs.cols_; ++k) {
            const double a = lhs(i, k);
            if (a == 0.0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    }
    return out;
}

namespace {

// LU factorization with partial pivoting, in place. Returns the permutation
// sign, or 0 when a pivot falls below threshold.
int lu_factor(Matrix& a, std::vector<int>& perm, double threshold) {
    const int n = a.rows();
    perm.resize(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int pivot_row = k;
        double pivot_mag = std::abs(a(k, k));
        for (int i = k + 1; i < n; ++i) {
            if (std::abs(a(i, k)) > pivot_mag) {
                pivot_mag = std::abs(a(i, k));
                pivot_row = i;
            }
        }
        if (pivot_mag < threshold) return 0;
        if (pivot_row != k) {
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(pivot_row, j));
            std::swap(perm[k], perm[pivot_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            const double factor = a(i, k) / a(k, k);
            a(i, k) = factor;
            for (int j = k + 1; j < n; ++j) a(i, j) -= factor * a(k, j);
        }
    }
    return sign;
}

}  // namespace

Matrix solve(const Matrix& a, const Matrix& b) {
    if (!a.is_square()) throw DimensionMismatch("solve: a must be square");
    if (a.rows() != b.rows()) throw DimensionMismatch("solve: b row count mismatch");
    const int n = a.rows();
    Matrix lu = a;
    std::vector<int> perm;
    const double threshold = 1e-12 * std::max(a.norm_inf(), 1e-300);
    if (lu_factor(lu, perm, threshold) == 0) {
        throw SingularMatrix("solve: pivot below singularity threshold");
    }
    Matrix x(n, b.cols());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < b.cols(); ++j) x(i, j) = b(perm[i], j);
    }
    // Forward substitution (unit lower), then back substitution.
    for (int k = 0; k < n; ++k) {
        for (int i = k + 1; i < n; ++i) {
            const double factor = lu(i, k);
            for (int j = 0; j < x.cols(); ++j) x(i, j) -= factor * x(k, j);
        }
    }
    for (int k = n - 1; k >= 0; --k) {
        for (int j = 0; j < x.cols(); ++j) x(k, j) /= lu(k, k);
        for (int i = 0; i < k; ++i) {
            const double factor = lu(i, k);
            for (int j = 0; j < x.cols(); ++j) x(i, j) -= factor * x(k, j);
        }
    }
    return x;
}

double determinant(const Matrix& a) {
    if (!a.is_square()) throw DimensionMismatch("determinant: a must be square");
    Matrix lu = a;
    std::vector<int> perm;
    const int sign = lu_factor(lu, perm, 0.0);
    if (sign == 0) return 0.0;
    double det = sign;
    for (int i = 0; i < lu.rows(); ++i) det *= lu(i, i);
    return det;
}

int rank(const Matrix& a) {
    return rank(a, 1e-10 * std::max(a.rows(), a.cols()) * a.max_abs());
}

int rank(const Matrix& a, double tol) {
    if (tol < 0.0) throw std::invalid_argument("rank: tolerance must be nonnegative");
    Matrix work = a;
    const int m = work.rows();
    const int n = work.cols();
    int r = 0;
    for (int k = 0; k < std::min(m, n); ++k) {
        // Complete pivoting: largest remaining entry.
        int pi = k, pj = k;
        double best = 0.0;
        for (int i = k; i < m; ++i) {
            for (int j = k; j < n; ++j) {
                if (std::abs(work(i, j)) > best) {
                    best = std::abs(work(i, j));
                    pi = i;
                    pj = j;
                }
            }
        }
        if (best <= tol) break;
        for (int j = 0; j < n; ++j) std::swap(work(k, j), work(pi, j));
        for (int i = 0; i < m; ++i) std::swap(work(i, k), work(i, pj));
        for (int i = k + 1; i < m; ++i) {
            const double factor = work(i, k) / work(k, k);
            for (int j = k; j < n; ++j) work(i, j) -= factor * work(k, j);
        }
        ++r;
    }
    return r;
}

}  // namespace ovenctl
