#pragma once

#include <initializer_list>
#include <vector>

namespace ovenctl {

/**
 * Dense real matrix, row-major storage.
 *
 * The shared carrier for plant matrices, gains, discretized systems and
 * trajectory algebra. Sized for control work (n of a few dozen at most);
 * all operations are plain loops, no blocking.
 *
 * Entries must be finite; constructors taking values throw
 * std::invalid_argument on NaN/Inf.
 */
class Matrix {
   public:
    Matrix() = default;
    Matrix(int rows, int cols);  // zero-filled
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(int n);
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
    static Matrix column(std::initializer_list<double> values);
    static Matrix row_vector(std::initializer_list<double> values);
    static Matrix diagonal(std::initializer_list<double> values);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return data_.empty(); }
    bool is_square() const { return rows_ == cols_; }

    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    Matrix transpose() const;
    double trace() const;

    // Max absolute row sum.
    double norm_inf() const;
    double max_abs() const;

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(double scalar);

    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(Matrix lhs, double scalar) { return lhs *= scalar; }
    friend Matrix operator*(double scalar, Matrix rhs) { return rhs *= scalar; }
    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
    friend Matrix operator-(const Matrix& m) { return m * -1.0; }

    bool same_shape(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

   private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;

    void check_finite() const;
};

// Solves a * x = b by Gaussian elimination with partial pivoting.
// Throws SingularMatrix when a pivot magnitude drops below
// 1e-12 * norm_inf(a), DimensionMismatch on incompatible shapes.
Matrix solve(const Matrix& a, const Matrix& b);

// Determinant via LU with partial pivoting (0 when a pivot vanishes).
double determinant(const Matrix& a);

// Numerical rank via completely pivoted elimination.
// Default tolerance: 1e-10 * max(rows, cols) * max_abs(a).
int rank(const Matrix& a);
int rank(const Matrix& a, double tol);

}  // namespace ovenctl
