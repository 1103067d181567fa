#pragma once

#include <string>
#include <vector>

#include "egoloc/rng.hpp"

namespace egoloc {

// Dense row-major matrix of doubles. Everything in the model is small enough
// that a handful of cache-friendly scalar loops is all the linear algebra
// needed; keeping it explicit also keeps the backward passes auditable.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);  // zero-filled
    Matrix(int rows, int cols, std::vector<double> data);

    static Matrix full(int rows, int cols, double value);
    static Matrix identity(int n);
    // Entries uniform in (-bound, +bound).
    static Matrix uniform(int rows, int cols, double bound, Rng& rng);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int size() const { return rows_ * cols_; }
    bool same_shape(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }
    std::string shape_str() const;

    double& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    double operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    const std::vector<double>& values() const { return data_; }

    void fill(double v);
    bool all_finite() const;

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

// result = a * b; throws DimensionError naming both shapes on mismatch.
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);

// Fused accumulating products used by the backward passes. All require dst
// to already have the result shape.
void matmul_acc(Matrix& dst, const Matrix& a, const Matrix& b);    // dst += a*b
void matmul_abt_acc(Matrix& dst, const Matrix& a, const Matrix& b);  // dst += a*b^T
void matmul_atb_acc(Matrix& dst, const Matrix& a, const Matrix& b);  // dst += a^T*b

Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix hadamard(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, double s);
void add_in_place(Matrix& dst, const Matrix& src);

inline Matrix operator+(const Matrix& a, const Matrix& b) { return add(a, b); }
inline Matrix operator-(const Matrix& a, const Matrix& b) { return sub(a, b); }
inline Matrix operator*(const Matrix& a, double s) { return scale(a, s); }
inline Matrix operator*(double s, const Matrix& a) { return scale(a, s); }

Matrix sigmoid(const Matrix& x);
Matrix tanh_elem(const Matrix& x);

// dst(r, c) += bias(r, 0) for every column c.
void add_col_broadcast(Matrix& dst, const Matrix& bias);
// Row-wise sum into a (rows x 1) column vector.
Matrix row_sum(const Matrix& a);

// Inverted dropout. Each element of the returned mask is 0 with probability
// drop_p, else 1/(1-drop_p); apply by hadamard so inference needs no rescale.
// drop_p must be in [0, 1).
Matrix dropout_mask(int rows, int cols, double drop_p, Rng& rng);
Matrix dropout_mask_apply(const Matrix& x, const Matrix& mask);

}  // namespace egoloc
