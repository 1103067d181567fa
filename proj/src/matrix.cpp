#include "egoloc/matrix.hpp"

#include <cmath>

#include "egoloc/errors.hpp"

namespace egoloc {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (!a.same_shape(b)) {
        throw DimensionError(std::string(op) + ": shape mismatch " + a.shape_str() +
                             " vs " + b.shape_str());
    }
}

}  // namespace

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0.0) {
    if (rows < 0 || cols < 0) {
        throw DimensionError("Matrix: negative dimensions (" + std::to_string(rows) +
                             "x" + std::to_string(cols) + ")");
    }
}

Matrix::Matrix(int rows, int cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != static_cast<size_t>(rows) * cols) {
        throw DimensionError("Matrix: data length " + std::to_string(data_.size()) +
                             " does not match " + shape_str());
    }
}

Matrix Matrix::full(int rows, int cols, double value) {
    Matrix m(rows, cols);
    m.fill(value);
    return m;
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::uniform(int rows, int cols, double bound, Rng& rng) {
    Matrix m(rows, cols);
    for (double& v : m.data_) v = rng.uniform(-bound, bound);
    return m;
}

std::string Matrix::shape_str() const {
    return "(" + std::to_string(rows_) + "x" + std::to_string(cols_) + ")";
}

void Matrix::fill(double v) {
    for (double& x : data_) x = v;
}

bool Matrix::all_finite() const {
    for (double x : data_) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matmul: incompatible shapes " + a.shape_str() + " x " +
                             b.shape_str());
    }
    Matrix out(a.rows(), b.cols());
    matmul_acc(out, a, b);
    return out;
}

void matmul_acc(Matrix& dst, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows() || dst.rows() != a.rows() || dst.cols() != b.cols()) {
        throw DimensionError("matmul_acc: incompatible shapes " + dst.shape_str() +
                             " += " + a.shape_str() + " x " + b.shape_str());
    }
    const int m = a.rows(), k = a.cols(), n = b.cols();
    const double* pa = a.data();
    const double* pb = b.data();
    double* pd = dst.data();
    for (int i = 0; i < m; ++i) {
        double* drow = pd + static_cast<size_t>(i) * n;
        const double* arow = pa + static_cast<size_t>(i) * k;
        for (int kk = 0; kk < k; ++kk) {
            const double av = arow[kk];
            if (av == 0.0) continue;
            const double* brow = pb + static_cast<size_t>(kk) * n;
            for (int j = 0; j < n; ++j) drow[j] += av * brow[j];
        }
    }
}

void matmul_abt_acc(Matrix& dst, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols() || dst.rows() != a.rows() || dst.cols() != b.rows()) {
        throw DimensionError("matmul_abt_acc: incompatible shapes " + dst.shape_str() +
                             " += " + a.shape_str() + " x " + b.shape_str() + "^T");
    }
    const int m = a.rows(), k = a.cols(), n = b.rows();
    const double* pa = a.data();
    const double* pb = b.data();
    double* pd = dst.data();
    // dst(i,j) += dot(a.row(i), b.row(j))
    for (int i = 0; i < m; ++i) {
        const double* arow = pa + static_cast<size_t>(i) * k;
        double* drow = pd + static_cast<size_t>(i) * n;
        for (int j = 0; j < n; ++j) {
            const double* brow = pb + static_cast<size_t>(j) * k;
            double acc = 0.0;
            for (int kk = 0; kk < k; ++kk) acc += arow[kk] * brow[kk];
            drow[j] += acc;
        }
    }
}

void matmul_atb_acc(Matrix& dst, const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || dst.rows() != a.cols() || dst.cols() != b.cols()) {
        throw DimensionError("matmul_atb_acc: incompatible shapes " + dst.shape_str() +
                             " += " + a.shape_str() + "^T x " + b.shape_str());
    }
    const int m = a.cols(), k = a.rows(), n = b.cols();
    const double* pa = a.data();
    const double* pb = b.data();
    double* pd = dst.data();
    // dst(i,j) += sum_kk a(kk,i) * b(kk,j)
    for (int kk = 0; kk < k; ++kk) {
        const double* arow = pa + static_cast<size_t>(kk) * m;
        const double* brow = pb + static_cast<size_t>(kk) * n;
        for (int i = 0; i < m; ++i) {
            const double av = arow[i];
            if (av == 0.0) continue;
            double* drow = pd + static_cast<size_t>(i) * n;
            for (int j = 0; j < n; ++j) drow[j] += av * brow[j];
        }
    }
}

Matrix transpose(const Matrix& a) {
    Matrix out(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    return out;
}

Matrix add(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "add");
    Matrix out = a;
    double* pd = out.data();
    const double* pb = b.data();
    for (int i = 0; i < out.size(); ++i) pd[i] += pb[i];
    return out;
}

Matrix sub(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "sub");
    Matrix out = a;
    double* pd = out.data();
    const double* pb = b.data();
    for (int i = 0; i < out.size(); ++i) pd[i] -= pb[i];
    return out;
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "hadamard");
    Matrix out = a;
    double* pd = out.data();
    const double* pb = b.data();
    for (int i = 0; i < out.size(); ++i) pd[i] *= pb[i];
    return out;
}

Matrix scale(const Matrix& a, double s) {
    Matrix out = a;
    for (double* p = out.data(); p != out.data() + out.size(); ++p) *p *= s;
    return out;
}

void add_in_place(Matrix& dst, const Matrix& src) {
    require_same_shape(dst, src, "add_in_place");
    double* pd = dst.data();
    const double* ps = src.data();
    for (int i = 0; i < dst.size(); ++i) pd[i] += ps[i];
}

Matrix sigmoid(const Matrix& x) {
    Matrix out = x;
    for (double* p = out.data(); p != out.data() + out.size(); ++p)
        *p = 1.0 / (1.0 + std::exp(-*p));
    return out;
}

Matrix tanh_elem(const Matrix& x) {
    Matrix out = x;
    for (double* p = out.data(); p != out.data() + out.size(); ++p) *p = std::tanh(*p);
    return out;
}

void add_col_broadcast(Matrix& dst, const Matrix& bias) {
    if (bias.rows() != dst.rows() || bias.cols() != 1) {
        throw DimensionError("add_col_broadcast: bias " + bias.shape_str() +
                             " does not broadcast over " + dst.shape_str());
    }
    for (int i = 0; i < dst.rows(); ++i) {
        const double bv = bias(i, 0);
        for (int j = 0; j < dst.cols(); ++j) dst(i, j) += bv;
    }
}

Matrix row_sum(const Matrix& a) {
    Matrix out(a.rows(), 1);
    for (int i = 0; i < a.rows(); ++i) {
        double acc = 0.0;
        for (int j = 0; j < a.cols(); ++j) acc += a(i, j);
        out(i, 0) = acc;
    }
    return out;
}

Matrix dropout_mask(int rows, int cols, double drop_p, Rng& rng) {
    if (drop_p < 0.0 || drop_p >= 1.0) {
        throw ContractError("dropout_mask: drop probability " + std::to_string(drop_p) +
                            " outside [0, 1)");
    }
    Matrix mask(rows, cols);
    if (drop_p == 0.0) {
        mask.fill(1.0);
        return mask;
    }
    const double keep_scale = 1.0 / (1.0 - drop_p);
    for (int i = 0; i < mask.size(); ++i)
        mask.data()[i] = rng.bernoulli(drop_p) ? 0.0 : keep_scale;
    return mask;
}

Matrix dropout_mask_apply(const Matrix& x, const Matrix& mask) {
    return hadamard(x, mask);
}

}  // namespace egoloc
