#include "qdep/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qdep {

namespace {
// Below this many output elements the OpenMP fork costs more than the loop.
constexpr std::size_t kParallelElems = 16384;
}  // namespace

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::zero(int r, int c) { return ComplexMatrix(r, c); }

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix shape mismatch in +");
    ComplexMatrix c(a.rows, a.cols);
    for (std::size_t i = 0; i < a.size(); ++i) c.data[i] = a.data[i] + b.data[i];
    return c;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix shape mismatch in -");
    ComplexMatrix c(a.rows, a.cols);
    for (std::size_t i = 0; i < a.size(); ++i) c.data[i] = a.data[i] - b.data[i];
    return c;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& a) {
    ComplexMatrix c(a.rows, a.cols);
    for (std::size_t i = 0; i < a.size(); ++i) c.data[i] = s * a.data[i];
    return c;
}

ComplexMatrix& operator+=(ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix shape mismatch in +=");
    for (std::size_t i = 0; i < a.size(); ++i) a.data[i] += b.data[i];
    return a;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch in matmul");
    ComplexMatrix c(a.rows, b.cols);
    const std::size_t work = a.size() * static_cast<std::size_t>(b.cols);
#pragma omp parallel for schedule(static) if (work >= kParallelElems)
    for (int i = 0; i < a.rows; ++i) {
        cplx* crow = &c.data[static_cast<std::size_t>(i) * c.cols];
        for (int k = 0; k < a.cols; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            const cplx* brow = &b.data[static_cast<std::size_t>(k) * b.cols];
            for (int j = 0; j < b.cols; ++j) crow[j] += aik * brow[j];
        }
    }
    return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows * b.rows, a.cols * b.cols);
#pragma omp parallel for schedule(static) collapse(2) if (c.size() >= kParallelElems)
    for (int i = 0; i < a.rows; ++i) {
        for (int k = 0; k < b.rows; ++k) {
            const int row = i * b.rows + k;
            cplx* crow = &c.data[static_cast<std::size_t>(row) * c.cols];
            for (int j = 0; j < a.cols; ++j) {
                const cplx aij = a(i, j);
                const cplx* brow = &b.data[static_cast<std::size_t>(k) * b.cols];
                for (int l = 0; l < b.cols; ++l) crow[j * b.cols + l] = aij * brow[l];
            }
        }
    }
    return c;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
    ComplexMatrix c(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) c(j, i) = std::conj(a(i, j));
    return c;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
    ComplexMatrix c(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) c(j, i) = a(i, j);
    return c;
}

cplx trace(const ComplexMatrix& a) {
    if (!a.square()) throw std::invalid_argument("trace of non-square matrix");
    cplx t = 0.0;
    for (int i = 0; i < a.rows; ++i) t += a(i, i);
    return t;
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const cplx& v : a.data) s += std::norm(v);
    return std::sqrt(s);
}

double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (const cplx& v : a.data) m = std::max(m, std::abs(v));
    return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix shape mismatch in max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.data[i] - b.data[i]));
    return m;
}

double hermiticity_error(const ComplexMatrix& a) {
    if (!a.square()) throw std::invalid_argument("hermiticity_error of non-square matrix");
    double m = 0.0;
    for (int i = 0; i < a.rows; ++i)
        for (int j = i; j < a.cols; ++j) m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
    return m;
}

}  // namespace qdep
