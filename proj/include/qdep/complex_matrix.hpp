#pragma once

#include <complex>
#include <vector>

namespace qdep {

using cplx = std::complex<double>;

// Dense row-major complex matrix. Dimensions stay small (<= 1024) by design,
// so everything is kept contiguous and simple.
struct ComplexMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<cplx> data;

    ComplexMatrix() = default;
    ComplexMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}

    cplx& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    const cplx& operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }

    bool square() const { return rows == cols; }
    std::size_t size() const { return data.size(); }

    static ComplexMatrix identity(int n);
    static ComplexMatrix zero(int r, int c);
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, const ComplexMatrix& a);
ComplexMatrix& operator+=(ComplexMatrix& a, const ComplexMatrix& b);

// a * b, OpenMP-parallel above a size threshold.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product: (a (x) b)[i*rb+k, j*cb+l] = a(i,j) b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix dagger(const ComplexMatrix& a);
ComplexMatrix transpose(const ComplexMatrix& a);

cplx trace(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
double max_abs(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
// max_ij |a(i,j) - conj(a(j,i))|
double hermiticity_error(const ComplexMatrix& a);

}  // namespace qdep
