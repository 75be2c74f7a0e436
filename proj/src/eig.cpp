#include "qdep/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qdep {

namespace {

constexpr int kMaxSweeps = 100;
constexpr int kParallelDim = 128;

struct Rotation {
    int p = -1, q = -1;
    double c = 1.0, s = 0.0;
    cplx phase{1.0, 0.0};  // e^{i arg(M(p,q))}
    bool active = false;
};

double offdiag_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

// Round-robin tournament: n slots (n even), n-1 rounds, each round pairs all
// slots into disjoint pairs; every pair appears exactly once per sweep.
void round_pairs(int n, int round, std::vector<Rotation>& out) {
    const int m = n - 1;
    out.clear();
    Rotation r0;
    r0.p = n - 1;
    r0.q = round % m;
    out.push_back(r0);
    for (int k = 1; k < n / 2; ++k) {
        Rotation r;
        r.p = (round + k) % m;
        r.q = (round - k + m) % m;
        out.push_back(r);
    }
    for (Rotation& r : out)
        if (r.p > r.q) std::swap(r.p, r.q);
}

EigDecomposition jacobi(const ComplexMatrix& input, bool want_vectors) {
    if (!input.square()) throw std::invalid_argument("hermitian_eig: matrix not square");
    if (hermiticity_error(input) > 1e-10) throw std::invalid_argument("hermitian_eig: matrix not Hermitian within 1e-10");

    const int n = input.rows;
    ComplexMatrix m = input;
    ComplexMatrix v = want_vectors ? ComplexMatrix::identity(n) : ComplexMatrix();

    EigDecomposition out;
    if (n == 1) {
        out.eigenvalues = {m(0, 0).real()};
        if (want_vectors) out.eigenvectors = v;
        return out;
    }

    const double tol = 1e-12 * std::max(1.0, frobenius_norm(m));
    const int padded = (n % 2 == 0) ? n : n + 1;  // phantom slot for odd n
    std::vector<Rotation> rots;

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (offdiag_norm(m) < tol) break;
        for (int round = 0; round < padded - 1; ++round) {
            round_pairs(padded, round, rots);
            const int npairs = static_cast<int>(rots.size());

            // rotation angles from the current snapshot; pairs touch disjoint entries
            for (Rotation& r : rots) {
                if (r.q >= n) {
                    r.active = false;
                    continue;
                }
                const cplx apq = m(r.p, r.q);
                const double rad = std::abs(apq);
                if (rad < 1e-300) {
                    r.active = false;
                    continue;
                }
                r.phase = apq / rad;
                const double a = m(r.p, r.p).real();
                const double b = m(r.q, r.q).real();
                const double tau = (b - a) / (2.0 * rad);
                const double t = (tau >= 0.0) ? -1.0 / (tau + std::sqrt(tau * tau + 1.0))
                                              : 1.0 / (-tau + std::sqrt(tau * tau + 1.0));
                r.c = 1.0 / std::sqrt(t * t + 1.0);
                r.s = t * r.c;
                r.active = true;
            }

            // column phase: M <- M J, V <- V J; each pair owns columns (p, q)
#pragma omp parallel for schedule(static) if (n >= kParallelDim)
            for (int k = 0; k < npairs; ++k) {
                const Rotation& r = rots[k];
                if (!r.active) continue;
                const cplx se = r.s * std::conj(r.phase);
                const cplx sp = r.s * r.phase;
                for (int row = 0; row < n; ++row) {
                    const cplx mp = m(row, r.p), mq = m(row, r.q);
                    m(row, r.p) = r.c * mp + se * mq;
                    m(row, r.q) = -sp * mp + r.c * mq;
                }
                if (want_vectors) {
                    for (int row = 0; row < n; ++row) {
                        const cplx vp = v(row, r.p), vq = v(row, r.q);
                        v(row, r.p) = r.c * vp + se * vq;
                        v(row, r.q) = -sp * vp + r.c * vq;
                    }
                }
            }

            // row phase: M <- J^dagger M; each pair owns rows (p, q)
#pragma omp parallel for schedule(static) if (n >= kParallelDim)
            for (int k = 0; k < npairs; ++k) {
                const Rotation& r = rots[k];
                if (!r.active) continue;
                const cplx sp = r.s * r.phase;
                const cplx se = r.s * std::conj(r.phase);
                for (int col = 0; col < n; ++col) {
                    const cplx mp = m(r.p, col), mq = m(r.q, col);
                    m(r.p, col) = r.c * mp + sp * mq;
                    m(r.q, col) = -se * mp + r.c * mq;
                }
                m(r.p, r.q) = 0.0;
                m(r.q, r.p) = 0.0;
                m(r.p, r.p) = cplx(m(r.p, r.p).real(), 0.0);
                m(r.q, r.q) = cplx(m(r.q, r.q).real(), 0.0);
            }
        }
        if (sweep == kMaxSweeps - 1 && offdiag_norm(m) >= tol)
            throw std::runtime_error("hermitian_eig: Jacobi did not converge in 100 sweeps");
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return m(a, a).real() > m(b, b).real(); });

    out.eigenvalues.resize(n);
    for (int i = 0; i < n; ++i) out.eigenvalues[i] = m(order[i], order[i]).real();
    if (want_vectors) {
        out.eigenvectors = ComplexMatrix(n, n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
    }
    return out;
}

}  // namespace

EigDecomposition hermitian_eig(const ComplexMatrix& m) { return jacobi(m, true); }

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) { return jacobi(m, false).eigenvalues; }

}  // namespace qdep
