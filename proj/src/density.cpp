#include "qdep/density.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "qdep/eig.hpp"
#include "qdep/rng.hpp"

namespace qdep {

namespace {

constexpr std::size_t kParallelElems = 16384;

int total_dim(const std::vector<int>& dims) {
    int d = 1;
    for (int x : dims) d *= x;
    return d;
}

// flat-index stride of each party (party 1 most significant)
std::vector<int> strides(const std::vector<int>& dims) {
    std::vector<int> s(dims.size());
    int acc = 1;
    for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
        s[i] = acc;
        acc *= dims[i];
    }
    return s;
}

void check_party_list(const DensityOperator& rho, const std::vector<int>& parties) {
    std::set<int> seen;
    for (int p : parties) {
        if (p < 1 || p > rho.num_parties())
            throw std::invalid_argument("party index " + std::to_string(p) + " out of range 1.." +
                                        std::to_string(rho.num_parties()));
        if (!seen.insert(p).second) throw std::invalid_argument("duplicate party index " + std::to_string(p));
    }
}

// all flat offsets spanned by the given (stride, dim) list, in digit order
std::vector<int> enumerate_offsets(const std::vector<int>& strd, const std::vector<int>& dms) {
    std::vector<int> out{0};
    for (std::size_t i = 0; i < dms.size(); ++i) {
        std::vector<int> next;
        next.reserve(out.size() * dms[i]);
        for (int base : out)
            for (int x = 0; x < dms[i]; ++x) next.push_back(base + x * strd[i]);
        out = std::move(next);
    }
    return out;
}

}  // namespace

bool DensityOperator::uniform() const {
    for (int d : dims)
        if (d != dims[0]) return false;
    return !dims.empty();
}

int DensityOperator::local_dim() const {
    if (!uniform()) throw std::invalid_argument("register has mixed local dimensions");
    return dims[0];
}

void check_density(const DensityOperator& rho, const DensityCheckOptions& opts) {
    if (rho.dims.empty()) throw std::invalid_argument("density operator with no parties");
    for (int d : rho.dims)
        if (d < 2) throw std::invalid_argument("local dimension must be >= 2");
    if (!rho.mat.square() || rho.mat.rows != total_dim(rho.dims))
        throw std::invalid_argument("matrix size does not match register dimensions");
    const double herm = hermiticity_error(rho.mat);
    if (herm > opts.herm_tol)
        throw std::invalid_argument("not Hermitian: max |M - M^dagger| = " + std::to_string(herm));
    const double tr_err = std::abs(trace(rho.mat) - cplx(1.0, 0.0));
    if (tr_err > opts.trace_tol) throw std::invalid_argument("trace differs from 1 by " + std::to_string(tr_err));
    if (opts.check_psd) {
        const std::vector<double> ev = hermitian_eigenvalues(rho.mat);
        if (ev.back() < -opts.psd_tol)
            throw std::invalid_argument("not PSD: smallest eigenvalue " + std::to_string(ev.back()));
    }
}

DensityOperator make_density(ComplexMatrix mat, std::vector<int> dims) {
    DensityOperator rho{std::move(dims), std::move(mat)};
    if (rho.mat.rows != total_dim(rho.dims) || !rho.mat.square())
        throw std::invalid_argument("matrix size does not match register dimensions");
    return rho;
}

DensityOperator make_uniform_density(ComplexMatrix mat, int num_parties, int local_dim) {
    return make_density(std::move(mat), std::vector<int>(num_parties, local_dim));
}

DensityOperator density_from_vector(const StateVector& psi, int num_parties, int local_dim) {
    std::vector<int> dims(num_parties, local_dim);
    if (static_cast<int>(psi.size()) != total_dim(dims))
        throw std::invalid_argument("state vector length does not match register dimensions");
    double nrm = 0.0;
    for (const cplx& a : psi) nrm += std::norm(a);
    if (std::abs(std::sqrt(nrm) - 1.0) > 1e-8)
        throw std::invalid_argument("state vector not normalized: |psi| = " + std::to_string(std::sqrt(nrm)));
    const int n = static_cast<int>(psi.size());
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = psi[i] * std::conj(psi[j]);
    return make_density(std::move(m), std::move(dims));
}

DensityOperator partial_trace(const DensityOperator& rho, const std::vector<int>& discard) {
    check_party_list(rho, discard);
    if (discard.empty()) return rho;
    if (static_cast<int>(discard.size()) == rho.num_parties())
        throw std::invalid_argument("cannot trace out every party");

    const std::vector<int> strd = strides(rho.dims);
    std::vector<bool> is_disc(rho.num_parties() + 1, false);
    for (int p : discard) is_disc[p] = true;

    std::vector<int> keep_str, keep_dims, disc_str, disc_dims;
    std::vector<int> out_dims;
    for (int p = 1; p <= rho.num_parties(); ++p) {
        if (is_disc[p]) {
            disc_str.push_back(strd[p - 1]);
            disc_dims.push_back(rho.dims[p - 1]);
        } else {
            keep_str.push_back(strd[p - 1]);
            keep_dims.push_back(rho.dims[p - 1]);
            out_dims.push_back(rho.dims[p - 1]);
        }
    }

    const std::vector<int> keep_off = enumerate_offsets(keep_str, keep_dims);
    const std::vector<int> disc_off = enumerate_offsets(disc_str, disc_dims);
    const int nk = static_cast<int>(keep_off.size());

    ComplexMatrix out(nk, nk);
    const std::size_t work = out.size() * disc_off.size();
#pragma omp parallel for schedule(static) if (work >= kParallelElems)
    for (int r = 0; r < nk; ++r) {
        for (int c = 0; c < nk; ++c) {
            cplx acc = 0.0;
            for (int t : disc_off) acc += rho.mat(keep_off[r] + t, keep_off[c] + t);
            out(r, c) = acc;
        }
    }
    return make_density(std::move(out), std::move(out_dims));
}

DensityOperator marginal(const DensityOperator& rho, const std::vector<int>& keep) {
    check_party_list(rho, keep);
    std::set<int> ks(keep.begin(), keep.end());
    std::vector<int> discard;
    for (int p = 1; p <= rho.num_parties(); ++p)
        if (!ks.count(p)) discard.push_back(p);
    return partial_trace(rho, discard);
}

DensityOperator split_subsystem(const DensityOperator& rho, int party, int d1, int d2) {
    if (party < 1 || party > rho.num_parties()) throw std::invalid_argument("party index out of range");
    if (d1 < 2 || d2 < 2) throw std::invalid_argument("split factors must be >= 2");
    if (rho.dims[party - 1] != d1 * d2)
        throw std::invalid_argument("party dimension " + std::to_string(rho.dims[party - 1]) +
                                    " is not d1*d2 = " + std::to_string(d1 * d2));
    std::vector<int> dims;
    for (int p = 1; p <= rho.num_parties(); ++p) {
        if (p == party) {
            dims.push_back(d1);
            dims.push_back(d2);
        } else {
            dims.push_back(rho.dims[p - 1]);
        }
    }
    DensityOperator out{std::move(dims), rho.mat};
    if (!out.uniform()) throw std::invalid_argument("split would leave a register with mixed local dimensions");
    return out;
}

DensityOperator merge_parties(const DensityOperator& rho, int party) {
    if (party < 1 || party + 1 > rho.num_parties())
        throw std::invalid_argument("merge_parties needs adjacent parties (party, party+1)");
    std::vector<int> dims;
    for (int p = 1; p <= rho.num_parties(); ++p) {
        if (p == party)
            dims.push_back(rho.dims[p - 1] * rho.dims[p]);
        else if (p != party + 1)
            dims.push_back(rho.dims[p - 1]);
    }
    return DensityOperator{std::move(dims), rho.mat};
}

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b) {
    std::vector<int> dims = a.dims;
    dims.insert(dims.end(), b.dims.begin(), b.dims.end());
    return make_density(kron(a.mat, b.mat), std::move(dims));
}

DensityOperator random_density(int num_parties, int local_dim, int rank, std::uint64_t seed) {
    const int dim = total_dim(std::vector<int>(num_parties, local_dim));
    if (rank < 1 || rank > dim) throw std::invalid_argument("rank must be in 1..d^N");
    Rng rng(seed);
    ComplexMatrix g(dim, rank);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < rank; ++j) g(i, j) = cplx(rng.gaussian(), rng.gaussian());
    ComplexMatrix m = matmul(g, dagger(g));
    const double tr = trace(m).real();
    m = cplx(1.0 / tr, 0.0) * m;
    return make_uniform_density(std::move(m), num_parties, local_dim);
}

StateVector random_pure_state(int num_parties, int local_dim, std::uint64_t seed) {
    const int dim = total_dim(std::vector<int>(num_parties, local_dim));
    Rng rng(seed);
    StateVector v(dim);
    double nrm = 0.0;
    for (cplx& a : v) {
        a = cplx(rng.gaussian(), rng.gaussian());
        nrm += std::norm(a);
    }
    nrm = std::sqrt(nrm);
    for (cplx& a : v) a /= nrm;
    return v;
}

}  // namespace qdep
