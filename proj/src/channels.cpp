#include "qdep/channels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qdep/info.hpp"
#include "qdep/rng.hpp"

namespace qdep {

void check_channel(const KrausChannel& ch, double tol) {
    if (ch.kraus.empty()) throw std::invalid_argument("channel has no Kraus operators");
    ComplexMatrix acc(ch.d_in, ch.d_in);
    for (const ComplexMatrix& k : ch.kraus) {
        if (k.rows != ch.d_out || k.cols != ch.d_in)
            throw std::invalid_argument("Kraus operator shape mismatch");
        acc += matmul(dagger(k), k);
    }
    const double err = max_abs_diff(acc, ComplexMatrix::identity(ch.d_in));
    if (err > tol)
        throw std::invalid_argument("channel not trace preserving: |sum K^dag K - I| = " + std::to_string(err));
}

DensityOperator apply_channel(const DensityOperator& rho, const KrausChannel& ch, int party) {
    if (party < 1 || party > rho.num_parties()) throw std::invalid_argument("party index out of range");
    if (ch.d_in != rho.dims[party - 1] || ch.d_out != ch.d_in)
        throw std::invalid_argument("channel dimension does not match the party (uniform-d registers only)");

    int left = 1, right = 1;
    for (int p = 1; p < party; ++p) left *= rho.dims[p - 1];
    for (int p = party + 1; p <= rho.num_parties(); ++p) right *= rho.dims[p - 1];

    ComplexMatrix out(rho.dim(), rho.dim());
    for (const ComplexMatrix& k : ch.kraus) {
        const ComplexMatrix op = kron(kron(ComplexMatrix::identity(left), k), ComplexMatrix::identity(right));
        out += matmul(op, matmul(rho.mat, dagger(op)));
    }
    return make_density(std::move(out), rho.dims);
}

KrausChannel amplitude_damping_half() {
    const double r = 1.0 / std::sqrt(2.0);
    KrausChannel ch;
    ch.d_in = ch.d_out = 2;
    ComplexMatrix k0(2, 2), k1(2, 2);
    k0(0, 1) = r;
    k1(0, 0) = 1.0;
    k1(1, 1) = r;
    ch.kraus = {k0, k1};
    return ch;
}

KrausChannel identity_channel(int d) {
    KrausChannel ch;
    ch.d_in = ch.d_out = d;
    ch.kraus = {ComplexMatrix::identity(d)};
    return ch;
}

KrausChannel depolarizing_channel(int d) {
    // K_{ij} = |i><j| / sqrt(d): rho -> Tr(rho) I/d
    KrausChannel ch;
    ch.d_in = ch.d_out = d;
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            ComplexMatrix k(d, d);
            k(i, j) = amp;
            ch.kraus.push_back(std::move(k));
        }
    return ch;
}

DensityOperator choi(const KrausChannel& ch) {
    check_channel(ch);
    const int di = ch.d_in, dC = ch.d_out;
    ComplexMatrix c(di * dC, di * dC);
    // (I (x) ch)(|Phi><Phi|), |Phi> = sum_i |ii>/sqrt(d_in)
    for (const ComplexMatrix& k : ch.kraus) {
        for (int i = 0; i < di; ++i)
            for (int j = 0; j < di; ++j)
                for (int a = 0; a < dC; ++a)
                    for (int b = 0; b < dC; ++b)
                        c(i * dC + a, j * dC + b) += k(a, i) * std::conj(k(b, j)) / static_cast<double>(di);
    }
    return make_density(std::move(c), {di, dC});
}

ChoiChannel::ChoiChannel(DensityOperator choi_state) : choi_(std::move(choi_state)) {
    if (choi_.num_parties() != 2) throw std::invalid_argument("Choi state must have two parties (reference, output)");
    d_in_ = choi_.dims[0];
    d_out_ = choi_.dims[1];
    const DensityOperator ref = partial_trace(choi_, {2});
    ComplexMatrix target = ComplexMatrix::identity(d_in_);
    target = cplx(1.0 / d_in_, 0.0) * target;
    if (max_abs_diff(ref.mat, target) > 1e-8)
        throw std::invalid_argument("Choi state reference marginal is not I/d_in (trace preservation fails)");
}

DensityOperator ChoiChannel::apply(const DensityOperator& rho_in) const {
    if (rho_in.dim() != d_in_) throw std::invalid_argument("input dimension mismatch in ChoiChannel::apply");
    ComplexMatrix out(d_out_, d_out_);
    for (int a = 0; a < d_out_; ++a)
        for (int b = 0; b < d_out_; ++b) {
            cplx acc = 0.0;
            for (int i = 0; i < d_in_; ++i)
                for (int j = 0; j < d_in_; ++j)
                    acc += rho_in.mat(j, i) * choi_.mat(i * d_out_ + a, j * d_out_ + b);
            out(a, b) = static_cast<double>(d_in_) * acc;
        }
    return make_density(std::move(out), {d_out_});
}

KrausChannel random_channel(int d, int kraus_rank, std::uint64_t seed) {
    if (kraus_rank < 1 || kraus_rank > d * d) throw std::invalid_argument("kraus_rank must be in 1..d^2");
    Rng rng(seed);
    const int rows = d * kraus_rank;
    ComplexMatrix g(rows, d);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = cplx(rng.gaussian(), rng.gaussian());

    // modified Gram-Schmidt on the columns -> isometry V: C^d -> C^(d*rank)
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < j; ++k) {
            cplx dot = 0.0;
            for (int i = 0; i < rows; ++i) dot += std::conj(g(i, k)) * g(i, j);
            for (int i = 0; i < rows; ++i) g(i, j) -= dot * g(i, k);
        }
        double nrm = 0.0;
        for (int i = 0; i < rows; ++i) nrm += std::norm(g(i, j));
        nrm = std::sqrt(nrm);
        if (nrm < 1e-12) throw std::runtime_error("random_channel: degenerate Gaussian draw");
        for (int i = 0; i < rows; ++i) g(i, j) /= nrm;
    }

    KrausChannel ch;
    ch.d_in = ch.d_out = d;
    for (int b = 0; b < kraus_rank; ++b) {
        ComplexMatrix k(d, d);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) k(r, c) = g(b * d + r, c);
        ch.kraus.push_back(std::move(k));
    }
    return ch;
}

MonotonicityRecord monotonicity_gap(const DensityOperator& rho,
                                    const std::map<int, KrausChannel>& channels, int a, int b) {
    if (a == b) throw std::invalid_argument("monotonicity_gap needs two distinct parties");
    const int n = rho.num_parties();
    std::vector<int> rest;
    for (int p = 1; p <= n; ++p)
        if (p != a && p != b) rest.push_back(p);
    if (rest.empty()) throw std::invalid_argument("monotonicity_gap needs at least 3 parties");

    DensityOperator after_all = rho;
    DensityOperator after_rest = rho;
    for (const auto& [party, ch] : channels) {
        after_all = apply_channel(after_all, ch, party);
        if (party != a && party != b) after_rest = apply_channel(after_rest, ch, party);
    }

    MonotonicityRecord rec;
    rec.cmi_before = conditional_mutual_information(rho, a, b, rest);
    rec.cmi_after = conditional_mutual_information(after_all, a, b, rest);
    rec.info_before = grouped_cmi(rho, {a, b}, rest, {});
    rec.info_after = grouped_cmi(after_rest, {a, b}, rest, {});
    rec.bound_slack = (rec.cmi_before + rec.info_before - rec.info_after) - rec.cmi_after;
    return rec;
}

}  // namespace qdep
