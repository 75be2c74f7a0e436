#include "qdep/prob.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace qdep {

void check_prob(const ProbTensor& p) {
    if (p.num_vars < 1 || p.local_dim < 2) throw std::invalid_argument("invalid distribution shape");
    int dim = 1;
    for (int i = 0; i < p.num_vars; ++i) dim *= p.local_dim;
    if (static_cast<int>(p.probs.size()) != dim)
        throw std::invalid_argument("probability array length does not match d^N");
    double sum = 0.0;
    for (double x : p.probs) {
        if (x < -1e-12) throw std::invalid_argument("negative probability " + std::to_string(x));
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("probabilities sum to " + std::to_string(sum));
}

ProbTensor make_prob(std::vector<double> probs, int num_vars, int local_dim) {
    ProbTensor p{num_vars, local_dim, std::move(probs)};
    check_prob(p);
    return p;
}

ProbTensor prob_marginal(const ProbTensor& p, const std::vector<int>& keep) {
    std::set<int> ks;
    for (int v : keep) {
        if (v < 1 || v > p.num_vars) throw std::invalid_argument("variable index out of range");
        if (!ks.insert(v).second) throw std::invalid_argument("duplicate variable index");
    }
    const int nk = static_cast<int>(keep.size());
    int out_dim = 1;
    for (int i = 0; i < nk; ++i) out_dim *= p.local_dim;
    ProbTensor out{nk, p.local_dim, std::vector<double>(out_dim, 0.0)};

    std::vector<int> sorted_keep(ks.begin(), ks.end());
    for (int idx = 0; idx < static_cast<int>(p.probs.size()); ++idx) {
        // digits of idx, variable 1 most significant
        int out_idx = 0;
        for (int v : sorted_keep) {
            int shift = p.num_vars - v;
            int digit = idx;
            for (int s = 0; s < shift; ++s) digit /= p.local_dim;
            digit %= p.local_dim;
            out_idx = out_idx * p.local_dim + digit;
        }
        out.probs[out_idx] += p.probs[idx];
    }
    return out;
}

DensityOperator diagonal_density(const ProbTensor& p) {
    const int n = p.dim();
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = p.probs[i];
    return make_uniform_density(std::move(m), p.num_vars, p.local_dim);
}

}  // namespace qdep
