#pragma once

#include <vector>

#include "qdep/density.hpp"

namespace qdep {

// Joint distribution of N d-valued variables, flattened with the same index
// convention as DensityOperator (variable 1 = most significant digit).
struct ProbTensor {
    int num_vars = 0;
    int local_dim = 0;
    std::vector<double> probs;

    int dim() const { return static_cast<int>(probs.size()); }
};

// entries >= -1e-12 (tiny negatives from measurement numerics are clamped by
// producers), sum within 1e-12 of 1
void check_prob(const ProbTensor& p);

ProbTensor make_prob(std::vector<double> probs, int num_vars, int local_dim);

// marginal over the listed variables (1-based), order preserved
ProbTensor prob_marginal(const ProbTensor& p, const std::vector<int>& keep);

// diag(p) as a density operator; CMIs of the two agree exactly
DensityOperator diagonal_density(const ProbTensor& p);

}  // namespace qdep
