#pragma once

#include <vector>

#include "qdep/density.hpp"
#include "qdep/prob.hpp"

namespace qdep {

// All information quantities are returned in dits: logarithms base d, the
// register's uniform local dimension. The *_nats variants take any register
// (used where a vanishing value is checked, which is base-independent).

// -sum lambda ln lambda over the spectrum; eigenvalues in [-1e-10, 0) are
// clipped to 0, anything below -1e-10 throws std::domain_error.
double entropy_nats(const DensityOperator& rho);

double von_neumann_entropy(const DensityOperator& rho);

double shannon_entropy(const ProbTensor& p);

// S(A) + S(B) - S(AB) on the marginal over A u B (disjoint, non-empty)
double mutual_information(const DensityOperator& rho, const std::vector<int>& group_a,
                          const std::vector<int>& group_b);

// I(a : b | cond) = S(a,c) + S(b,c) - S(c) - S(a,b,c)
double conditional_mutual_information(const DensityOperator& rho, int a, int b,
                                      const std::vector<int>& cond);

// group form, cond may be empty
double grouped_cmi(const DensityOperator& rho, const std::vector<int>& group_a,
                   const std::vector<int>& group_b, const std::vector<int>& cond);

double grouped_cmi_nats(const DensityOperator& rho, const std::vector<int>& group_a,
                        const std::vector<int>& group_b, const std::vector<int>& cond);

// Shannon counterparts
double classical_cmi(const ProbTensor& p, int a, int b, const std::vector<int>& cond);
double classical_grouped_cmi(const ProbTensor& p, const std::vector<int>& group_a,
                             const std::vector<int>& group_b, const std::vector<int>& cond);

}  // namespace qdep
