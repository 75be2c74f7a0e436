#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qdep/density.hpp"
#include "qdep/info.hpp"
#include "qdep/prob.hpp"

namespace qdep {

struct PairCmi {
    int i = 0, j = 0;  // 1-based parties, i < j
    double cmi = 0.0;  // I(i : j | rest), dits
};

// Full per-pair landscape: all N(N-1)/2 conditional mutual informations, the
// lexicographically smallest minimizing pair, and the dependence value.
struct DependenceReport {
    int num_parties = 0;
    int local_dim = 0;
    std::vector<PairCmi> pairs;
    std::pair<int, int> min_pair{0, 0};
    double value = 0.0;
};

// k-within-N: minimum dependence over all size-k subsets.
struct KDependenceReport {
    int k = 0;
    double value = 0.0;
    std::vector<int> best_subset;  // 1-based, lexicographically first minimizer
    DependenceReport best;
    std::vector<std::pair<std::vector<int>, double>> subset_values;
};

// min over pairs (j,k) of S(Tr_j rho) + S(Tr_k rho) - S(Tr_jk rho) - S(rho);
// requires N >= 3 and a uniform register.
DependenceReport dependence(const DensityOperator& rho);

// same in nats for registers with unequal local dimensions (zero tests)
DependenceReport dependence_in_nats(const DensityOperator& rho);

DependenceReport dependence_classical(const ProbTensor& p);

// pure-state shortcut: min over pairs of S(rho_i) + S(rho_j) - S(rho_ij)
DependenceReport dependence_pure(const StateVector& psi, int num_parties, int local_dim);

KDependenceReport k_dependence(const DensityOperator& rho, int k);
KDependenceReport k_dependence_classical(const ProbTensor& p, int k);

// Closed-form dependence of the N-qubit Dicke state with e excitations.
// Binomials are handled in log space, so N up to ~1e4 is fine.
double dicke_dependence_analytic(int num_parties, int excitations);

std::string report_to_json(const DependenceReport& r);
std::string report_to_csv(const DependenceReport& r);
DependenceReport report_from_json(const std::string& text);

std::string kreport_to_json(const KDependenceReport& r);
std::string kreport_to_csv(const KDependenceReport& r);

}  // namespace qdep
