#include "qdep/info.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "qdep/eig.hpp"

namespace qdep {

namespace {

double spectrum_entropy_nats(const std::vector<double>& ev) {
    double s = 0.0;
    for (double lam : ev) {
        if (lam < -1e-10) throw std::domain_error("eigenvalue " + std::to_string(lam) + " below -1e-10");
        if (lam > 0.0) s -= lam * std::log(lam);
    }
    return s;
}

double marginal_entropy_nats(const DensityOperator& rho, const std::vector<int>& keep) {
    if (keep.empty()) return 0.0;
    if (static_cast<int>(keep.size()) == rho.num_parties())
        return spectrum_entropy_nats(hermitian_eigenvalues(rho.mat));
    return spectrum_entropy_nats(hermitian_eigenvalues(marginal(rho, keep).mat));
}

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::set<int> s(a.begin(), a.end());
    s.insert(b.begin(), b.end());
    return std::vector<int>(s.begin(), s.end());
}

void require_disjoint(const std::vector<int>& a, const std::vector<int>& b, const char* what) {
    std::set<int> s(a.begin(), a.end());
    for (int x : b)
        if (s.count(x)) throw std::invalid_argument(std::string("overlapping groups in ") + what);
}

double marginal_shannon_nats(const ProbTensor& p, const std::vector<int>& keep) {
    if (keep.empty()) return 0.0;
    const ProbTensor m = prob_marginal(p, keep);
    double s = 0.0;
    for (double x : m.probs)
        if (x > 0.0) s -= x * std::log(x);
    return s;
}

}  // namespace

double entropy_nats(const DensityOperator& rho) {
    return spectrum_entropy_nats(hermitian_eigenvalues(rho.mat));
}

double von_neumann_entropy(const DensityOperator& rho) {
    return entropy_nats(rho) / std::log(static_cast<double>(rho.local_dim()));
}

double shannon_entropy(const ProbTensor& p) {
    double s = 0.0;
    for (double x : p.probs)
        if (x > 0.0) s -= x * std::log(x);
    return s / std::log(static_cast<double>(p.local_dim));
}

double grouped_cmi_nats(const DensityOperator& rho, const std::vector<int>& group_a,
                        const std::vector<int>& group_b, const std::vector<int>& cond) {
    if (group_a.empty() || group_b.empty()) throw std::invalid_argument("empty group in CMI");
    require_disjoint(group_a, group_b, "CMI");
    require_disjoint(group_a, cond, "CMI");
    require_disjoint(group_b, cond, "CMI");
    const std::vector<int> ac = sorted_union(group_a, cond);
    const std::vector<int> bc = sorted_union(group_b, cond);
    const std::vector<int> abc = sorted_union(ac, group_b);
    return marginal_entropy_nats(rho, ac) + marginal_entropy_nats(rho, bc) -
           marginal_entropy_nats(rho, cond) - marginal_entropy_nats(rho, abc);
}

double grouped_cmi(const DensityOperator& rho, const std::vector<int>& group_a,
                   const std::vector<int>& group_b, const std::vector<int>& cond) {
    return grouped_cmi_nats(rho, group_a, group_b, cond) / std::log(static_cast<double>(rho.local_dim()));
}

double mutual_information(const DensityOperator& rho, const std::vector<int>& group_a,
                          const std::vector<int>& group_b) {
    return grouped_cmi(rho, group_a, group_b, {});
}

double conditional_mutual_information(const DensityOperator& rho, int a, int b,
                                      const std::vector<int>& cond) {
    return grouped_cmi(rho, {a}, {b}, cond);
}

double classical_grouped_cmi(const ProbTensor& p, const std::vector<int>& group_a,
                             const std::vector<int>& group_b, const std::vector<int>& cond) {
    if (group_a.empty() || group_b.empty()) throw std::invalid_argument("empty group in CMI");
    require_disjoint(group_a, group_b, "classical CMI");
    require_disjoint(group_a, cond, "classical CMI");
    require_disjoint(group_b, cond, "classical CMI");
    const std::vector<int> ac = sorted_union(group_a, cond);
    const std::vector<int> bc = sorted_union(group_b, cond);
    const std::vector<int> abc = sorted_union(ac, group_b);
    const double nats = marginal_shannon_nats(p, ac) + marginal_shannon_nats(p, bc) -
                        marginal_shannon_nats(p, cond) - marginal_shannon_nats(p, abc);
    return nats / std::log(static_cast<double>(p.local_dim));
}

double classical_cmi(const ProbTensor& p, int a, int b, const std::vector<int>& cond) {
    return classical_grouped_cmi(p, {a}, {b}, cond);
}

}  // namespace qdep
