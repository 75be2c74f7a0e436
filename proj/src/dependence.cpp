#include "qdep/dependence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qdep/eig.hpp"

namespace qdep {

namespace {

double spectrum_entropy_nats(const std::vector<double>& ev) {
    double s = 0.0;
    for (double lam : ev) {
        if (lam < -1e-10) throw std::domain_error("eigenvalue below -1e-10 in entropy");
        if (lam > 0.0) s -= lam * std::log(lam);
    }
    return s;
}

// Shared pair scan: cmis[] indexed in lexicographic (i<j) order.
DependenceReport assemble_report(int num_parties, int local_dim, const std::vector<double>& cmis) {
    DependenceReport rep;
    rep.num_parties = num_parties;
    rep.local_dim = local_dim;
    int idx = 0;
    for (int i = 1; i <= num_parties; ++i)
        for (int j = i + 1; j <= num_parties; ++j) rep.pairs.push_back({i, j, cmis[idx++]});
    rep.value = rep.pairs.front().cmi;
    rep.min_pair = {rep.pairs.front().i, rep.pairs.front().j};
    for (const PairCmi& p : rep.pairs) {
        if (p.cmi < rep.value) {
            rep.value = p.cmi;
            rep.min_pair = {p.i, p.j};
        }
    }
    return rep;
}

DependenceReport dependence_impl(const DensityOperator& rho, double log_base) {
    const int n = rho.num_parties();
    if (n < 3) throw std::invalid_argument("dependence needs at least 3 parties");

    const double s_full = spectrum_entropy_nats(hermitian_eigenvalues(rho.mat));

    std::vector<double> s_drop1(n);
#pragma omp parallel for schedule(dynamic)
    for (int j = 1; j <= n; ++j)
        s_drop1[j - 1] = spectrum_entropy_nats(hermitian_eigenvalues(partial_trace(rho, {j}).mat));

    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);

    std::vector<double> cmis(pairs.size());
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < static_cast<int>(pairs.size()); ++k) {
        const auto [i, j] = pairs[k];
        const double s_drop2 =
            spectrum_entropy_nats(hermitian_eigenvalues(partial_trace(rho, {i, j}).mat));
        cmis[k] = (s_drop1[i - 1] + s_drop1[j - 1] - s_drop2 - s_full) / log_base;
    }
    return assemble_report(n, rho.dims[0], cmis);
}

double log_binomial(int n, int k) {
    if (k < 0 || k > n) return -1.0 / 0.0;  // -inf marks a vanishing term
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

DependenceReport dependence(const DensityOperator& rho) {
    return dependence_impl(rho, std::log(static_cast<double>(rho.local_dim())));
}

DependenceReport dependence_in_nats(const DensityOperator& rho) { return dependence_impl(rho, 1.0); }

DependenceReport dependence_classical(const ProbTensor& p) {
    const int n = p.num_vars;
    if (n < 3) throw std::invalid_argument("dependence needs at least 3 variables");
    check_prob(p);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    std::vector<double> cmis(pairs.size());
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < static_cast<int>(pairs.size()); ++k) {
        std::vector<int> cond;
        for (int q = 1; q <= n; ++q)
            if (q != pairs[k].first && q != pairs[k].second) cond.push_back(q);
        cmis[k] = classical_cmi(p, pairs[k].first, pairs[k].second, cond);
    }
    return assemble_report(n, p.local_dim, cmis);
}

DependenceReport dependence_pure(const StateVector& psi, int num_parties, int local_dim) {
    const int n = num_parties;
    if (n < 3) throw std::invalid_argument("dependence needs at least 3 parties");
    const DensityOperator rho = density_from_vector(psi, n, local_dim);  // validates normalization

    // S(rho_S) from the vector: rho_S = A A^dagger with A the cut matrix
    auto subset_entropy = [&](const std::vector<int>& keep) {
        return spectrum_entropy_nats(hermitian_eigenvalues(marginal(rho, keep).mat));
    };

    std::vector<double> s1(n);
    for (int i = 1; i <= n; ++i) s1[i - 1] = subset_entropy({i});

    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    std::vector<double> cmis(pairs.size());
    const double lb = std::log(static_cast<double>(local_dim));
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < static_cast<int>(pairs.size()); ++k) {
        const auto [i, j] = pairs[k];
        cmis[k] = (s1[i - 1] + s1[j - 1] - subset_entropy({i, j})) / lb;
    }
    return assemble_report(n, local_dim, cmis);
}

KDependenceReport k_dependence(const DensityOperator& rho, int k) {
    const int n = rho.num_parties();
    if (k < 3 || k > n) throw std::invalid_argument("k must be in 3..N");

    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    // lexicographic enumeration fixes the tie-breaking order
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            subsets.push_back(cur);
            return;
        }
        for (int p = start; p <= n; ++p) {
            cur.push_back(p);
            rec(p + 1);
            cur.pop_back();
        }
    };
    rec(1);

    std::vector<DependenceReport> reps(subsets.size());
#pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < static_cast<int>(subsets.size()); ++s)
        reps[s] = dependence(marginal(rho, subsets[s]));

    KDependenceReport out;
    out.k = k;
    out.value = reps[0].value;
    out.best_subset = subsets[0];
    out.best = reps[0];
    for (std::size_t s = 0; s < subsets.size(); ++s) {
        out.subset_values.emplace_back(subsets[s], reps[s].value);
        if (reps[s].value < out.value) {
            out.value = reps[s].value;
            out.best_subset = subsets[s];
            out.best = reps[s];
        }
    }
    return out;
}

KDependenceReport k_dependence_classical(const ProbTensor& p, int k) {
    const int n = p.num_vars;
    if (k < 3 || k > n) throw std::invalid_argument("k must be in 3..N");
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            subsets.push_back(cur);
            return;
        }
        for (int q = start; q <= n; ++q) {
            cur.push_back(q);
            rec(q + 1);
            cur.pop_back();
        }
    };
    rec(1);

    KDependenceReport out;
    out.k = k;
    bool first = true;
    for (const std::vector<int>& sub : subsets) {
        const DependenceReport rep = dependence_classical(prob_marginal(p, sub));
        out.subset_values.emplace_back(sub, rep.value);
        if (first || rep.value < out.value) {
            out.value = rep.value;
            out.best_subset = sub;
            out.best = rep;
            first = false;
        }
    }
    return out;
}

double dicke_dependence_analytic(int num_parties, int excitations) {
    const int n = num_parties, e = excitations;
    if (n < 3) throw std::invalid_argument("dicke dependence needs N >= 3");
    if (e < 1 || e > n - 1) throw std::invalid_argument("excitations must be in 1..N-1");

    const double ln2 = std::log(2.0);
    const double x = static_cast<double>(e) / n;
    double total = -2.0 * x * std::log(x) - 2.0 * (1.0 - x) * std::log(1.0 - x);

    const double lc = log_binomial(n, e);
    const struct {
        int k;
        double mult;
    } terms[] = {{2, 1.0}, {1, 2.0}, {0, 1.0}};
    for (const auto& t : terms) {
        const double lb = log_binomial(n - 2, e - t.k);
        if (!std::isfinite(lb)) continue;
        const double ratio = t.mult * std::exp(lb - lc);
        total += ratio * std::log(ratio);
    }
    return total / ln2;
}

std::string report_to_json(const DependenceReport& r) {
    nlohmann::json j;
    j["N"] = r.num_parties;
    j["d"] = r.local_dim;
    j["pairs"] = nlohmann::json::array();
    for (const PairCmi& p : r.pairs) j["pairs"].push_back({{"i", p.i}, {"j", p.j}, {"cmi", p.cmi}});
    j["min_pair"] = {r.min_pair.first, r.min_pair.second};
    j["D"] = r.value;
    return j.dump(2);
}

DependenceReport report_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    DependenceReport r;
    r.num_parties = j.at("N").get<int>();
    r.local_dim = j.at("d").get<int>();
    for (const auto& p : j.at("pairs"))
        r.pairs.push_back({p.at("i").get<int>(), p.at("j").get<int>(), p.at("cmi").get<double>()});
    r.min_pair = {j.at("min_pair")[0].get<int>(), j.at("min_pair")[1].get<int>()};
    r.value = j.at("D").get<double>();
    return r;
}

std::string report_to_csv(const DependenceReport& r) {
    std::ostringstream os;
    os.precision(12);
    os << "# N=" << r.num_parties << " d=" << r.local_dim << " D=" << r.value << " min_pair="
       << r.min_pair.first << "," << r.min_pair.second << "\n";
    os << "i,j,cmi\n";
    for (const PairCmi& p : r.pairs) os << p.i << "," << p.j << "," << p.cmi << "\n";
    return os.str();
}

std::string kreport_to_json(const KDependenceReport& r) {
    nlohmann::json j;
    j["k"] = r.k;
    j["D"] = r.value;
    j["best_subset"] = r.best_subset;
    j["subsets"] = nlohmann::json::array();
    for (const auto& [sub, val] : r.subset_values) j["subsets"].push_back({{"subset", sub}, {"D", val}});
    j["best_report"] = nlohmann::json::parse(report_to_json(r.best));
    return j.dump(2);
}

std::string kreport_to_csv(const KDependenceReport& r) {
    std::ostringstream os;
    os.precision(12);
    os << "# k=" << r.k << " D=" << r.value << "\n";
    os << "subset,D\n";
    for (const auto& [sub, val] : r.subset_values) {
        for (std::size_t i = 0; i < sub.size(); ++i) os << (i ? " " : "") << sub[i];
        os << "," << val << "\n";
    }
    return os.str();
}

}  // namespace qdep
