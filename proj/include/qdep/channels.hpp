#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qdep/density.hpp"

namespace qdep {

// CPTP map as a Kraus list: sum_k K^dagger K = I_{d_in} within 1e-10.
struct KrausChannel {
    int d_in = 0;
    int d_out = 0;
    std::vector<ComplexMatrix> kraus;  // each d_out x d_in
};

void check_channel(const KrausChannel& ch, double tol = 1e-10);

// rho -> sum_k (I (x) K (x) I) rho (...)^dagger on the given party (1-based);
// the channel must preserve the local dimension.
DensityOperator apply_channel(const DensityOperator& rho, const KrausChannel& ch, int party);

// K0 = ((0, 1/sqrt2), (0, 0)), K1 = ((1, 0), (0, 1/sqrt2))
KrausChannel amplitude_damping_half();

KrausChannel identity_channel(int d);
KrausChannel depolarizing_channel(int d);  // completely depolarizing: rho -> I/d

// (I (x) ch)(|Phi><Phi|) with |Phi> the maximally entangled state, trace 1.
// Two parties: reference (d_in), output (d_out).
DensityOperator choi(const KrausChannel& ch);

// Channel reconstructed from its Choi state: rho_out = d_in Tr_ref[(rho^T (x) I) C].
// Requires Tr_out C = I/d_in within 1e-8.
class ChoiChannel {
public:
    explicit ChoiChannel(DensityOperator choi_state);
    DensityOperator apply(const DensityOperator& rho_in) const;
    int d_in() const { return d_in_; }
    int d_out() const { return d_out_; }

private:
    DensityOperator choi_;
    int d_in_ = 0, d_out_ = 0;
};

// Stinespring construction: Kraus blocks of an orthonormalized seeded
// Gaussian (d*kraus_rank) x d matrix; deterministic per seed.
KrausChannel random_channel(int d, int kraus_rank, std::uint64_t seed);

// Both sides of the local-operations inequality for conditional mutual
// information, tracked for the pair (a, b):
//   cmi_after <= cmi_before + info_before - info_after
// with info terms the grouped mutual information I(ab : rest), where
// info_after applies channels only outside {a, b}.
struct MonotonicityRecord {
    double cmi_before = 0.0;
    double cmi_after = 0.0;
    double info_before = 0.0;
    double info_after = 0.0;
    double bound_slack = 0.0;  // (cmi_before + info_before - info_after) - cmi_after
};

MonotonicityRecord monotonicity_gap(const DensityOperator& rho,
                                    const std::map<int, KrausChannel>& channels, int a, int b);

}  // namespace qdep
