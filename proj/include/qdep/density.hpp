#pragma once

#include <cstdint>
#include <vector>

#include "qdep/complex_matrix.hpp"

namespace qdep {

using StateVector = std::vector<cplx>;

// Mixed state over an ordered register of parties. Party 1 is the most
// significant base-d digit of the row/column index, matching |x1 x2 ... xN>.
// Party indices in all public APIs are 1-based.
//
// dims is per-party: constructors in this library produce uniform registers
// (all dims equal); merge_parties is the one op that can yield a mixed
// register, which only split_subsystem and the *_nats information routines
// accept downstream.
struct DensityOperator {
    std::vector<int> dims;
    ComplexMatrix mat;

    int num_parties() const { return static_cast<int>(dims.size()); }
    int dim() const { return mat.rows; }
    bool uniform() const;
    // local dimension of a uniform register; throws on mixed registers
    int local_dim() const;
};

struct DensityCheckOptions {
    double herm_tol = 1e-10;
    double trace_tol = 1e-10;
    double psd_tol = 1e-10;
    bool check_psd = true;
};

// Throws std::invalid_argument describing the first violated invariant.
void check_density(const DensityOperator& rho, const DensityCheckOptions& opts = {});

DensityOperator make_density(ComplexMatrix mat, std::vector<int> dims);
DensityOperator make_uniform_density(ComplexMatrix mat, int num_parties, int local_dim);

// |psi><psi| for a normalized vector (norm error above 1e-8 throws).
DensityOperator density_from_vector(const StateVector& psi, int num_parties, int local_dim);

// Trace out the listed parties (1-based). Empty set returns a copy; tracing
// everything out is an error.
DensityOperator partial_trace(const DensityOperator& rho, const std::vector<int>& discard);

// Keep only the listed parties (complement of partial_trace).
DensityOperator marginal(const DensityOperator& rho, const std::vector<int>& keep);

// Reinterpret party `party` of dimension d1*d2 as two parties (d1 most
// significant). Pure index bookkeeping, matrix entries unchanged. The result
// must be a uniform register.
DensityOperator split_subsystem(const DensityOperator& rho, int party, int d1, int d2);

// Inverse of split_subsystem: merge adjacent parties (party, party+1).
DensityOperator merge_parties(const DensityOperator& rho, int party);

// rho_a (x) rho_b as one register with the parties of b appended.
DensityOperator tensor(const DensityOperator& a, const DensityOperator& b);

// rho = G G^dagger / Tr(G G^dagger) with G a d^N x rank matrix of seeded
// complex Gaussians; deterministic per seed.
DensityOperator random_density(int num_parties, int local_dim, int rank, std::uint64_t seed);

StateVector random_pure_state(int num_parties, int local_dim, std::uint64_t seed);

}  // namespace qdep
