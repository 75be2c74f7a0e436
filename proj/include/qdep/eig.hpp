#pragma once

#include <vector>

#include "qdep/complex_matrix.hpp"

namespace qdep {

// Eigendecomposition of a Hermitian matrix: m = V diag(eigenvalues) V^dagger,
// eigenvalues sorted descending, eigenvectors in the columns of `eigenvectors`.
struct EigDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

// Jacobi diagonalization with round-robin (tournament) pair ordering; each
// round's rotations act on disjoint index pairs, so they are applied in
// parallel with bit-identical results for any thread count. Converges when
// the off-diagonal Frobenius norm drops below 1e-12 * max(1, ||m||_F),
// capped at 100 sweeps. Throws std::invalid_argument if the input is not
// Hermitian within 1e-10.
EigDecomposition hermitian_eig(const ComplexMatrix& m);

// Eigenvalues only (skips eigenvector accumulation), same ordering contract.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

}  // namespace qdep
