#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qdep/density.hpp"
#include "qdep/prob.hpp"

namespace qdep {

// sigma(0..3) = I, X, Y, Z
const ComplexMatrix& sigma(int j);

// Signed tensor word over {I, X, Y, Z}. Hermitian as an operator only when
// the phase is real.
struct PauliString {
    cplx phase{1.0, 0.0};  // one of +1, -1, +i, -i
    std::string letters;   // length-N word over "IXYZ"

    int num_qubits() const { return static_cast<int>(letters.size()); }
};

PauliString parse_pauli(const std::string& text);  // e.g. "+XZZXI", "-ZZZZZ"
ComplexMatrix pauli_matrix(const PauliString& p);
bool paulis_commute(const PauliString& a, const PauliString& b);

struct GraphSpec {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;  // 1-based, undirected, no self-loops
};

void check_graph(const GraphSpec& g);
GraphSpec path_graph(int n);
GraphSpec cycle_graph(int n);

// (|0...0> + ... + |d-1...d-1>)/sqrt(d)
StateVector ghz(int num_parties, int local_dim);

// equal superposition of all weight-e qubit basis states
StateVector dicke(int num_parties, int excitations);

// |+>^N followed by CZ on each edge; real amplitudes +-2^{-N/2}
StateVector graph_state(const GraphSpec& g);

// rho = 2^-N sum over the generated group; generators must be independent,
// mutually commuting Pauli strings with +-1 phases. rank = 2^(N-m).
DensityOperator stabilizer_state(const std::vector<PauliString>& generators);

// Weyl-Heisenberg construction, N a multiple of d. All (N-1)-party marginals
// are maximally mixed; D_N = 2 for N even (flat rank d^(N-2) spectrum) and
// 1 for N odd (flat rank d^(N-1)).
DensityOperator kuniform_mixed(int num_parties, int local_dim);

// 2^-N (I + (-1)^{N/2} sum_j sigma_j^xN), N even >= 4
DensityOperator smolin(int num_parties);

// equal mixture of the two Dicke states with 1 and N-1 excitations
DensityOperator nc_state(int num_parties);

// AME(5,2): five-qubit-code stabilizers + logical Z. AME(6,2): graph state on
// the triangular prism (two triangles 1-3-5, 2-4-6 plus the matching 1-4,
// 2-5, 3-6), which is 3-uniform.
DensityOperator ame_state(int n, int d);
GraphSpec ame62_graph();

// name in {P_same, P_even, AD_example}
ProbTensor classical_presets(const std::string& name);

struct PureState {
    StateVector vec;
    int num_parties = 0;
    int local_dim = 0;
};

using StateSpec = std::variant<PureState, DensityOperator, ProbTensor>;

// Mini-language used by the CLI, e.g. "ghz:N=4,d=2", "dicke:N=6,e=3",
// "w:N=3", "cluster:linear,N=4", "cluster:ring,N=5", "graph:@file.edges",
// "smolin:N=4", "kuniform:N=3,d=3", "nc:N=5", "stab:@file.paulis", "ame:5,2",
// "pdist:P_even", "pdist:@file.pdist", "dmat:@file.dmat".
StateSpec parse_state_spec(const std::string& spec, bool validate_files = true);

DensityOperator to_density(const StateSpec& s);

}  // namespace qdep
