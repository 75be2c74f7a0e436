#pragma once

#include <string>
#include <vector>

#include "qdep/density.hpp"
#include "qdep/prob.hpp"

namespace qdep {

struct PauliString;
struct GraphSpec;
struct KrausChannel;

// DMAT v1: header "DMAT v1 N=<n> d=<d>", then d^N rows of d^N "re,im"
// entries separated by whitespace. Loading validates the state (Hermitian,
// unit trace, PSD) unless validate is false.
DensityOperator load_dmat(const std::string& path, bool validate = true);
void save_dmat(const std::string& path, const DensityOperator& rho);

// PDIST v1: header "PDIST v1 N=<n> d=<d>", then "<digits>,<prob>" lines;
// unlisted outcomes are zero.
ProbTensor load_pdist(const std::string& path);
void save_pdist(const std::string& path, const ProbTensor& p);

// KRAUS v1: header "KRAUS v1 d_in=<> d_out=<> k=<>", then k blocks of d_out
// lines with d_in "re,im" entries each.
KrausChannel load_kraus(const std::string& path);
void save_kraus(const std::string& path, const KrausChannel& ch);

// one generator per line, e.g. "+XZZXI"; blank lines and #-comments skipped
std::vector<PauliString> load_pauli_list(const std::string& path);

// first line: vertex count; then "u v" lines (1-based)
GraphSpec load_edge_list(const std::string& path);

}  // namespace qdep
