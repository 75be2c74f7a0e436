#include "qdep/states.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "qdep/io.hpp"

namespace qdep {

namespace {

ComplexMatrix make_sigma(int j) {
    ComplexMatrix m(2, 2);
    switch (j) {
        case 0: m(0, 0) = 1; m(1, 1) = 1; break;
        case 1: m(0, 1) = 1; m(1, 0) = 1; break;
        case 2: m(0, 1) = cplx(0, -1); m(1, 0) = cplx(0, 1); break;
        case 3: m(0, 0) = 1; m(1, 1) = -1; break;
        default: throw std::invalid_argument("sigma index must be 0..3");
    }
    return m;
}

// X = sum_j |j><j+1| (indices mod d), Z = diag(w^j) with w = exp(i 2 pi / d)
ComplexMatrix wh_shift(int d) {
    ComplexMatrix m(d, d);
    for (int j = 0; j < d; ++j) m(j, (j + 1) % d) = 1.0;
    return m;
}

ComplexMatrix wh_clock(int d) {
    ComplexMatrix m(d, d);
    for (int j = 0; j < d; ++j) {
        const double a = 2.0 * M_PI * j / d;
        m(j, j) = cplx(std::cos(a), std::sin(a));
    }
    return m;
}

ComplexMatrix kron_power(const ComplexMatrix& m, int n) {
    ComplexMatrix out = ComplexMatrix::identity(1);
    for (int i = 0; i < n; ++i) out = kron(out, m);
    return out;
}

int popcount_weight(int idx) {
    int w = 0;
    while (idx) {
        w += idx & 1;
        idx >>= 1;
    }
    return w;
}

// GF(2) rank of the symplectic (x|z) representation
int symplectic_rank(const std::vector<PauliString>& gens) {
    const int n = gens.empty() ? 0 : gens[0].num_qubits();
    std::vector<std::vector<int>> rows;
    for (const PauliString& g : gens) {
        std::vector<int> row(2 * n, 0);
        for (int i = 0; i < n; ++i) {
            const char c = g.letters[i];
            if (c == 'X' || c == 'Y') row[i] = 1;
            if (c == 'Z' || c == 'Y') row[n + i] = 1;
        }
        rows.push_back(std::move(row));
    }
    int rank = 0;
    for (int col = 0; col < 2 * n && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col]) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r)
            if (r != rank && rows[r][col])
                for (int c = 0; c < 2 * n; ++c) rows[r][c] ^= rows[rank][c];
        ++rank;
    }
    return rank;
}

}  // namespace

const ComplexMatrix& sigma(int j) {
    static const ComplexMatrix s[4] = {make_sigma(0), make_sigma(1), make_sigma(2), make_sigma(3)};
    if (j < 0 || j > 3) throw std::invalid_argument("sigma index must be 0..3");
    return s[j];
}

PauliString parse_pauli(const std::string& text) {
    PauliString p;
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        const bool neg = text[pos] == '-';
        ++pos;
        if (pos < text.size() && (text[pos] == 'i' || text[pos] == 'I')) {
            // "+i"/"-i" prefix only when followed by more letters, since I is
            // also a valid word letter; "+IXZ" keeps the I as identity.
            if (text[pos] == 'i') {
                p.phase = neg ? cplx(0, -1) : cplx(0, 1);
                ++pos;
            } else {
                p.phase = neg ? -1.0 : 1.0;
            }
        } else {
            p.phase = neg ? -1.0 : 1.0;
        }
    }
    for (; pos < text.size(); ++pos) {
        const char c = static_cast<char>(std::toupper(text[pos]));
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
            throw std::invalid_argument(std::string("invalid Pauli letter '") + text[pos] + "'");
        p.letters.push_back(c);
    }
    if (p.letters.empty()) throw std::invalid_argument("empty Pauli string");
    return p;
}

ComplexMatrix pauli_matrix(const PauliString& p) {
    ComplexMatrix out = ComplexMatrix::identity(1);
    for (char c : p.letters) {
        int j = 0;
        if (c == 'X') j = 1;
        else if (c == 'Y') j = 2;
        else if (c == 'Z') j = 3;
        out = kron(out, sigma(j));
    }
    return p.phase * out;
}

bool paulis_commute(const PauliString& a, const PauliString& b) {
    if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("Pauli length mismatch");
    int anti = 0;
    for (int i = 0; i < a.num_qubits(); ++i) {
        const char x = a.letters[i], y = b.letters[i];
        if (x != 'I' && y != 'I' && x != y) ++anti;
    }
    return anti % 2 == 0;
}

void check_graph(const GraphSpec& g) {
    if (g.vertices < 2) throw std::invalid_argument("graph needs at least 2 vertices");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : g.edges) {
        if (u < 1 || u > g.vertices || v < 1 || v > g.vertices)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop in graph");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) throw std::invalid_argument("duplicate edge in graph");
    }
}

GraphSpec path_graph(int n) {
    GraphSpec g{n, {}};
    for (int i = 1; i < n; ++i) g.edges.emplace_back(i, i + 1);
    return g;
}

GraphSpec cycle_graph(int n) {
    GraphSpec g = path_graph(n);
    g.edges.emplace_back(n, 1);
    return g;
}

StateVector ghz(int num_parties, int local_dim) {
    if (num_parties < 2 || local_dim < 2) throw std::invalid_argument("ghz needs N >= 2, d >= 2");
    std::size_t dim = 1;
    for (int i = 0; i < num_parties; ++i) dim *= local_dim;
    StateVector v(dim, cplx(0, 0));
    const double amp = 1.0 / std::sqrt(static_cast<double>(local_dim));
    for (int j = 0; j < local_dim; ++j) {
        std::size_t idx = 0;
        for (int p = 0; p < num_parties; ++p) idx = idx * local_dim + j;
        v[idx] = amp;
    }
    return v;
}

StateVector dicke(int num_parties, int excitations) {
    if (num_parties < 2) throw std::invalid_argument("dicke needs N >= 2");
    if (excitations <= 0 || excitations >= num_parties)
        throw std::invalid_argument("excitations must be in 1..N-1");
    const int dim = 1 << num_parties;
    StateVector v(dim, cplx(0, 0));
    int count = 0;
    for (int idx = 0; idx < dim; ++idx)
        if (popcount_weight(idx) == excitations) ++count;
    const double amp = 1.0 / std::sqrt(static_cast<double>(count));
    for (int idx = 0; idx < dim; ++idx)
        if (popcount_weight(idx) == excitations) v[idx] = amp;
    return v;
}

StateVector graph_state(const GraphSpec& g) {
    check_graph(g);
    const int n = g.vertices;
    const int dim = 1 << n;
    StateVector v(dim);
    const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
    for (int idx = 0; idx < dim; ++idx) {
        int par = 0;
        for (auto [u, w] : g.edges) {
            const int bu = (idx >> (n - u)) & 1;  // party 1 = most significant bit
            const int bw = (idx >> (n - w)) & 1;
            par ^= bu & bw;
        }
        v[idx] = par ? -amp : amp;
    }
    return v;
}

DensityOperator stabilizer_state(const std::vector<PauliString>& generators) {
    if (generators.empty()) throw std::invalid_argument("stabilizer_state needs the register size; pass identity generators for m=0");
    const int n = generators[0].num_qubits();
    int m = 0;
    std::vector<PauliString> nontrivial;
    for (const PauliString& g : generators) {
        if (g.num_qubits() != n) throw std::invalid_argument("generator length mismatch");
        if (std::abs(g.phase.imag()) > 0 || std::abs(std::abs(g.phase.real()) - 1.0) > 1e-15)
            throw std::invalid_argument("generator phases must be +1 or -1");
        if (g.letters.find_first_not_of('I') == std::string::npos) continue;  // identity: no constraint
        nontrivial.push_back(g);
        ++m;
    }
    if (m > n) throw std::invalid_argument("more generators than qubits");
    for (std::size_t a = 0; a < nontrivial.size(); ++a)
        for (std::size_t b = a + 1; b < nontrivial.size(); ++b)
            if (!paulis_commute(nontrivial[a], nontrivial[b]))
                throw std::invalid_argument("generators do not commute");
    if (symplectic_rank(nontrivial) != m) throw std::invalid_argument("generators are not independent");

    const int dim = 1 << n;
    ComplexMatrix rho = ComplexMatrix::identity(dim);
    for (const PauliString& g : nontrivial) {
        const ComplexMatrix gm = pauli_matrix(g);
        rho = cplx(0.5, 0) * (rho + matmul(rho, gm));
    }
    const double tr = trace(rho).real();
    rho = cplx(1.0 / tr, 0.0) * rho;
    return make_uniform_density(std::move(rho), n, 2);
}

DensityOperator kuniform_mixed(int num_parties, int local_dim) {
    const int n = num_parties, d = local_dim;
    if (d < 2) throw std::invalid_argument("kuniform_mixed needs d >= 2");
    if (n < 3) throw std::invalid_argument("kuniform_mixed needs N >= 3");
    if (n % d != 0) throw std::invalid_argument("kuniform_mixed needs N to be a multiple of d");

    const ComplexMatrix g1 = kron_power(wh_shift(d), n);
    const ComplexMatrix g2 = kron_power(wh_clock(d), n);
    const int dim = g1.rows;
    ComplexMatrix acc(dim, dim);
    if (n % 2 == 0) {
        // sum over the full two-generator group
        ComplexMatrix g1p = ComplexMatrix::identity(dim);
        for (int i = 0; i < d; ++i) {
            ComplexMatrix g2p = ComplexMatrix::identity(dim);
            for (int j = 0; j < d; ++j) {
                acc += matmul(g1p, g2p);
                g2p = matmul(g2p, g2);
            }
            g1p = matmul(g1p, g1);
        }
    } else {
        // cyclic group of G1*G2: flat rank d^(N-1) spectrum, D_N = 1
        const ComplexMatrix g12 = matmul(g1, g2);
        ComplexMatrix p = ComplexMatrix::identity(dim);
        for (int i = 0; i < d; ++i) {
            acc += p;
            p = matmul(p, g12);
        }
    }
    double scale = 1.0;
    for (int i = 0; i < n; ++i) scale /= d;
    acc = cplx(scale, 0.0) * acc;
    // the group sum is Hermitian analytically; trim roundoff asymmetry
    ComplexMatrix herm = cplx(0.5, 0.0) * (acc + dagger(acc));
    return make_uniform_density(std::move(herm), n, d);
}

DensityOperator smolin(int num_parties) {
    const int n = num_parties;
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("smolin needs even N >= 4");
    const int dim = 1 << n;
    const double sign = (n / 2) % 2 == 0 ? 1.0 : -1.0;
    ComplexMatrix acc = ComplexMatrix::identity(dim);
    for (int j = 1; j <= 3; ++j) acc += cplx(sign, 0.0) * kron_power(sigma(j), n);
    acc = cplx(1.0 / dim, 0.0) * acc;
    return make_uniform_density(std::move(acc), n, 2);
}

DensityOperator nc_state(int num_parties) {
    if (num_parties < 3) throw std::invalid_argument("nc_state needs N >= 3");
    const StateVector a = dicke(num_parties, 1);
    const StateVector b = dicke(num_parties, num_parties - 1);
    const int dim = static_cast<int>(a.size());
    ComplexMatrix m(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            m(i, j) = 0.5 * (a[i] * std::conj(a[j]) + b[i] * std::conj(b[j]));
    return make_uniform_density(std::move(m), num_parties, 2);
}

GraphSpec ame62_graph() {
    GraphSpec g{6, {{1, 3}, {3, 5}, {1, 5}, {2, 4}, {4, 6}, {2, 6}, {1, 4}, {2, 5}, {3, 6}}};
    return g;
}

DensityOperator ame_state(int n, int d) {
    if (d != 2 || (n != 5 && n != 6)) throw std::invalid_argument("only AME(5,2) and AME(6,2) presets exist");
    if (n == 5) {
        const std::vector<PauliString> gens = {
            parse_pauli("+XZZXI"), parse_pauli("+IXZZX"), parse_pauli("+XIXZZ"),
            parse_pauli("+ZXIXZ"), parse_pauli("+ZZZZZ")};
        return stabilizer_state(gens);
    }
    return density_from_vector(graph_state(ame62_graph()), 6, 2);
}

ProbTensor classical_presets(const std::string& name) {
    if (name == "P_same") {
        std::vector<double> p(8, 0.0);
        p[0] = 0.5;
        p[7] = 0.5;
        return make_prob(std::move(p), 3, 2);
    }
    if (name == "P_even") {
        std::vector<double> p(8, 0.0);
        p[0b000] = 0.25;
        p[0b110] = 0.25;
        p[0b101] = 0.25;
        p[0b011] = 0.25;
        return make_prob(std::move(p), 3, 2);
    }
    if (name == "AD_example") {
        std::vector<double> p(8, 0.0);
        p[0b000] = 0.5;
        p[0b101] = 0.125;
        p[0b110] = 0.125;
        p[0b111] = 0.25;
        return make_prob(std::move(p), 3, 2);
    }
    throw std::invalid_argument("unknown classical preset '" + name + "'");
}

namespace {

struct SpecArgs {
    std::vector<std::string> positional;
    std::map<std::string, std::string> kv;
};

SpecArgs split_spec_args(const std::string& body) {
    SpecArgs out;
    std::size_t start = 0;
    while (start <= body.size()) {
        std::size_t end = body.find(',', start);
        if (end == std::string::npos) end = body.size();
        const std::string tok = body.substr(start, end - start);
        if (!tok.empty()) {
            const std::size_t eq = tok.find('=');
            if (eq == std::string::npos)
                out.positional.push_back(tok);
            else
                out.kv[tok.substr(0, eq)] = tok.substr(eq + 1);
        }
        start = end + 1;
    }
    return out;
}

int need_int(const SpecArgs& a, const std::string& key, const std::string& spec) {
    auto it = a.kv.find(key);
    if (it == a.kv.end()) throw std::invalid_argument("state spec '" + spec + "' is missing " + key + "=");
    return std::stoi(it->second);
}

int opt_int(const SpecArgs& a, const std::string& key, int fallback) {
    auto it = a.kv.find(key);
    return it == a.kv.end() ? fallback : std::stoi(it->second);
}

}  // namespace

StateSpec parse_state_spec(const std::string& spec, bool validate_files) {
    const std::size_t colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("state spec '" + spec + "' has no ':' separator");
    const std::string kind = spec.substr(0, colon);
    const std::string body = spec.substr(colon + 1);
    const SpecArgs args = split_spec_args(body);

    if (kind == "ghz") {
        const int n = need_int(args, "N", spec), d = opt_int(args, "d", 2);
        return PureState{ghz(n, d), n, d};
    }
    if (kind == "dicke") {
        const int n = need_int(args, "N", spec), e = need_int(args, "e", spec);
        return PureState{dicke(n, e), n, 2};
    }
    if (kind == "w") {
        const int n = need_int(args, "N", spec);
        return PureState{dicke(n, 1), n, 2};
    }
    if (kind == "cluster") {
        if (args.positional.empty())
            throw std::invalid_argument("cluster spec needs 'linear' or 'ring'");
        const int n = need_int(args, "N", spec);
        const std::string& shape = args.positional[0];
        GraphSpec g;
        if (shape == "linear")
            g = path_graph(n);
        else if (shape == "ring")
            g = cycle_graph(n);
        else
            throw std::invalid_argument("unknown cluster shape '" + shape + "'");
        return PureState{graph_state(g), n, 2};
    }
    if (kind == "graph") {
        if (args.positional.empty() || args.positional[0].empty() || args.positional[0][0] != '@')
            throw std::invalid_argument("graph spec needs @file.edges");
        const GraphSpec g = load_edge_list(args.positional[0].substr(1));
        return PureState{graph_state(g), g.vertices, 2};
    }
    if (kind == "smolin") return smolin(need_int(args, "N", spec));
    if (kind == "kuniform") return kuniform_mixed(need_int(args, "N", spec), need_int(args, "d", spec));
    if (kind == "nc") return nc_state(need_int(args, "N", spec));
    if (kind == "stab") {
        if (args.positional.empty() || args.positional[0].empty() || args.positional[0][0] != '@')
            throw std::invalid_argument("stab spec needs @file.paulis");
        return stabilizer_state(load_pauli_list(args.positional[0].substr(1)));
    }
    if (kind == "ame") {
        if (args.positional.size() != 2) throw std::invalid_argument("ame spec is ame:<n>,<d>");
        return ame_state(std::stoi(args.positional[0]), std::stoi(args.positional[1]));
    }
    if (kind == "pdist") {
        if (args.positional.empty()) throw std::invalid_argument("pdist spec needs a preset name or @file");
        const std::string& which = args.positional[0];
        if (!which.empty() && which[0] == '@') return load_pdist(which.substr(1));
        return classical_presets(which);
    }
    if (kind == "dmat") {
        if (args.positional.empty() || args.positional[0].empty() || args.positional[0][0] != '@')
            throw std::invalid_argument("dmat spec needs @file.dmat");
        return load_dmat(args.positional[0].substr(1), validate_files);
    }
    throw std::invalid_argument("unknown state kind '" + kind + "'");
}

DensityOperator to_density(const StateSpec& s) {
    if (std::holds_alternative<DensityOperator>(s)) return std::get<DensityOperator>(s);
    if (std::holds_alternative<PureState>(s)) {
        const PureState& p = std::get<PureState>(s);
        return density_from_vector(p.vec, p.num_parties, p.local_dim);
    }
    return diagonal_density(std::get<ProbTensor>(s));
}

}  // namespace qdep
