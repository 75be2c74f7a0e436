#include "qdep/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qdep/channels.hpp"
#include "qdep/states.hpp"

namespace qdep {

namespace {

std::ifstream open_in(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open '" + path + "'");
    return f;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    f.precision(17);
    return f;
}

// "re,im" token -> complex
cplx parse_entry(const std::string& tok, const std::string& path) {
    const std::size_t comma = tok.find(',');
    if (comma == std::string::npos)
        throw std::runtime_error(path + ": entry '" + tok + "' is not re,im");
    try {
        return cplx(std::stod(tok.substr(0, comma)), std::stod(tok.substr(comma + 1)));
    } catch (const std::exception&) {
        throw std::runtime_error(path + ": bad numeric entry '" + tok + "'");
    }
}

void expect_header(std::istringstream& hs, const std::string& magic, const std::string& path) {
    std::string word, version;
    hs >> word >> version;
    if (word != magic || version != "v1")
        throw std::runtime_error(path + ": expected '" + magic + " v1' header");
}

int header_int(std::istringstream& hs, const std::string& key, const std::string& path) {
    std::string tok;
    hs >> tok;
    if (tok.rfind(key + "=", 0) != 0)
        throw std::runtime_error(path + ": expected " + key + "=<int> in header");
    return std::stoi(tok.substr(key.size() + 1));
}

}  // namespace

DensityOperator load_dmat(const std::string& path, bool validate) {
    std::ifstream f = open_in(path);
    std::string header;
    std::getline(f, header);
    std::istringstream hs(header);
    expect_header(hs, "DMAT", path);
    const int n = header_int(hs, "N", path);
    const int d = header_int(hs, "d", path);
    if (n < 1 || d < 2) throw std::runtime_error(path + ": invalid N or d");
    int dim = 1;
    for (int i = 0; i < n; ++i) dim *= d;

    ComplexMatrix m(dim, dim);
    for (int r = 0; r < dim; ++r) {
        std::string line;
        if (!std::getline(f, line)) throw std::runtime_error(path + ": truncated matrix");
        std::istringstream ls(line);
        std::string tok;
        for (int c = 0; c < dim; ++c) {
            if (!(ls >> tok)) throw std::runtime_error(path + ": row " + std::to_string(r) + " too short");
            m(r, c) = parse_entry(tok, path);
        }
    }
    DensityOperator rho = make_uniform_density(std::move(m), n, d);
    if (validate) check_density(rho);
    return rho;
}

void save_dmat(const std::string& path, const DensityOperator& rho) {
    std::ofstream f = open_out(path);
    f << "DMAT v1 N=" << rho.num_parties() << " d=" << rho.local_dim() << "\n";
    for (int r = 0; r < rho.dim(); ++r) {
        for (int c = 0; c < rho.dim(); ++c) {
            if (c) f << ' ';
            f << rho.mat(r, c).real() << ',' << rho.mat(r, c).imag();
        }
        f << '\n';
    }
}

ProbTensor load_pdist(const std::string& path) {
    std::ifstream f = open_in(path);
    std::string header;
    std::getline(f, header);
    std::istringstream hs(header);
    expect_header(hs, "PDIST", path);
    const int n = header_int(hs, "N", path);
    const int d = header_int(hs, "d", path);
    int dim = 1;
    for (int i = 0; i < n; ++i) dim *= d;
    std::vector<double> probs(dim, 0.0);

    std::string line;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos) throw std::runtime_error(path + ": line '" + line + "' is not digits,prob");
        const std::string digits = line.substr(0, comma);
        if (static_cast<int>(digits.size()) != n)
            throw std::runtime_error(path + ": outcome '" + digits + "' does not have N digits");
        int idx = 0;
        for (char c : digits) {
            const int v = c - '0';
            if (v < 0 || v >= d) throw std::runtime_error(path + ": digit out of range in '" + digits + "'");
            idx = idx * d + v;
        }
        probs[idx] += std::stod(line.substr(comma + 1));
    }
    return make_prob(std::move(probs), n, d);
}

void save_pdist(const std::string& path, const ProbTensor& p) {
    std::ofstream f = open_out(path);
    f << "PDIST v1 N=" << p.num_vars << " d=" << p.local_dim << "\n";
    for (int idx = 0; idx < p.dim(); ++idx) {
        if (p.probs[idx] == 0.0) continue;
        std::string digits(p.num_vars, '0');
        int rem = idx;
        for (int v = p.num_vars - 1; v >= 0; --v) {
            digits[v] = static_cast<char>('0' + rem % p.local_dim);
            rem /= p.local_dim;
        }
        f << digits << ',' << p.probs[idx] << '\n';
    }
}

KrausChannel load_kraus(const std::string& path) {
    std::ifstream f = open_in(path);
    std::string header;
    std::getline(f, header);
    std::istringstream hs(header);
    expect_header(hs, "KRAUS", path);
    const int d_in = header_int(hs, "d_in", path);
    const int d_out = header_int(hs, "d_out", path);
    const int k = header_int(hs, "k", path);
    if (d_in < 2 || d_out < 2 || k < 1) throw std::runtime_error(path + ": invalid header values");

    KrausChannel ch;
    ch.d_in = d_in;
    ch.d_out = d_out;
    for (int b = 0; b < k; ++b) {
        ComplexMatrix m(d_out, d_in);
        for (int r = 0; r < d_out; ++r) {
            std::string line;
            if (!std::getline(f, line)) throw std::runtime_error(path + ": truncated Kraus block");
            std::istringstream ls(line);
            std::string tok;
            for (int c = 0; c < d_in; ++c) {
                if (!(ls >> tok)) throw std::runtime_error(path + ": Kraus row too short");
                m(r, c) = parse_entry(tok, path);
            }
        }
        ch.kraus.push_back(std::move(m));
    }
    check_channel(ch);
    return ch;
}

void save_kraus(const std::string& path, const KrausChannel& ch) {
    std::ofstream f = open_out(path);
    f << "KRAUS v1 d_in=" << ch.d_in << " d_out=" << ch.d_out << " k=" << ch.kraus.size() << "\n";
    for (const ComplexMatrix& m : ch.kraus) {
        for (int r = 0; r < m.rows; ++r) {
            for (int c = 0; c < m.cols; ++c) {
                if (c) f << ' ';
                f << m(r, c).real() << ',' << m(r, c).imag();
            }
            f << '\n';
        }
    }
}

std::vector<PauliString> load_pauli_list(const std::string& path) {
    std::ifstream f = open_in(path);
    std::vector<PauliString> out;
    std::string line;
    while (std::getline(f, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        out.push_back(parse_pauli(line));
    }
    if (out.empty()) throw std::runtime_error(path + ": no generators found");
    return out;
}

GraphSpec load_edge_list(const std::string& path) {
    std::ifstream f = open_in(path);
    GraphSpec g;
    if (!(f >> g.vertices)) throw std::runtime_error(path + ": first token must be the vertex count");
    int u, v;
    while (f >> u >> v) g.edges.emplace_back(u, v);
    check_graph(g);
    return g;
}

}  // namespace qdep
