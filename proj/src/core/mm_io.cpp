#include "core/mm_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace lpbox {

namespace {

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

SparseMatrix read_matrix_market(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");

    std::string line;
    std::size_t lineno = 0;

    if (!std::getline(in, line)) throw ParseError(path, 1, "empty file");
    ++lineno;
    {
        std::istringstream hs(line);
        std::string banner, object, format, field, symmetry;
        hs >> banner >> object >> format >> field >> symmetry;
        if (banner != "%%MatrixMarket")
            throw ParseError(path, lineno, "missing %%MatrixMarket banner");
        if (lowercase(object) != "matrix" || lowercase(format) != "coordinate" ||
            lowercase(field) != "real" || lowercase(symmetry) != "general")
            throw ParseError(path, lineno,
                             "unsupported header (expected 'matrix coordinate real general')");
    }

    // skip comments / blank lines before the size line
    std::size_t n_rows = 0, n_cols = 0, n_entries = 0;
    for (;;) {
        if (!std::getline(in, line)) throw ParseError(path, lineno, "missing size line");
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '%') continue;
        std::istringstream ss(t);
        if (!(ss >> n_rows >> n_cols >> n_entries))
            throw ParseError(path, lineno, "malformed size line (expected rows cols nnz)");
        break;
    }

    std::vector<Triplet> entries;
    entries.reserve(n_entries);
    while (entries.size() < n_entries) {
        if (!std::getline(in, line))
            throw ParseError(path, lineno,
                             "unexpected end of file: expected " + std::to_string(n_entries) +
                                 " entries, got " + std::to_string(entries.size()));
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '%') continue;
        std::istringstream ss(t);
        long long r = 0, c = 0;
        double v = 0.0;
        if (!(ss >> r >> c >> v))
            throw ParseError(path, lineno, "malformed entry (expected 'row col value')");
        if (r < 1 || c < 1 || static_cast<std::size_t>(r) > n_rows ||
            static_cast<std::size_t>(c) > n_cols)
            throw ParseError(path, lineno, "index out of bounds (1-based)");
        entries.push_back(
            {static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1), v});
    }
    return SparseMatrix::from_triplets(n_rows, n_cols, std::move(entries));
}

void write_matrix_market(const std::string& path, const SparseMatrix& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "%%MatrixMarket matrix coordinate real general\n";
    out << m.n_rows() << " " << m.n_cols() << " " << m.nnz() << "\n";
    char buf[64];
    for (std::size_t r = 0; r < m.n_rows(); ++r) {
        for (std::size_t k = m.row_offsets()[r]; k < m.row_offsets()[r + 1]; ++k) {
            std::snprintf(buf, sizeof(buf), "%.17g", m.values()[k]);
            out << (r + 1) << " " << (m.col_indices()[k] + 1) << " " << buf << "\n";
        }
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

Vec read_vector(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    Vec v;
    double x;
    while (in >> x) v.push_back(x);
    if (!in.eof()) {
        // count lines consumed so far for the report
        in.clear();
        std::string rest;
        std::getline(in, rest);
        throw ParseError(path, 0, "non-numeric token near '" + trim(rest) + "'");
    }
    return v;
}

void write_vector(const std::string& path, const Vec& v) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    char buf[64];
    for (double x : v) {
        std::snprintf(buf, sizeof(buf), "%.17g", x);
        out << buf << "\n";
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::map<std::string, std::string> read_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    std::map<std::string, std::string> kv;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ParseError(path, lineno, "expected key=value, got '" + t + "'");
        kv[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
    }
    return kv;
}

void write_manifest(const std::string& path, const std::map<std::string, std::string>& kv) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    for (const auto& [k, v] : kv) out << k << "=" << v << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace lpbox
