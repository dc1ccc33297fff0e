#include "core/storage.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "core/mm_io.hpp"

namespace fs = std::filesystem;

namespace lpbox {

namespace {

bool exists(const std::string& path) { return fs::exists(path); }

std::string join(const std::string& dir, const char* name) {
    return (fs::path(dir) / name).string();
}

std::size_t manifest_count(const std::map<std::string, std::string>& kv, const std::string& path,
                           const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw ParseError(path, 0, "missing key '" + key + "'");
    try {
        const long long v = std::stoll(it->second);
        if (v < 0) throw std::invalid_argument("negative");
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw ParseError(path, 0, "key '" + key + "' is not a nonnegative integer");
    }
}

double manifest_real(const std::map<std::string, std::string>& kv, const std::string& path,
                     const std::string& key, double fallback,
                     bool required = false) {
    auto it = kv.find(key);
    if (it == kv.end()) {
        if (required) throw ParseError(path, 0, "missing key '" + key + "'");
        return fallback;
    }
    try {
        return std::stod(it->second);
    } catch (const std::exception&) {
        throw ParseError(path, 0, "key '" + key + "' is not a number");
    }
}

BqpProblem load_bqp_core(const std::string& dir) {
    const std::string manifest_path = join(dir, "manifest.txt");
    auto kv = read_manifest(manifest_path);
    const std::size_t n = manifest_count(kv, manifest_path, "n");
    const std::size_t m1 = manifest_count(kv, manifest_path, "m1");
    const std::size_t m2 = manifest_count(kv, manifest_path, "m2");

    BqpProblem p;
    p.psd_shift = manifest_real(kv, manifest_path, "alpha", 0.0);
    p.A.block = read_matrix_market(join(dir, "A.mtx"));
    p.b = read_vector(join(dir, "b.txt"));
    if (p.b.size() != n) throw ParseError(join(dir, "b.txt"), 0, "length != manifest n");
    if (m1 > 0) {
        p.C1 = read_matrix_market(join(dir, "C1.mtx"));
        p.d1 = read_vector(join(dir, "d1.txt"));
        if (p.C1.n_rows() != m1) throw ParseError(join(dir, "C1.mtx"), 0, "rows != manifest m1");
    } else if (exists(join(dir, "C1.mtx"))) {
        p.C1 = read_matrix_market(join(dir, "C1.mtx"));
        p.d1 = read_vector(join(dir, "d1.txt"));
    }
    if (m2 > 0) {
        p.C2 = read_matrix_market(join(dir, "C2.mtx"));
        p.d2 = read_vector(join(dir, "d2.txt"));
        if (p.C2.n_rows() != m2) throw ParseError(join(dir, "C2.mtx"), 0, "rows != manifest m2");
    } else if (exists(join(dir, "C2.mtx"))) {
        p.C2 = read_matrix_market(join(dir, "C2.mtx"));
        p.d2 = read_vector(join(dir, "d2.txt"));
    }
    p.validate();
    return p;
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<Vec> read_features_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    std::vector<Vec> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        Vec row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw ParseError(path, lineno, "non-numeric cell '" + cell + "'");
            }
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError(path, lineno, "no feature rows");
    return rows;
}

void write_features_csv(const std::string& path, const std::vector<Vec>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    for (const Vec& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << format_real(row[i]);
        out << "\n";
    }
}

}  // namespace

ProblemBundle load_bqp_dir(const std::string& dir) { return make_bqp_bundle(load_bqp_core(dir)); }

ProblemBundle load_l1_dir(const std::string& dir) {
    const std::string manifest_path = join(dir, "manifest.txt");
    auto kv = read_manifest(manifest_path);
    L1Problem p;
    p.base = load_bqp_core(dir);
    p.c = read_matrix_market(join(dir, "C.mtx"));
    p.lambda = manifest_real(kv, manifest_path, "lambda", 0.0, /*required=*/true);
    p.rho0 = manifest_real(kv, manifest_path, "rho0", 1e-3);
    return make_l1_bundle(std::move(p));
}

ProblemBundle load_mrf_dir(const std::string& dir) {
    const std::string meta_path = join(dir, "meta.txt");
    auto kv = read_manifest(meta_path);
    MrfInstance inst;
    inst.n_nodes = manifest_count(kv, meta_path, "n_nodes");
    inst.n_states = manifest_count(kv, meta_path, "K");
    inst.w = read_matrix_market(join(dir, "W.mtx"));
    inst.unary = read_vector(join(dir, "unary.txt"));
    return make_mrf_bundle(std::move(inst));
}

ProblemBundle load_matching_dir(const std::string& dir) {
    const std::string meta_path = join(dir, "meta.txt");
    auto kv = read_manifest(meta_path);
    const std::size_t n1 = manifest_count(kv, meta_path, "n1");
    const std::size_t n2 = manifest_count(kv, meta_path, "n2");
    SparseMatrix m = read_matrix_market(join(dir, "M.mtx"));
    return make_matching_bundle(MatchingInstance::from_similarities(n1, n2, std::move(m)));
}

ProblemBundle load_clustering_dir(const std::string& dir) {
    const std::string meta_path = join(dir, "meta.txt");
    auto kv = read_manifest(meta_path);
    const std::size_t n = manifest_count(kv, meta_path, "N");
    const std::size_t k = manifest_count(kv, meta_path, "K");

    if (exists(join(dir, "features.csv"))) {
        std::vector<Vec> features = read_features_csv(join(dir, "features.csv"));
        if (features.size() != n)
            throw ParseError(join(dir, "features.csv"), 0, "row count != meta N");
        return make_clustering_bundle(ClusteringInstance::from_features(k, std::move(features)));
    }
    ClusteringInstance inst;
    inst.n_instances = n;
    inst.n_clusters = k;
    inst.w = read_matrix_market(join(dir, "W.mtx"));
    return make_clustering_bundle(std::move(inst));
}

void save_bundle_dir(const std::string& dir, const ProblemBundle& bundle) {
    fs::create_directories(dir);
    switch (bundle.kind) {
        case ProblemKind::bqp:
        case ProblemKind::l1: {
            const BqpProblem& p = bundle.problem.base;
            if (p.A.kron_blocks != 1)
                throw std::invalid_argument("save_bundle_dir: block-structured A not supported");
            std::map<std::string, std::string> kv{
                {"n", std::to_string(p.n())},
                {"m1", std::to_string(p.m1())},
                {"m2", std::to_string(p.m2())},
                {"alpha", format_real(p.psd_shift)},
            };
            if (bundle.kind == ProblemKind::l1) {
                kv["lambda"] = format_real(bundle.problem.lambda);
                kv["rho0"] = format_real(bundle.problem.rho0);
                write_matrix_market(join(dir, "C.mtx"), bundle.problem.c);
            }
            write_manifest(join(dir, "manifest.txt"), kv);
            write_matrix_market(join(dir, "A.mtx"), p.A.block);
            write_vector(join(dir, "b.txt"), p.b);
            if (p.has_eq()) {
                write_matrix_market(join(dir, "C1.mtx"), p.C1);
                write_vector(join(dir, "d1.txt"), p.d1);
            }
            if (p.has_ineq()) {
                write_matrix_market(join(dir, "C2.mtx"), p.C2);
                write_vector(join(dir, "d2.txt"), p.d2);
            }
            break;
        }
        case ProblemKind::mrf: {
            const MrfInstance& inst = *bundle.mrf;
            write_manifest(join(dir, "meta.txt"), {{"n_nodes", std::to_string(inst.n_nodes)},
                                                   {"K", std::to_string(inst.n_states)}});
            write_matrix_market(join(dir, "W.mtx"), inst.w);
            write_vector(join(dir, "unary.txt"), inst.unary);
            break;
        }
        case ProblemKind::matching: {
            const MatchingInstance& inst = *bundle.matching;
            write_manifest(join(dir, "meta.txt"), {{"n1", std::to_string(inst.n1)},
                                                   {"n2", std::to_string(inst.n2)}});
            write_matrix_market(join(dir, "M.mtx"), inst.m);
            break;
        }
        case ProblemKind::clustering: {
            const ClusteringInstance& inst = *bundle.clustering;
            write_manifest(join(dir, "meta.txt"), {{"N", std::to_string(inst.n_instances)},
                                                   {"K", std::to_string(inst.n_clusters)}});
            if (!inst.features.empty())
                write_features_csv(join(dir, "features.csv"), inst.features);
            else
                write_matrix_market(join(dir, "W.mtx"), inst.w);
            break;
        }
    }
}

}  // namespace lpbox
