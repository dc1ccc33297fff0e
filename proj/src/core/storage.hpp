#ifndef LPBOX_CORE_STORAGE_HPP
#define LPBOX_CORE_STORAGE_HPP

#include <string>

#include "core/bundle.hpp"

namespace lpbox {

/// Problem directories.
///
/// bqp:        manifest.txt (n, m1, m2, alpha) + A.mtx + b.txt
///             [+ C1.mtx/d1.txt] [+ C2.mtx/d2.txt]; absent C1/C2 files mean
///             no constraints of that kind.
/// l1:         the bqp layout plus C.mtx and a lambda (optionally rho0) key.
/// mrf:        meta.txt (n_nodes, K) + W.mtx + unary.txt
/// matching:   meta.txt (n1, n2) + M.mtx
/// clustering: meta.txt (N, K) + features.csv (rows = instances) or W.mtx
ProblemBundle load_bqp_dir(const std::string& dir);
ProblemBundle load_l1_dir(const std::string& dir);
ProblemBundle load_mrf_dir(const std::string& dir);
ProblemBundle load_matching_dir(const std::string& dir);
ProblemBundle load_clustering_dir(const std::string& dir);

/// Writes the directory layout for the bundle's kind (fixture/interchange).
void save_bundle_dir(const std::string& dir, const ProblemBundle& bundle);

}  // namespace lpbox

#endif
