#ifndef LPBOX_CORE_MM_IO_HPP
#define LPBOX_CORE_MM_IO_HPP

#include <map>
#include <stdexcept>
#include <string>

#include "core/sparse.hpp"

namespace lpbox {

/// Parse failure carrying the offending file and line.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& path, std::size_t line, const std::string& what)
        : std::runtime_error(path + ":" + std::to_string(line) + ": " + what),
          path_(path),
          line_(line) {}

    const std::string& path() const { return path_; }
    std::size_t line() const { return line_; }

  private:
    std::string path_;
    std::size_t line_;
};

/// Reads "%%MatrixMarket matrix coordinate real general" with 1-based indices.
/// Duplicate entries are summed.
SparseMatrix read_matrix_market(const std::string& path);
void write_matrix_market(const std::string& path, const SparseMatrix& m);

/// Whitespace-separated dense vector.
Vec read_vector(const std::string& path);
void write_vector(const std::string& path, const Vec& v);

/// Plain-text key=value manifest; '#' starts a comment line.
std::map<std::string, std::string> read_manifest(const std::string& path);
void write_manifest(const std::string& path, const std::map<std::string, std::string>& kv);

}  // namespace lpbox

#endif
