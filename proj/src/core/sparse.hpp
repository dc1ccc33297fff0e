#ifndef LPBOX_CORE_SPARSE_HPP
#define LPBOX_CORE_SPARSE_HPP

#include <cstddef>
#include <vector>

#include "core/vecops.hpp"

namespace lpbox {

struct Triplet {
    std::size_t row = 0;
    std::size_t col = 0;
    double value = 0.0;
};

/// Compressed-row sparse matrix. Immutable after construction; within each
/// row column indices are strictly increasing and duplicates have been summed.
class SparseMatrix {
  public:
    SparseMatrix() = default;

    /// All-zero matrix of the given shape.
    SparseMatrix(std::size_t n_rows, std::size_t n_cols);

    /// Builds from (row, col, value) entries; duplicates are summed.
    static SparseMatrix from_triplets(std::size_t n_rows, std::size_t n_cols,
                                      std::vector<Triplet> entries);

    static SparseMatrix identity(std::size_t n);
    static SparseMatrix diagonal(const Vec& d);

    std::size_t n_rows() const { return n_rows_; }
    std::size_t n_cols() const { return n_cols_; }
    std::size_t nnz() const { return values_.size(); }
    bool empty() const { return n_rows_ == 0 || values_.empty(); }

    const std::vector<std::size_t>& row_offsets() const { return row_offsets_; }
    const std::vector<std::size_t>& col_indices() const { return col_indices_; }
    const std::vector<double>& values() const { return values_; }

    /// Entry lookup by binary search within the row; zero if absent.
    double at(std::size_t row, std::size_t col) const;

    Vec diagonal_vector() const;
    Vec row_sums() const;              // M * 1
    Vec column_squared_norms() const;  // diag(M^T M)

    SparseMatrix transposed() const;
    bool is_symmetric(double tol) const;

  private:
    std::size_t n_rows_ = 0;
    std::size_t n_cols_ = 0;
    std::vector<std::size_t> row_offsets_{0};
    std::vector<std::size_t> col_indices_;
    std::vector<double> values_;
};

/// out = M * v
void spmv(const SparseMatrix& m, const Vec& v, Vec& out);
Vec spmv(const SparseMatrix& m, const Vec& v);

/// out = M^T * v
void spmv_transpose(const SparseMatrix& m, const Vec& v, Vec& out);
Vec spmv_transpose(const SparseMatrix& m, const Vec& v);

/// out += alpha * M^T * v
void spmv_transpose_add(const SparseMatrix& m, double alpha, const Vec& v, Vec& out);

/// Applies (I_k ⊗ L) block-wise without materializing the Kronecker product.
void kron_identity_apply(std::size_t k, const SparseMatrix& l, const Vec& v, Vec& out);
Vec kron_identity_apply(std::size_t k, const SparseMatrix& l, const Vec& v);

}  // namespace lpbox

#endif
