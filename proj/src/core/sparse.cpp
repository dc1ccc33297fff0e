#include "core/sparse.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lpbox {

SparseMatrix::SparseMatrix(std::size_t n_rows, std::size_t n_cols)
    : n_rows_(n_rows), n_cols_(n_cols), row_offsets_(n_rows + 1, 0) {}

SparseMatrix SparseMatrix::from_triplets(std::size_t n_rows, std::size_t n_cols,
                                         std::vector<Triplet> entries) {
    for (const Triplet& t : entries) {
        if (t.row >= n_rows || t.col >= n_cols)
            throw std::invalid_argument("SparseMatrix::from_triplets: entry (" +
                                        std::to_string(t.row) + "," + std::to_string(t.col) +
                                        ") outside " + std::to_string(n_rows) + "x" +
                                        std::to_string(n_cols));
    }
    std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    SparseMatrix m(n_rows, n_cols);
    m.col_indices_.reserve(entries.size());
    m.values_.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size();) {
        std::size_t j = i;
        double sum = 0.0;
        while (j < entries.size() && entries[j].row == entries[i].row &&
               entries[j].col == entries[i].col) {
            sum += entries[j].value;
            ++j;
        }
        m.col_indices_.push_back(entries[i].col);
        m.values_.push_back(sum);
        m.row_offsets_[entries[i].row + 1] = m.values_.size();
        i = j;
    }
    // fill gaps for empty rows
    for (std::size_t r = 1; r <= n_rows; ++r)
        m.row_offsets_[r] = std::max(m.row_offsets_[r], m.row_offsets_[r - 1]);
    return m;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
    std::vector<Triplet> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = {i, i, 1.0};
    return from_triplets(n, n, std::move(t));
}

SparseMatrix SparseMatrix::diagonal(const Vec& d) {
    std::vector<Triplet> t;
    t.reserve(d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0.0) t.push_back({i, i, d[i]});
    return from_triplets(d.size(), d.size(), std::move(t));
}

double SparseMatrix::at(std::size_t row, std::size_t col) const {
    if (row >= n_rows_ || col >= n_cols_)
        throw std::out_of_range("SparseMatrix::at: index out of range");
    auto begin = col_indices_.begin() + static_cast<std::ptrdiff_t>(row_offsets_[row]);
    auto end = col_indices_.begin() + static_cast<std::ptrdiff_t>(row_offsets_[row + 1]);
    auto it = std::lower_bound(begin, end, col);
    if (it == end || *it != col) return 0.0;
    return values_[static_cast<std::size_t>(it - col_indices_.begin())];
}

Vec SparseMatrix::diagonal_vector() const {
    Vec d(std::min(n_rows_, n_cols_), 0.0);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = at(i, i);
    return d;
}

Vec SparseMatrix::row_sums() const {
    Vec s(n_rows_, 0.0);
    for (std::size_t r = 0; r < n_rows_; ++r)
        for (std::size_t k = row_offsets_[r]; k < row_offsets_[r + 1]; ++k) s[r] += values_[k];
    return s;
}

Vec SparseMatrix::column_squared_norms() const {
    Vec s(n_cols_, 0.0);
    for (std::size_t k = 0; k < values_.size(); ++k) s[col_indices_[k]] += values_[k] * values_[k];
    return s;
}

SparseMatrix SparseMatrix::transposed() const {
    std::vector<Triplet> t;
    t.reserve(nnz());
    for (std::size_t r = 0; r < n_rows_; ++r)
        for (std::size_t k = row_offsets_[r]; k < row_offsets_[r + 1]; ++k)
            t.push_back({col_indices_[k], r, values_[k]});
    return from_triplets(n_cols_, n_rows_, std::move(t));
}

bool SparseMatrix::is_symmetric(double tol) const {
    if (n_rows_ != n_cols_) return false;
    for (std::size_t r = 0; r < n_rows_; ++r)
        for (std::size_t k = row_offsets_[r]; k < row_offsets_[r + 1]; ++k)
            if (std::abs(values_[k] - at(col_indices_[k], r)) > tol) return false;
    return true;
}

void spmv(const SparseMatrix& m, const Vec& v, Vec& out) {
    if (v.size() != m.n_cols())
        throw std::invalid_argument("spmv: vector length " + std::to_string(v.size()) +
                                    " does not match " + std::to_string(m.n_cols()) + " columns");
    out.assign(m.n_rows(), 0.0);
    const auto& offsets = m.row_offsets();
    const auto& cols = m.col_indices();
    const auto& vals = m.values();
    for (std::size_t r = 0; r < m.n_rows(); ++r) {
        double s = 0.0;
        for (std::size_t k = offsets[r]; k < offsets[r + 1]; ++k) s += vals[k] * v[cols[k]];
        out[r] = s;
    }
}

Vec spmv(const SparseMatrix& m, const Vec& v) {
    Vec out;
    spmv(m, v, out);
    return out;
}

void spmv_transpose(const SparseMatrix& m, const Vec& v, Vec& out) {
    out.assign(m.n_cols(), 0.0);
    spmv_transpose_add(m, 1.0, v, out);
}

Vec spmv_transpose(const SparseMatrix& m, const Vec& v) {
    Vec out;
    spmv_transpose(m, v, out);
    return out;
}

void spmv_transpose_add(const SparseMatrix& m, double alpha, const Vec& v, Vec& out) {
    if (v.size() != m.n_rows())
        throw std::invalid_argument("spmv_transpose: vector length " + std::to_string(v.size()) +
                                    " does not match " + std::to_string(m.n_rows()) + " rows");
    if (out.size() != m.n_cols())
        throw std::invalid_argument("spmv_transpose: output length mismatch");
    const auto& offsets = m.row_offsets();
    const auto& cols = m.col_indices();
    const auto& vals = m.values();
    for (std::size_t r = 0; r < m.n_rows(); ++r) {
        const double s = alpha * v[r];
        if (s == 0.0) continue;
        for (std::size_t k = offsets[r]; k < offsets[r + 1]; ++k) out[cols[k]] += vals[k] * s;
    }
}

void kron_identity_apply(std::size_t k, const SparseMatrix& l, const Vec& v, Vec& out) {
    if (v.size() != k * l.n_cols())
        throw std::invalid_argument("kron_identity_apply: vector length " +
                                    std::to_string(v.size()) + " does not match " +
                                    std::to_string(k * l.n_cols()));
    out.assign(k * l.n_rows(), 0.0);
    const auto& offsets = l.row_offsets();
    const auto& cols = l.col_indices();
    const auto& vals = l.values();
    for (std::size_t block = 0; block < k; ++block) {
        const double* vin = v.data() + block * l.n_cols();
        double* vout = out.data() + block * l.n_rows();
        for (std::size_t r = 0; r < l.n_rows(); ++r) {
            double s = 0.0;
            for (std::size_t j = offsets[r]; j < offsets[r + 1]; ++j) s += vals[j] * vin[cols[j]];
            vout[r] = s;
        }
    }
}

Vec kron_identity_apply(std::size_t k, const SparseMatrix& l, const Vec& v) {
    Vec out;
    kron_identity_apply(k, l, v, out);
    return out;
}

}  // namespace lpbox
