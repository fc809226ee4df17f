#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "barx/rational.hpp"

namespace barx {

/* Sparse matrices over the rationals, with exact rank / kernel / homology
 * computations. Sizes stay at desk scale, so the elimination is a plain
 * fraction-aware Gaussian elimination; the pivot choice minimises fill the
 * Markowitz way (smallest rowcount*colcount among nonzero entries).
 */
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void set(std::size_t r, std::size_t c, const Rat& v);
    void add(std::size_t r, std::size_t c, const Rat& v);
    Rat get(std::size_t r, std::size_t c) const;
    std::size_t nnz() const { return entries_.size(); }

    const std::map<std::pair<std::size_t, std::size_t>, Rat>& entries() const { return entries_; }

    SparseMatrix transposed() const;
    SparseMatrix times(const SparseMatrix& rhs) const;
    bool is_zero() const { return entries_.empty(); }

    static SparseMatrix identity(std::size_t n);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::map<std::pair<std::size_t, std::size_t>, Rat> entries_; // no zeros stored
};

std::size_t rank(const SparseMatrix& m);

/* dim ker = cols - rank */
std::size_t kernel_dim(const SparseMatrix& m);

/* Basis of ker(m) as column vectors (each a map col-index -> value). */
std::vector<std::map<std::size_t, Rat>> kernel_basis(const SparseMatrix& m);

/* Indices of a maximal independent subset of columns (pivot columns of the
 * row echelon form, scanning left to right). */
std::vector<std::size_t> pivot_columns(const SparseMatrix& m);

/* One solution x of A x = rhs, or nullopt if the system is inconsistent. */
std::optional<std::map<std::size_t, Rat>> solve_linear(const SparseMatrix& a,
                                                       const std::map<std::size_t, Rat>& rhs);

/* Homology at the middle of  src --d_in--> mid --d_out--> dst :
 * dim ker(d_out) - rank(d_in).  Requires d_out * d_in = 0. */
std::size_t homology_dims(const SparseMatrix& d_in, const SparseMatrix& d_out);

} // namespace barx
