#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dcc/field.hpp"

namespace dcc {

/// Dense matrix over F_p with exact Gaussian elimination.  Entries are raw
/// residues in [0, p).
class FqMatrix {
  public:
    FqMatrix(std::uint64_t p, std::size_t rows, std::size_t cols)
        : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static FqMatrix identity(std::uint64_t p, std::size_t n);
    static FqMatrix from_rows(std::uint64_t p, std::size_t cols,
                              const std::vector<std::vector<std::uint64_t>>& rows);

    std::uint64_t p() const noexcept { return p_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::uint64_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint64_t v) { a_[r * cols_ + c] = v % p_; }

    void append_row(const std::vector<std::uint64_t>& row);
    std::vector<std::uint64_t> row(std::size_t r) const;

    FqMatrix transposed() const;
    FqMatrix operator*(const FqMatrix& rhs) const;
    FqMatrix vstack(const FqMatrix& below) const;
    /// New matrix whose column j is this matrix's column `cols[j]`.
    FqMatrix select_columns(const std::vector<std::size_t>& cols) const;
    bool is_zero() const;

    friend bool operator==(const FqMatrix&, const FqMatrix&) noexcept = default;

  private:
    std::uint64_t p_;
    std::size_t rows_, cols_;
    std::vector<std::uint64_t> a_;
};

/// Row-reduced echelon form together with its pivot columns.  Zero rows are
/// dropped, so mat.rows() == rank.
struct Echelon {
    FqMatrix mat;
    std::vector<std::size_t> pivots;

    std::size_t rank() const noexcept { return pivots.size(); }
    /// Reduces v against the echelon rows in place; v ends zero iff it lies
    /// in the row space.
    void reduce(std::vector<std::uint64_t>& v) const;
    bool contains(std::vector<std::uint64_t> v) const;
};

Echelon reduced_echelon(const FqMatrix& m);

/// Like reduced_echelon but scans columns right-to-left, so pivots land on
/// the highest independent columns.  Rows come back sorted by ascending
/// pivot column.
Echelon reduced_echelon_rightmost(const FqMatrix& m);

std::size_t rank(const FqMatrix& m);

/// Basis of {x : m x^t = 0} as matrix rows (possibly 0 rows).
FqMatrix nullspace(const FqMatrix& m);

bool same_row_space(const FqMatrix& a, const FqMatrix& b);

/// Visits every vector of the row space exactly once (the zero vector first).
/// Stops early when the visitor returns false.  Throws TooLargeError when
/// p^rank exceeds the cap.
void for_each_row_space_vector(const Echelon& basis, std::uint64_t cap,
                               const std::function<bool(const std::vector<std::uint64_t>&)>& fn);

}  // namespace dcc
