#include "dcc/fq_matrix.hpp"

#include <algorithm>
#include <string>

namespace dcc {

using modarith::add;
using modarith::inv;
using modarith::mul;
using modarith::neg;
using modarith::sub;

FqMatrix FqMatrix::identity(std::uint64_t p, std::size_t n) {
    FqMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FqMatrix FqMatrix::from_rows(std::uint64_t p, std::size_t cols,
                             const std::vector<std::vector<std::uint64_t>>& rows) {
    FqMatrix m(p, 0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

void FqMatrix::append_row(const std::vector<std::uint64_t>& row) {
    if (row.size() != cols_) throw DimensionError("row length does not match column count");
    for (std::uint64_t v : row) a_.push_back(v % p_);
    ++rows_;
}

std::vector<std::uint64_t> FqMatrix::row(std::size_t r) const {
    return std::vector<std::uint64_t>(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

FqMatrix FqMatrix::transposed() const {
    FqMatrix t(p_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
}

FqMatrix FqMatrix::operator*(const FqMatrix& rhs) const {
    if (p_ != rhs.p_) throw ContextMismatchError("matrix product across different prime fields");
    if (cols_ != rhs.rows_) throw DimensionError("matrix product shape mismatch");
    FqMatrix out(p_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const std::uint64_t v = at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.set(i, j, add(out.at(i, j), mul(v, rhs.at(k, j), p_), p_));
        }
    return out;
}

FqMatrix FqMatrix::vstack(const FqMatrix& below) const {
    if (p_ != below.p_ || cols_ != below.cols_)
        throw DimensionError("vstack shape/field mismatch");
    FqMatrix out = *this;
    out.a_.insert(out.a_.end(), below.a_.begin(), below.a_.end());
    out.rows_ += below.rows_;
    return out;
}

FqMatrix FqMatrix::select_columns(const std::vector<std::size_t>& cols) const {
    FqMatrix out(p_, rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j) out.set(r, j, at(r, cols[j]));
    return out;
}

bool FqMatrix::is_zero() const {
    for (std::uint64_t v : a_)
        if (v != 0) return false;
    return true;
}

void Echelon::reduce(std::vector<std::uint64_t>& v) const {
    const std::uint64_t p = mat.p();
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        const std::uint64_t f = v[pivots[r]];
        if (f == 0) continue;
        for (std::size_t c = 0; c < mat.cols(); ++c)
            v[c] = sub(v[c], mul(f, mat.at(r, c), p), p);
    }
}

bool Echelon::contains(std::vector<std::uint64_t> v) const {
    reduce(v);
    for (std::uint64_t x : v)
        if (x != 0) return false;
    return true;
}

Echelon reduced_echelon(const FqMatrix& m) {
    const std::uint64_t p = m.p();
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));

    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols() && lead < rows.size(); ++col) {
        std::size_t piv = lead;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[lead], rows[piv]);
        const std::uint64_t f = inv(rows[lead][col], p);
        for (std::size_t c = col; c < m.cols(); ++c) rows[lead][c] = mul(rows[lead][c], f, p);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead || rows[r][col] == 0) continue;
            const std::uint64_t g = rows[r][col];
            for (std::size_t c = col; c < m.cols(); ++c)
                rows[r][c] = sub(rows[r][c], mul(g, rows[lead][c], p), p);
        }
        pivots.push_back(col);
        ++lead;
    }
    rows.resize(pivots.size());
    return {FqMatrix::from_rows(p, m.cols(), rows), std::move(pivots)};
}

Echelon reduced_echelon_rightmost(const FqMatrix& m) {
    const std::uint64_t p = m.p();
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));

    std::vector<std::size_t> pivots;  // collected in descending column order
    std::size_t lead = 0;
    for (std::size_t col = m.cols(); col-- > 0 && lead < rows.size();) {
        std::size_t piv = lead;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[lead], rows[piv]);
        const std::uint64_t f = inv(rows[lead][col], p);
        for (std::size_t c = 0; c < m.cols(); ++c) rows[lead][c] = mul(rows[lead][c], f, p);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead || rows[r][col] == 0) continue;
            const std::uint64_t g = rows[r][col];
            for (std::size_t c = 0; c < m.cols(); ++c)
                rows[r][c] = sub(rows[r][c], mul(g, rows[lead][c], p), p);
        }
        pivots.push_back(col);
        ++lead;
    }
    rows.resize(pivots.size());
    std::reverse(rows.begin(), rows.end());
    std::reverse(pivots.begin(), pivots.end());
    return {FqMatrix::from_rows(p, m.cols(), rows), std::move(pivots)};
}

std::size_t rank(const FqMatrix& m) { return reduced_echelon(m).rank(); }

FqMatrix nullspace(const FqMatrix& m) {
    const Echelon e = reduced_echelon(m);
    const std::uint64_t p = m.p();
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;

    FqMatrix basis(p, 0, m.cols());
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<std::uint64_t> v(m.cols(), 0);
        v[free_col] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[e.pivots[r]] = neg(e.mat.at(r, free_col), p);
        basis.append_row(v);
    }
    return basis;
}

bool same_row_space(const FqMatrix& a, const FqMatrix& b) {
    const std::size_t ra = rank(a), rb = rank(b);
    return ra == rb && rank(a.vstack(b)) == ra;
}

void for_each_row_space_vector(const Echelon& basis, std::uint64_t cap,
                               const std::function<bool(const std::vector<std::uint64_t>&)>& fn) {
    const std::uint64_t p = basis.mat.p();
    const std::size_t k = basis.rank();

    long double total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= static_cast<long double>(p);
    if (total > static_cast<long double>(cap))
        throw TooLargeError("row space enumeration needs " + std::to_string(p) + "^" +
                                std::to_string(k) + " vectors, cap is " + std::to_string(cap),
                            total);

    std::vector<std::uint64_t> digits(k, 0);
    std::vector<std::uint64_t> v(basis.mat.cols(), 0);
    for (;;) {
        if (!fn(v)) return;
        // base-p odometer; every digit change (including a carry wrapping
        // p-1 -> 0) amounts to adding the corresponding basis row once
        std::size_t i = 0;
        for (; i < k; ++i) {
            for (std::size_t c = 0; c < v.size(); ++c)
                v[c] = add(v[c], basis.mat.at(i, c), p);
            digits[i] += 1;
            if (digits[i] < p) break;
            digits[i] = 0;
        }
        if (i == k) return;  // wrapped around to zero
    }
}

}  // namespace dcc
