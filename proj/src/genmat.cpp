#include "dcc/genmat.hpp"

namespace dcc {

using modarith::mul;
using modarith::neg;
using modarith::sub;

namespace {

std::vector<std::uint64_t> padded_coeffs(const Poly& f, std::size_t len) {
    std::vector<std::uint64_t> v(len, 0);
    for (std::size_t j = 0; j < len; ++j) v[j] = f.coeff(j);
    return v;
}

std::vector<std::uint64_t> pair_row(const Poly& left, const Poly& right, std::size_t m,
                                    std::size_t n) {
    std::vector<std::uint64_t> row = padded_coeffs(left, m);
    const std::vector<std::uint64_t> r = padded_coeffs(right, n);
    row.insert(row.end(), r.begin(), r.end());
    return row;
}

}  // namespace

FqMatrix natural_generator_matrix(const CodeSpec& code, std::size_t i) {
    const std::uint64_t p = code.q();
    const std::size_t m = code.m(), n = code.n();
    const Poly xm1 = Poly::x_pow_minus_one(p, m);
    const Poly xn1 = Poly::x_pow_minus_one(p, n);
    const Poly& io = code.iota().comp(i);
    const Poly& el = code.ell().comp(i);
    const Poly& th = code.theta().comp(i);

    FqMatrix g(p, 0, m + n);
    const std::size_t left_rows = m - static_cast<std::size_t>(io.deg());
    for (std::size_t j = 0; j < left_rows; ++j)
        g.append_row(pair_row(mulmod(Poly::monomial(p, j), io, xm1), Poly::from_residues(p, {}),
                              m, n));
    const std::size_t cross_rows = n - static_cast<std::size_t>(th.deg());
    for (std::size_t j = 0; j < cross_rows; ++j) {
        const Poly xj = Poly::monomial(p, j);
        g.append_row(pair_row(mulmod(xj, el, xm1), mulmod(xj, th, xn1), m, n));
    }
    return g;
}

std::array<FqMatrix, 3> natural_generator_matrices(const CodeSpec& code) {
    return {natural_generator_matrix(code, 0), natural_generator_matrix(code, 1),
            natural_generator_matrix(code, 2)};
}

StandardizedForm standardized_form(const CodeSpec& code, std::size_t i) {
    const std::uint64_t p = code.q();
    const std::size_t m = code.m(), n = code.n();
    const Poly xm1 = Poly::x_pow_minus_one(p, m);
    const Poly xn1 = Poly::x_pow_minus_one(p, n);
    const Poly& io = code.iota().comp(i);
    const Poly& el = code.ell().comp(i);
    const Poly& th = code.theta().comp(i);

    const std::size_t deg_io = static_cast<std::size_t>(io.deg());
    const std::size_t deg_th = static_cast<std::size_t>(th.deg());
    const std::size_t deg_g = static_cast<std::size_t>(code.gcd_iota_ell(i).deg());
    const std::size_t k = code.k(i);
    const std::size_t w1 = m - deg_io, w6 = n - deg_th - k;

    // band 1: basis of the left-only subcode <(iota | 0)>.  Reducing with
    // pivots on the highest columns puts the identity on left columns
    // deg_io..m-1 (the staircase x^j*iota is monic there).
    FqMatrix band1(p, 0, m + n);
    for (std::size_t j = 0; j < w1; ++j)
        band1.append_row(pair_row(mulmod(Poly::monomial(p, j), io, xm1),
                                  Poly::from_residues(p, {}), m, n));
    const Echelon e1 = reduced_echelon_rightmost(band1);
    band1 = e1.mat;

    // band 3: basis of the words with zero left block, generated by
    // (0 | iota_tilde * theta); identity on right columns deg_th+k..n-1
    const Poly h = code.right_kernel_gen(i);
    FqMatrix band3(p, 0, m + n);
    for (std::size_t j = 0; j < w6; ++j)
        band3.append_row(pair_row(Poly::from_residues(p, {}),
                                  mulmod(Poly::monomial(p, j), h, xn1), m, n));
    band3 = reduced_echelon_rightmost(band3).mat;

    // band 2: k rows x^j*(ell | theta).  Their right blocks have no support
    // past column deg_th+k-1, so rightmost reduction puts the identity on
    // right columns deg_th..deg_th+k-1; the left staircase columns are then
    // cleared with band 1 (whose right block is zero).
    FqMatrix band2raw(p, 0, m + n);
    for (std::size_t j = 0; j < k; ++j) {
        const Poly xj = Poly::monomial(p, j);
        band2raw.append_row(pair_row(mulmod(xj, el, xm1), mulmod(xj, th, xn1), m, n));
    }
    const FqMatrix band2red = reduced_echelon_rightmost(band2raw).mat;
    std::vector<std::vector<std::uint64_t>> b2;
    for (std::size_t r = 0; r < band2red.rows(); ++r) b2.push_back(band2red.row(r));
    if (b2.size() != k)
        throw InvariantViolationError("standardized form: middle band lost rank");
    for (std::size_t r1 = 0; r1 < band1.rows(); ++r1) {
        const std::size_t pivot_col = e1.pivots[r1];
        for (auto& row : b2) {
            const std::uint64_t f = row[pivot_col];
            if (f == 0) continue;
            for (std::size_t c = 0; c < m + n; ++c)
                row[c] = sub(row[c], mul(f, band1.at(r1, c), p), p);
        }
    }
    FqMatrix band2 = FqMatrix::from_rows(p, m + n, b2);

    // the k cleared middle rows restricted to left columns 0..deg_io-1 have
    // rank k; their echelon pivot columns give an invertible square block
    std::vector<std::size_t> low_left(deg_io);
    for (std::size_t j = 0; j < deg_io; ++j) low_left[j] = j;
    const Echelon b2_left = reduced_echelon(band2.select_columns(low_left));
    if (b2_left.rank() != k)
        throw InvariantViolationError("standardized form: middle band left rank != k");
    std::vector<bool> in_s2(deg_io, false);
    for (std::size_t c : b2_left.pivots) in_s2[c] = true;

    // column permutation: (S1 | S2 | S3) on the left, (S4 | S5 | S6) on the right
    std::vector<std::size_t> perm;
    perm.reserve(m + n);
    for (std::size_t j = deg_io; j < m; ++j) perm.push_back(j);               // S1
    for (std::size_t j = 0; j < deg_io; ++j)
        if (in_s2[j]) perm.push_back(j);                                      // S2
    for (std::size_t j = 0; j < deg_io; ++j)
        if (!in_s2[j]) perm.push_back(j);                                     // S3
    for (std::size_t j = 0; j < deg_th; ++j) perm.push_back(m + j);           // S4
    for (std::size_t j = deg_th; j < deg_th + k; ++j) perm.push_back(m + j);  // S5
    for (std::size_t j = deg_th + k; j < n; ++j) perm.push_back(m + j);       // S6

    const FqMatrix stacked = band1.vstack(band2).vstack(band3).select_columns(perm);
    return {stacked, std::move(perm), k, {w1, k, deg_g, deg_th, k, w6},
            {w1, k, w6}};
}

FqMatrix parity_check_permuted(const StandardizedForm& sf) {
    const std::uint64_t p = sf.mat.p();
    const auto& w = sf.col_widths;
    const std::size_t k = sf.k;
    std::array<std::size_t, 7> off{};  // column band offsets
    for (std::size_t i = 0; i < 6; ++i) off[i + 1] = off[i] + w[i];

    auto block = [&](std::size_t row0, std::size_t rows, std::size_t band) {
        FqMatrix b(p, rows, w[band]);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < w[band]; ++c)
                b.set(r, c, sf.mat.at(row0 + r, off[band] + c));
        return b;
    };
    const std::size_t h1 = sf.row_heights[0], h2 = sf.row_heights[1];
    const FqMatrix a1 = block(0, h1, 1), a2 = block(0, h1, 2);
    const FqMatrix b1 = block(h1, h2, 1), b2 = block(h1, h2, 2), b3 = block(h1, h2, 3);
    const FqMatrix m1 = block(h1 + h2, sf.row_heights[2], 3),
                   m2 = block(h1 + h2, sf.row_heights[2], 4);

    const FqMatrix a1t = a1.transposed(), a2t = a2.transposed(), b1t = b1.transposed(),
                   b2t = b2.transposed(), b3t = b3.transposed(), m1t = m1.transposed(),
                   m2t = m2.transposed();

    // row bands of H: k, deg gcd, deg theta; the transposed blocks pick up a
    // sign in odd characteristic so that G H^t vanishes
    const std::size_t deg_g = w[2], deg_th = w[3];
    const std::size_t hrows = k + deg_g + deg_th;
    FqMatrix h(p, hrows, off[6]);
    auto put = [&](std::size_t row0, std::size_t band, const FqMatrix& blk, bool negate) {
        for (std::size_t r = 0; r < blk.rows(); ++r)
            for (std::size_t c = 0; c < blk.cols(); ++c)
                h.set(row0 + r, off[band] + c, negate ? neg(blk.at(r, c), p) : blk.at(r, c));
    };
    // (-A1^t  I_k  0            | 0          -B1^t  B1^t M2^t)
    put(0, 0, a1t, true);
    put(0, 1, FqMatrix::identity(p, k), false);
    put(0, 4, b1t, true);
    put(0, 5, b1t * m2t, false);
    // (-A2^t  0    I_{deg gcd}  | 0          -B2^t  B2^t M2^t)
    put(k, 0, a2t, true);
    put(k, 2, FqMatrix::identity(p, deg_g), false);
    put(k, 4, b2t, true);
    put(k, 5, b2t * m2t, false);
    // (0      0    0            | I_{deg th} -B3^t  B3^t M2^t - M1^t)
    put(k + deg_g, 3, FqMatrix::identity(p, deg_th), false);
    put(k + deg_g, 4, b3t, true);
    FqMatrix last = b3t * m2t;
    for (std::size_t r = 0; r < last.rows(); ++r)
        for (std::size_t c = 0; c < last.cols(); ++c)
            last.set(r, c, sub(last.at(r, c), m1t.at(r, c), p));
    put(k + deg_g, 5, last, false);

    return h;
}

namespace {

FqMatrix unpermute_columns(const FqMatrix& m, const std::vector<std::size_t>& perm) {
    FqMatrix out(m.p(), m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, perm[c], m.at(r, c));
    return out;
}

}  // namespace

std::array<FqMatrix, 3> parity_check_matrices(const CodeSpec& code) {
    std::array<FqMatrix, 3> out{FqMatrix(code.q(), 0, 0), FqMatrix(code.q(), 0, 0),
                                FqMatrix(code.q(), 0, 0)};
    for (std::size_t i = 0; i < 3; ++i) {
        const StandardizedForm sf = standardized_form(code, i);
        const FqMatrix hp = parity_check_permuted(sf);
        if (!(sf.mat * hp.transposed()).is_zero())
            throw InvariantViolationError("parity check does not annihilate the generator");
        out[i] = unpermute_columns(hp, sf.col_perm);
    }
    return out;
}

std::uint64_t code_dimension(const CodeSpec& code) {
    std::uint64_t formula = 0, measured = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        formula += (code.m() - code.iota().comp(i).deg()) +
                   (code.n() - code.theta().comp(i).deg());
        measured += rank(natural_generator_matrix(code, i));
    }
    if (formula != measured)
        throw InvariantViolationError("dimension formula " + std::to_string(formula) +
                                      " != measured rank " + std::to_string(measured));
    return formula;
}

CodeCounts code_counts(const CodeSpec& code) {
    const std::size_t m = code.m(), n = code.n();
    std::vector<std::size_t> left_cols(m), right_cols(n);
    for (std::size_t j = 0; j < m; ++j) left_cols[j] = j;
    for (std::size_t j = 0; j < n; ++j) right_cols[j] = m + j;

    std::uint64_t sum_deg_iota = 0, sum_deg_theta = 0, sum_k = 0;
    std::uint64_t meas_left = 0, meas_right = 0, meas_dual_left = 0, meas_dual_right = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        sum_deg_iota += static_cast<std::uint64_t>(code.iota().comp(i).deg());
        sum_deg_theta += static_cast<std::uint64_t>(code.theta().comp(i).deg());
        sum_k += code.k(i);

        const FqMatrix g = natural_generator_matrix(code, i);
        const std::size_t right_rank = rank(g.select_columns(right_cols));
        meas_left += rank(g.select_columns(left_cols));
        meas_right += right_rank;
        meas_dual_left += n - right_rank;  // dual words living on the right block
        meas_dual_right += rank(nullspace(g).select_columns(right_cols));
    }

    CodeCounts counts{};
    counts.q = code.q();
    counts.card_code_exp = code_dimension(code);
    counts.card_left_proj_exp = 3 * m + sum_k - sum_deg_iota;
    counts.card_right_proj_exp = 3 * n - sum_deg_theta;
    counts.card_dual_left_exp = sum_deg_theta;
    counts.card_dual_right_exp = sum_deg_theta + sum_k;

    if (counts.card_left_proj_exp != meas_left)
        throw InvariantViolationError("left projection count formula != measured rank");
    if (counts.card_right_proj_exp != meas_right)
        throw InvariantViolationError("right projection count formula != measured rank");
    if (counts.card_dual_left_exp != meas_dual_left)
        throw InvariantViolationError("dual left count formula != measured nullity");
    if (counts.card_dual_right_exp != meas_dual_right)
        throw InvariantViolationError("dual right count formula != measured rank");
    return counts;
}

std::optional<std::uint64_t> min_distance(const FqMatrix& gen, std::uint64_t cap) {
    const Echelon basis = reduced_echelon(gen);
    if (basis.rank() == 0) return std::nullopt;
    std::uint64_t best = gen.cols() + 1;
    for_each_row_space_vector(basis, cap, [&](const std::vector<std::uint64_t>& v) {
        std::uint64_t w = 0;
        for (std::uint64_t x : v) w += (x != 0);
        if (w != 0 && w < best) best = w;
        return best > 1;  // weight 1 cannot be beaten
    });
    return best;
}

}  // namespace dcc
