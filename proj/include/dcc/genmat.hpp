#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "dcc/code.hpp"
#include "dcc/fq_matrix.hpp"

namespace dcc {

/// Natural generator matrix of component i, coefficients written ascending
/// (constant term first), left block in columns 0..m-1, right block in
/// columns m..m+n-1.  Rows: x^j*(iota_i | 0) for 0 <= j < m - deg(iota_i),
/// then x^j*(ell_i | theta_i) for 0 <= j < n - deg(theta_i).
FqMatrix natural_generator_matrix(const CodeSpec& code, std::size_t i);
std::array<FqMatrix, 3> natural_generator_matrices(const CodeSpec& code);

/// Column-permuted, row-reduced block form of one component:
///
///   ( I_{m-deg iota}  A1  A2 |  0   0    0 )
///   ( 0               B1  B2 |  B3  I_k  0 )
///   ( 0               0   0  |  M1  M2   I_{n-deg theta-k} )
///
/// with column band widths (m-deg iota, k, deg gcd(iota,ell) | deg theta, k,
/// n-deg theta-k) and B1 an invertible k x k block.  col_perm maps new
/// column positions to original ones; the row space of the permuted natural
/// matrix is preserved.
struct StandardizedForm {
    FqMatrix mat;
    std::vector<std::size_t> col_perm;
    std::size_t k;
    std::array<std::size_t, 6> col_widths;
    std::array<std::size_t, 3> row_heights;
};

StandardizedForm standardized_form(const CodeSpec& code, std::size_t i);

/// Parity check of the standardized form, in the same permuted column order;
/// satisfies standardized.mat * result^t = 0.
FqMatrix parity_check_permuted(const StandardizedForm& sf);

/// Parity check matrices in the natural column order: G_i * H_i^t = 0 and
/// rank(G_i) + rank(H_i) = m + n.
std::array<FqMatrix, 3> parity_check_matrices(const CodeSpec& code);

/// F_q dimension, 3m + 3n - sum(deg iota_i + deg theta_i); cross-checked
/// against the measured generator matrix ranks, InvariantViolationError on
/// mismatch.
std::uint64_t code_dimension(const CodeSpec& code);

/// The cardinality bookkeeping of a code and its dual, stored as exponents:
/// |X| = q^exp.  Each exponent is cross-checked against the rank or nullity
/// of the matching projected matrix:
///   card_code        q^dim
///   card_left_proj   left-block projection of the code      (3m + sum k_i - sum deg iota_i)
///   card_right_proj  right-block projection of the code     (3n - sum deg theta_i)
///   card_dual_left   dual words supported on the right block, equivalently
///                    the dual of the right projection        (sum deg theta_i)
///   card_dual_right  right-block projection of the dual      (sum deg theta_i + sum k_i)
struct CodeCounts {
    std::uint64_t q;
    std::uint64_t card_code_exp;
    std::uint64_t card_left_proj_exp;
    std::uint64_t card_right_proj_exp;
    std::uint64_t card_dual_left_exp;
    std::uint64_t card_dual_right_exp;
};

CodeCounts code_counts(const CodeSpec& code);

/// Minimum Hamming weight over all nonzero row-space vectors, by exhaustive
/// enumeration; nullopt for the zero code.  Throws TooLargeError when
/// q^rank exceeds the cap.
std::optional<std::uint64_t> min_distance(const FqMatrix& gen, std::uint64_t cap);

}  // namespace dcc
