#pragma once

#include <string>

#include "dcc/code.hpp"

namespace dcc {

enum class DualMethod { formula, nullspace };

struct DualResult {
    CodeSpec code;   // normalized generators of the dual
    RPoly rho;       // the multiplier behind ell_bar (zero for the nullspace path)
    DualMethod method;
};

/// Left generator of the dual: (x^m-1) / gcd(iota_i, ell_i)* per component.
RPoly dual_iota(const CodeSpec& code);

/// Right generator of the dual:
/// (x^n-1) * gcd(iota_i, ell_i)* / (iota_i* theta_i*) per component; the
/// division is exact for every valid code (InvariantViolationError otherwise).
RPoly dual_theta(const CodeSpec& code);

struct DualEll {
    RPoly ell_bar;
    RPoly rho;
};

/// Mixed generator of the dual: ell_bar = rho * (x^m-1)/iota* componentwise.
/// rho_i solves the orthogonality congruence of (ell_bar | theta_bar) against
/// (ell | theta) and all shifts,
///
///   rho_i * x^{l-1-deg ell_i} * rev(ell_i)/gcd* + x^{l-1-deg theta_i} * low(theta_i)
///       == 0   (mod iota_tilde_i*)
///
/// solved with a modular inverse; rho_i = 0 when ell_i = 0.
DualEll dual_ell(const CodeSpec& code);

/// Dual code, either assembled from the closed-form generators or computed
/// independently as the componentwise nullspace followed by canonicalization.
/// Both paths return normalized CodeSpecs, so equal duals compare equal.
DualResult dual_code(const CodeSpec& code, DualMethod method);

struct DualityReport {
    bool pass = false;
    std::string detail;  // first counterexample when failing
};

/// Checks that D is contained in the dual of C (every generator of D is
/// orthogonal to every generator of C and all its shifts) and that the
/// dimensions are complementary, which together pin D == C-dual exactly.
DualityReport verify_duality(const CodeSpec& code, const CodeSpec& candidate_dual);

}  // namespace dcc
