#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dcc/code.hpp"

namespace dcc {

/// Deterministic RNG wrapper; mt19937_64 plus a fixed bounded-draw scheme so
/// reports are byte-for-byte reproducible under a fixed seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t below(std::uint64_t n) { return n <= 1 ? 0 : eng_() % n; }
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  private:
    std::mt19937_64 eng_;
};

/// Uniform coefficients, degree at most max_deg; may come out zero.
Poly random_poly(Rng& rng, const FieldCtx& field, std::int64_t max_deg);

/// A monic divisor of x^N - 1, produced from gcds with random polynomials
/// and products of coprime parts (no factorization involved).
Poly random_divisor_of_xn_minus_1(Rng& rng, const FieldCtx& field, std::uint32_t N);

/// A random valid code: random divisors for iota and theta, then a random
/// ell that satisfies the cross-divisibility condition, normalized through
/// the standard construction.
CodeSpec random_code(Rng& rng, const FieldCtx& field, std::uint32_t m, std::uint32_t n);

struct VerifyOptions {
    std::uint64_t cases = 200;
    std::uint64_t seed = 1;
    std::vector<std::uint64_t> qset = {3, 5, 7};
    std::uint32_t max_m = 8;
    std::uint32_t max_n = 8;
    /// Fault injection for harness self-tests: perturbs the closed-form dual
    /// so the cross-validation must catch it.
    bool mutate_dual_formula = false;
};

struct SuiteResult {
    std::string name;
    std::uint64_t pass = 0;
    std::uint64_t total = 0;
};

struct VerifyReport {
    bool ok = true;
    std::vector<SuiteResult> suites;
    std::string counterexample;  // serialized spec + failure detail, empty when ok
    /// How often the two printed closed forms for the ell_bar multiplier
    /// agree with the congruence solution (see the dual module).
    std::uint64_t rho_stmt_matches = 0;
    std::uint64_t rho_proof_matches = 0;
    std::uint64_t rho_comparable = 0;
    std::string log;  // deterministic textual report
};

VerifyReport run_verify(const VerifyOptions& opts);

}  // namespace dcc
