#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "dcc/rpoly.hpp"

namespace dcc {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// A word of R^m x R^n, written (left | right).
struct Codeword {
    std::vector<RElem> left;
    std::vector<RElem> right;

    static Codeword zero(const FieldCtx& f, std::uint32_t m, std::uint32_t n);
    bool is_zero() const;
    friend bool operator==(const Codeword&, const Codeword&) = default;
};

/// Simultaneous right rotation of both blocks:
/// (a_0..a_{m-1} | b_0..b_{n-1}) -> (a_{m-1},a_0,.. | b_{n-1},b_0,..).
Codeword shifted(const Codeword& c);

/// R-valued inner product: sum of the coordinatewise products of both blocks.
RElem inner_product(const Codeword& c, const Codeword& d);

/// A double cyclic code of length (m, n) over R, held in the normalized
/// generator form C = <(iota | 0), (ell | theta)>.  Invariants established at
/// construction, per idempotent component i:
///   - iota_i and theta_i are monic divisors of x^m-1 and x^n-1 (a zero ideal
///     component is represented by x^m-1 / x^n-1 itself, never by 0),
///   - deg(ell_i) < deg(iota_i) or ell_i = 0,
///   - iota_i divides ((x^n-1)/theta_i) * ell_i.
class CodeSpec {
  public:
    /// Validates and normalizes a generator triple; throws
    /// InvalidGeneratorError naming the failing component and condition.
    static CodeSpec make(const FieldCtx& field, std::uint32_t m, std::uint32_t n, RPoly iota,
                         RPoly ell, RPoly theta);

    const FieldCtx& field() const noexcept { return field_; }
    std::uint64_t q() const noexcept { return field_.p(); }
    std::uint32_t m() const noexcept { return m_; }
    std::uint32_t n() const noexcept { return n_; }
    /// lcm(m, n).
    std::uint32_t l() const noexcept { return l_; }

    const RPoly& iota() const noexcept { return iota_; }
    const RPoly& ell() const noexcept { return ell_; }
    const RPoly& theta() const noexcept { return theta_; }

    Poly gcd_iota_ell(std::size_t i) const;
    /// k_i = deg(iota_i) - deg(gcd(iota_i, ell_i)).
    std::size_t k(std::size_t i) const;
    Poly iota_tilde(std::size_t i) const;  // iota_i / gcd(iota_i, ell_i)
    Poly ell_tilde(std::size_t i) const;   // ell_i / gcd(iota_i, ell_i); zero for ell_i = 0
    /// Monic generator of the right blocks of codewords with zero left block:
    /// iota_tilde_i * theta_i, a divisor of x^n-1.
    Poly right_kernel_gen(std::size_t i) const;

    /// Generator words (iota | 0) and (ell | theta).
    Codeword left_generator_word() const;
    Codeword cross_generator_word() const;

    friend bool operator==(const CodeSpec&, const CodeSpec&) = default;

  private:
    CodeSpec(FieldCtx f, std::uint32_t m, std::uint32_t n, std::uint32_t l, RPoly iota, RPoly ell,
             RPoly theta)
        : field_(f), m_(m), n_(n), l_(l), iota_(std::move(iota)), ell_(std::move(ell)),
          theta_(std::move(theta)) {}

    FieldCtx field_;
    std::uint32_t m_, n_, l_;
    RPoly iota_, ell_, theta_;
};

/// Exact membership, decided by row reduction against the natural generator
/// matrices.  Throws DimensionError on length mismatch.
bool contains(const CodeSpec& code, const Codeword& word);

/// Visits every codeword exactly once (zero word first); stops early when the
/// visitor returns false.  Throws TooLargeError when q^dim exceeds the cap.
void for_each_codeword(const CodeSpec& code, std::uint64_t cap,
                       const std::function<bool(const Codeword&)>& fn);
std::vector<Codeword> enumerate_codewords(const CodeSpec& code,
                                          std::uint64_t cap = kDefaultEnumerationCap);

/// Generators of one idempotent component of a code, as F_q polynomials.
struct ComponentGenerators {
    Poly iota;
    Poly ell;
    Poly theta;
};

/// Standard-form generators of the smallest (m, n) double cyclic code over
/// F_q containing the given (left, right) polynomial pairs and all their
/// simultaneous shifts.
ComponentGenerators canonicalize_component(const FieldCtx& field, std::uint32_t m,
                                           std::uint32_t n,
                                           const std::vector<std::pair<Poly, Poly>>& words);

/// Standard-form generators of the smallest double cyclic code over R
/// containing every input word and all their shifts.
CodeSpec canonicalize(const FieldCtx& field, std::uint32_t m, std::uint32_t n,
                      const std::vector<Codeword>& spanning);

/// The pairing into R_l[x] (l = lcm(m, n)) whose vanishing says c is
/// orthogonal to d and every shift of d.  Per component i:
///   c1_i * omega_{l/m}(x^m) * x^{l-1-deg d1_i} * rev(d1_i)
/// + c2_i * omega_{l/n}(x^n) * x^{l-1-deg d2_i} * rev(d2_i)   (mod x^l - 1)
/// with rev the plain coefficient reversal and a zero d-block contributing
/// nothing.  The coefficient of x^{l-1-s} in component i equals the F_q inner
/// product of component i of c with the s-th left shift of d.
RPoly circ(const Codeword& c, const Codeword& d);

/// True iff the code is the direct product of its two coordinate projections;
/// decided by comparing ranks.
bool is_separable(const CodeSpec& code);

/// Polynomial view of one block of a codeword (component i).
Poly block_component_poly(const std::vector<RElem>& block, std::size_t i);

}  // namespace dcc
