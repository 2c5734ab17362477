#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "dcc/field.hpp"

namespace dcc {

/// Dense univariate polynomial over F_p, coefficients stored ascending
/// (index i = coefficient of x^i).  Always canonical: no trailing zero
/// coefficients; the zero polynomial is the empty coefficient list.
class Poly {
  public:
    /// The zero polynomial over the given field.
    explicit Poly(const FieldCtx& field) : p_(field.p()) {}

    /// Coefficients given as arbitrary integers, reduced mod p and pruned.
    static Poly from_ints(const FieldCtx& field, const std::vector<std::int64_t>& coeffs);
    /// Coefficients already reduced into [0, p).
    static Poly from_residues(std::uint64_t p, std::vector<std::uint64_t> coeffs);
    /// c * x^k.
    static Poly monomial(std::uint64_t p, std::size_t k, std::uint64_t c = 1);
    static Poly constant(std::uint64_t p, std::uint64_t c) { return monomial(p, 0, c); }
    /// x^n - 1.
    static Poly x_pow_minus_one(std::uint64_t p, std::size_t n);

    std::uint64_t p() const noexcept { return p_; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }

    /// Degree; -1 stands for deg(0), ordered below every real degree.
    std::int64_t deg() const noexcept { return static_cast<std::int64_t>(c_.size()) - 1; }

    /// Coefficient of x^i (0 beyond the stored range).
    std::uint64_t coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }

    std::uint64_t leading_coeff() const;
    /// Lowest-degree nonzero coefficient.
    std::uint64_t lowest_coeff() const;
    /// Index of the lowest nonzero coefficient (the valuation).
    std::size_t lowest_deg() const;

    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly operator-() const;
    Poly& operator+=(const Poly& rhs) { return *this = *this + rhs; }
    Poly& operator-=(const Poly& rhs) { return *this = *this - rhs; }
    Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }

    Poly scaled(std::uint64_t c) const;
    /// Scaled so the leading coefficient is 1; zero stays zero.
    Poly monic() const;

    /// Monic reciprocal: lc^-1 * x^deg * f(1/x) where lc is the lowest
    /// nonzero coefficient; total by the convention reciprocal(0) = 0.
    Poly reciprocal() const;
    /// Plain coefficient reversal x^deg * f(1/x), no normalization.
    Poly reversal() const;

    std::uint64_t evaluate(std::uint64_t x) const;

    friend bool operator==(const Poly&, const Poly&) noexcept = default;

  private:
    Poly(std::uint64_t p, std::vector<std::uint64_t> c) : p_(p), c_(std::move(c)) { prune(); }
    void prune();
    void check_field(const Poly& rhs) const;

    std::uint64_t p_ = 0;
    std::vector<std::uint64_t> c_;
};

struct DivModResult {
    Poly quotient;
    Poly remainder;
};

/// Long division: a = q*b + r with deg r < deg b.  Throws on b = 0.
DivModResult divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

/// True iff a divides b; the zero polynomial divides only the zero polynomial.
bool divides(const Poly& a, const Poly& b);

/// Monic gcd.  gcd(0, 0) throws UndefinedGcdError.
Poly gcd(const Poly& a, const Poly& b);

struct ExtGcdResult {
    Poly g;  // monic gcd
    Poly s;
    Poly t;  // s*a + t*b == g
};
ExtGcdResult ext_gcd(const Poly& a, const Poly& b);

/// Inverse of a modulo m (deg m >= 1, gcd(a, m) = 1).
Poly inv_mod(const Poly& a, const Poly& m);

/// (a * b) mod modulus.
Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus);

/// Sum_{i=0}^{k-1} x^{i*arg_power}; satisfies (x^t - 1) * omega(k, t) = x^{kt} - 1.
Poly omega(std::uint64_t p, std::uint64_t k, std::uint64_t arg_power);

}  // namespace dcc
