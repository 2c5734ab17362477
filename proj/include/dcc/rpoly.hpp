#pragma once

#include <array>
#include <vector>

#include "dcc/poly.hpp"
#include "dcc/ring.hpp"

namespace dcc {

/// Polynomial over R as its CRT triple of F_q polynomials:
/// r(x) = f1(x)v1 + f2(x)v2 + f3(x)v3.  All arithmetic is componentwise.
class RPoly {
  public:
    RPoly(Poly f1, Poly f2, Poly f3);

    static RPoly zero(const FieldCtx& f) {
        return RPoly(Poly(f), Poly(f), Poly(f));
    }
    static RPoly constant_one(const FieldCtx& f) {
        const Poly one = Poly::constant(f.p(), 1);
        return RPoly(one, one, one);
    }
    /// All three components equal to the same F_q polynomial (the embedding
    /// of F_q[x] into R[x] through v1 + v2 + v3 = 1).
    static RPoly splat(const Poly& f) { return RPoly(f, f, f); }

    /// From coefficients in the standard basis: coefficient j of the input is
    /// a_j + b_j v + c_j v^2; component i of the result collects the
    /// idempotent projections of every coefficient.
    static RPoly from_standard_coeffs(const FieldCtx& f,
                                      const std::vector<std::array<std::int64_t, 3>>& coeffs);

    /// Coefficient of x^j as a ring element.
    RElem coeff(std::size_t j) const;
    /// Largest component degree (-1 when all components are zero).
    std::int64_t max_deg() const;

    const Poly& comp(std::size_t i) const { return c_[i]; }
    std::uint64_t p() const noexcept { return c_[0].p(); }
    bool is_zero() const noexcept {
        return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero();
    }

    RPoly operator+(const RPoly& r) const {
        return RPoly(c_[0] + r.c_[0], c_[1] + r.c_[1], c_[2] + r.c_[2]);
    }
    RPoly operator-(const RPoly& r) const {
        return RPoly(c_[0] - r.c_[0], c_[1] - r.c_[1], c_[2] - r.c_[2]);
    }
    RPoly operator*(const RPoly& r) const {
        return RPoly(c_[0] * r.c_[0], c_[1] * r.c_[1], c_[2] * r.c_[2]);
    }

    /// Componentwise monic reciprocal (zero components stay zero).
    RPoly reciprocal() const {
        return RPoly(c_[0].reciprocal(), c_[1].reciprocal(), c_[2].reciprocal());
    }

    friend bool operator==(const RPoly&, const RPoly&) noexcept = default;

  private:
    std::array<Poly, 3> c_;
};

/// Divisibility in R[x]: a | b iff every component of a divides the matching
/// component of b in F_q[x].  A zero component divides only a zero component.
bool divides(const RPoly& a, const RPoly& b);

/// Componentwise monic gcd; errors propagate from the F_q[x] gcd when a
/// component pair is (0, 0).
RPoly gcd(const RPoly& a, const RPoly& b);

/// Componentwise exact quotient; requires divides(b, a).
RPoly exact_div(const RPoly& a, const RPoly& b);

}  // namespace dcc
