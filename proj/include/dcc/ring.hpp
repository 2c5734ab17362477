#pragma once

#include <array>
#include <cstddef>

#include "dcc/field.hpp"

namespace dcc {

/// Element of R = F_q + vF_q + v^2F_q with v^3 = v, stored in the idempotent
/// basis v1 = 1 - v^2, v2 = (v + v^2)/2, v3 = (v^2 - v)/2.  The three basis
/// elements are orthogonal idempotents summing to 1, so addition and
/// multiplication act componentwise.
class RElem {
  public:
    RElem(Fq c1, Fq c2, Fq c3) : c_{c1, c2, c3} {
        if (c1.p() != c2.p() || c1.p() != c3.p())
            throw ContextMismatchError("ring element components from different prime fields");
    }

    /// From standard coordinates a + bv + cv^2.  The idempotent components
    /// are the evaluations at v = 0, 1, -1: (a, a+b+c, a-b+c).
    static RElem from_standard(const Fq& a, const Fq& b, const Fq& c) {
        return RElem(a, a + b + c, a - b + c);
    }

    /// Inverse of from_standard: returns (a, b, c) with this == a + bv + cv^2.
    std::array<Fq, 3> to_standard() const {
        const Fq half = Fq::raw((p() + 1) / 2, p());  // 1/2 in odd characteristic
        const Fq a = c_[0];
        const Fq b = (c_[1] - c_[2]) * half;
        const Fq c = (c_[1] + c_[2]) * half - c_[0];
        return {a, b, c};
    }

    static RElem zero(const FieldCtx& f) { return RElem(f.zero(), f.zero(), f.zero()); }
    static RElem one(const FieldCtx& f) { return RElem(f.one(), f.one(), f.one()); }

    /// Projection onto idempotent component i (0-based: 0 -> v1, 1 -> v2, 2 -> v3).
    const Fq& comp(std::size_t i) const { return c_[i]; }

    std::uint64_t p() const noexcept { return c_[0].p(); }
    bool is_zero() const noexcept {
        return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero();
    }

    RElem operator+(const RElem& r) const {
        return RElem(c_[0] + r.c_[0], c_[1] + r.c_[1], c_[2] + r.c_[2]);
    }
    RElem operator-(const RElem& r) const {
        return RElem(c_[0] - r.c_[0], c_[1] - r.c_[1], c_[2] - r.c_[2]);
    }
    RElem operator*(const RElem& r) const {
        return RElem(c_[0] * r.c_[0], c_[1] * r.c_[1], c_[2] * r.c_[2]);
    }
    RElem& operator+=(const RElem& r) { return *this = *this + r; }

    friend bool operator==(const RElem&, const RElem&) noexcept = default;

  private:
    std::array<Fq, 3> c_;
};

}  // namespace dcc
