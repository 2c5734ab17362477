#pragma once

#include <cstdint>

#include "dcc/errors.hpp"

namespace dcc {

/// Low-level arithmetic on residues in [0, p).  Kept as free functions so the
/// dense polynomial/matrix kernels can work on raw residues.
namespace modarith {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint64_t neg(std::uint64_t a, std::uint64_t p) { return a == 0 ? 0 : p - a; }

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t reduce(std::int64_t v, std::uint64_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r);
}

std::uint64_t pow(std::uint64_t base, std::uint64_t e, std::uint64_t p);

/// Inverse by extended Euclid; throws DivisionByZeroError on 0.
std::uint64_t inv(std::uint64_t a, std::uint64_t p);

bool is_prime(std::uint64_t n);

}  // namespace modarith

class Fq;

/// Arithmetic context for the prime field F_p with p an odd prime.
/// Construction rejects even or composite moduli (2 must be invertible).
class FieldCtx {
  public:
    explicit FieldCtx(std::uint64_t p);

    std::uint64_t p() const noexcept { return p_; }

    Fq zero() const noexcept;
    Fq one() const noexcept;
    /// Reduces an arbitrary signed integer into the field.
    Fq from(std::int64_t v) const noexcept;

    friend bool operator==(const FieldCtx&, const FieldCtx&) noexcept = default;

  private:
    std::uint64_t p_;
};

/// A fully reduced residue in [0, p).  Carries its modulus; operations on
/// operands from different fields throw ContextMismatchError.
class Fq {
  public:
    Fq(const FieldCtx& field, std::int64_t v) noexcept
        : v_(modarith::reduce(v, field.p())), p_(field.p()) {}

    std::uint64_t value() const noexcept { return v_; }
    std::uint64_t p() const noexcept { return p_; }
    bool is_zero() const noexcept { return v_ == 0; }

    Fq operator+(const Fq& rhs) const { return raw(modarith::add(v_, matched(rhs), p_), p_); }
    Fq operator-(const Fq& rhs) const { return raw(modarith::sub(v_, matched(rhs), p_), p_); }
    Fq operator*(const Fq& rhs) const { return raw(modarith::mul(v_, matched(rhs), p_), p_); }
    Fq operator-() const noexcept { return raw(modarith::neg(v_, p_), p_); }

    Fq& operator+=(const Fq& rhs) { return *this = *this + rhs; }
    Fq& operator-=(const Fq& rhs) { return *this = *this - rhs; }
    Fq& operator*=(const Fq& rhs) { return *this = *this * rhs; }

    /// Multiplicative inverse; throws DivisionByZeroError on zero.
    Fq inv() const { return raw(modarith::inv(v_, p_), p_); }

    friend bool operator==(const Fq&, const Fq&) noexcept = default;

    static Fq raw(std::uint64_t v, std::uint64_t p) noexcept { return Fq(v, p, 0); }

  private:
    Fq(std::uint64_t v, std::uint64_t p, int) noexcept : v_(v), p_(p) {}

    std::uint64_t matched(const Fq& rhs) const {
        if (p_ != rhs.p_)
            throw ContextMismatchError("operands from different prime fields (p=" +
                                       std::to_string(p_) + " vs p=" + std::to_string(rhs.p_) + ")");
        return rhs.v_;
    }

    std::uint64_t v_;
    std::uint64_t p_;
};

inline Fq FieldCtx::zero() const noexcept { return Fq::raw(0, p_); }
inline Fq FieldCtx::one() const noexcept { return Fq::raw(1, p_); }
inline Fq FieldCtx::from(std::int64_t v) const noexcept {
    return Fq::raw(modarith::reduce(v, p_), p_);
}

}  // namespace dcc
