#include "dcc/poly.hpp"

#include <algorithm>

namespace dcc {

using modarith::add;
using modarith::inv;
using modarith::mul;
using modarith::neg;
using modarith::sub;

void Poly::prune() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_field(const Poly& rhs) const {
    if (p_ != rhs.p_)
        throw ContextMismatchError("polynomials over different prime fields (p=" +
                                   std::to_string(p_) + " vs p=" + std::to_string(rhs.p_) + ")");
}

Poly Poly::from_ints(const FieldCtx& field, const std::vector<std::int64_t>& coeffs) {
    std::vector<std::uint64_t> c;
    c.reserve(coeffs.size());
    for (std::int64_t v : coeffs) c.push_back(modarith::reduce(v, field.p()));
    return Poly(field.p(), std::move(c));
}

Poly Poly::from_residues(std::uint64_t p, std::vector<std::uint64_t> coeffs) {
    for (std::uint64_t v : coeffs)
        if (v >= p) throw Error("coefficient not reduced mod " + std::to_string(p));
    return Poly(p, std::move(coeffs));
}

Poly Poly::monomial(std::uint64_t p, std::size_t k, std::uint64_t c) {
    std::vector<std::uint64_t> v(k + 1, 0);
    v[k] = c % p;
    return Poly(p, std::move(v));
}

Poly Poly::x_pow_minus_one(std::uint64_t p, std::size_t n) {
    std::vector<std::uint64_t> v(n + 1, 0);
    v[0] = p - 1;
    v[n] = add(v[n], 1, p);  // n = 0 gives the zero polynomial
    return Poly(p, std::move(v));
}

std::uint64_t Poly::leading_coeff() const {
    if (is_zero()) throw DivisionByZeroError("leading coefficient of the zero polynomial");
    return c_.back();
}

std::uint64_t Poly::lowest_coeff() const { return c_[lowest_deg()]; }

std::size_t Poly::lowest_deg() const {
    if (is_zero()) throw DivisionByZeroError("valuation of the zero polynomial");
    std::size_t i = 0;
    while (c_[i] == 0) ++i;
    return i;
}

Poly Poly::operator+(const Poly& rhs) const {
    check_field(rhs);
    std::vector<std::uint64_t> c(std::max(c_.size(), rhs.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = add(coeff(i), rhs.coeff(i), p_);
    return Poly(p_, std::move(c));
}

Poly Poly::operator-(const Poly& rhs) const {
    check_field(rhs);
    std::vector<std::uint64_t> c(std::max(c_.size(), rhs.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = sub(coeff(i), rhs.coeff(i), p_);
    return Poly(p_, std::move(c));
}

Poly Poly::operator*(const Poly& rhs) const {
    check_field(rhs);
    if (is_zero() || rhs.is_zero()) return Poly(p_, {});
    std::vector<std::uint64_t> c(c_.size() + rhs.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j)
            c[i + j] = add(c[i + j], mul(c_[i], rhs.c_[j], p_), p_);
    }
    return Poly(p_, std::move(c));
}

Poly Poly::operator-() const {
    std::vector<std::uint64_t> c(c_);
    for (auto& v : c) v = neg(v, p_);
    return Poly(p_, std::move(c));
}

Poly Poly::scaled(std::uint64_t s) const {
    std::vector<std::uint64_t> c(c_);
    for (auto& v : c) v = mul(v, s % p_, p_);
    return Poly(p_, std::move(c));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(inv(leading_coeff(), p_));
}

Poly Poly::reversal() const {
    std::vector<std::uint64_t> c(c_.rbegin(), c_.rend());
    return Poly(p_, std::move(c));
}

Poly Poly::reciprocal() const {
    if (is_zero()) return *this;
    return reversal().scaled(inv(lowest_coeff(), p_));
}

std::uint64_t Poly::evaluate(std::uint64_t x) const {
    std::uint64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = add(mul(acc, x % p_, p_), *it, p_);
    return acc;
}

DivModResult divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    const std::uint64_t p = a.p();
    if (a.p() != b.p())
        throw ContextMismatchError("polynomial division across different prime fields");
    if (a.deg() < b.deg()) return {Poly::from_residues(p, {}), a};

    std::vector<std::uint64_t> rem(a.coeffs());
    const std::size_t qlen = static_cast<std::size_t>(a.deg() - b.deg()) + 1;
    std::vector<std::uint64_t> quot(qlen, 0);
    const std::uint64_t lc_inv = inv(b.leading_coeff(), p);
    const std::size_t bd = static_cast<std::size_t>(b.deg());

    for (std::size_t i = rem.size(); i-- > bd;) {
        if (rem[i] == 0) continue;
        const std::uint64_t f = mul(rem[i], lc_inv, p);
        quot[i - bd] = f;
        for (std::size_t j = 0; j <= bd; ++j)
            rem[i - bd + j] = sub(rem[i - bd + j], mul(f, b.coeff(j), p), p);
    }
    return {Poly::from_residues(p, std::move(quot)), Poly::from_residues(p, std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

bool divides(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.is_zero();
    return (b % a).is_zero();
}

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw UndefinedGcdError("gcd(0, 0) is undefined");
    Poly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Poly r2 = r0 % r1;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return r0.monic();
}

ExtGcdResult ext_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw UndefinedGcdError("gcd(0, 0) is undefined");
    const std::uint64_t p = a.p();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(p, 1), s1 = Poly::from_residues(p, {});
    Poly t0 = Poly::from_residues(p, {}), t1 = Poly::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const std::uint64_t c = inv(r0.leading_coeff(), p);
    return {r0.scaled(c), s0.scaled(c), t0.scaled(c)};
}

Poly inv_mod(const Poly& a, const Poly& m) {
    if (m.deg() < 1) throw NotInvertibleError("modulus must have positive degree");
    const Poly ar = a % m;
    if (ar.is_zero()) throw NotInvertibleError("zero is not invertible");
    auto [g, s, t] = ext_gcd(ar, m);
    if (!g.is_one())
        throw NotInvertibleError("element shares the factor gcd != 1 with the modulus");
    return s % m;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus) {
    if (modulus.is_zero()) throw DivisionByZeroError("reduction modulo the zero polynomial");
    return (a * b) % modulus;
}

Poly omega(std::uint64_t p, std::uint64_t k, std::uint64_t arg_power) {
    if (k < 1 || arg_power < 1) throw Error("omega requires k >= 1 and arg_power >= 1");
    std::vector<std::uint64_t> c((k - 1) * arg_power + 1, 0);
    for (std::uint64_t i = 0; i < k; ++i) c[i * arg_power] = 1;
    return Poly::from_residues(p, std::move(c));
}

}  // namespace dcc
