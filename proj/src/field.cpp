#include "dcc/field.hpp"

namespace dcc {
namespace modarith {

std::uint64_t pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base, p);
        base = mul(base, base, p);
        e >>= 1;
    }
    return acc;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw DivisionByZeroError("inverse of zero in F_" + std::to_string(p));
    // extended Euclid on (a, p); p prime so gcd is 1
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

}  // namespace modarith

FieldCtx::FieldCtx(std::uint64_t p) : p_(p) {
    if (p < 3 || p % 2 == 0 || !modarith::is_prime(p))
        throw Error("field modulus must be an odd prime >= 3, got " + std::to_string(p));
}

}  // namespace dcc
