#include "dcc/rpoly.hpp"

namespace dcc {

RPoly::RPoly(Poly f1, Poly f2, Poly f3) : c_{std::move(f1), std::move(f2), std::move(f3)} {
    if (c_[0].p() != c_[1].p() || c_[0].p() != c_[2].p())
        throw ContextMismatchError("ring polynomial components over different prime fields");
}

RPoly RPoly::from_standard_coeffs(const FieldCtx& f,
                                  const std::vector<std::array<std::int64_t, 3>>& coeffs) {
    std::array<std::vector<std::uint64_t>, 3> comp;
    for (auto& v : comp) v.reserve(coeffs.size());
    for (const auto& [a, b, c] : coeffs) {
        const RElem e = RElem::from_standard(f.from(a), f.from(b), f.from(c));
        for (std::size_t i = 0; i < 3; ++i) comp[i].push_back(e.comp(i).value());
    }
    return RPoly(Poly::from_residues(f.p(), std::move(comp[0])),
                 Poly::from_residues(f.p(), std::move(comp[1])),
                 Poly::from_residues(f.p(), std::move(comp[2])));
}

RElem RPoly::coeff(std::size_t j) const {
    return RElem(Fq::raw(c_[0].coeff(j), p()), Fq::raw(c_[1].coeff(j), p()),
                 Fq::raw(c_[2].coeff(j), p()));
}

std::int64_t RPoly::max_deg() const {
    return std::max({c_[0].deg(), c_[1].deg(), c_[2].deg()});
}

bool divides(const RPoly& a, const RPoly& b) {
    for (std::size_t i = 0; i < 3; ++i)
        if (!divides(a.comp(i), b.comp(i))) return false;
    return true;
}

RPoly gcd(const RPoly& a, const RPoly& b) {
    return RPoly(gcd(a.comp(0), b.comp(0)), gcd(a.comp(1), b.comp(1)),
                 gcd(a.comp(2), b.comp(2)));
}

RPoly exact_div(const RPoly& a, const RPoly& b) {
    std::array<Poly, 3> q{Poly::from_residues(a.p(), {}), Poly::from_residues(a.p(), {}),
                          Poly::from_residues(a.p(), {})};
    for (std::size_t i = 0; i < 3; ++i) {
        auto [quot, rem] = divmod(a.comp(i), b.comp(i));
        if (!rem.is_zero())
            throw InvariantViolationError("exact_div: component " + std::to_string(i + 1) +
                                          " does not divide evenly");
        q[i] = std::move(quot);
    }
    return RPoly(std::move(q[0]), std::move(q[1]), std::move(q[2]));
}

}  // namespace dcc
