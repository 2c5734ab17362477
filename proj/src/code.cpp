#include "dcc/code.hpp"

#include <algorithm>
#include <numeric>

#include "dcc/genmat.hpp"

namespace dcc {

namespace {

const char* comp_name(std::size_t i) {
    static const char* names[3] = {"v1", "v2", "v3"};
    return names[i];
}

std::vector<RElem> block_from_components(const FieldCtx& f, const Poly& f1, const Poly& f2,
                                         const Poly& f3, std::size_t len) {
    std::vector<RElem> out;
    out.reserve(len);
    for (std::size_t j = 0; j < len; ++j)
        out.emplace_back(Fq::raw(f1.coeff(j), f.p()), Fq::raw(f2.coeff(j), f.p()),
                         Fq::raw(f3.coeff(j), f.p()));
    return out;
}

}  // namespace

Codeword Codeword::zero(const FieldCtx& f, std::uint32_t m, std::uint32_t n) {
    Codeword w;
    w.left.assign(m, RElem::zero(f));
    w.right.assign(n, RElem::zero(f));
    return w;
}

bool Codeword::is_zero() const {
    for (const auto& e : left)
        if (!e.is_zero()) return false;
    for (const auto& e : right)
        if (!e.is_zero()) return false;
    return true;
}

Codeword shifted(const Codeword& c) {
    Codeword out = c;
    if (!out.left.empty()) std::rotate(out.left.rbegin(), out.left.rbegin() + 1, out.left.rend());
    if (!out.right.empty())
        std::rotate(out.right.rbegin(), out.right.rbegin() + 1, out.right.rend());
    return out;
}

RElem inner_product(const Codeword& c, const Codeword& d) {
    if (c.left.size() != d.left.size() || c.right.size() != d.right.size())
        throw DimensionError("inner product of words with different block lengths");
    const FieldCtx f(c.left.empty() ? c.right.front().p() : c.left.front().p());
    RElem acc = RElem::zero(f);
    for (std::size_t i = 0; i < c.left.size(); ++i) acc += c.left[i] * d.left[i];
    for (std::size_t j = 0; j < c.right.size(); ++j) acc += c.right[j] * d.right[j];
    return acc;
}

Poly block_component_poly(const std::vector<RElem>& block, std::size_t i) {
    if (block.empty()) throw DimensionError("empty codeword block");
    std::vector<std::uint64_t> c;
    c.reserve(block.size());
    for (const auto& e : block) c.push_back(e.comp(i).value());
    return Poly::from_residues(block.front().p(), std::move(c));
}

CodeSpec CodeSpec::make(const FieldCtx& field, std::uint32_t m, std::uint32_t n, RPoly iota,
                        RPoly ell, RPoly theta) {
    if (m < 1 || n < 1) throw InvalidGeneratorError("block lengths must be >= 1");
    if (iota.p() != field.p() || ell.p() != field.p() || theta.p() != field.p())
        throw ContextMismatchError("generator polynomials over a different field");

    const std::uint64_t p = field.p();
    const Poly xm1 = Poly::x_pow_minus_one(p, m);
    const Poly xn1 = Poly::x_pow_minus_one(p, n);

    std::array<Poly, 3> io{Poly(field), Poly(field), Poly(field)};
    std::array<Poly, 3> el{Poly(field), Poly(field), Poly(field)};
    std::array<Poly, 3> th{Poly(field), Poly(field), Poly(field)};

    for (std::size_t i = 0; i < 3; ++i) {
        // generators live in the quotient rings, so reduce first; a component
        // that reduces to zero generates the zero ideal and is represented by
        // x^m-1 (resp. x^n-1) to keep the degree bookkeeping total
        Poly io_i = iota.comp(i) % xm1;
        Poly th_i = theta.comp(i) % xn1;
        if (io_i.is_zero()) io_i = xm1;
        if (th_i.is_zero()) th_i = xn1;
        io_i = io_i.monic();
        th_i = th_i.monic();

        if (!divides(io_i, xm1))
            throw InvalidGeneratorError(std::string("iota.") + comp_name(i) +
                                        " does not divide x^m-1");
        if (!divides(th_i, xn1))
            throw InvalidGeneratorError(std::string("theta.") + comp_name(i) +
                                        " does not divide x^n-1");

        // reduce ell below iota (repeated leading-term cancellation = long
        // division); this moves the generator by multiples of (iota | 0)
        Poly el_i = (ell.comp(i) % xm1) % io_i;

        const Poly cofactor = xn1 / th_i;
        if (!divides(io_i, cofactor * el_i))
            throw InvalidGeneratorError(std::string("component ") + comp_name(i) +
                                        ": iota does not divide ((x^n-1)/theta)*ell");

        io[i] = std::move(io_i);
        el[i] = std::move(el_i);
        th[i] = std::move(th_i);
    }

    const std::uint32_t l = std::lcm(m, n);
    return CodeSpec(field, m, n, l, RPoly(std::move(io[0]), std::move(io[1]), std::move(io[2])),
                    RPoly(std::move(el[0]), std::move(el[1]), std::move(el[2])),
                    RPoly(std::move(th[0]), std::move(th[1]), std::move(th[2])));
}

Poly CodeSpec::gcd_iota_ell(std::size_t i) const { return gcd(iota_.comp(i), ell_.comp(i)); }

std::size_t CodeSpec::k(std::size_t i) const {
    return static_cast<std::size_t>(iota_.comp(i).deg() - gcd_iota_ell(i).deg());
}

Poly CodeSpec::iota_tilde(std::size_t i) const { return iota_.comp(i) / gcd_iota_ell(i); }

Poly CodeSpec::ell_tilde(std::size_t i) const {
    if (ell_.comp(i).is_zero()) return ell_.comp(i);
    return ell_.comp(i) / gcd_iota_ell(i);
}

Poly CodeSpec::right_kernel_gen(std::size_t i) const {
    const Poly h = iota_tilde(i) * theta_.comp(i);
    const Poly xn1 = Poly::x_pow_minus_one(q(), n_);
    if (!divides(h, xn1))
        throw InvariantViolationError("right kernel generator does not divide x^n-1");
    return h.is_zero() ? h : h.monic();
}

Codeword CodeSpec::left_generator_word() const {
    // generators live in the quotient rings: x^m-1 reduces to the zero block
    const Poly xm1 = Poly::x_pow_minus_one(q(), m_);
    Codeword w = Codeword::zero(field_, m_, n_);
    w.left = block_from_components(field_, iota_.comp(0) % xm1, iota_.comp(1) % xm1,
                                   iota_.comp(2) % xm1, m_);
    return w;
}

Codeword CodeSpec::cross_generator_word() const {
    const Poly xn1 = Poly::x_pow_minus_one(q(), n_);
    Codeword w;
    w.left = block_from_components(field_, ell_.comp(0), ell_.comp(1), ell_.comp(2), m_);
    w.right = block_from_components(field_, theta_.comp(0) % xn1, theta_.comp(1) % xn1,
                                    theta_.comp(2) % xn1, n_);
    return w;
}

bool contains(const CodeSpec& code, const Codeword& word) {
    if (word.left.size() != code.m() || word.right.size() != code.n())
        throw DimensionError("codeword block lengths do not match the code");
    const auto gens = natural_generator_matrices(code);
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<std::uint64_t> v;
        v.reserve(code.m() + code.n());
        for (const auto& e : word.left) v.push_back(e.comp(i).value());
        for (const auto& e : word.right) v.push_back(e.comp(i).value());
        if (!reduced_echelon(gens[i]).contains(std::move(v))) return false;
    }
    return true;
}

void for_each_codeword(const CodeSpec& code, std::uint64_t cap,
                       const std::function<bool(const Codeword&)>& fn) {
    const std::uint64_t p = code.q();
    const std::uint32_t m = code.m(), n = code.n();
    const auto gens = natural_generator_matrices(code);
    std::array<Echelon, 3> bases{reduced_echelon(gens[0]), reduced_echelon(gens[1]),
                                 reduced_echelon(gens[2])};

    std::size_t dim = 0;
    for (const auto& b : bases) dim += b.rank();
    long double total = 1;
    for (std::size_t i = 0; i < dim; ++i) total *= static_cast<long double>(p);
    if (total > static_cast<long double>(cap))
        throw TooLargeError("codeword enumeration needs " + std::to_string(p) + "^" +
                                std::to_string(dim) + " words, cap is " + std::to_string(cap),
                            total);

    // one accumulator row per component, base-p odometer over all basis rows
    std::array<std::vector<std::uint64_t>, 3> acc;
    for (auto& a : acc) a.assign(m + n, 0);
    struct Digit {
        std::size_t comp, row;
    };
    std::vector<Digit> digit_of;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t r = 0; r < bases[i].rank(); ++r) digit_of.push_back({i, r});
    std::vector<std::uint64_t> digits(dim, 0);

    const FieldCtx f(p);
    Codeword w = Codeword::zero(f, m, n);
    for (;;) {
        for (std::size_t j = 0; j < m; ++j)
            w.left[j] = RElem(Fq::raw(acc[0][j], p), Fq::raw(acc[1][j], p), Fq::raw(acc[2][j], p));
        for (std::size_t j = 0; j < n; ++j)
            w.right[j] = RElem(Fq::raw(acc[0][m + j], p), Fq::raw(acc[1][m + j], p),
                               Fq::raw(acc[2][m + j], p));
        if (!fn(w)) return;

        std::size_t i = 0;
        for (; i < dim; ++i) {
            const auto [ci, ri] = digit_of[i];
            for (std::size_t c = 0; c < m + n; ++c)
                acc[ci][c] = modarith::add(acc[ci][c], bases[ci].mat.at(ri, c), p);
            digits[i] += 1;
            if (digits[i] < p) break;
            digits[i] = 0;
        }
        if (i == dim) return;
    }
}

std::vector<Codeword> enumerate_codewords(const CodeSpec& code, std::uint64_t cap) {
    std::vector<Codeword> out;
    for_each_codeword(code, cap, [&](const Codeword& w) {
        out.push_back(w);
        return true;
    });
    return out;
}

ComponentGenerators canonicalize_component(const FieldCtx& field, std::uint32_t m,
                                           std::uint32_t n,
                                           const std::vector<std::pair<Poly, Poly>>& words) {
    const std::uint64_t p = field.p();
    const Poly xm1 = Poly::x_pow_minus_one(p, m);
    const Poly xn1 = Poly::x_pow_minus_one(p, n);

    // right ideal: running gcd of the right blocks with x^n-1, with a module
    // witness kept alongside so the left companion of the gcd is available
    Poly g = xn1;
    Poly wit_left(field), wit_right(field);
    for (const auto& [a, b] : words) {
        const Poly br = b % xn1;
        if (br.is_zero()) continue;
        auto [g2, s, t] = ext_gcd(g, br);
        wit_left = (s * wit_left + t * a) % xm1;
        wit_right = (s * wit_right + t * br) % xn1;
        g = std::move(g2);
    }

    Poly theta = g;
    Poly ell(field);
    if (theta != xn1) {
        if (wit_right != theta)
            throw InvariantViolationError("gcd witness lost track of the right generator");
        ell = wit_left;
    }

    // left-only ideal: kernel words obtained by cancelling each word's right
    // block against the witness, plus ((x^n-1)/theta) * witness
    Poly iota = xm1;
    if (theta != xn1) iota = gcd(iota, mulmod(xn1 / theta, ell, xm1));
    for (const auto& [a, b] : words) {
        const Poly br = b % xn1;
        Poly kernel_left = a % xm1;
        if (!br.is_zero()) {
            const Poly f = br / theta;  // exact: br lies in the ideal <theta>
            kernel_left = (kernel_left - f * ell) % xm1;
        }
        if (!kernel_left.is_zero()) iota = gcd(iota, kernel_left);
    }

    return {std::move(iota), std::move(ell), std::move(theta)};
}

CodeSpec canonicalize(const FieldCtx& field, std::uint32_t m, std::uint32_t n,
                      const std::vector<Codeword>& spanning) {
    std::array<ComponentGenerators, 3> comp{
        ComponentGenerators{Poly(field), Poly(field), Poly(field)},
        ComponentGenerators{Poly(field), Poly(field), Poly(field)},
        ComponentGenerators{Poly(field), Poly(field), Poly(field)}};
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<std::pair<Poly, Poly>> words;
        words.reserve(spanning.size());
        for (const Codeword& w : spanning) {
            if (w.left.size() != m || w.right.size() != n)
                throw DimensionError("spanning word block lengths do not match");
            words.emplace_back(block_component_poly(w.left, i), block_component_poly(w.right, i));
        }
        comp[i] = canonicalize_component(field, m, n, words);
    }
    return CodeSpec::make(field, m, n,
                          RPoly(std::move(comp[0].iota), std::move(comp[1].iota),
                                std::move(comp[2].iota)),
                          RPoly(std::move(comp[0].ell), std::move(comp[1].ell),
                                std::move(comp[2].ell)),
                          RPoly(std::move(comp[0].theta), std::move(comp[1].theta),
                                std::move(comp[2].theta)));
}

RPoly circ(const Codeword& c, const Codeword& d) {
    if (c.left.size() != d.left.size() || c.right.size() != d.right.size())
        throw DimensionError("circ of words with different block lengths");
    const std::size_t m = c.left.size(), n = c.right.size();
    const std::size_t l = std::lcm(m, n);
    const std::uint64_t p = c.left.front().p();
    const Poly xl1 = Poly::x_pow_minus_one(p, l);

    std::array<Poly, 3> out{Poly::from_residues(p, {}), Poly::from_residues(p, {}),
                            Poly::from_residues(p, {})};
    for (std::size_t i = 0; i < 3; ++i) {
        const Poly cl = block_component_poly(c.left, i);
        const Poly cr = block_component_poly(c.right, i);
        const Poly dl = block_component_poly(d.left, i);
        const Poly dr = block_component_poly(d.right, i);
        Poly acc = Poly::from_residues(p, {});
        if (!dl.is_zero()) {
            const std::size_t e = l - 1 - static_cast<std::size_t>(dl.deg());
            acc += cl * omega(p, l / m, m) * Poly::monomial(p, e) * dl.reversal();
        }
        if (!dr.is_zero()) {
            const std::size_t e = l - 1 - static_cast<std::size_t>(dr.deg());
            acc += cr * omega(p, l / n, n) * Poly::monomial(p, e) * dr.reversal();
        }
        out[i] = acc % xl1;
    }
    return RPoly(std::move(out[0]), std::move(out[1]), std::move(out[2]));
}

bool is_separable(const CodeSpec& code) {
    const auto gens = natural_generator_matrices(code);
    std::vector<std::size_t> left_cols(code.m()), right_cols(code.n());
    for (std::size_t j = 0; j < code.m(); ++j) left_cols[j] = j;
    for (std::size_t j = 0; j < code.n(); ++j) right_cols[j] = code.m() + j;

    std::size_t dim = 0, dim_left = 0, dim_right = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        dim += rank(gens[i]);
        dim_left += rank(gens[i].select_columns(left_cols));
        dim_right += rank(gens[i].select_columns(right_cols));
    }
    return dim == dim_left + dim_right;
}

}  // namespace dcc
