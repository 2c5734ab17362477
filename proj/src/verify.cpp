#include "dcc/verify.hpp"

#include <set>
#include <sstream>

#include "dcc/dual.hpp"
#include "dcc/genmat.hpp"
#include "dcc/textio.hpp"

namespace dcc {

Poly random_poly(Rng& rng, const FieldCtx& field, std::int64_t max_deg) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(max_deg) + 1, 0);
    for (auto& v : c) v = rng.below(field.p());
    return Poly::from_residues(field.p(), std::move(c));
}

Poly random_divisor_of_xn_minus_1(Rng& rng, const FieldCtx& field, std::uint32_t N) {
    const Poly xn1 = Poly::x_pow_minus_one(field.p(), N);
    const std::uint64_t choice = rng.below(8);
    if (choice == 0) return Poly::constant(field.p(), 1);
    if (choice == 1) return xn1;
    Poly d = gcd(xn1, random_poly(rng, field, static_cast<std::int64_t>(N) - 1));
    if (rng.chance(1, 2)) {
        const Poly rest = xn1 / d;
        if (rest.deg() >= 1)
            d = d * gcd(rest, random_poly(rng, field, rest.deg() - 1));
    }
    return d.monic();
}

CodeSpec random_code(Rng& rng, const FieldCtx& field, std::uint32_t m, std::uint32_t n) {
    const std::uint64_t p = field.p();
    const Poly xn1 = Poly::x_pow_minus_one(p, n);
    std::array<Poly, 3> io{Poly(field), Poly(field), Poly(field)};
    std::array<Poly, 3> el{Poly(field), Poly(field), Poly(field)};
    std::array<Poly, 3> th{Poly(field), Poly(field), Poly(field)};
    for (std::size_t i = 0; i < 3; ++i) {
        io[i] = random_divisor_of_xn_minus_1(rng, field, m);
        th[i] = random_divisor_of_xn_minus_1(rng, field, n);
        if (!rng.chance(1, 4)) {
            // smallest ell the cross condition allows, times a random factor
            const Poly base = io[i] / gcd(io[i], xn1 / th[i]);
            el[i] = (base * random_poly(rng, field, io[i].deg() - base.deg())) % io[i];
        }
    }
    return CodeSpec::make(field, m, n, RPoly(io[0], io[1], io[2]), RPoly(el[0], el[1], el[2]),
                          RPoly(th[0], th[1], th[2]));
}

namespace {

struct Failure {
    std::string detail;
};

void check(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

std::vector<std::uint64_t> shift_flat(const std::vector<std::uint64_t>& v, std::size_t m,
                                      std::size_t n) {
    std::vector<std::uint64_t> out(v.size());
    for (std::size_t j = 0; j < m; ++j) out[(j + 1) % m] = v[j];
    for (std::size_t j = 0; j < n; ++j) out[m + (j + 1) % n] = v[m + j];
    return out;
}

void check_shift_closure(const CodeSpec& code) {
    for (std::size_t i = 0; i < 3; ++i) {
        const FqMatrix g = natural_generator_matrix(code, i);
        const Echelon e = reduced_echelon(g);
        for (std::size_t r = 0; r < g.rows(); ++r)
            check(e.contains(shift_flat(g.row(r), code.m(), code.n())),
                  "component " + std::to_string(i + 1) + " is not closed under the shift");
        const FqMatrix ns = nullspace(g);
        const Echelon ne = reduced_echelon(ns);
        for (std::size_t r = 0; r < ns.rows(); ++r)
            check(ne.contains(shift_flat(ns.row(r), code.m(), code.n())),
                  "dual component " + std::to_string(i + 1) + " is not closed under the shift");
    }
    check(contains(code, shifted(code.left_generator_word())),
          "shift of (iota|0) left the code");
    check(contains(code, shifted(code.cross_generator_word())),
          "shift of (ell|theta) left the code");
}

void check_standardized(const CodeSpec& code) {
    for (std::size_t i = 0; i < 3; ++i) {
        const StandardizedForm sf = standardized_form(code, i);
        const auto& w = sf.col_widths;
        const std::size_t m = code.m(), n = code.n();
        check(w[0] + w[1] + w[2] == m && w[3] + w[4] + w[5] == n, "column bands do not tile");
        std::array<std::size_t, 7> off{};
        for (std::size_t b = 0; b < 6; ++b) off[b + 1] = off[b] + w[b];
        const std::size_t h1 = sf.row_heights[0], h2 = sf.row_heights[1],
                          h3 = sf.row_heights[2];
        check(sf.mat.rows() == h1 + h2 + h3, "row bands do not tile");
        check(h2 == sf.k && w[1] == sf.k && w[4] == sf.k, "k bands inconsistent");

        auto is_identity = [&](std::size_t r0, std::size_t c0, std::size_t sz) {
            for (std::size_t r = 0; r < sz; ++r)
                for (std::size_t c = 0; c < sz; ++c)
                    if (sf.mat.at(r0 + r, c0 + c) != (r == c ? 1u : 0u)) return false;
            return true;
        };
        auto is_zero_block = [&](std::size_t r0, std::size_t rs, std::size_t c0,
                                 std::size_t cs) {
            for (std::size_t r = 0; r < rs; ++r)
                for (std::size_t c = 0; c < cs; ++c)
                    if (sf.mat.at(r0 + r, c0 + c) != 0) return false;
            return true;
        };
        check(is_identity(0, off[0], h1), "top identity block missing");
        check(is_zero_block(0, h1, off[3], n), "top rows touch the right block");
        check(is_zero_block(h1, h2, off[0], w[0]), "middle rows touch the leading identity");
        check(is_identity(h1, off[4], sf.k), "middle identity block missing");
        check(is_zero_block(h1, h2, off[5], w[5]), "middle rows touch the trailing band");
        check(is_zero_block(h1 + h2, h3, off[0], m), "bottom rows touch the left block");
        check(is_identity(h1 + h2, off[5], h3), "bottom identity block missing");

        std::vector<std::size_t> b1_cols(sf.k);
        for (std::size_t c = 0; c < sf.k; ++c) b1_cols[c] = off[1] + c;
        FqMatrix b1(sf.mat.p(), 0, sf.k);
        for (std::size_t r = 0; r < sf.k; ++r) {
            std::vector<std::uint64_t> row(sf.k);
            for (std::size_t c = 0; c < sf.k; ++c) row[c] = sf.mat.at(h1 + r, b1_cols[c]);
            b1.append_row(row);
        }
        check(rank(b1) == sf.k, "B1 block is singular");

        const FqMatrix permuted_natural =
            natural_generator_matrix(code, i).select_columns(sf.col_perm);
        check(same_row_space(permuted_natural, sf.mat),
              "standardized form changed the row space");

        const FqMatrix hp = parity_check_permuted(sf);
        check((sf.mat * hp.transposed()).is_zero(), "G H^t != 0 in permuted coordinates");
        check(rank(hp) + rank(sf.mat) == m + n, "rank(G) + rank(H) != m + n");
    }
    const auto gens = natural_generator_matrices(code);
    const auto checks = parity_check_matrices(code);
    for (std::size_t i = 0; i < 3; ++i)
        check((gens[i] * checks[i].transposed()).is_zero(), "G H^t != 0 in natural coordinates");
}

void check_counts_small_enum(const CodeSpec& code) {
    const std::uint64_t dim = code_dimension(code);
    long double size = 1;
    for (std::uint64_t i = 0; i < dim; ++i) size *= static_cast<long double>(code.q());
    if (size > 1024) return;

    const auto words = enumerate_codewords(code, 2048);
    std::uint64_t expect = 1;
    for (std::uint64_t i = 0; i < dim; ++i) expect *= code.q();
    check(words.size() == expect, "enumeration count != q^dim");
    std::set<std::string> distinct;
    for (const auto& wd : words) {
        distinct.insert(codeword_string(wd));
        check(contains(code, wd), "enumerated word fails membership");
        check(contains(code, shifted(wd)), "shift of enumerated word fails membership");
    }
    check(distinct.size() == words.size(), "enumeration repeated a word");
}

void check_degree_identities(const CodeSpec& code, const CodeSpec& dual) {
    for (std::size_t i = 0; i < 3; ++i) {
        const std::int64_t dg = gcd(code.iota().comp(i), code.ell().comp(i)).deg();
        check(dual.iota().comp(i).deg() == static_cast<std::int64_t>(code.m()) - dg,
              "deg(dual iota) != m - deg gcd(iota, ell)");
        check(dual.theta().comp(i).deg() ==
                  static_cast<std::int64_t>(code.n()) - code.iota().comp(i).deg() -
                      code.theta().comp(i).deg() + dg,
              "deg(dual theta) != n - deg iota - deg theta + deg gcd");
    }
}

void check_separable(const CodeSpec& code, const CodeSpec& dual) {
    if (!is_separable(code)) {
        check(!code.ell().is_zero(), "inseparable code with ell = 0");
        return;
    }
    check(code.ell().is_zero(), "separable code with ell != 0");
    check(is_separable(dual), "dual of a separable code is not separable");
    const std::uint64_t p = code.q();
    const Poly xm1 = Poly::x_pow_minus_one(p, code.m());
    const Poly xn1 = Poly::x_pow_minus_one(p, code.n());
    std::array<Poly, 3> di{Poly::from_residues(p, {}), Poly::from_residues(p, {}),
                           Poly::from_residues(p, {})};
    std::array<Poly, 3> dt{Poly::from_residues(p, {}), Poly::from_residues(p, {}),
                           Poly::from_residues(p, {})};
    for (std::size_t i = 0; i < 3; ++i) {
        di[i] = xm1 / code.iota().comp(i).reciprocal();
        dt[i] = xn1 / code.theta().comp(i).reciprocal();
    }
    const CodeSpec split =
        CodeSpec::make(code.field(), code.m(), code.n(), RPoly(di[0], di[1], di[2]),
                       RPoly::zero(code.field()), RPoly(dt[0], dt[1], dt[2]));
    check(dual == split, "separable dual does not match the split closed form");
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opts) {
    VerifyReport report;
    Rng rng(opts.seed);

    const std::vector<std::string> names = {
        "construct: random triple accepted",
        "dim: formula equals measured rank",
        "count: exponents equal measured ranks",
        "enum: small-code enumeration agrees",
        "shift: code and dual closed under shift",
        "stdform: block shape and parity checks",
        "dual: formula equals nullspace",
        "dual: pairing orthogonality and dimensions",
        "dual: double dual returns the code",
        "dual: degree identities",
        "dual: separable codes split",
        "canon: generators round-trip",
    };
    for (const auto& nm : names) report.suites.push_back({nm, 0, 0});
    auto suite = [&](std::size_t idx) -> SuiteResult& { return report.suites[idx]; };

    for (std::uint64_t case_idx = 0; case_idx < opts.cases && report.ok; ++case_idx) {
        const std::uint64_t q = opts.qset[rng.below(opts.qset.size())];
        const FieldCtx field(q);
        const std::uint32_t m = 1 + static_cast<std::uint32_t>(rng.below(opts.max_m));
        const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(opts.max_n));

        std::size_t step = 0;
        std::string spec_text = "q=" + std::to_string(q) + " m=" + std::to_string(m) +
                                " n=" + std::to_string(n);
        try {
            suite(0).total++;
            const CodeSpec code = random_code(rng, field, m, n);
            spec_text = serialize_code_spec(code);
            suite(0).pass++;

            step = 1;
            suite(1).total++;
            code_dimension(code);  // throws on formula/rank mismatch
            suite(1).pass++;

            step = 2;
            suite(2).total++;
            code_counts(code);
            suite(2).pass++;

            step = 3;
            suite(3).total++;
            check_counts_small_enum(code);
            suite(3).pass++;

            step = 4;
            suite(4).total++;
            check_shift_closure(code);
            suite(4).pass++;

            step = 5;
            suite(5).total++;
            check_standardized(code);
            suite(5).pass++;

            step = 6;
            suite(6).total++;
            DualResult fd = dual_code(code, DualMethod::formula);
            if (opts.mutate_dual_formula) {
                // fault injection: bump the multiplier on component 1
                const Poly bump = Poly::x_pow_minus_one(q, code.m()) /
                                  code.iota().comp(0).reciprocal();
                RPoly ell_bar = RPoly(fd.code.ell().comp(0) + bump, fd.code.ell().comp(1),
                                      fd.code.ell().comp(2));
                fd.code = CodeSpec::make(field, code.m(), code.n(), dual_iota(code),
                                         std::move(ell_bar), dual_theta(code));
            }
            const DualResult nd = dual_code(code, DualMethod::nullspace);
            check(fd.code == nd.code, "closed-form dual differs from the nullspace dual");
            for (std::size_t i = 0; i < 3; ++i)
                check(same_row_space(natural_generator_matrix(fd.code, i),
                                     nullspace(natural_generator_matrix(code, i))),
                      "closed-form dual rows do not span the nullspace");
            suite(6).pass++;

            step = 7;
            suite(7).total++;
            const DualityReport dr = verify_duality(code, fd.code);
            check(dr.pass, dr.detail);
            suite(7).pass++;

            step = 8;
            suite(8).total++;
            const CodeSpec dd = dual_code(fd.code, DualMethod::formula).code;
            check(dd == code, "double dual differs from the code");
            suite(8).pass++;

            step = 9;
            suite(9).total++;
            check_degree_identities(code, fd.code);
            suite(9).pass++;

            step = 10;
            suite(10).total++;
            check_separable(code, fd.code);
            suite(10).pass++;

            step = 11;
            suite(11).total++;
            const CodeSpec canon = canonicalize(
                field, m, n, {code.left_generator_word(), code.cross_generator_word()});
            check(canon == code, "canonicalizing the generators changed the code");
            suite(11).pass++;

            // closed-form comparison for the ell_bar multiplier (statistics only)
            const DualEll de = dual_ell(code);
            for (std::size_t i = 0; i < 3; ++i) {
                if (code.ell().comp(i).is_zero()) continue;
                report.rho_comparable++;
                const Poly it_star = code.iota_tilde(i).reciprocal();
                const std::size_t e = code.l() - code.theta().comp(i).deg() +
                                      code.iota().comp(i).deg();
                const Poly lead = Poly::monomial(q, e);
                try {
                    const Poly stmt = mulmod(-lead, inv_mod(it_star % it_star, it_star), it_star);
                    if (stmt == de.rho.comp(i)) report.rho_stmt_matches++;
                } catch (const Error&) {
                }
                try {
                    const Poly proof = mulmod(
                        -lead, inv_mod(code.ell_tilde(i).reciprocal(), it_star), it_star);
                    if (proof == de.rho.comp(i)) report.rho_proof_matches++;
                } catch (const Error&) {
                }
            }
        } catch (const Failure& f) {
            report.ok = false;
            report.counterexample = "case " + std::to_string(case_idx) + ", " +
                                    report.suites[step].name + ": " + f.detail + "\n" +
                                    spec_text;
        } catch (const Error& e) {
            report.ok = false;
            report.counterexample = "case " + std::to_string(case_idx) + ", " +
                                    report.suites[step].name + ": " + e.what() + "\n" +
                                    spec_text;
        }
    }

    std::ostringstream log;
    log << "verify: cases=" << opts.cases << " seed=" << opts.seed << " qset=";
    for (std::size_t i = 0; i < opts.qset.size(); ++i)
        log << (i ? "," : "") << opts.qset[i];
    log << " max_m=" << opts.max_m << " max_n=" << opts.max_n << "\n";
    for (const auto& s : report.suites)
        log << s.name << ": " << s.pass << "/" << s.total << "\n";
    log << "rho closed forms: comparable=" << report.rho_comparable
        << " statement=" << report.rho_stmt_matches << " proof=" << report.rho_proof_matches
        << "\n";
    log << "result: " << (report.ok ? "PASS" : "FAIL") << "\n";
    if (!report.ok) log << report.counterexample << "\n";
    report.log = log.str();
    return report;
}

}  // namespace dcc
