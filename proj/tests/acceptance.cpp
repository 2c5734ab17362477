// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.  Exercises the library directly and the CLI binary
// (path injected by the build as DCC_CLI_PATH).

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dcc/dual.hpp"
#include "dcc/genmat.hpp"
#include "dcc/textio.hpp"
#include "dcc/verify.hpp"

using namespace dcc;

namespace {

struct CheckFailed {
    std::string what;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw CheckFailed{what};
}

struct CommandResult {
    int exit_code = -1;
    std::string out;
};

CommandResult run_command(const std::string& cmd) {
    CommandResult res;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    require(pipe != nullptr, "cannot spawn: " + cmd);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    const int status = pclose(pipe);
    res.exit_code = (status >= 256) ? status / 256 : status;  // WEXITSTATUS
    return res;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CodeSpec worked_example(const FieldCtx& f7) {
    return CodeSpec::make(
        f7, 5, 5, RPoly::splat(Poly::from_ints(f7, {1, 1, 1, 1, 1})),
        RPoly::from_standard_coeffs(f7, {{5, 1, 2}, {2, 4, 4}, {3, 6, 0}, {4, 2, 6}}),
        RPoly::from_standard_coeffs(f7, {{6, 0, 0}, {1, 0, 0}}));
}

Codeword random_word(Rng& rng, const FieldCtx& f, std::uint32_t m, std::uint32_t n) {
    Codeword w = Codeword::zero(f, m, n);
    auto rnd = [&] {
        return RElem(Fq::raw(rng.below(f.p()), f.p()), Fq::raw(rng.below(f.p()), f.p()),
                     Fq::raw(rng.below(f.p()), f.p()));
    };
    for (auto& e : w.left) e = rnd();
    for (auto& e : w.right) e = rnd();
    return w;
}

// per-component random combination of the rows of a basis matrix triple
Codeword random_combination(Rng& rng, const FieldCtx& f, std::uint32_t m, std::uint32_t n,
                            const std::array<FqMatrix, 3>& bases) {
    std::array<std::vector<std::uint64_t>, 3> acc;
    for (auto& a : acc) a.assign(m + n, 0);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t r = 0; r < bases[i].rows(); ++r) {
            const std::uint64_t c = rng.below(f.p());
            if (c == 0) continue;
            for (std::size_t j = 0; j < m + n; ++j)
                acc[i][j] = modarith::add(acc[i][j],
                                          modarith::mul(c, bases[i].at(r, j), f.p()), f.p());
        }
    Codeword w = Codeword::zero(f, m, n);
    for (std::uint32_t j = 0; j < m; ++j)
        w.left[j] = RElem(Fq::raw(acc[0][j], f.p()), Fq::raw(acc[1][j], f.p()),
                          Fq::raw(acc[2][j], f.p()));
    for (std::uint32_t j = 0; j < n; ++j)
        w.right[j] = RElem(Fq::raw(acc[0][m + j], f.p()), Fq::raw(acc[1][m + j], f.p()),
                           Fq::raw(acc[2][m + j], f.p()));
    return w;
}

Poly rand_nonzero_poly(Rng& rng, const FieldCtx& f, std::int64_t max_deg) {
    for (;;) {
        Poly g = random_poly(rng, f, max_deg);
        if (!g.is_zero()) return g;
    }
}

RPoly rand_nonzero_rpoly(Rng& rng, const FieldCtx& f, std::int64_t max_deg) {
    return RPoly(rand_nonzero_poly(rng, f, max_deg), rand_nonzero_poly(rng, f, max_deg),
                 rand_nonzero_poly(rng, f, max_deg));
}

const char* kExpectedMatrices =
    "# v1\n"
    "1 1 1 1 1 0 0 0 0 0\n"
    "5 2 3 4 0 6 1 0 0 0\n"
    "0 5 2 3 4 0 6 1 0 0\n"
    "4 0 5 2 3 0 0 6 1 0\n"
    "3 4 0 5 2 0 0 0 6 1\n"
    "\n"
    "# v2\n"
    "1 1 1 1 1 0 0 0 0 0\n"
    "1 3 2 5 0 6 1 0 0 0\n"
    "0 1 3 2 5 0 6 1 0 0\n"
    "5 0 1 3 2 0 0 6 1 0\n"
    "2 5 0 1 3 0 0 0 6 1\n"
    "\n"
    "# v3\n"
    "1 1 1 1 1 0 0 0 0 0\n"
    "6 2 4 1 0 6 1 0 0 0\n"
    "0 6 2 4 1 0 6 1 0 0\n"
    "1 0 6 2 4 0 0 6 1 0\n"
    "4 1 0 6 2 0 0 0 6 1\n";

// ---------------------------------------------------------------- criteria

void criterion1_worked_example() {
    const auto t0 = std::chrono::steady_clock::now();
    const CommandResult res = run_command(std::string(DCC_CLI_PATH) + " example1");
    const double elapsed = seconds_since(t0);
    require(res.exit_code == 0, "example1 exited with " + std::to_string(res.exit_code));
    require(res.out.find(kExpectedMatrices) != std::string::npos,
            "generator matrices are not byte-identical to the expected block");
    require(res.out.find("(4x^3+3x^2+2x+5)v1+(5x^3+2x^2+3x+1)v2+(x^3+4x^2+2x+6)v3") !=
                std::string::npos,
            "ell decomposition line missing");
    for (const char* line : {"v1: [10,5,5]", "v2: [10,5,5]", "v3: [10,5,5]"})
        require(res.out.find(line) != std::string::npos,
                std::string("projection parameters line missing: ") + line);
    require(res.out.find("# methods EQUAL") != std::string::npos,
            "dual method agreement line missing");
    require(elapsed < 5.0, "runtime " + std::to_string(elapsed) + "s exceeds 5s");

    // the distance search really is exhaustive over 7^5 = 16807 vectors
    FieldCtx f7(7);
    const auto gens = natural_generator_matrices(worked_example(f7));
    for (std::size_t i = 0; i < 3; ++i) {
        require(rank(gens[i]) == 5, "component dimension is not 5");
        require(min_distance(gens[i], 16807).value() == 5, "component distance is not 5");
    }
}

VerifyReport corpus_report;  // shared by criteria 2, 3, 4, 7, 8

void criterion2_dual_cross_validation() {
    const auto t0 = std::chrono::steady_clock::now();
    VerifyOptions opts;  // 200 cases, seed 1, q in {3,5,7}, m,n <= 8
    corpus_report = run_verify(opts);
    const double elapsed = seconds_since(t0);
    require(corpus_report.ok, "corpus failed: " + corpus_report.counterexample);
    for (const auto& s : corpus_report.suites)
        if (s.name == "dual: formula equals nullspace")
            require(s.pass == 200 && s.total == 200,
                    "dual cross-validation did not run on all 200 codes");
    require(elapsed < 60.0, "runtime " + std::to_string(elapsed) + "s exceeds 60s");
}

void criterion3_counting_formulas() {
    for (const auto& s : corpus_report.suites) {
        if (s.name == "dim: formula equals measured rank" ||
            s.name == "count: exponents equal measured ranks")
            require(s.pass == 200 && s.total == 200, s.name + " incomplete on the corpus");
    }

    // component cardinalities combine as a product, not a sum: the summation
    // form must fail against enumeration while the product form passes
    FieldCtx f3(3);
    const CodeSpec code = CodeSpec::make(
        f3, 2, 1,
        RPoly(Poly::x_pow_minus_one(3, 2), Poly::from_ints(f3, {2, 1}), Poly::constant(3, 1)),
        RPoly::zero(f3),
        RPoly(Poly::from_ints(f3, {2, 1}), Poly::constant(3, 1), Poly::constant(3, 1)));
    std::array<std::uint64_t, 3> comp_sizes{};
    for (std::size_t i = 0; i < 3; ++i) {
        const std::uint64_t dim_i = rank(natural_generator_matrix(code, i));
        comp_sizes[i] = 1;
        for (std::uint64_t e = 0; e < dim_i; ++e) comp_sizes[i] *= 3;
    }
    const std::uint64_t sum = comp_sizes[0] + comp_sizes[1] + comp_sizes[2];
    const std::uint64_t product = comp_sizes[0] * comp_sizes[1] * comp_sizes[2];
    const std::uint64_t enumerated = enumerate_codewords(code).size();
    require(comp_sizes == std::array<std::uint64_t, 3>{1, 9, 27},
            "test instance lost its intended component sizes");
    require(enumerated == product, "product count law fails against enumeration");
    require(enumerated != sum, "summation count law unexpectedly matches enumeration");
}

void criterion4_degree_formulas() {
    for (const auto& s : corpus_report.suites)
        if (s.name == "dual: degree identities")
            require(s.pass == 200 && s.total == 200, "degree identities incomplete");
}

void criterion5_pairing_equivalence() {
    Rng rng(2024);
    const std::uint64_t qs[3] = {3, 5, 7};
    std::uint64_t checked = 0, orthogonal_pairs = 0;
    while (checked < 600) {
        const FieldCtx f(qs[rng.below(3)]);
        const std::uint32_t m = 1 + static_cast<std::uint32_t>(rng.below(6));
        const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(6));
        const std::uint32_t l = std::lcm(m, n);

        Codeword c = random_word(rng, f, m, n), d = random_word(rng, f, m, n);
        if (rng.chance(1, 2)) {
            // engineered orthogonal pair: a codeword against a dual word
            const CodeSpec code = random_code(rng, f, m, n);
            const auto gens = natural_generator_matrices(code);
            std::array<FqMatrix, 3> duals{nullspace(gens[0]), nullspace(gens[1]),
                                          nullspace(gens[2])};
            c = random_combination(rng, f, m, n, gens);
            d = random_combination(rng, f, m, n, duals);
            std::swap(c, d);  // exercise both argument orders over the loop
        }

        const RPoly pairing = circ(c, d);
        bool all_shifts_orthogonal = true;
        for (std::uint32_t s = 0; s < l; ++s) {
            RElem ip = RElem::zero(f);
            for (std::uint32_t j = 0; j < m; ++j) ip += c.left[j] * d.left[(j + s) % m];
            for (std::uint32_t j = 0; j < n; ++j) ip += c.right[j] * d.right[(j + s) % n];
            all_shifts_orthogonal &= ip.is_zero();
            for (std::size_t i = 0; i < 3; ++i)
                require(pairing.comp(i).coeff(l - 1 - s) == ip.comp(i).value(),
                        "pairing coefficient differs from the shift inner product");
        }
        require(pairing.is_zero() == all_shifts_orthogonal,
                "pairing zero-test disagrees with the shift inner products");
        orthogonal_pairs += all_shifts_orthogonal;
        ++checked;
    }
    require(orthogonal_pairs >= 100, "too few orthogonal pairs exercised the zero side");
}

void criterion6_algebraic_identities() {
    Rng rng(3030);
    const std::uint64_t qs[3] = {3, 5, 7};

    // componentwise divisibility <=> ring divisibility, witnessed by quotients
    for (int it = 0; it < 500; ++it) {
        const FieldCtx f(qs[rng.below(3)]);
        const RPoly a = rand_nonzero_rpoly(rng, f, 4);
        const RPoly e = rand_nonzero_rpoly(rng, f, 3);
        const RPoly b = a * e;
        require(divides(a, b), "a does not divide a*e");
        require(exact_div(b, a) == e, "quotient reconstruction failed");
        for (std::size_t i = 0; i < 3; ++i)
            require(divides(a.comp(i), b.comp(i)), "component does not divide");
        // break one component; divisibility must fail both ways
        const RPoly broken = b + RPoly(Poly::constant(f.p(), 1), Poly(f), Poly(f));
        const bool comp_ok = divides(a.comp(0), broken.comp(0));
        require(divides(a, broken) == (comp_ok && divides(a.comp(1), broken.comp(1)) &&
                                       divides(a.comp(2), broken.comp(2))),
                "ring divisibility disagrees with componentwise divisibility");
    }

    // gcd is componentwise and absorbs common divisors
    for (int it = 0; it < 500; ++it) {
        const FieldCtx f(qs[rng.below(3)]);
        const RPoly d = rand_nonzero_rpoly(rng, f, 3);
        const RPoly a = d * rand_nonzero_rpoly(rng, f, 3);
        const RPoly b = d * rand_nonzero_rpoly(rng, f, 3);
        const RPoly g = gcd(a, b);
        for (std::size_t i = 0; i < 3; ++i)
            require(g.comp(i) == gcd(a.comp(i), b.comp(i)), "gcd is not componentwise");
        require(divides(g, a) && divides(g, b), "gcd does not divide the inputs");
        require(divides(d, g), "a common divisor does not divide the gcd");
    }

    // monic reciprocal is multiplicative
    for (int it = 0; it < 500; ++it) {
        const FieldCtx f(qs[rng.below(3)]);
        const Poly a = rand_nonzero_poly(rng, f, 6), b = rand_nonzero_poly(rng, f, 6);
        require((a * b).reciprocal() == a.reciprocal() * b.reciprocal(),
                "reciprocal is not multiplicative");
    }

    // (x^m-1) * omega_n(x^m) = x^{mn}-1
    for (int it = 0; it < 500; ++it) {
        const FieldCtx f(qs[rng.below(3)]);
        const std::uint64_t mm = 1 + rng.below(8), nn = 1 + rng.below(8);
        require(Poly::x_pow_minus_one(f.p(), mm) * omega(f.p(), nn, mm) ==
                    Poly::x_pow_minus_one(f.p(), mm * nn),
                "omega identity fails");
    }

    // reciprocal is an involution on monic polynomials with nonzero constant term
    for (int it = 0; it < 500; ++it) {
        const FieldCtx f(qs[rng.below(3)]);
        Poly r = rand_nonzero_poly(rng, f, 6).monic();
        if (r.coeff(0) == 0) r += Poly::constant(f.p(), 1 + rng.below(f.p() - 1));
        require(r.reciprocal().reciprocal() == r, "double reciprocal changed the polynomial");
    }
}

void criterion7_closure_properties() {
    for (const auto& s : corpus_report.suites)
        if (s.name == "shift: code and dual closed under shift")
            require(s.pass == 200 && s.total == 200, "shift closure incomplete on the corpus");

    Rng rng(4040);
    FieldCtx f3(3);

    // every codeword of an enumerated code shifts back into the code
    std::uint64_t words_checked = 0;
    for (int it = 0; it < 40; ++it) {
        const std::uint32_t m = 1 + static_cast<std::uint32_t>(rng.below(3));
        const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(3));
        const CodeSpec code = random_code(rng, f3, m, n);
        if (code_dimension(code) > 7) continue;
        for (const Codeword& w : enumerate_codewords(code)) {
            require(contains(code, shifted(w)), "shift of a codeword left the code");
            ++words_checked;
        }
    }
    require(words_checked > 1000, "closure sweep covered too few words");

    // canonicalization reproduces the brute-force shift-linear closure
    for (int it = 0; it < 100; ++it) {
        const std::uint32_t m = 1 + static_cast<std::uint32_t>(rng.below(4));
        const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(4));
        const std::uint32_t l = std::lcm(m, n);
        std::vector<Codeword> words;
        for (std::uint64_t j = 0, cnt = 1 + rng.below(3); j < cnt; ++j)
            words.push_back(random_word(rng, f3, m, n));

        const CodeSpec code = canonicalize(f3, m, n, words);
        std::array<FqMatrix, 3> closure{FqMatrix(3, 0, m + n), FqMatrix(3, 0, m + n),
                                        FqMatrix(3, 0, m + n)};
        for (const Codeword& w0 : words) {
            Codeword w = w0;
            for (std::uint32_t s = 0; s < l; ++s) {
                for (std::size_t i = 0; i < 3; ++i) {
                    std::vector<std::uint64_t> row;
                    for (const auto& e : w.left) row.push_back(e.comp(i).value());
                    for (const auto& e : w.right) row.push_back(e.comp(i).value());
                    closure[i].append_row(row);
                }
                w = shifted(w);
            }
        }
        const auto gens = natural_generator_matrices(code);
        for (std::size_t i = 0; i < 3; ++i)
            require(same_row_space(closure[i], gens[i]),
                    "canonicalization disagrees with the brute-force closure");
    }
}

void criterion8_standardized_forms() {
    for (const auto& s : corpus_report.suites)
        if (s.name == "stdform: block shape and parity checks")
            require(s.pass == 200 && s.total == 200,
                    "standardized form incomplete on the corpus");
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        const char* name;
        std::function<void()> fn;
    };
    const std::vector<Criterion> criteria = {
        {1, "worked-example reproduction ([10,5,5] x3, exact matrices, < 5s)",
         criterion1_worked_example},
        {2, "dual cross-validation on 200 seeded random codes (< 60s)",
         criterion2_dual_cross_validation},
        {3, "counting formulas match measured ranks; product law beats summation",
         criterion3_counting_formulas},
        {4, "dual degree identities on the corpus", criterion4_degree_formulas},
        {5, "pairing zero-test equals shift orthogonality on 600 pairs",
         criterion5_pairing_equivalence},
        {6, "divisibility/gcd/reciprocal/omega/involution identities, 500 each",
         criterion6_algebraic_identities},
        {7, "shift closure and canonicalization closure oracles", criterion7_closure_properties},
        {8, "standardized block forms and parity checks on the corpus",
         criterion8_standardized_forms},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        try {
            c.fn();
            std::cout << "criterion " << c.number << ": PASS - " << c.name << "\n";
        } catch (const CheckFailed& e) {
            ++failures;
            std::cout << "criterion " << c.number << ": FAIL - " << c.name << " (" << e.what
                      << ")\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "criterion " << c.number << ": FAIL - " << c.name << " (" << e.what()
                      << ")\n";
        }
    }
    if (failures == 0 && corpus_report.rho_comparable > 0)
        std::cout << "note: ell_bar multiplier closed forms matched the congruence solution on "
                  << corpus_report.rho_proof_matches << "/" << corpus_report.rho_comparable
                  << " components (proof form) and " << corpus_report.rho_stmt_matches << "/"
                  << corpus_report.rho_comparable << " (statement form)\n";
    std::cout << (failures == 0 ? "acceptance: ALL PASS" : "acceptance: FAILURES") << "\n";
    return failures == 0 ? 0 : 1;
}
