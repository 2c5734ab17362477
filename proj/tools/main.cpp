// Command-line front end: construct, inspect and dualize double cyclic codes
// over F_q + vF_q + v^2F_q (v^3 = v) from key=value spec files.
//
// Exit codes: 0 success, 1 mathematical failure or counterexample,
// 2 parse error, 3 enumeration cap exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dcc/dual.hpp"
#include "dcc/genmat.hpp"
#include "dcc/textio.hpp"
#include "dcc/verify.hpp"

namespace {

using namespace dcc;

CodeSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    return parse_code_spec(in);
}

int cmd_validate(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    const RawCodeSpec raw = parse_code_spec_raw(in);

    const FieldCtx field(raw.q);
    const std::uint64_t p = raw.q;
    const Poly xm1 = Poly::x_pow_minus_one(p, raw.m);
    const Poly xn1 = Poly::x_pow_minus_one(p, raw.n);
    bool valid = true;
    auto report = [&](const std::string& tag, const std::string& what, bool ok) {
        std::cout << tag << what << " : " << (ok ? "ok" : "FAIL") << "\n";
        valid &= ok;
    };

    for (std::size_t i = 0; i < 3; ++i) {
        const std::string tag = "[v" + std::to_string(i + 1) + "] ";
        // normalize the way construction does: reduce into the quotient,
        // represent zero ideal components by x^N-1, make monic
        Poly io = raw.iota.comp(i) % xm1;
        Poly th = raw.theta.comp(i) % xn1;
        if (io.is_zero()) io = xm1;
        if (th.is_zero()) th = xn1;
        io = io.monic();
        th = th.monic();

        const bool io_ok = divides(io, xm1);
        const bool th_ok = divides(th, xn1);
        report(tag, "iota | x^m-1", io_ok);
        report(tag, "theta | x^n-1", th_ok);
        if (!io_ok || !th_ok) {
            std::cout << tag << "remaining conditions skipped\n";
            continue;
        }
        const Poly el = (raw.ell.comp(i) % xm1) % io;
        report(tag, "deg(ell) < deg(iota) after reduction", el.is_zero() || el.deg() < io.deg());
        report(tag, "iota | ((x^n-1)/theta)*ell", divides(io, (xn1 / th) * el));
        report(tag, "iota | ((x^n-1)/theta)*gcd(iota,ell)",
               divides(io, (xn1 / th) * gcd(io, el)));
    }
    std::cout << (valid ? "valid" : "invalid") << "\n";
    return valid ? 0 : 1;
}

int cmd_genmat(const std::string& path, bool standardized) {
    const CodeSpec code = load_spec(path);
    if (!standardized) {
        std::cout << matrices_text(natural_generator_matrices(code));
        return 0;
    }
    for (std::size_t i = 0; i < 3; ++i) {
        const StandardizedForm sf = standardized_form(code, i);
        if (i) std::cout << "\n";
        std::cout << "# v" << (i + 1) << " (k = " << sf.k << ")\n";
        std::cout << "# column order:";
        for (std::size_t c : sf.col_perm) std::cout << " " << c;
        std::cout << "\n";
        for (std::size_t r = 0; r < sf.mat.rows(); ++r) {
            for (std::size_t c = 0; c < sf.mat.cols(); ++c)
                std::cout << (c ? " " : "") << sf.mat.at(r, c);
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_dual(const std::string& path, const std::string& method) {
    const CodeSpec code = load_spec(path);
    if (method == "formula" || method == "nullspace") {
        const DualResult d = dual_code(
            code, method == "formula" ? DualMethod::formula : DualMethod::nullspace);
        std::cout << "# dual computed by the " << method << " method\n"
                  << serialize_code_spec(d.code);
        return 0;
    }
    const DualResult f = dual_code(code, DualMethod::formula);
    const DualResult s = dual_code(code, DualMethod::nullspace);
    const bool equal = f.code == s.code;
    std::cout << "# dual computed by both methods\n" << serialize_code_spec(f.code);
    std::cout << "# methods " << (equal ? "EQUAL" : "DIFFER") << "\n";
    if (!equal) {
        std::cout << "# nullspace method gave:\n" << serialize_code_spec(s.code);
        return 1;
    }
    return 0;
}

int cmd_mindist(const std::string& path, const std::string& component, std::uint64_t cap) {
    const CodeSpec code = load_spec(path);
    const auto gens = natural_generator_matrices(code);
    for (std::size_t i = 0; i < 3; ++i) {
        const std::string name = "v" + std::to_string(i + 1);
        if (component != "all" && component != name) continue;
        const auto d = min_distance(gens[i], cap);
        const std::size_t len = code.m() + code.n();
        const std::size_t dim = rank(gens[i]);
        std::cout << "[" << len << "," << dim << "," << (d ? std::to_string(*d) : "-")
                  << "]\n";
    }
    return 0;
}

int cmd_enumerate(const std::string& path, std::uint64_t cap) {
    const CodeSpec code = load_spec(path);
    const std::uint64_t dim = code_dimension(code);
    std::cout << "# q=" << code.q() << " m=" << code.m() << " n=" << code.n()
              << " dim=" << dim << "\n";
    for_each_codeword(code, cap, [&](const Codeword& w) {
        std::cout << codeword_string(w) << "\n";
        return true;
    });
    return 0;
}

int cmd_member(const std::string& path, const std::string& word_text) {
    const CodeSpec code = load_spec(path);
    const Codeword w = parse_codeword(code.field(), code.m(), code.n(), word_text);
    const bool in = contains(code, w);
    std::cout << (in ? "member" : "not a member") << "\n";
    return in ? 0 : 1;
}

int cmd_canonicalize(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    const WordList wl = parse_word_list(in);
    const FieldCtx field(wl.q);
    const CodeSpec code = canonicalize(field, wl.m, wl.n, wl.words);
    std::cout << serialize_code_spec(code);
    return 0;
}

int cmd_verify(std::uint64_t cases, std::uint64_t seed, const std::string& qset_text) {
    VerifyOptions opts;
    opts.cases = cases;
    opts.seed = seed;
    if (!qset_text.empty()) {
        opts.qset.clear();
        std::istringstream qs(qset_text);
        std::string tok;
        while (std::getline(qs, tok, ',')) opts.qset.push_back(std::stoull(tok));
        if (opts.qset.empty()) throw ParseError("empty qset", 0);
    }
    const VerifyReport report = run_verify(opts);
    std::cout << report.log;
    return report.ok ? 0 : 1;
}

int cmd_example1() {
    const auto t0 = std::chrono::steady_clock::now();
    const FieldCtx f7(7);
    const std::uint32_t m = 5, n = 5;

    const RPoly iota = RPoly::splat(Poly::from_ints(f7, {1, 1, 1, 1, 1}));
    const RPoly ell = RPoly::from_standard_coeffs(f7, {{5, 1, 2}, {2, 4, 4}, {3, 6, 0},
                                                       {4, 2, 6}});
    const RPoly theta = RPoly::from_standard_coeffs(f7, {{6, 0, 0}, {1, 0, 0}});

    std::cout << "ell(x) = " << decomposition_string(ell) << "\n\n";
    const std::string expected_decomp =
        "(4x^3+3x^2+2x+5)v1+(5x^3+2x^2+3x+1)v2+(x^3+4x^2+2x+6)v3";
    if (decomposition_string(ell) != expected_decomp) {
        std::cerr << "mismatch: ell decomposition\n";
        return 1;
    }

    const CodeSpec code = CodeSpec::make(f7, m, n, iota, ell, theta);
    std::cout << matrices_text(natural_generator_matrices(code)) << "\n";

    const std::uint64_t dim = code_dimension(code);
    std::cout << "dim(C) = " << dim << "\n";
    if (dim != 15) {
        std::cerr << "mismatch: dim(C) expected 15\n";
        return 1;
    }

    const auto gens = natural_generator_matrices(code);
    for (std::size_t i = 0; i < 3; ++i) {
        const auto d = min_distance(gens[i], 100000);
        const std::size_t comp_dim = rank(gens[i]);
        std::cout << "v" << (i + 1) << ": [" << (m + n) << "," << comp_dim << ","
                  << (d ? std::to_string(*d) : "-") << "]\n";
        if (comp_dim != 5 || !d || *d != 5) {
            std::cerr << "mismatch: component v" << (i + 1) << " parameters, expected [10,5,5]\n";
            return 1;
        }
    }

    const DualResult fd = dual_code(code, DualMethod::formula);
    const DualResult nd = dual_code(code, DualMethod::nullspace);
    std::cout << "\n# dual computed by the formula method\n" << serialize_code_spec(fd.code);
    std::cout << "# methods " << (fd.code == nd.code ? "EQUAL" : "DIFFER") << "\n";
    if (fd.code != nd.code) {
        std::cerr << "mismatch: dual methods disagree\n";
        return 1;
    }
    const DualityReport dr = verify_duality(code, fd.code);
    if (!dr.pass) {
        std::cerr << "mismatch: duality check failed: " << dr.detail << "\n";
        return 1;
    }

    const auto t1 = std::chrono::steady_clock::now();
    std::cout << "elapsed: "
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
              << " ms\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"double cyclic codes over F_q + vF_q + v^2F_q (v^3 = v)"};
    app.require_subcommand(1);

    std::string file, word_text, method = "formula", component = "all", qset_text, format = "text";
    std::uint64_t cap = kDefaultEnumerationCap, cases = 200, seed = 1;
    bool standardized = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text"}));
    };

    auto* validate = app.add_subcommand("validate", "check the construction conditions");
    validate->add_option("file", file)->required();
    add_format(validate);

    auto* genmat = app.add_subcommand("genmat", "print the generator matrices");
    genmat->add_option("file", file)->required();
    genmat->add_flag("--standardized", standardized, "print the permuted block form");
    add_format(genmat);

    auto* dual = app.add_subcommand("dual", "print the dual code generators");
    dual->add_option("file", file)->required();
    dual->add_option("--method", method)->check(CLI::IsMember({"formula", "nullspace", "both"}));
    add_format(dual);

    auto* mindist = app.add_subcommand("mindist", "exhaustive minimum distance per component");
    mindist->add_option("file", file)->required();
    mindist->add_option("--component", component)
        ->check(CLI::IsMember({"v1", "v2", "v3", "all"}));
    mindist->add_option("--cap", cap, "enumeration cap");
    add_format(mindist);

    auto* enumerate = app.add_subcommand("enumerate", "list every codeword");
    enumerate->add_option("file", file)->required();
    enumerate->add_option("--cap", cap, "enumeration cap");
    add_format(enumerate);

    auto* member = app.add_subcommand("member", "decide membership of a word");
    member->add_option("file", file)->required();
    member->add_option("--word", word_text, "codeword 'a,b,c ... | a,b,c ...'")->required();
    add_format(member);

    auto* canonicalize = app.add_subcommand("canonicalize",
                                            "standard generators of the span of given words");
    canonicalize->add_option("file", file)->required();
    add_format(canonicalize);

    auto* verify = app.add_subcommand("verify", "randomized property corpus");
    verify->add_option("--cases", cases);
    verify->add_option("--seed", seed);
    verify->add_option("--qset", qset_text, "comma-separated odd primes");
    add_format(verify);

    auto* example1 = app.add_subcommand("example1", "reproduce the worked [10,5,5] example");
    add_format(example1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(file);
        if (genmat->parsed()) return cmd_genmat(file, standardized);
        if (dual->parsed()) return cmd_dual(file, method);
        if (mindist->parsed()) return cmd_mindist(file, component, cap);
        if (enumerate->parsed()) return cmd_enumerate(file, cap);
        if (member->parsed()) return cmd_member(file, word_text);
        if (canonicalize->parsed()) return cmd_canonicalize(file);
        if (verify->parsed()) return cmd_verify(cases, seed, qset_text);
        if (example1->parsed()) return cmd_example1();
    } catch (const dcc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const dcc::TooLargeError& e) {
        std::cerr << "too large: " << e.what() << "\n";
        return 3;
    } catch (const dcc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
