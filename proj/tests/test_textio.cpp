#include <sstream>

#include "dcc/dual.hpp"
#include "dcc/textio.hpp"
#include "doctest.h"

using namespace dcc;

namespace {

CodeSpec worked_example(const FieldCtx& f7) {
    return CodeSpec::make(
        f7, 5, 5, RPoly::splat(Poly::from_ints(f7, {1, 1, 1, 1, 1})),
        RPoly::from_standard_coeffs(f7, {{5, 1, 2}, {2, 4, 4}, {3, 6, 0}, {4, 2, 6}}),
        RPoly::from_standard_coeffs(f7, {{6, 0, 0}, {1, 0, 0}}));
}

CodeSpec parse_text(const std::string& text) {
    std::istringstream in(text);
    return parse_code_spec(in);
}

}  // namespace

TEST_CASE("polynomial rendering") {
    FieldCtx f7(7);
    CHECK(residue_string(Poly::from_ints(f7, {1, 1, 1, 1, 1})) == "1 1 1 1 1");
    CHECK(residue_string(Poly(f7)) == "0");
    CHECK(pretty_string(Poly::from_ints(f7, {5, 2, 3, 4})) == "4x^3+3x^2+2x+5");
    CHECK(pretty_string(Poly::from_ints(f7, {6, 2, 4, 1})) == "x^3+4x^2+2x+6");
    CHECK(pretty_string(Poly::from_ints(f7, {0, 1})) == "x");
    CHECK(pretty_string(Poly::constant(7, 1)) == "1");
    CHECK(pretty_string(Poly(f7)) == "0");
}

TEST_CASE("decomposition line of the worked example") {
    FieldCtx f7(7);
    CHECK(decomposition_string(worked_example(f7).ell()) ==
          "(4x^3+3x^2+2x+5)v1+(5x^3+2x^2+3x+1)v2+(x^3+4x^2+2x+6)v3");
}

TEST_CASE("code specs round-trip through serialization") {
    FieldCtx f7(7);
    const CodeSpec code = worked_example(f7);
    CHECK(parse_text(serialize_code_spec(code)) == code);

    // dual output reparsed as input: the double dual is the code again
    const CodeSpec dual = dual_code(code, DualMethod::formula).code;
    const CodeSpec reparsed = parse_text(serialize_code_spec(dual));
    CHECK(reparsed == dual);
    CHECK(dual_code(reparsed, DualMethod::formula).code == code);
}

TEST_CASE("standard-basis keys and component keys agree") {
    const std::string by_components =
        "q = 7\nm = 5\nn = 5\n"
        "iota.v1 = 1 1 1 1 1\niota.v2 = 1 1 1 1 1\niota.v3 = 1 1 1 1 1\n"
        "ell.v1 = 5 2 3 4\nell.v2 = 1 3 2 5\nell.v3 = 6 2 4 1\n"
        "theta.v1 = 6 1\ntheta.v2 = 6 1\ntheta.v3 = 6 1\n";
    const std::string by_standard =
        "# the worked example, standard basis\n"
        "q = 7\nm = 5\nn = 5\n"
        "iota.std = 1,0,0 1,0,0 1,0,0 1,0,0 1,0,0\n"
        "ell.std = 5,1,2 2,4,4 3,6,0 4,2,6\n"
        "theta.std = 6,0,0 1,0,0\n";
    FieldCtx f7(7);
    CHECK(parse_text(by_components) == worked_example(f7));
    CHECK(parse_text(by_standard) == worked_example(f7));
}

TEST_CASE("negative residues are reduced on input") {
    const CodeSpec a = parse_text("q = 7\nm = 5\nn = 5\n"
                                  "iota.v1 = 1 1 1 1 1\niota.v2 = 1 1 1 1 1\niota.v3 = 1 1 1 1 1\n"
                                  "ell.v1 = 0\nell.v2 = 0\nell.v3 = 0\n"
                                  "theta.v1 = -1 1\ntheta.v2 = -1 1\ntheta.v3 = -1 1\n");
    CHECK(a.theta().comp(0) == Poly::from_ints(FieldCtx(7), {6, 1}));
}

TEST_CASE("parse errors carry line numbers") {
    auto expect_parse_error = [](const std::string& text, std::size_t line) {
        std::istringstream in(text);
        try {
            parse_code_spec(in);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line == line);
        }
    };
    expect_parse_error("q = 7\nm = 5\nn = 5\nbogus_key = 1\n", 4);
    expect_parse_error("q = 7\nq = 7\n", 2);
    expect_parse_error("q = 7\nm = 5\nn = 5\niota.v1 = 1 x 1\n", 4);
    expect_parse_error("q = 6\nm = 1\nn = 1\n", 1);  // not an odd prime
    expect_parse_error("no equals sign", 1);
}

TEST_CASE("a generator must use exactly one key family") {
    const std::string both =
        "q = 7\nm = 5\nn = 5\n"
        "iota.std = 1,0,0\niota.v1 = 1\niota.v2 = 1\niota.v3 = 1\n"
        "ell.std = 0,0,0\ntheta.std = 6,0,0 1,0,0\n";
    std::istringstream in(both);
    CHECK_THROWS_AS(parse_code_spec(in), ParseError);

    const std::string incomplete =
        "q = 7\nm = 5\nn = 5\niota.v1 = 1\nell.std = 0,0,0\ntheta.std = 1,0,0\n";
    std::istringstream in2(incomplete);
    CHECK_THROWS_AS(parse_code_spec(in2), ParseError);
}

TEST_CASE("mathematically invalid specs parse but fail construction") {
    // x+1 does not divide x^5-1 over F_7
    const std::string text =
        "q = 7\nm = 5\nn = 5\n"
        "iota.v1 = 1 1 1 1 1\niota.v2 = 1 1 1 1 1\niota.v3 = 1 1 1 1 1\n"
        "ell.v1 = 0\nell.v2 = 0\nell.v3 = 0\n"
        "theta.v1 = 1 1\ntheta.v2 = 6 1\ntheta.v3 = 6 1\n";
    std::istringstream in(text);
    CHECK_THROWS_AS(parse_code_spec(in), InvalidGeneratorError);
}

TEST_CASE("codeword text round-trip") {
    FieldCtx f7(7);
    const CodeSpec code = worked_example(f7);
    const Codeword g = code.cross_generator_word();
    const std::string text = codeword_string(g);
    CHECK(parse_codeword(f7, 5, 5, text) == g);

    CHECK_THROWS_AS(parse_codeword(f7, 5, 5, "1,0,0 | 1,0,0"), ParseError);  // wrong shape
    CHECK_THROWS_AS(parse_codeword(f7, 1, 1, "1,0 | 1,0,0"), ParseError);    // bad triple
    CHECK_THROWS_AS(parse_codeword(f7, 1, 1, "1,0,0 1,0,0"), ParseError);    // missing bar
}

TEST_CASE("word lists parse") {
    const std::string text =
        "q = 3\nm = 2\nn = 2\n"
        "word = 1,0,0 0,0,0 | 2,0,0 0,1,0\n"
        "word = 0,0,0 1,2,0 | 0,0,0 1,0,0\n";
    std::istringstream in(text);
    const WordList wl = parse_word_list(in);
    CHECK(wl.q == 3);
    CHECK(wl.m == 2);
    CHECK(wl.n == 2);
    REQUIRE(wl.words.size() == 2);
    CHECK(codeword_string(wl.words[0]) == "1,0,0 0,0,0 | 2,0,0 0,1,0");
}
