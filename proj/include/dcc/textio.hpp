#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "dcc/code.hpp"
#include "dcc/fq_matrix.hpp"

namespace dcc {

/// Ascending space-separated residues, e.g. "1 1 1 1 1" for 1+x+x^2+x^3+x^4;
/// the zero polynomial renders as "0".
std::string residue_string(const Poly& f);

/// Conventional descending-power rendering, e.g. "4x^3+3x^2+2x+5".
std::string pretty_string(const Poly& f);

/// "(f1)v1+(f2)v2+(f3)v3" with pretty components.
std::string decomposition_string(const RPoly& r);

/// Standard-basis token "a,b,c" meaning a + bv + cv^2.
std::string standard_token(const RElem& e);

/// Codeword as standard-basis tokens: "a,b,c ... | a,b,c ...".
std::string codeword_string(const Codeword& w);

/// Matrix block text: one row per line, space-separated residues, the three
/// components separated by a blank line and a "# v1" / "# v2" / "# v3" header.
std::string matrices_text(const std::array<FqMatrix, 3>& mats);

/// Code-spec file serialization (key = value lines; round-trips through
/// parse_code_spec).
std::string serialize_code_spec(const CodeSpec& code);

/// Parsed document before the construction conditions are enforced.
struct RawCodeSpec {
    std::uint64_t q = 0;
    std::uint32_t m = 0, n = 0;
    RPoly iota, ell, theta;
};

/// Parses the key = value code-spec document:
///   q, m, n               integers
///   iota.v1/.v2/.v3       ascending residues per idempotent component, or
///   iota.std              "a,b,c" standard-basis triples per x-coefficient
///   (same for ell.* and theta.*)
/// Comment lines start with '#'.  Unknown or duplicate keys are rejected.
/// Throws ParseError with the offending line.
RawCodeSpec parse_code_spec_raw(std::istream& in);

/// parse_code_spec_raw followed by the checked construction;
/// generator-math violations surface as InvalidGeneratorError.
CodeSpec parse_code_spec(std::istream& in);

/// Word-list document for canonicalization: q, m, n keys plus one
/// "word = <codeword tokens>" line per spanning word.
struct WordList {
    std::uint64_t q = 0;
    std::uint32_t m = 0, n = 0;
    std::vector<Codeword> words;
};
WordList parse_word_list(std::istream& in);

/// Parses "a,b,c ... | a,b,c ..." into a codeword of shape (m, n).
Codeword parse_codeword(const FieldCtx& field, std::uint32_t m, std::uint32_t n,
                        const std::string& text);

}  // namespace dcc
