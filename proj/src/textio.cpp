#include "dcc/textio.hpp"

#include <istream>
#include <map>
#include <sstream>

namespace dcc {

std::string residue_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(f.coeff(i));
    }
    return out;
}

std::string pretty_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::int64_t i = f.deg(); i >= 0; --i) {
        const std::uint64_t c = f.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c);
            out += 'x';
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::string decomposition_string(const RPoly& r) {
    std::string out;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i) out += '+';
        out += "(" + pretty_string(r.comp(i)) + ")v" + std::to_string(i + 1);
    }
    return out;
}

std::string standard_token(const RElem& e) {
    const auto [a, b, c] = e.to_standard();
    return std::to_string(a.value()) + "," + std::to_string(b.value()) + "," +
           std::to_string(c.value());
}

std::string codeword_string(const Codeword& w) {
    std::string out;
    for (std::size_t j = 0; j < w.left.size(); ++j) {
        if (j) out += ' ';
        out += standard_token(w.left[j]);
    }
    out += " |";
    for (const auto& e : w.right) out += " " + standard_token(e);
    return out;
}

std::string matrices_text(const std::array<FqMatrix, 3>& mats) {
    std::string out;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i) out += '\n';
        out += "# v" + std::to_string(i + 1) + "\n";
        const FqMatrix& g = mats[i];
        for (std::size_t r = 0; r < g.rows(); ++r) {
            for (std::size_t c = 0; c < g.cols(); ++c) {
                if (c) out += ' ';
                out += std::to_string(g.at(r, c));
            }
            out += '\n';
        }
    }
    return out;
}

std::string serialize_code_spec(const CodeSpec& code) {
    std::ostringstream out;
    out << "q = " << code.q() << "\n";
    out << "m = " << code.m() << "\n";
    out << "n = " << code.n() << "\n";
    const char* names[3] = {"iota", "ell", "theta"};
    const RPoly* gens[3] = {&code.iota(), &code.ell(), &code.theta()};
    for (std::size_t g = 0; g < 3; ++g)
        for (std::size_t i = 0; i < 3; ++i)
            out << names[g] << ".v" << (i + 1) << " = " << residue_string(gens[g]->comp(i))
                << "\n";
    return out.str();
}

namespace {

struct RawLine {
    std::string key;
    std::string value;
    std::size_t line_no;
};

std::vector<RawLine> read_key_values(std::istream& in) {
    std::vector<RawLine> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected key = value", line_no);
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        RawLine kv{trim(line.substr(0, eq)), trim(line.substr(eq + 1)), line_no};
        if (kv.key.empty()) throw ParseError("empty key", line_no);
        out.push_back(std::move(kv));
    }
    return out;
}

std::uint64_t parse_uint(const std::string& s, std::size_t line_no) {
    if (s.empty()) throw ParseError("expected a number", line_no);
    std::uint64_t v = 0;
    for (char ch : s) {
        if (ch < '0' || ch > '9') throw ParseError("malformed number '" + s + "'", line_no);
        if (v > (UINT64_MAX - static_cast<std::uint64_t>(ch - '0')) / 10)
            throw ParseError("number out of range '" + s + "'", line_no);
        v = v * 10 + static_cast<std::uint64_t>(ch - '0');
    }
    return v;
}

std::int64_t parse_int(const std::string& s, std::size_t line_no) {
    if (s.empty()) throw ParseError("expected a number", line_no);
    const bool negative = s[0] == '-';
    const std::uint64_t mag = parse_uint(negative ? s.substr(1) : s, line_no);
    return negative ? -static_cast<std::int64_t>(mag) : static_cast<std::int64_t>(mag);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

Poly parse_poly(const FieldCtx& field, const std::string& value, std::size_t line_no) {
    std::vector<std::int64_t> coeffs;
    for (const std::string& tok : split_ws(value)) coeffs.push_back(parse_int(tok, line_no));
    return Poly::from_ints(field, coeffs);
}

std::array<std::int64_t, 3> parse_triple(const std::string& tok, std::size_t line_no) {
    std::array<std::int64_t, 3> out{};
    std::size_t start = 0, idx = 0;
    for (std::size_t i = 0; i <= tok.size(); ++i) {
        if (i == tok.size() || tok[i] == ',') {
            if (idx >= 3) throw ParseError("expected a,b,c triple, got '" + tok + "'", line_no);
            out[idx++] = parse_int(tok.substr(start, i - start), line_no);
            start = i + 1;
        }
    }
    if (idx != 3) throw ParseError("expected a,b,c triple, got '" + tok + "'", line_no);
    return out;
}

RPoly parse_std_poly(const FieldCtx& field, const std::string& value, std::size_t line_no) {
    std::vector<std::array<std::int64_t, 3>> coeffs;
    for (const std::string& tok : split_ws(value)) coeffs.push_back(parse_triple(tok, line_no));
    return RPoly::from_standard_coeffs(field, coeffs);
}

}  // namespace

RawCodeSpec parse_code_spec_raw(std::istream& in) {
    const auto lines = read_key_values(in);
    std::map<std::string, RawLine> by_key;
    for (const auto& kv : lines) {
        if (by_key.count(kv.key)) throw ParseError("duplicate key '" + kv.key + "'", kv.line_no);
        by_key.emplace(kv.key, kv);
    }

    static const char* scalar_keys[3] = {"q", "m", "n"};
    static const char* gen_names[3] = {"iota", "ell", "theta"};
    for (const auto& [key, kv] : by_key) {
        bool known = false;
        for (const char* s : scalar_keys) known |= key == s;
        for (const char* g : gen_names)
            known |= key == std::string(g) + ".std" || key == std::string(g) + ".v1" ||
                     key == std::string(g) + ".v2" || key == std::string(g) + ".v3";
        if (!known) throw ParseError("unknown key '" + key + "'", kv.line_no);
    }

    auto require = [&](const std::string& key) -> const RawLine& {
        auto it = by_key.find(key);
        if (it == by_key.end()) throw ParseError("missing key '" + key + "'", 0);
        return it->second;
    };

    const std::uint64_t q = parse_uint(require("q").value, require("q").line_no);
    const std::uint64_t m = parse_uint(require("m").value, require("m").line_no);
    const std::uint64_t n = parse_uint(require("n").value, require("n").line_no);
    if (q < 3 || q % 2 == 0 || !modarith::is_prime(q))
        throw ParseError("q must be an odd prime, got " + std::to_string(q),
                         require("q").line_no);
    if (m < 1 || n < 1) throw ParseError("m and n must be >= 1", 0);

    FieldCtx field(q);
    std::vector<RPoly> gens;
    for (const char* g : gen_names) {
        const std::string base(g);
        const bool has_std = by_key.count(base + ".std") > 0;
        const bool has_v = by_key.count(base + ".v1") || by_key.count(base + ".v2") ||
                           by_key.count(base + ".v3");
        if (has_std && has_v)
            throw ParseError("give " + base + " either as .std or as .v1/.v2/.v3, not both",
                             by_key.at(base + ".std").line_no);
        if (has_std) {
            const auto& kv = by_key.at(base + ".std");
            gens.push_back(parse_std_poly(field, kv.value, kv.line_no));
        } else if (has_v) {
            std::array<Poly, 3> comp{Poly(field), Poly(field), Poly(field)};
            for (std::size_t i = 0; i < 3; ++i) {
                const std::string key = base + ".v" + std::to_string(i + 1);
                if (!by_key.count(key)) throw ParseError("missing key '" + key + "'", 0);
                const auto& kv = by_key.at(key);
                comp[i] = parse_poly(field, kv.value, kv.line_no);
            }
            gens.push_back(RPoly(std::move(comp[0]), std::move(comp[1]), std::move(comp[2])));
        } else {
            throw ParseError("missing generator '" + base + "'", 0);
        }
    }

    return {q, static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(n), std::move(gens[0]),
            std::move(gens[1]), std::move(gens[2])};
}

CodeSpec parse_code_spec(std::istream& in) {
    RawCodeSpec raw = parse_code_spec_raw(in);
    return CodeSpec::make(FieldCtx(raw.q), raw.m, raw.n, std::move(raw.iota),
                          std::move(raw.ell), std::move(raw.theta));
}

Codeword parse_codeword(const FieldCtx& field, std::uint32_t m, std::uint32_t n,
                        const std::string& text) {
    const auto toks = split_ws(text);
    Codeword w;
    bool in_right = false;
    for (const std::string& tok : toks) {
        if (tok == "|") {
            if (in_right) throw ParseError("more than one '|' in codeword", 0);
            in_right = true;
            continue;
        }
        const auto [a, b, c] = parse_triple(tok, 0);
        const RElem e = RElem::from_standard(field.from(a), field.from(b), field.from(c));
        (in_right ? w.right : w.left).push_back(e);
    }
    if (!in_right) throw ParseError("codeword needs a '|' between the two blocks", 0);
    if (w.left.size() != m || w.right.size() != n)
        throw ParseError("codeword has blocks (" + std::to_string(w.left.size()) + ", " +
                             std::to_string(w.right.size()) + "), expected (" +
                             std::to_string(m) + ", " + std::to_string(n) + ")",
                         0);
    return w;
}

WordList parse_word_list(std::istream& in) {
    const auto lines = read_key_values(in);
    WordList out;
    bool have_q = false, have_m = false, have_n = false;
    std::vector<RawLine> word_lines;
    for (const auto& kv : lines) {
        if (kv.key == "q") {
            if (have_q) throw ParseError("duplicate key 'q'", kv.line_no);
            out.q = parse_uint(kv.value, kv.line_no);
            have_q = true;
        } else if (kv.key == "m") {
            if (have_m) throw ParseError("duplicate key 'm'", kv.line_no);
            out.m = static_cast<std::uint32_t>(parse_uint(kv.value, kv.line_no));
            have_m = true;
        } else if (kv.key == "n") {
            if (have_n) throw ParseError("duplicate key 'n'", kv.line_no);
            out.n = static_cast<std::uint32_t>(parse_uint(kv.value, kv.line_no));
            have_n = true;
        } else if (kv.key == "word") {
            word_lines.push_back(kv);
        } else {
            throw ParseError("unknown key '" + kv.key + "'", kv.line_no);
        }
    }
    if (!have_q || !have_m || !have_n) throw ParseError("need q, m and n keys", 0);
    if (out.q < 3 || out.q % 2 == 0 || !modarith::is_prime(out.q))
        throw ParseError("q must be an odd prime, got " + std::to_string(out.q), 0);
    FieldCtx field(out.q);
    for (const auto& kv : word_lines) {
        try {
            out.words.push_back(parse_codeword(field, out.m, out.n, kv.value));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), kv.line_no);
        }
    }
    return out;
}

}  // namespace dcc
