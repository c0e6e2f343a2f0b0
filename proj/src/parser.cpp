#include "detrep/parser.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string_view>
#include <vector>

#include "detrep/errors.hpp"

namespace detrep {

namespace {

constexpr std::size_t kDefaultVarCount = 10;
constexpr std::size_t kMaxVarCount = 64;

enum class Tok { Number, Var, Plus, Minus, Star, Caret, Slash, LBracket, RBracket, Comma, End };

struct Token {
    Tok kind;
    std::size_t start, end;
    Int value;  // Number: the literal; Var: the index
};

SourceSpan span_of(const Token& t) { return {t.start, t.end}; }

[[noreturn]] void syntax_error(const std::string& what, std::size_t start, std::size_t end) {
    throw InputError("SyntaxError", what + " at bytes " + std::to_string(start) + ".." +
                                        std::to_string(end),
                     SourceSpan{start, end});
}

// Optional "vars N;" header; returns the variable cap and advances pos.
std::size_t read_header(const std::string& text, std::size_t& pos) {
    std::size_t p = pos;
    while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
    if (text.compare(p, 4, "vars") != 0 ||
        (p + 4 < text.size() && !std::isspace(static_cast<unsigned char>(text[p + 4]))))
        return kDefaultVarCount;
    std::size_t q = p + 4;
    while (q < text.size() && std::isspace(static_cast<unsigned char>(text[q]))) ++q;
    std::size_t digits = q;
    while (digits < text.size() && std::isdigit(static_cast<unsigned char>(text[digits])))
        ++digits;
    if (digits == q) syntax_error("expected a variable count after 'vars'", q, q + 1);
    unsigned long n = std::stoul(text.substr(q, digits - q));
    if (n == 0 || n > kMaxVarCount)
        throw InputError("SyntaxError",
                         "variable count must be between 1 and " + std::to_string(kMaxVarCount),
                         SourceSpan{q, digits});
    std::size_t semi = digits;
    while (semi < text.size() && std::isspace(static_cast<unsigned char>(text[semi]))) ++semi;
    if (semi >= text.size() || text[semi] != ';')
        syntax_error("expected ';' after the variable count", digits, digits + 1);
    pos = semi + 1;
    return n;
}

std::vector<Token> lex(const std::string& text, std::size_t pos, std::size_t var_cap) {
    std::vector<Token> out;
    while (pos < text.size()) {
        char c = text[pos];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++pos;
            continue;
        }
        std::size_t start = pos;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            out.push_back({Tok::Number, start, pos, Int(text.substr(start, pos - start))});
            continue;
        }
        if (c == 'x') {
            ++pos;
            std::size_t dstart = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == dstart) syntax_error("expected a variable index after 'x'", start, pos + 1);
            Int idx(text.substr(dstart, pos - dstart));
            if (idx >= Int(var_cap))
                throw InputError("SyntaxError",
                                 "variable x" + idx.str() + " is outside the declared count of " +
                                     std::to_string(var_cap) +
                                     " (raise it with a 'vars N;' header)",
                                 SourceSpan{start, pos});
            out.push_back({Tok::Var, start, pos, idx});
            continue;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '^': kind = Tok::Caret; break;
            case '/': kind = Tok::Slash; break;
            case '[': kind = Tok::LBracket; break;
            case ']': kind = Tok::RBracket; break;
            case ',': kind = Tok::Comma; break;
            default:
                syntax_error(std::string("unexpected character '") + c + "'", start, start + 1);
        }
        out.push_back({kind, start, pos + 1, Int(0)});
        ++pos;
    }
    out.push_back({Tok::End, text.size(), text.size(), Int(0)});
    return out;
}

class TokenStream {
public:
    TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    const Token& peek() const { return tokens_[idx_]; }
    const Token& next() { return tokens_[idx_ == tokens_.size() - 1 ? idx_ : idx_++]; }
    bool at(Tok kind) const { return peek().kind == kind; }
    bool accept(Tok kind) {
        if (!at(kind)) return false;
        next();
        return true;
    }
    const Token& expect(Tok kind, const std::string& what) {
        if (!at(kind)) syntax_error("expected " + what, peek().start, peek().end);
        return next();
    }

private:
    std::vector<Token> tokens_;
    std::size_t idx_ = 0;
};

std::uint32_t to_u32(const Token& t, const std::string& what) {
    if (t.value > Int(0xffffffffu))
        throw InputError("SyntaxError", what + " is too large", span_of(t));
    return static_cast<std::uint32_t>(t.value);
}

Rat parse_coeff(TokenStream& ts) {
    const Token& num = ts.expect(Tok::Number, "a number");
    Rat c(num.value);
    if (ts.accept(Tok::Slash)) {
        const Token& den = ts.expect(Tok::Number, "a denominator");
        if (den.value == 0)
            throw InputError("SyntaxError", "zero denominator", span_of(den));
        c /= Rat(den.value);
    }
    return c;
}

// factor := var ('^' nat)?, accumulated into the exponent vector.
void parse_factor(TokenStream& ts, std::vector<std::uint32_t>& exps) {
    const Token& var = ts.expect(Tok::Var, "a variable");
    std::uint32_t power = 1;
    if (ts.accept(Tok::Caret))
        power = to_u32(ts.expect(Tok::Number, "an exponent"), "exponent");
    exps[static_cast<std::size_t>(var.value)] += power;
}

void parse_term(TokenStream& ts, std::size_t var_cap, Rat& coeff,
                std::vector<std::uint32_t>& exps) {
    coeff = 1;
    exps.assign(var_cap, 0);
    if (ts.at(Tok::Number)) {
        coeff = parse_coeff(ts);
        while (ts.accept(Tok::Star)) parse_factor(ts, exps);
    } else if (ts.at(Tok::Var)) {
        parse_factor(ts, exps);
        while (ts.accept(Tok::Star)) parse_factor(ts, exps);
    } else {
        syntax_error("expected a coefficient or variable", ts.peek().start, ts.peek().end);
    }
}

// poly := '-'? term (('+'|'-') term)*; stops at any token that cannot
// continue the expression (caller checks the terminator).
Polynomial parse_poly_expr(TokenStream& ts, std::size_t var_cap) {
    Polynomial acc(var_cap);
    Rat coeff;
    std::vector<std::uint32_t> exps;
    bool negate = ts.accept(Tok::Minus);
    parse_term(ts, var_cap, coeff, exps);
    acc.add_term(Monomial(exps), negate ? -coeff : coeff);
    while (ts.at(Tok::Plus) || ts.at(Tok::Minus)) {
        bool minus = ts.next().kind == Tok::Minus;
        parse_term(ts, var_cap, coeff, exps);
        acc.add_term(Monomial(exps), minus ? -coeff : coeff);
    }
    return acc;
}

// Drop unused trailing variables unless a header fixed the ambient count.
Polynomial finalize(const Polynomial& p, bool had_header, std::size_t var_cap) {
    if (had_header) return p;
    std::size_t used = p.used_nvars();
    Polynomial r(used);
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::uint32_t> exps(m.exponents().begin(), m.exponents().begin() + used);
        r.add_term(Monomial(std::move(exps)), c);
    }
    return r;
}

struct Prepared {
    TokenStream ts;
    std::size_t var_cap;
    bool had_header;
};

Prepared prepare(const std::string& text) {
    std::size_t pos = 0;
    std::size_t before = pos;
    std::size_t cap = read_header(text, pos);
    bool had_header = pos != before;
    return {TokenStream(lex(text, pos, cap)), cap, had_header};
}

}  // namespace

Polynomial parse_polynomial(const std::string& text) {
    Prepared p = prepare(text);
    Polynomial poly = parse_poly_expr(p.ts, p.var_cap);
    p.ts.expect(Tok::End, "end of input");
    return finalize(poly, p.had_header, p.var_cap);
}

PolyMatrix parse_matrix(const std::string& text) {
    Prepared p = prepare(text);
    TokenStream& ts = p.ts;
    ts.expect(Tok::LBracket, "'['");
    std::vector<std::vector<Polynomial>> rows;
    std::vector<std::pair<std::size_t, std::size_t>> row_spans;
    do {
        const Token& open = ts.expect(Tok::LBracket, "'[' opening a row");
        std::vector<Polynomial> row;
        do {
            row.push_back(parse_poly_expr(ts, p.var_cap));
        } while (ts.accept(Tok::Comma));
        const Token& close = ts.expect(Tok::RBracket, "',' or ']' closing the row");
        rows.push_back(std::move(row));
        row_spans.emplace_back(open.start, close.end);
    } while (ts.accept(Tok::Comma));
    ts.expect(Tok::RBracket, "',' or ']' closing the matrix");
    ts.expect(Tok::End, "end of input");

    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].size() != rows[0].size())
            throw InputError("RaggedRows",
                             "row " + std::to_string(i + 1) + " has " +
                                 std::to_string(rows[i].size()) + " entries, row 1 has " +
                                 std::to_string(rows[0].size()),
                             SourceSpan{row_spans[i].first, row_spans[i].second});
    if (rows[0].size() != rows.size())
        throw InputError("NotSquare",
                         std::to_string(rows.size()) + " rows of " +
                             std::to_string(rows[0].size()) + " entries",
                         SourceSpan{0, text.size()});

    std::size_t nvars = p.had_header ? p.var_cap : 0;
    if (!p.had_header)
        for (const auto& row : rows)
            for (const auto& entry : row) nvars = std::max(nvars, entry.used_nvars());
    PolyMatrix m(rows.size(), nvars);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j)
            m.at(i, j) = finalize(rows[i][j], p.had_header, p.var_cap).extended(nvars);
    return m;
}

HypersurfaceSpec parse_factors(const std::string& text) {
    std::size_t pos = 0;
    std::size_t cap = read_header(text, pos);
    bool had_header = pos != 0 || cap != kDefaultVarCount;

    struct Entry {
        Polynomial poly;
        unsigned mult;
        SourceSpan span;
    };
    std::vector<Entry> entries;
    std::size_t start = pos;
    for (std::size_t i = pos; i <= text.size(); ++i) {
        if (i < text.size() && text[i] != ';' && text[i] != '\n') continue;
        std::string_view piece(text.data() + start, i - start);
        bool blank = true;
        for (char c : piece)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (!blank) {
            // The trailing "^ nat" is the multiplicity, never a power of the
            // factor itself: "x0^2" declares the double line x0.
            std::vector<Token> toks = lex(text.substr(0, i), start, cap);
            std::size_t n = toks.size();
            if (n < 4 || toks[n - 3].kind != Tok::Caret || toks[n - 2].kind != Tok::Number)
                syntax_error("expected '^' and a multiplicity closing the factor",
                             start, i);
            Token caret = toks[n - 3];
            Token mult = toks[n - 2];
            std::vector<Token> polytoks(toks.begin(), toks.begin() + (n - 3));
            polytoks.push_back(Token{Tok::End, caret.start, caret.start, Int(0)});
            TokenStream ts(std::move(polytoks));
            Polynomial poly = parse_poly_expr(ts, cap);
            ts.expect(Tok::End, "end of the factor entry");
            if (mult.value == 0)
                throw InputError("BadMultiplicity", "multiplicities must be positive",
                                 span_of(mult));
            if (poly.is_zero())
                throw InputError("ZeroPolynomial", "zero factor", SourceSpan{start, caret.start});
            if (poly.is_constant())
                throw InputError("ConstantFactor", "factors must be nonconstant",
                                 SourceSpan{start, caret.start});
            if (!poly.is_homogeneous())
                throw InputError("NotHomogeneous", "factors must be homogeneous",
                                 SourceSpan{start, caret.start});
            entries.push_back({finalize(poly, had_header, cap), to_u32(mult, "multiplicity"),
                               SourceSpan{start, i}});
        }
        start = i + 1;
    }
    if (entries.empty())
        throw InputError("EmptyFactorization", "no factors given", SourceSpan{0, text.size()});

    std::size_t nvars = had_header ? cap : 0;
    for (const auto& e : entries) nvars = std::max(nvars, e.poly.nvars());
    std::vector<std::pair<Polynomial, unsigned>> factors;
    for (const auto& e : entries) factors.emplace_back(e.poly.extended(nvars), e.mult);
    for (std::size_t a = 0; a < factors.size(); ++a)
        for (std::size_t b = a + 1; b < factors.size(); ++b)
            if (proportionality_constant(factors[a].first, factors[b].first))
                throw InputError("ProportionalFactors",
                                 "factor " + std::to_string(b + 1) +
                                     " is proportional to factor " + std::to_string(a + 1),
                                 entries[b].span);
    return HypersurfaceSpec(std::move(factors));
}

ProjectivePoint parse_point(const std::string& text) {
    std::vector<Rat> coords;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i < text.size() && text[i] != ',') continue;
        std::size_t a = start, b = i;
        while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
        try {
            coords.push_back(parse_rational(text.substr(a, b - a)));
        } catch (const InputError& e) {
            throw InputError(e.code(), std::string(e.what()), SourceSpan{start, i});
        }
        start = i + 1;
    }
    try {
        return ProjectivePoint(std::move(coords));
    } catch (const InputError& e) {
        throw InputError(e.code(), std::string(e.what()), SourceSpan{0, text.size()});
    }
}

}  // namespace detrep
