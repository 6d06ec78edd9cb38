#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "syzlab/matrix.hpp"
#include "syzlab/ring.hpp"

namespace syzlab {

// Cursor over source text with line/column tracking for parse errors.
struct TextCursor {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return eof() ? '\0' : text[pos]; }

    char get()
    {
        char c = text[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }

    void skip_ws()
    {
        while (!eof()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                get();
            } else if (c == '#') {  // comment to end of line
                while (!eof() && peek() != '\n') get();
            } else {
                break;
            }
        }
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }

    void expect(char c)
    {
        skip_ws();
        if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
        get();
    }

    bool accept(char c)
    {
        skip_ws();
        if (!eof() && peek() == c) {
            get();
            return true;
        }
        return false;
    }

    std::uint64_t parse_uint()
    {
        skip_ws();
        if (eof() || !isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        std::uint64_t v = 0;
        while (!eof() && isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(get() - '0');
            if (v > (1ull << 62)) fail("number too large");
        }
        return v;
    }

    std::string parse_ident()
    {
        skip_ws();
        if (eof() || !(isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
            fail("expected an identifier");
        std::string s;
        while (!eof() && (isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            s += get();
        return s;
    }
};

inline int var_index(const std::vector<std::string>& vars, const std::string& name)
{
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

// poly := term (('+'|'-') term)*
// term := coeff ('*' monom)? | monom
// monom := var ('^' uint)? ('*' var ('^' uint)?)*
inline Polynomial parse_polynomial(TextCursor& cur, const std::vector<std::string>& vars,
                                   const PrimeField& F)
{
    std::size_t nv = vars.size();
    std::vector<Term> terms;
    bool first = true;
    Coeff sign = 1;
    for (;;) {
        cur.skip_ws();
        if (!first) {
            if (cur.accept('+')) {
                sign = 1;
            } else if (cur.accept('-')) {
                sign = F.neg(1);
            } else {
                break;
            }
        }
        first = false;
        cur.skip_ws();
        Coeff c = 1;
        bool saw_coeff = false;
        std::vector<std::uint32_t> exps(nv, 0);
        bool saw_var = false;
        if (isdigit(static_cast<unsigned char>(cur.peek()))) {
            c = static_cast<Coeff>(cur.parse_uint() % F.characteristic());
            saw_coeff = true;
        }
        for (;;) {
            if (saw_coeff || saw_var) {
                TextCursor look = cur;
                look.skip_ws();
                if (look.eof() || look.peek() != '*') break;
                cur = look;
                cur.get();
            }
            cur.skip_ws();
            if (!(isalpha(static_cast<unsigned char>(cur.peek())) || cur.peek() == '_')) {
                if (saw_var || saw_coeff) cur.fail("expected a variable");
                cur.fail("expected a term");
            }
            int li = cur.line, co = cur.col;
            std::string name = cur.parse_ident();
            int vi = var_index(vars, name);
            if (vi < 0) throw ParseError("unknown variable '" + name + "'", li, co);
            std::uint64_t e = 1;
            if (cur.accept('^')) e = cur.parse_uint();
            if (e > 1000000) cur.fail("exponent too large");
            exps[static_cast<std::size_t>(vi)] += static_cast<std::uint32_t>(e);
            saw_var = true;
        }
        if (!saw_coeff && !saw_var) cur.fail("expected a term");
        terms.push_back({Monomial(std::move(exps)), F.mul(c, sign)});
    }
    return Polynomial::collect(std::move(terms), F);
}

inline Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars,
                                   const PrimeField& F)
{
    TextCursor cur{text};
    Polynomial p = parse_polynomial(cur, vars, F);
    cur.skip_ws();
    if (!cur.eof()) cur.fail("trailing input after polynomial");
    return p;
}

inline std::string print_monomial(const Monomial& m, const std::vector<std::string>& vars)
{
    std::string s;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m.exp(i) == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[i];
        if (m.exp(i) > 1) s += "^" + std::to_string(m.exp(i));
    }
    return s;
}

// Canonical form: terms in order, coefficients as least nonnegative residues,
// so reports and cache files are byte-stable.
inline std::string print_polynomial(const Polynomial& p, const std::vector<std::string>& vars)
{
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& t : p.terms()) {
        if (!s.empty()) s += " + ";
        std::string mono = print_monomial(t.mono, vars);
        if (mono.empty()) {
            s += std::to_string(t.coeff);
        } else if (t.coeff == 1) {
            s += mono;
        } else {
            s += std::to_string(t.coeff) + "*" + mono;
        }
    }
    return s;
}

// matrix := '[' row (',' row)* ']' with row := '[' poly (',' poly)* ']'
inline PolyMatrix parse_matrix(TextCursor& cur, const std::vector<std::string>& vars,
                               const PrimeField& F)
{
    cur.expect('[');
    std::vector<std::vector<Polynomial>> rows;
    for (;;) {
        cur.expect('[');
        std::vector<Polynomial> row;
        if (!cur.accept(']')) {
            for (;;) {
                row.push_back(parse_polynomial(cur, vars, F));
                if (cur.accept(']')) break;
                cur.expect(',');
            }
        }
        if (!rows.empty() && rows.front().size() != row.size()) cur.fail("ragged matrix rows");
        rows.push_back(std::move(row));
        if (cur.accept(']')) break;
        cur.expect(',');
    }
    PolyMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = std::move(rows[i][j]);
    return m;
}

inline std::string print_matrix(const PolyMatrix& m, const std::vector<std::string>& vars)
{
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) s += ",";
        s += "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) s += ",";
            s += print_polynomial(m.at(i, j), vars);
        }
        s += "]";
    }
    s += "]";
    return s;
}

}  // namespace syzlab
