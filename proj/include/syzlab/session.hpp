#pragma once

#include <map>
#include <memory>
#include <set>

#include "syzlab/verify.hpp"

namespace syzlab {

// Module expression language:
//   free(n) | cok(matrix) | ideal(g1,...) | residue_field | syz(E, n) | tr(E)
//   | dual(E) | dsum(E1, E2) | subq(gens_matrix, rels_matrix) | ext(E1, E2, i) | name
struct ModExpr {
    enum class Kind { free, cok, ideal, residue_field, syz, tr, dual, dsum, subq, ext, ref };

    Kind kind = Kind::ref;
    std::size_t num = 0;            // free rank, syz step, ext index
    PolyMatrix m1, m2;              // cok / subq matrices
    std::vector<Polynomial> polys;  // ideal generators
    std::string name;               // ref
    std::vector<std::shared_ptr<const ModExpr>> args;

    bool operator==(const ModExpr& o) const
    {
        if (kind != o.kind || num != o.num || name != o.name || polys != o.polys ||
            m1 != o.m1 || m2 != o.m2 || args.size() != o.args.size())
            return false;
        for (std::size_t i = 0; i < args.size(); ++i)
            if (!(*args[i] == *o.args[i])) return false;
        return true;
    }
};

using ModExprPtr = std::shared_ptr<const ModExpr>;

struct Command {
    enum class Kind { invariants, resolve, ext_table, verify, corpus };

    Kind kind = Kind::invariants;
    std::string a;                          // module name / theorem id / corpus dir
    std::string b;                          // second module name
    std::size_t n = 0;                      // resolve steps, ext_table bound
    std::map<std::string, std::string> kv;  // verify arguments

    bool operator==(const Command& o) const
    {
        return kind == o.kind && a == o.a && b == o.b && n == o.n && kv == o.kv;
    }
};

struct Session {
    RingDescriptor ring;
    bool has_ring = false;
    std::size_t bound = 6;
    std::vector<std::pair<std::string, ModExprPtr>> bindings;
    std::vector<Command> commands;

    bool operator==(const Session& o) const
    {
        if (has_ring != o.has_ring || bound != o.bound || commands.size() != o.commands.size() ||
            bindings.size() != o.bindings.size())
            return false;
        if (has_ring &&
            (ring.characteristic != o.ring.characteristic || ring.vars != o.ring.vars ||
             ring.ideal != o.ring.ideal || ring.label != o.ring.label))
            return false;
        for (std::size_t i = 0; i < bindings.size(); ++i)
            if (bindings[i].first != o.bindings[i].first ||
                !(*bindings[i].second == *o.bindings[i].second))
                return false;
        for (std::size_t i = 0; i < commands.size(); ++i)
            if (!(commands[i] == o.commands[i])) return false;
        return true;
    }
};

inline const std::set<std::string>& theorem_ids()
{
    static const std::set<std::string> ids = {"thm_2_3",    "cor_2_5", "cor_2_7",
                                              "lemma_3_1",  "lemma_3_2", "thm_3_6",
                                              "remark_3_7", "cor_3_8", "cor_3_9", "example"};
    return ids;
}

namespace detail {

inline bool is_builtin_module(const std::string& name)
{
    return name == "residue_field" || name == "k" || name == "R";
}

inline ModExprPtr parse_modexpr(TextCursor& cur, const RingDescriptor& ring, const PrimeField& F,
                                const std::set<std::string>& known)
{
    cur.skip_ws();
    int li = cur.line, co = cur.col;
    std::string head = cur.parse_ident();
    auto node = std::make_shared<ModExpr>();
    if (head == "free") {
        node->kind = ModExpr::Kind::free;
        cur.expect('(');
        node->num = cur.parse_uint();
        cur.expect(')');
    } else if (head == "cok") {
        node->kind = ModExpr::Kind::cok;
        cur.expect('(');
        node->m1 = parse_matrix(cur, ring.vars, F);
        cur.expect(')');
    } else if (head == "ideal") {
        node->kind = ModExpr::Kind::ideal;
        cur.expect('(');
        for (;;) {
            node->polys.push_back(parse_polynomial(cur, ring.vars, F));
            if (cur.accept(')')) break;
            cur.expect(',');
        }
    } else if (head == "residue_field") {
        node->kind = ModExpr::Kind::residue_field;
    } else if (head == "syz") {
        node->kind = ModExpr::Kind::syz;
        cur.expect('(');
        node->args.push_back(parse_modexpr(cur, ring, F, known));
        cur.expect(',');
        node->num = cur.parse_uint();
        cur.expect(')');
    } else if (head == "tr" || head == "dual") {
        node->kind = head == "tr" ? ModExpr::Kind::tr : ModExpr::Kind::dual;
        cur.expect('(');
        node->args.push_back(parse_modexpr(cur, ring, F, known));
        cur.expect(')');
    } else if (head == "dsum") {
        node->kind = ModExpr::Kind::dsum;
        cur.expect('(');
        node->args.push_back(parse_modexpr(cur, ring, F, known));
        cur.expect(',');
        node->args.push_back(parse_modexpr(cur, ring, F, known));
        cur.expect(')');
    } else if (head == "subq") {
        node->kind = ModExpr::Kind::subq;
        cur.expect('(');
        node->m1 = parse_matrix(cur, ring.vars, F);
        cur.expect(',');
        node->m2 = parse_matrix(cur, ring.vars, F);
        cur.expect(')');
    } else if (head == "ext") {
        node->kind = ModExpr::Kind::ext;
        cur.expect('(');
        node->args.push_back(parse_modexpr(cur, ring, F, known));
        cur.expect(',');
        node->args.push_back(parse_modexpr(cur, ring, F, known));
        cur.expect(',');
        node->num = cur.parse_uint();
        cur.expect(')');
    } else {
        node->kind = ModExpr::Kind::ref;
        node->name = head;
        if (!known.count(head) && !is_builtin_module(head))
            throw ParseError("UNKNOWN_NAME: '" + head + "' is not bound", li, co);
    }
    return node;
}

inline std::string print_modexpr(const ModExpr& e, const std::vector<std::string>& vars)
{
    switch (e.kind) {
    case ModExpr::Kind::free: return "free(" + std::to_string(e.num) + ")";
    case ModExpr::Kind::cok: return "cok(" + print_matrix(e.m1, vars) + ")";
    case ModExpr::Kind::ideal: {
        std::string s = "ideal(";
        for (std::size_t i = 0; i < e.polys.size(); ++i) {
            if (i) s += ", ";
            s += print_polynomial(e.polys[i], vars);
        }
        return s + ")";
    }
    case ModExpr::Kind::residue_field: return "residue_field";
    case ModExpr::Kind::syz:
        return "syz(" + print_modexpr(*e.args[0], vars) + ", " + std::to_string(e.num) + ")";
    case ModExpr::Kind::tr: return "tr(" + print_modexpr(*e.args[0], vars) + ")";
    case ModExpr::Kind::dual: return "dual(" + print_modexpr(*e.args[0], vars) + ")";
    case ModExpr::Kind::dsum:
        return "dsum(" + print_modexpr(*e.args[0], vars) + ", " + print_modexpr(*e.args[1], vars) +
               ")";
    case ModExpr::Kind::subq:
        return "subq(" + print_matrix(e.m1, vars) + ", " + print_matrix(e.m2, vars) + ")";
    case ModExpr::Kind::ext:
        return "ext(" + print_modexpr(*e.args[0], vars) + ", " + print_modexpr(*e.args[1], vars) +
               ", " + std::to_string(e.num) + ")";
    case ModExpr::Kind::ref: return e.name;
    }
    return "";
}

}  // namespace detail

// Session grammar:
//   session := stmt*
//   stmt    := 'label' name | 'ring' 'char' uint 'vars' name (',' name)* 'ideal' [polys]
//            | 'option' 'bound' uint | 'let' name '=' modexpr | command
//   command := 'invariants' name | 'resolve' name uint | 'ext_table' name name uint
//            | 'verify' theorem (key '=' value)* | 'corpus' path
inline Session parse_session(const std::string& text)
{
    Session s;
    TextCursor cur{text};
    std::set<std::string> known;
    std::optional<PrimeField> F;
    for (;;) {
        cur.skip_ws();
        if (cur.eof()) break;
        int li = cur.line, co = cur.col;
        std::string head = cur.parse_ident();
        if (head == "label") {
            s.ring.label = cur.parse_ident();
        } else if (head == "ring") {
            if (s.has_ring) throw ParseError("duplicate ring declaration", li, co);
            std::string kw = cur.parse_ident();
            if (kw != "char") cur.fail("expected 'char'");
            std::uint64_t p = cur.parse_uint();
            if (p < 3 || p >= (1ull << 31) || !is_prime_u32(static_cast<std::uint32_t>(p)))
                throw ParseError("characteristic must be an odd prime below 2^31", li, co);
            s.ring.characteristic = static_cast<std::uint32_t>(p);
            F = PrimeField(s.ring.characteristic);
            kw = cur.parse_ident();
            if (kw != "vars") cur.fail("expected 'vars'");
            for (;;) {
                s.ring.vars.push_back(cur.parse_ident());
                if (!cur.accept(',')) break;
            }
            kw = cur.parse_ident();
            if (kw != "ideal") cur.fail("expected 'ideal'");
            // The generator list may be empty (polynomial ring): peek for a
            // statement keyword or end of input.
            for (;;) {
                cur.skip_ws();
                if (cur.eof()) break;
                TextCursor look = cur;
                if (isalpha(static_cast<unsigned char>(look.peek())) || look.peek() == '_') {
                    std::string next = look.parse_ident();
                    if (next == "let" || next == "option" || next == "invariants" ||
                        next == "resolve" || next == "ext_table" || next == "verify" ||
                        next == "corpus" || next == "label" || next == "ring")
                        break;
                }
                int pl = cur.line, pc = cur.col;
                Polynomial g = parse_polynomial(cur, s.ring.vars, *F);
                if (!g.is_homogeneous())
                    throw ParseError("NONHOMOGENEOUS_IDEAL: generator is not homogeneous", pl, pc);
                s.ring.ideal.push_back(std::move(g));
                if (!cur.accept(',')) break;
            }
            s.has_ring = true;
        } else if (head == "option") {
            std::string kw = cur.parse_ident();
            if (kw == "bound") {
                s.bound = cur.parse_uint();
            } else {
                cur.fail("unknown option '" + kw + "'");
            }
        } else if (head == "let") {
            if (!s.has_ring) throw ParseError("'let' before ring declaration", li, co);
            std::string name = cur.parse_ident();
            if (known.count(name) || detail::is_builtin_module(name))
                throw ParseError("name '" + name + "' already bound", li, co);
            cur.expect('=');
            s.bindings.emplace_back(name, detail::parse_modexpr(cur, s.ring, *F, known));
            known.insert(name);
        } else if (head == "invariants" || head == "resolve" || head == "ext_table") {
            if (!s.has_ring) throw ParseError("command before ring declaration", li, co);
            Command c;
            int al = cur.line, ac = cur.col;
            c.a = cur.parse_ident();
            if (!known.count(c.a) && !detail::is_builtin_module(c.a))
                throw ParseError("UNKNOWN_NAME: '" + c.a + "' is not bound", al, ac);
            if (head == "invariants") {
                c.kind = Command::Kind::invariants;
            } else if (head == "resolve") {
                c.kind = Command::Kind::resolve;
                c.n = cur.parse_uint();
            } else {
                c.kind = Command::Kind::ext_table;
                int bl = cur.line, bc = cur.col;
                c.b = cur.parse_ident();
                if (!known.count(c.b) && !detail::is_builtin_module(c.b))
                    throw ParseError("UNKNOWN_NAME: '" + c.b + "' is not bound", bl, bc);
                c.n = cur.parse_uint();
            }
            s.commands.push_back(std::move(c));
        } else if (head == "verify") {
            if (!s.has_ring) throw ParseError("command before ring declaration", li, co);
            Command c;
            c.kind = Command::Kind::verify;
            int tl = cur.line, tc = cur.col;
            c.a = cur.parse_ident();
            if (!theorem_ids().count(c.a))
                throw ParseError("unknown theorem id '" + c.a + "'", tl, tc);
            for (;;) {
                cur.skip_ws();
                if (cur.eof() || !(isalpha(static_cast<unsigned char>(cur.peek())) ||
                                   cur.peek() == '_'))
                    break;
                TextCursor look = cur;
                int kl = look.line, kc = look.col;
                std::string key = look.parse_ident();
                look.skip_ws();
                if (look.peek() != '=') break;  // next statement
                static const std::set<std::string> valid = {"M", "N",     "n",      "j",
                                                            "p", "bound", "corrupt"};
                if (!valid.count(key))
                    throw ParseError("unknown verify argument '" + key + "'", kl, kc);
                cur = look;
                cur.get();
                cur.skip_ws();
                std::string value;
                while (!cur.eof() && (isalnum(static_cast<unsigned char>(cur.peek())) ||
                                      cur.peek() == '_'))
                    value += cur.get();
                if (value.empty()) cur.fail("empty verify argument");
                c.kv[key] = value;
            }
            // Module-name arguments must resolve.
            for (const char* key : {"M", "N"}) {
                auto it = c.kv.find(key);
                if (it != c.kv.end() && !known.count(it->second) &&
                    !detail::is_builtin_module(it->second))
                    throw ParseError("UNKNOWN_NAME: '" + it->second + "' is not bound", li, co);
            }
            s.commands.push_back(std::move(c));
        } else if (head == "corpus") {
            Command c;
            c.kind = Command::Kind::corpus;
            cur.skip_ws();
            while (!cur.eof() && !isspace(static_cast<unsigned char>(cur.peek()))) c.a += cur.get();
            if (c.a.empty()) cur.fail("corpus requires a directory path");
            s.commands.push_back(std::move(c));
        } else {
            throw ParseError("unknown statement '" + head + "'", li, co);
        }
    }
    return s;
}

inline std::string print_session(const Session& s)
{
    std::ostringstream out;
    if (!s.ring.label.empty()) out << "label " << s.ring.label << "\n";
    if (s.has_ring) {
        out << "ring char " << s.ring.characteristic << " vars ";
        for (std::size_t i = 0; i < s.ring.vars.size(); ++i) {
            if (i) out << ", ";
            out << s.ring.vars[i];
        }
        out << " ideal";
        for (std::size_t i = 0; i < s.ring.ideal.size(); ++i)
            out << (i ? ", " : " ") << print_polynomial(s.ring.ideal[i], s.ring.vars);
        out << "\n";
    }
    out << "option bound " << s.bound << "\n";
    for (const auto& [name, expr] : s.bindings)
        out << "let " << name << " = " << detail::print_modexpr(*expr, s.ring.vars) << "\n";
    for (const auto& c : s.commands) {
        switch (c.kind) {
        case Command::Kind::invariants: out << "invariants " << c.a << "\n"; break;
        case Command::Kind::resolve: out << "resolve " << c.a << " " << c.n << "\n"; break;
        case Command::Kind::ext_table:
            out << "ext_table " << c.a << " " << c.b << " " << c.n << "\n";
            break;
        case Command::Kind::verify: {
            out << "verify " << c.a;
            for (const auto& [k, v] : c.kv) out << " " << k << "=" << v;
            out << "\n";
            break;
        }
        case Command::Kind::corpus: out << "corpus " << c.a << "\n"; break;
        }
    }
    return out.str();
}

}  // namespace syzlab
