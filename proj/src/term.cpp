#include "qwa/term.hpp"

#include <cctype>
#include <sstream>

namespace qwa {

TermPtr make_var(int v) {
    auto t = std::make_shared<Term>();
    t->op = TermOp::Var;
    t->var = v;
    return t;
}

TermPtr make_const(TermOp op) {
    auto t = std::make_shared<Term>();
    t->op = op;
    return t;
}

TermPtr make_star(TermPtr x) {
    auto t = std::make_shared<Term>();
    t->op = TermOp::Star;
    t->lhs = std::move(x);
    return t;
}

TermPtr make_bin(TermOp op, TermPtr l, TermPtr r) {
    auto t = std::make_shared<Term>();
    t->op = op;
    t->lhs = std::move(l);
    t->rhs = std::move(r);
    return t;
}

bool term_eq(const Term& a, const Term& b) {
    if (a.op != b.op || a.var != b.var) return false;
    if ((a.lhs == nullptr) != (b.lhs == nullptr)) return false;
    if ((a.rhs == nullptr) != (b.rhs == nullptr)) return false;
    if (a.lhs && !term_eq(*a.lhs, *b.lhs)) return false;
    if (a.rhs && !term_eq(*a.rhs, *b.rhs)) return false;
    return true;
}

namespace {
bool atom_eq(const Atom& a, const Atom& b) {
    return a.kind == b.kind && term_eq(*a.lhs, *b.lhs) && term_eq(*a.rhs, *b.rhs);
}
}  // namespace

bool statement_eq(const Statement& a, const Statement& b) {
    if (a.vars != b.vars || a.hyps.size() != b.hyps.size()) return false;
    for (size_t i = 0; i < a.hyps.size(); ++i)
        if (!atom_eq(a.hyps[i], b.hyps[i])) return false;
    return atom_eq(a.conclusion, b.conclusion);
}

Statement desugared(const Statement& s) {
    auto desugar = [](const Atom& at) -> Atom {
        switch (at.kind) {
            case AtomKind::Eq: return at;
            case AtomKind::Leq:
                return Atom{AtomKind::Eq, make_bin(TermOp::Imp, at.lhs, at.rhs),
                            make_const(TermOp::One)};
            case AtomKind::LeqQ:
                return Atom{AtomKind::Eq, at.lhs, make_bin(TermOp::Meet, at.lhs, at.rhs)};
        }
        return at;
    };
    Statement out;
    out.vars = s.vars;
    for (const auto& h : s.hyps) out.hyps.push_back(desugar(h));
    out.conclusion = desugar(s.conclusion);
    return out;
}

// --- lexer --------------------------------------------------------------------

namespace {

enum class Tok {
    Ident,
    Zero,
    One,
    Arrow,
    Star,
    Meet,
    Join,
    Prod,
    MeetL,
    JoinL,
    OPlus,
    SMeet,
    SJoin,
    LParen,
    RParen,
    Comma,
    Turnstile,
    Eq,
    Leq,
    LeqQ,
    End,
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::Ident: return "identifier";
        case Tok::Zero: return "'0'";
        case Tok::One: return "'1'";
        case Tok::Arrow: return "'->'";
        case Tok::Star: return "'''";
        case Tok::Meet: return "'&'";
        case Tok::Join: return "'|'";
        case Tok::Prod: return "'.'";
        case Tok::MeetL: return "'&&'";
        case Tok::JoinL: return "'||'";
        case Tok::OPlus: return "'(+)'";
        case Tok::SMeet: return "'&s'";
        case Tok::SJoin: return "'|s'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Comma: return "','";
        case Tok::Turnstile: return "'|-'";
        case Tok::Eq: return "'='";
        case Tok::Leq: return "'<='";
        case Tok::LeqQ: return "'<=Q'";
        case Tok::End: return "end of statement";
    }
    return "?";
}

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

bool ident_char(char c) { return std::isalnum((unsigned char)c) || c == '_'; }

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto peek = [&](size_t k) -> char { return i + k < s.size() ? s[i + k] : '\0'; };
    auto push = [&](Tok t, size_t len) {
        out.push_back(Token{t, std::string(s.substr(i, len)), line, col});
        i += len;
        col += (int)len;
    };
    while (i < s.size()) {
        char c = s[i];
        if (c == '\n') {
            ++i;
            ++line;
            col = 1;
            continue;
        }
        if (std::isspace((unsigned char)c)) {
            ++i;
            ++col;
            continue;
        }
        if (c == '-') {
            if (peek(1) == '>') {
                push(Tok::Arrow, 2);
                continue;
            }
            throw ParseError(line, col, "stray '-' (did you mean '->'?)");
        }
        if (c == '\'') {
            push(Tok::Star, 1);
            continue;
        }
        if (c == '&') {
            if (peek(1) == '&') {
                push(Tok::MeetL, 2);
                continue;
            }
            if (peek(1) == 's' && !ident_char(peek(2))) {
                push(Tok::SMeet, 2);
                continue;
            }
            push(Tok::Meet, 1);
            continue;
        }
        if (c == '|') {
            if (peek(1) == '-') {
                push(Tok::Turnstile, 2);
                continue;
            }
            if (peek(1) == '|') {
                push(Tok::JoinL, 2);
                continue;
            }
            if (peek(1) == 's' && !ident_char(peek(2))) {
                push(Tok::SJoin, 2);
                continue;
            }
            push(Tok::Join, 1);
            continue;
        }
        if (c == '.') {
            push(Tok::Prod, 1);
            continue;
        }
        if (c == '(') {
            if (peek(1) == '+' && peek(2) == ')') {
                push(Tok::OPlus, 3);
                continue;
            }
            push(Tok::LParen, 1);
            continue;
        }
        if (c == ')') {
            push(Tok::RParen, 1);
            continue;
        }
        if (c == ',') {
            push(Tok::Comma, 1);
            continue;
        }
        if (c == '=') {
            push(Tok::Eq, 1);
            continue;
        }
        if (c == '<') {
            if (peek(1) != '=') throw ParseError(line, col, "stray '<' (did you mean '<='?)");
            if (peek(2) == 'Q' && !ident_char(peek(3))) {
                push(Tok::LeqQ, 3);
                continue;
            }
            push(Tok::Leq, 2);
            continue;
        }
        if (c == '0' && !ident_char(peek(1))) {
            push(Tok::Zero, 1);
            continue;
        }
        if (c == '1' && !ident_char(peek(1))) {
            push(Tok::One, 1);
            continue;
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t len = 1;
            while (i + len < s.size() && ident_char(s[i + len])) ++len;
            push(Tok::Ident, len);
            continue;
        }
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back(Token{Tok::End, "", line, col});
    return out;
}

// --- parser -------------------------------------------------------------------

bool is_binop(Tok t) {
    switch (t) {
        case Tok::Meet:
        case Tok::Join:
        case Tok::Prod:
        case Tok::MeetL:
        case Tok::JoinL:
        case Tok::OPlus:
        case Tok::SMeet:
        case Tok::SJoin: return true;
        default: return false;
    }
}

TermOp binop_op(Tok t) {
    switch (t) {
        case Tok::Meet: return TermOp::Meet;
        case Tok::Join: return TermOp::Join;
        case Tok::Prod: return TermOp::Prod;
        case Tok::MeetL: return TermOp::MeetL;
        case Tok::JoinL: return TermOp::JoinL;
        case Tok::OPlus: return TermOp::OPlus;
        case Tok::SMeet: return TermOp::SMeet;
        case Tok::SJoin: return TermOp::SJoin;
        default: throw std::logic_error("not a binop");
    }
}

struct Parser {
    std::vector<Token> toks;
    size_t pos = 0;
    Statement stmt;

    const Token& cur() const { return toks[pos]; }
    bool at(Tok t) const { return cur().kind == t; }

    [[noreturn]] void fail(const std::string& expected) {
        const Token& t = cur();
        std::string got = t.kind == Tok::End ? "end of statement" : "'" + t.text + "'";
        throw ParseError(t.line, t.col, "expected " + expected + ", got " + got);
    }

    void expect(Tok t) {
        if (!at(t)) fail(tok_name(t));
        ++pos;
    }

    int var_index(const std::string& name) {
        for (size_t i = 0; i < stmt.vars.size(); ++i)
            if (stmt.vars[i] == name) return (int)i;
        stmt.vars.push_back(name);
        return (int)stmt.vars.size() - 1;
    }

    TermPtr primary() {
        if (at(Tok::Ident)) {
            int v = var_index(cur().text);
            ++pos;
            return make_var(v);
        }
        if (at(Tok::Zero)) {
            ++pos;
            return make_const(TermOp::Zero);
        }
        if (at(Tok::One)) {
            ++pos;
            return make_const(TermOp::One);
        }
        if (at(Tok::LParen)) {
            ++pos;
            TermPtr t = term();
            expect(Tok::RParen);
            return t;
        }
        fail("a variable, '0', '1', or '('");
    }

    TermPtr unary() {
        TermPtr t = primary();
        while (at(Tok::Star)) {
            ++pos;
            t = make_star(std::move(t));
        }
        return t;
    }

    // At most one binary operation per unparenthesized chain.
    TermPtr chain() {
        TermPtr l = unary();
        if (!is_binop(cur().kind)) return l;
        Tok op = cur().kind;
        ++pos;
        TermPtr r = unary();
        if (is_binop(cur().kind))
            throw ParseError(cur().line, cur().col,
                             "operator chains are ambiguous, parenthesize (no precedence is "
                             "defined between binary operations)");
        return make_bin(binop_op(op), std::move(l), std::move(r));
    }

    TermPtr term() {
        TermPtr l = chain();
        if (at(Tok::Arrow)) {
            ++pos;
            TermPtr r = term();  // right-associative
            return make_bin(TermOp::Imp, std::move(l), std::move(r));
        }
        return l;
    }

    Atom atom() {
        TermPtr l = term();
        AtomKind k;
        if (at(Tok::Eq))
            k = AtomKind::Eq;
        else if (at(Tok::Leq))
            k = AtomKind::Leq;
        else if (at(Tok::LeqQ))
            k = AtomKind::LeqQ;
        else
            fail("'=', '<=' or '<=Q'");
        ++pos;
        TermPtr r = term();
        return Atom{k, std::move(l), std::move(r)};
    }

    Statement parse() {
        std::vector<Atom> atoms;
        atoms.push_back(atom());
        while (at(Tok::Comma)) {
            ++pos;
            atoms.push_back(atom());
        }
        if (at(Tok::Turnstile)) {
            ++pos;
            stmt.hyps = std::move(atoms);
            stmt.conclusion = atom();
        } else {
            if (atoms.size() != 1) fail("'|-'");
            stmt.conclusion = std::move(atoms[0]);
        }
        if (!at(Tok::End)) fail("end of statement");
        return std::move(stmt);
    }
};

}  // namespace

Statement parse_statement(std::string_view text) {
    Parser p;
    p.toks = lex(text);
    return p.parse();
}

// --- printing -------------------------------------------------------------

namespace {

const char* op_token(TermOp op) {
    switch (op) {
        case TermOp::Imp: return "->";
        case TermOp::Meet: return "&";
        case TermOp::Join: return "|";
        case TermOp::Prod: return ".";
        case TermOp::MeetL: return "&&";
        case TermOp::JoinL: return "||";
        case TermOp::OPlus: return "(+)";
        case TermOp::SMeet: return "&s";
        case TermOp::SJoin: return "|s";
        default: throw std::logic_error("not a binary op");
    }
}

bool is_binary(const Term& t) { return t.lhs && t.rhs; }

void print_rec(const Term& t, const std::vector<std::string>* vars, std::string& out);

void print_operand(const Term& t, const std::vector<std::string>* vars, std::string& out,
                   bool bare_imp_tail = false) {
    bool parens = is_binary(t) && !(bare_imp_tail && t.op == TermOp::Imp);
    if (parens) out += '(';
    print_rec(t, vars, out);
    if (parens) out += ')';
}

void print_rec(const Term& t, const std::vector<std::string>* vars, std::string& out) {
    switch (t.op) {
        case TermOp::Var:
            out += vars ? (*vars)[t.var] : "v" + std::to_string(t.var);
            return;
        case TermOp::Zero: out += '0'; return;
        case TermOp::One: out += '1'; return;
        case TermOp::Star:
            print_operand(*t.lhs, vars, out);
            out += '\'';
            return;
        default:
            print_operand(*t.lhs, vars, out);
            out += ' ';
            out += op_token(t.op);
            out += ' ';
            print_operand(*t.rhs, vars, out, t.op == TermOp::Imp);
            return;
    }
}

std::string print_atom(const Atom& at, const std::vector<std::string>* vars) {
    std::string out;
    print_rec(*at.lhs, vars, out);
    switch (at.kind) {
        case AtomKind::Eq: out += " = "; break;
        case AtomKind::Leq: out += " <= "; break;
        case AtomKind::LeqQ: out += " <=Q "; break;
    }
    print_rec(*at.rhs, vars, out);
    return out;
}

}  // namespace

std::string print_term(const Term& t) {
    std::string out;
    print_rec(t, nullptr, out);
    return out;
}

std::string print_statement(const Statement& s) {
    std::string out;
    for (size_t i = 0; i < s.hyps.size(); ++i) {
        if (i) out += ", ";
        out += print_atom(s.hyps[i], &s.vars);
    }
    if (!s.hyps.empty()) out += " |- ";
    out += print_atom(s.conclusion, &s.vars);
    return out;
}

// --- evaluation -------------------------------------------------------------

Elem eval_term(const FiniteAlgebra& a, const Term& t, std::span<const Elem> env) {
    switch (t.op) {
        case TermOp::Var: return env[t.var];
        case TermOp::Zero: return a.zero;
        case TermOp::One: return a.one;
        case TermOp::Star: return a.star(eval_term(a, *t.lhs, env));
        case TermOp::Imp: return a.arrow(eval_term(a, *t.lhs, env), eval_term(a, *t.rhs, env));
        case TermOp::Meet: return a.inf(eval_term(a, *t.lhs, env), eval_term(a, *t.rhs, env));
        case TermOp::Join: return a.sup(eval_term(a, *t.lhs, env), eval_term(a, *t.rhs, env));
        case TermOp::Prod: return a.prod(eval_term(a, *t.lhs, env), eval_term(a, *t.rhs, env));
        case TermOp::MeetL: return a.infL(eval_term(a, *t.lhs, env), eval_term(a, *t.rhs, env));
        case TermOp::JoinL: return a.supL(eval_term(a, *t.lhs, env), eval_term(a, *t.rhs, env));
        case TermOp::OPlus: return a.oplus(eval_term(a, *t.lhs, env), eval_term(a, *t.rhs, env));
        case TermOp::SMeet: return a.infS(eval_term(a, *t.lhs, env), eval_term(a, *t.rhs, env));
        case TermOp::SJoin: return a.supS(eval_term(a, *t.lhs, env), eval_term(a, *t.rhs, env));
    }
    throw std::logic_error("bad term node");
}

bool eval_atom(const FiniteAlgebra& a, const Atom& at, std::span<const Elem> env) {
    Elem l = eval_term(a, *at.lhs, env);
    Elem r = eval_term(a, *at.rhs, env);
    switch (at.kind) {
        case AtomKind::Eq: return l == r;
        case AtomKind::Leq: return a.arrow(l, r) == a.one;
        case AtomKind::LeqQ: return l == a.inf(l, r);
    }
    return false;
}

HoldsResult holds(const FiniteAlgebra& a, const Statement& s, const Subset& scope) {
    const auto domain = scope.elements();
    const int k = (int)s.vars.size();
    std::vector<Elem> env(k, a.zero);

    HoldsResult res;
    if (domain.empty() && k > 0) return res;  // vacuously true over an empty scope

    std::vector<int> idx(k, 0);
    while (true) {
        for (int i = 0; i < k; ++i) env[i] = domain[idx[i]];
        bool applicable = true;
        for (const auto& h : s.hyps)
            if (!eval_atom(a, h, env)) {
                applicable = false;
                break;
            }
        if (applicable && !eval_atom(a, s.conclusion, env)) {
            res.holds = false;
            for (int i = 0; i < k; ++i) res.witness.emplace_back(s.vars[i], env[i]);
            return res;
        }
        // odometer, last variable fastest
        int i = k - 1;
        for (; i >= 0; --i) {
            if (++idx[i] < (int)domain.size()) break;
            idx[i] = 0;
        }
        if (i < 0) break;
    }
    return res;
}

HoldsResult holds(const FiniteAlgebra& a, const Statement& s) {
    return holds(a, s, Subset::full(a.n));
}

std::string format_holds(const FiniteAlgebra& a, const HoldsResult& r) {
    if (r.holds) return "HOLDS";
    std::string out = "FAILS witness";
    for (const auto& [v, e] : r.witness) {
        out += ' ';
        out += v;
        out += '=';
        out += a.name(e);
    }
    return out;
}

}  // namespace qwa
