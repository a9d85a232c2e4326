#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qwa/algebra.hpp"

// Terms, identities and quasi-identities over the signature
// {->, ', &, |, ., &&, ||, (+), &s, |s, 0, 1} with relational atoms =, <=, <=Q.
//
// Concrete syntax:
//   ->   implication, right-associative, lowest precedence
//   '    postfix star, highest precedence
//   &  | .  &&  ||  (+)  &s  |s    binary operations; chains of binary
//        operations are NOT given a precedence or associativity -- any two of
//        them in a row must be parenthesized
//   h1, h2 |- c    quasi-identity (hypotheses |- conclusion)

namespace qwa {

enum class TermOp {
    Var,
    Zero,
    One,
    Imp,    // ->
    Star,   // '
    Meet,   // &
    Join,   // |
    Prod,   // .
    MeetL,  // &&
    JoinL,  // ||
    OPlus,  // (+)
    SMeet,  // &s
    SJoin,  // |s
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    TermOp op;
    int var = -1;  // Var only: index into Statement::vars
    TermPtr lhs, rhs;
};

TermPtr make_var(int v);
TermPtr make_const(TermOp op);                              // Zero / One
TermPtr make_star(TermPtr t);
TermPtr make_bin(TermOp op, TermPtr l, TermPtr r);
bool term_eq(const Term& a, const Term& b);

enum class AtomKind { Eq, Leq, LeqQ };

struct Atom {
    AtomKind kind = AtomKind::Eq;
    TermPtr lhs, rhs;
};

struct Statement {
    std::vector<std::string> vars;  // first-appearance order
    std::vector<Atom> hyps;
    Atom conclusion;
};

bool statement_eq(const Statement& a, const Statement& b);

// Relational atoms rewritten into plain equations:
//   s <= t   becomes  (s -> t) = 1
//   s <=Q t  becomes  s = (s & t)
Statement desugared(const Statement& s);

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(int line_, int col_, const std::string& what_)
        : std::runtime_error("syntax error at " + std::to_string(line_) + ":" +
                             std::to_string(col_) + ": " + what_),
          line(line_),
          col(col_) {}
};

Statement parse_statement(std::string_view text);

std::string print_term(const Term& t);
std::string print_statement(const Statement& s);

// --- evaluation ---------------------------------------------------------------

Elem eval_term(const FiniteAlgebra& a, const Term& t, std::span<const Elem> env);
bool eval_atom(const FiniteAlgebra& a, const Atom& at, std::span<const Elem> env);

struct HoldsResult {
    bool holds = true;
    std::vector<std::pair<std::string, Elem>> witness;  // vars in statement order
};

// Exhaustive scan of assignments of the statement's variables into the scope,
// in lexicographic element order with the first variable outermost.
// Assignments whose hypotheses fail are vacuous.
HoldsResult holds(const FiniteAlgebra& a, const Statement& s, const Subset& scope);
HoldsResult holds(const FiniteAlgebra& a, const Statement& s);  // full carrier

std::string format_holds(const FiniteAlgebra& a, const HoldsResult& r);

}  // namespace qwa
