#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

// Finite algebras (X, ->, 0, 1) given as operation tables, with all the
// operations and relations derivable from the implication:
//
//   x* = x -> 0                    star
//   x | y  = (x -> y) -> y         sup
//   x & y  = ((x* -> y*) -> y*)*   inf
//   x . y  = (x -> y*)*            prod
//   x || y = x* -> y               supL
//   x && y = x . y                 infL
//   x (+) y = x* -> y              oplus
//   x |s y = (x . y*) (+) y        supS
//   x &s y = (x (+) y*) . y        infS
//   x <= y   iff  x -> y = 1
//   x <=Q y  iff  x = x & y
//   x <=L y  iff  x* -> y = y

namespace qwa {

using Elem = int;

struct FiniteAlgebra;

// Cache of every derived table; coherence with the per-element operations is
// checkable by recomputation.
struct DerivedTables {
    int n = 0;
    std::vector<Elem> sup, inf, prod, supL, infL, oplus;  // n*n, row-major
    std::vector<std::uint8_t> leq, leqQ;                  // n*n, row-major

    Elem at(const std::vector<Elem>& t, Elem x, Elem y) const { return t[x * n + y]; }
};

struct FiniteAlgebra {
    int n = 0;
    std::vector<std::string> names;  // display labels, index-aligned
    std::vector<Elem> imp;           // n*n row-major, imp[x*n+y] = x -> y
    Elem one = 0;
    Elem zero = 0;
    std::shared_ptr<const DerivedTables> derived;  // filled eagerly for small n

    const std::string& name(Elem x) const { return names[x]; }
    bool index_ok(Elem x) const { return x >= 0 && x < n; }

    Elem arrow(Elem x, Elem y) const {
        check(x);
        check(y);
        return imp[x * n + y];
    }
    Elem star(Elem x) const { return arrow(x, zero); }
    Elem sup(Elem x, Elem y) const { return arrow(arrow(x, y), y); }
    Elem inf(Elem x, Elem y) const { return star(sup(star(x), star(y))); }
    Elem prod(Elem x, Elem y) const { return star(arrow(x, star(y))); }
    Elem supL(Elem x, Elem y) const { return arrow(star(x), y); }
    Elem infL(Elem x, Elem y) const { return prod(x, y); }
    Elem oplus(Elem x, Elem y) const { return arrow(star(x), y); }
    Elem supS(Elem x, Elem y) const { return oplus(prod(x, star(y)), y); }
    Elem infS(Elem x, Elem y) const { return prod(oplus(x, star(y)), y); }
    bool leq(Elem x, Elem y) const { return arrow(x, y) == one; }
    bool leqQ(Elem x, Elem y) const { return x == inf(x, y); }
    bool leqL(Elem x, Elem y) const { return arrow(star(x), y) == y; }

private:
    void check(Elem x) const {
        if (!index_ok(x)) throw std::out_of_range("element index out of range");
    }
};

// Shape-validates and attaches the derived-table cache (n <= kEagerDeriveLimit).
// Throws std::invalid_argument on violations. Does NOT require zero to be a
// bottom; that is the loader's job (parse_algebra).
inline constexpr int kEagerDeriveLimit = 256;
FiniteAlgebra make_algebra(int n, std::vector<std::string> names, std::vector<Elem> imp,
                           Elem one, Elem zero);

DerivedTables derive_all(const FiniteAlgebra& a);

// Cached tables if present, freshly computed otherwise.
std::shared_ptr<const DerivedTables> tables_of(const FiniteAlgebra& a);

// --- subsets of a carrier ---------------------------------------------------

struct Subset {
    int n = 0;
    std::vector<std::uint8_t> member;

    static Subset empty(int n) { return Subset{n, std::vector<std::uint8_t>(n, 0)}; }
    static Subset full(int n) { return Subset{n, std::vector<std::uint8_t>(n, 1)}; }
    static Subset of(int n, std::initializer_list<Elem> xs);

    bool contains(Elem x) const { return member[x] != 0; }
    void add(Elem x) { member[x] = 1; }
    int count() const;
    std::vector<Elem> elements() const;  // ascending index order
    bool operator==(const Subset&) const = default;
};

// "{0,a,1}" with display names in index order
std::string format_subset(const FiniteAlgebra& a, const Subset& s);

// --- helpers ----------------------------------------------------------------

// New algebra with one table entry replaced (cache rebuilt).
FiniteAlgebra with_entry(const FiniteAlgebra& a, Elem x, Elem y, Elem v);

// Relabel by pi: old index -> new index. Names move with their elements.
FiniteAlgebra relabel(const FiniteAlgebra& a, const std::vector<Elem>& pi);

// --- the algebra text format ------------------------------------------------
//
//   elements: <name0> ... <name(n-1)>
//   one: <name>
//   zero: <name>
//   row <name>: <name> ... <name>        (one per element, x->y left to right)
//
// '#' starts a comment, blank lines are ignored, names are case-sensitive and
// may not contain whitespace, '#' or ':'.

struct AlgebraFormatError : std::runtime_error {
    int line;
    AlgebraFormatError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Parses and validates, including the bottom check leq(zero, x) for all x.
FiniteAlgebra parse_algebra(std::istream& in);
FiniteAlgebra parse_algebra_text(const std::string& text);
FiniteAlgebra load_algebra_file(const std::string& path);

std::string format_algebra(const FiniteAlgebra& a);

// Canonical names for generated algebras of size n: "0", "a", "b", ..., "1"
// (the single element of the trivial algebra is named "1").
std::vector<std::string> generated_names(int n);

}  // namespace qwa
