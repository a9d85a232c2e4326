#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qwa/algebra.hpp"
#include "qwa/axioms.hpp"
#include "qwa/builtins.hpp"

namespace qwa::testing {

inline FiniteAlgebra example513() { return *builtin_algebra("example-5.13"); }
inline FiniteAlgebra boolean2() { return *builtin_algebra("boolean-2"); }
inline FiniteAlgebra luk(int n) { return *builtin_algebra("lukasiewicz-" + std::to_string(n)); }

// the four-element Boolean algebra (two incomparable atoms)
inline FiniteAlgebra diamond4() {
    return parse_algebra_text(
        "elements: 0 a b 1\n"
        "one: 1\n"
        "zero: 0\n"
        "row 0: 1 1 1 1\n"
        "row a: b 1 b 1\n"
        "row b: a a 1 1\n"
        "row 1: 0 a b 1\n");
}

// three-element chain with the Goedel implication (bounded but not involutive)
inline FiniteAlgebra godel3() {
    return parse_algebra_text(
        "elements: 0 m 1\n"
        "one: 1\n"
        "zero: 0\n"
        "row 0: 1 1 1\n"
        "row m: 0 1 1\n"
        "row 1: 0 m 1\n");
}

inline Elem el(const FiniteAlgebra& a, const std::string& name) {
    for (Elem x = 0; x < a.n; ++x)
        if (a.names[x] == name) return x;
    throw std::runtime_error("no element named " + name);
}

// table rows written with element names, for readable frozen expectations
inline std::vector<Elem> named_table(const FiniteAlgebra& a,
                                     const std::vector<std::vector<std::string>>& rows) {
    std::vector<Elem> out;
    for (const auto& row : rows)
        for (const auto& cell : row) out.push_back(el(a, cell));
    return out;
}

// re-evaluates a failure witness against the axiom it names; the witness may
// come from a containment-propagated report, so dispatch is on the tag alone
inline bool witness_violates(const FiniteAlgebra& a, const ClassReport& r) {
    if (!r.witness) return false;
    const Witness& w = *r.witness;
    auto get = [&](char v) -> Elem {
        for (auto [n, e] : w.assign)
            if (n == v) return e;
        return a.zero;
    };
    Elem x = get('x'), y = get('y'), z = get('z');
    auto p = tables_of(a);
    auto prod_at = [&](Elem u, Elem v) { return p->prod[u * a.n + v]; };
    auto oplus_at = [&](Elem u, Elem v) { return p->oplus[u * a.n + v]; };
    const std::string& ax = w.axiom;
    if (ax == "BE1") return a.arrow(x, x) != a.one;
    if (ax == "BE2") return a.arrow(x, a.one) != a.one;
    if (ax == "BE3") return a.arrow(a.one, x) != x;
    if (ax == "BE4") return a.arrow(x, a.arrow(y, z)) != a.arrow(y, a.arrow(x, z));
    if (ax == "bounded") return !a.leq(a.zero, x);
    if (ax == "involution") return a.star(a.star(x)) != x;
    if (ax == "BCK1")
        return a.arrow(a.arrow(x, y), a.arrow(a.arrow(y, z), a.arrow(x, z))) != a.one;
    if (ax == "BCK4") return x != y && a.leq(x, y) && a.leq(y, x);
    if (ax == "comm" || ax == "W3") return a.sup(x, y) != a.sup(y, x);
    if (ax == "W1") return a.arrow(a.one, x) != x;
    if (ax == "W2")
        return a.arrow(a.arrow(y, z), a.arrow(a.arrow(z, x), a.arrow(y, x))) != a.one;
    if (ax == "W4") return a.arrow(a.arrow(a.star(x), a.star(y)), a.arrow(y, x)) != a.one;
    if (ax == "QW")
        return a.arrow(x, a.inf(a.inf(x, y), a.inf(z, x))) !=
               a.inf(a.arrow(x, y), a.arrow(x, z));
    if (ax == "Pqmv")
        return a.prod(x, a.sup(a.sup(a.star(x), y), a.sup(z, a.star(x)))) !=
               a.sup(a.prod(x, y), a.prod(x, z));
    if (ax == "QMV")
        return a.oplus(x, a.infS(a.infS(a.star(x), y), a.infS(z, a.star(x)))) !=
               a.infS(a.oplus(x, y), a.oplus(x, z));
    if (ax == "quasilinear") return !a.leqQ(x, y) && !(a.leq(y, x) && y != x);
    if (ax == "PU") return prod_at(a.one, x) != x || prod_at(x, a.one) != x;
    if (ax == "Pcomm") return prod_at(x, y) != prod_at(y, x);
    if (ax == "Pass") return prod_at(x, prod_at(y, z)) != prod_at(prod_at(x, y), z);
    if (ax == "m-L") return prod_at(x, a.star(a.one)) != a.star(a.one);
    if (ax == "m-Re") return prod_at(x, a.star(x)) != a.star(a.one);
    if (ax == "S1") return oplus_at(x, y) != oplus_at(y, x);
    if (ax == "S2") return oplus_at(x, oplus_at(y, z)) != oplus_at(oplus_at(x, y), z);
    if (ax == "S3") return oplus_at(x, a.star(x)) != a.one;
    if (ax == "S4") return oplus_at(x, a.zero) != x;
    if (ax == "S5") return a.star(a.star(x)) != x;
    if (ax == "S6") return a.star(a.zero) != a.one;
    if (ax == "S7") return oplus_at(x, a.one) != a.one;
    return false;  // unknown tag
}

}  // namespace qwa::testing
