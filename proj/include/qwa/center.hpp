#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qwa/algebra.hpp"
#include "qwa/axioms.hpp"

// The two centers of an algebra and the structure checks on them:
//   Z(X) = { x | x & y = y & x for all y }     (commutative center)
//   O(X) = { x | x = x' -> x }                 (orthocenter)
// Z(X) is expected to be a commutative subalgebra forming a distributive
// lattice under <=Q whose lattice reduct with ' is a Kleene algebra; O(X) is
// expected to form an orthomodular lattice under &&, ||, '.

namespace qwa {

bool commutes(const FiniteAlgebra& a, Elem x, Elem y);

Subset wajsberg_center(const FiniteAlgebra& a);
Subset oml_center(const FiniteAlgebra& a);

struct NotClosedError : std::runtime_error {
    std::string op;  // "->" or "*"
    Elem x, y;       // y == -1 for the unary case
    NotClosedError(std::string op_, Elem x_, Elem y_, const std::string& what_)
        : std::runtime_error(what_), op(std::move(op_)), x(x_), y(y_) {}
};

// Restriction of the algebra to S (which must contain zero and one and be
// closed under -> and *). Element order is preserved. Throws NotClosedError.
FiniteAlgebra induced_subalgebra(const FiniteAlgebra& a, const Subset& s);

struct CenterFailure {
    std::string tag;
    std::vector<std::pair<char, Elem>> witness;
};

struct CenterReport {
    Subset center;
    bool closure_ok = true;
    bool structure_ok = true;
    std::vector<CenterFailure> failures;  // first witness per failing property
    bool pass() const { return closure_ok && structure_ok; }
};

std::string format_center_failure(const FiniteAlgebra& a, const CenterFailure& f);

// Z(X) is a commutative (Wajsberg) subalgebra: closure under ->, *, &, |,
// plus the induced subalgebra passing the wajsberg check.
CenterReport verify_wajsberg_center(const FiniteAlgebra& a);

// | and & restricted to Z(X) are the <=Q least upper / greatest lower bounds
// (candidate bounds z range over the whole carrier by default, over Z(X) with
// bound_over_all=false), and both distributivity laws hold on Z(X).
CenterReport verify_center_lattice(const FiniteAlgebra& a, bool bound_over_all = true);

// (Z(X), &, |, ', 0, 1): involution, De Morgan, x & x' <=Q y | y', and the
// two annihilation identities (x' . y) & (x . y') = 0, (x & x') . (y & y') = 0.
CenterReport verify_kleene_center(const FiniteAlgebra& a);

// (O(X), &&, ||, ', 0, 1) is an orthomodular lattice; also <=L coincides with
// <=Q on O(X) and || / && are the <=Q bounds within O(X).
CenterReport verify_oml_center(const FiniteAlgebra& a);

// For quasi-linear algebras: <= restricted to Z(X) is total.
CenterReport verify_quasilinear_center(const FiniteAlgebra& a, CheckOptions opts = {});

// --- lattice views ----------------------------------------------------------

struct LatticeView {
    int m = 0;                       // restricted carrier size
    std::vector<std::string> names;  // m labels
    std::vector<Elem> base;          // parent indices (identity for synthetic views)
    std::vector<Elem> meet, join;    // m*m row-major
    std::vector<Elem> comp;          // m
    Elem zero = 0, one = 0;

    Elem meet_at(Elem x, Elem y) const { return meet[x * m + y]; }
    Elem join_at(Elem x, Elem y) const { return join[x * m + y]; }
    bool le(Elem x, Elem y) const { return meet_at(x, y) == x; }
};

// The (&&, ||, ') structure on S, reindexed to 0..|S|-1 in element order.
// Throws NotClosedError when S is not closed under && / || / *.
LatticeView extract_lattice(const FiniteAlgebra& a, const Subset& s);

// First ortholattice/orthomodularity failure (Q1 bounded lattice axioms, Q2
// complementation, Q3 De Morgan, Q4 involution, Q5 orthomodularity), if any.
std::optional<CenterFailure> ortholattice_check(const LatticeView& l);

struct NotOrthomodularError : std::runtime_error {
    CenterFailure failure;
    NotOrthomodularError(CenterFailure f, const std::string& what_)
        : std::runtime_error(what_), failure(std::move(f)) {}
};

// x -> y := x' v y over an orthomodular lattice. Throws NotOrthomodularError
// when the input fails ortholattice_check.
FiniteAlgebra oml_to_qw(const LatticeView& l);

// First (x, y, z) in S^3 with x || (y && z) != (x || y) && (x || z), if any.
// Distributivity of the orthocenter lattice is NOT a theorem; this probe
// reports the counterexample when there is one.
std::optional<std::array<Elem, 3>> latl_distributivity_witness(const FiniteAlgebra& a,
                                                               const Subset& s);

// --- order export -------------------------------------------------------------

enum class OrderKind { Leq, LeqQ };

// Covering relation of the chosen order restricted to S, as deterministic
// "node <name>" / "edge <lower> <upper>" lines (transitive reduction, no
// reflexive edges, index order).
std::string hasse_export(const FiniteAlgebra& a, OrderKind order, const Subset& s);

}  // namespace qwa
