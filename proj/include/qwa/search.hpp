#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qwa/algebra.hpp"
#include "qwa/axioms.hpp"
#include "qwa/term.hpp"

// Exhaustive enumeration of the algebras of a given size and class, one
// canonical representative per isomorphism class, and countermodel search
// over the enumerated models.
//
// Generated algebras put zero at index 0 and one at index n-1. The search
// fills the non-forced table cells depth-first with incremental constraint
// checks (BE4 plus the class identity), prunes non-lex-minimal partial tables
// against all permutations of the middle elements, and keeps a completed
// table only if it passes the full direct class check and equals its own
// canonical form.

namespace qwa {

struct SearchSpec {
    int size = 2;
    AlgClass cls = AlgClass::Qw;
    std::uint64_t node_budget = 400'000'000;  // DFS nodes
    double time_budget_seconds = 0;           // 0 = unlimited
    int workers = 1;
};

struct CanonicalKey {
    int n = 0;
    std::vector<Elem> table;
    auto operator<=>(const CanonicalKey&) const = default;
};

// Lexicographically minimal table flattening over all relabelings that fix
// zero (to index 0) and one (to index n-1).
CanonicalKey canonical_key(const FiniteAlgebra& a);
std::string format_key(const CanonicalKey& k);

// First (in lexicographic order) carrier bijection with
// pi(imp[x][y]) = imp'[pi x][pi y]; when fix_designated, only bijections
// mapping one to one and zero to zero are considered.
std::optional<std::vector<Elem>> isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                            bool fix_designated = true);

struct ModelStream {
    SearchSpec spec;
    std::vector<FiniteAlgebra> models;  // sorted by canonical key
    bool complete = true;               // false when a budget ran out
    std::uint64_t nodes_explored = 0;

    auto begin() const { return models.begin(); }
    auto end() const { return models.end(); }
    int count() const { return (int)models.size(); }
};

ModelStream enumerate_models(const SearchSpec& spec);

struct Countermodel {
    FiniteAlgebra model;
    std::vector<std::pair<std::string, Elem>> witness;
};

struct RefuteResult {
    std::optional<Countermodel> counter;  // smallest size, canonically first
    bool complete = true;                 // every size fully enumerated
    int sizes_checked = 0;
    std::uint64_t nodes_explored = 0;
};

RefuteResult find_countermodel(const Statement& stmt, AlgClass cls, int max_n,
                               const SearchSpec& limits = {});

// FNV-1a over the canonical text serialization.
std::uint64_t content_hash(const FiniteAlgebra& a);
std::string format_hash(std::uint64_t h);

}  // namespace qwa
