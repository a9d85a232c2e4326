#include <doctest.h>

#include "helpers.hpp"
#include "qwa/axioms.hpp"
#include "qwa/corpus.hpp"

using namespace qwa;
using namespace qwa::testing;

// Seeded random tables through the whole checking stack: verdicts from the
// short-circuiting classifier must match the standalone checks, and every
// failure witness must re-evaluate as a violation of the axiom it names.

namespace {

struct Lcg {
    std::uint64_t s;
    std::uint32_t next() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return (std::uint32_t)(s >> 33);
    }
    int below(int n) { return (int)(next() % (std::uint32_t)n); }
};

// fully random table entries
FiniteAlgebra random_table(Lcg& rng, int n) {
    std::vector<Elem> imp(n * n);
    for (auto& v : imp) v = rng.below(n);
    return make_algebra(n, generated_names(n), std::move(imp), n - 1, 0);
}

// forced cells in place, the rest random: reaches the deeper classes
FiniteAlgebra random_be_shaped(Lcg& rng, int n) {
    const Elem one = n - 1;
    std::vector<Elem> imp(n * n);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            if (x == y || y == one)
                imp[x * n + y] = one;
            else if (x == one)
                imp[x * n + y] = y;
            else if (x == 0)
                imp[x * n + y] = one;
            else
                imp[x * n + y] = rng.below(n);
        }
    return make_algebra(n, generated_names(n), std::move(imp), one, 0);
}

}  // namespace

TEST_CASE("random tables: classifier verdicts and witnesses stay coherent") {
    Lcg rng{20240817};
    int involutive_hits = 0;
    for (int round = 0; round < 2500; ++round) {
        int n = 2 + rng.below(4);
        FiniteAlgebra a = round % 2 ? random_table(rng, n) : random_be_shaped(rng, n);
        auto reports = classify(a);
        for (const auto& r : reports) {
            CHECK(r.pass == check_class(a, r.cls).pass);
            CHECK(r.pass != r.witness.has_value());
            if (r.witness) CHECK(witness_violates(a, r));
        }
        if (check_involutive(a).pass) ++involutive_hits;
    }
    CHECK(involutive_hits > 0);  // the generator reaches the deep end
}

TEST_CASE("random tables: derived tables always reproduce the formulas") {
    Lcg rng{97};
    for (int round = 0; round < 200; ++round) {
        FiniteAlgebra a = random_table(rng, 2 + rng.below(4));
        DerivedTables t = derive_all(a);
        for (Elem x = 0; x < a.n; ++x)
            for (Elem y = 0; y < a.n; ++y) {
                CHECK(t.at(t.sup, x, y) == a.sup(x, y));
                CHECK(t.at(t.inf, x, y) == a.inf(x, y));
                CHECK(t.at(t.prod, x, y) == a.prod(x, y));
            }
    }
}

TEST_CASE("random tables: the catalog runner never misattributes blame") {
    // on arbitrary tables every gate that opens must be genuinely satisfied,
    // so only entries whose gate holds are ever evaluated, and a skipped
    // entry never carries a witness
    Lcg rng{4242};
    for (int round = 0; round < 300; ++round) {
        FiniteAlgebra a = random_be_shaped(rng, 2 + rng.below(3));
        for (const auto& r : run_corpus(a)) {
            if (r.status == CorpusStatus::Skipped) CHECK(r.details.witness.empty());
            if (r.status == CorpusStatus::Fail) CHECK_FALSE(r.details.holds);
        }
    }
}
