#include <doctest.h>

#include <map>
#include <set>

#include "helpers.hpp"
#include "qwa/corpus.hpp"

using namespace qwa;
using namespace qwa::testing;

namespace {

std::map<std::string, CorpusResult> by_id(const std::vector<CorpusResult>& rs) {
    std::map<std::string, CorpusResult> out;
    for (const auto& r : rs) out[r.entry->id] = r;
    return out;
}

}  // namespace

TEST_CASE("catalog shape") {
    const auto& entries = builtin_corpus();
    CHECK(entries.size() == 108);
    std::set<std::string> ids;
    int diag = 0;
    for (const auto& e : entries) {
        CHECK(ids.insert(e.id).second);  // ids unique
        if (e.diagnostic) ++diag;
    }
    CHECK(diag == 1);
}

TEST_CASE("catalog file parsing") {
    CHECK_THROWS(parse_corpus("x1 nope all : x = x"));       // bad gate
    CHECK_THROWS(parse_corpus("x1 be nowhere : x = x"));     // bad scope
    CHECK_THROWS(parse_corpus("x1 be all : x &"));           // statement error
    CHECK_THROWS(parse_corpus("x1 be all extra : x = x"));   // stray header token
    auto es = parse_corpus("# comment\n\nid9 qw center diag : x = x\n");
    REQUIRE(es.size() == 1);
    CHECK(es[0].id == "id9");
    CHECK(es[0].diagnostic);
    CHECK(es[0].scope == Scope::Center);

    // bare statement lines get defaults and numbered ids
    auto bare = parse_corpus("x -> x = 1\n# note\nx <= (x -> y) -> y\n");
    REQUIRE(bare.size() == 2);
    CHECK(bare[0].id == "s1");
    CHECK(bare[1].id == "s2");
    CHECK(bare[0].gate == Gate::Be);
    CHECK(bare[0].scope == Scope::All);
    CHECK_FALSE(bare[0].diagnostic);
}

TEST_CASE("gate detection") {
    GateStatus g = gate_status(example513());
    CHECK(g.be);
    CHECK(g.involutive);
    CHECK(g.qw);
    CHECK_FALSE(g.wajsberg);

    GateStatus gl = gate_status(luk(4));
    CHECK(gl.qw);
    CHECK(gl.wajsberg);

    GateStatus gg = gate_status(godel3());
    CHECK(gg.bounded);
    CHECK_FALSE(gg.involutive);
}

TEST_CASE("the whole catalog passes on the six-element model") {
    FiniteAlgebra a = example513();
    auto rs = run_corpus(a);
    CHECK(corpus_all_pass(rs));
    auto m = by_id(rs);
    for (const auto& [id, r] : m) {
        if (r.entry->diagnostic) continue;
        if (r.entry->gate == Gate::Wajsberg)
            CHECK(r.status == CorpusStatus::Skipped);  // not a wajsberg algebra
        else
            CHECK(r.status == CorpusStatus::Pass);
    }
    // the printed variant of the product-over-meet law diverges even here
    CHECK(m.at("4.4.2p").status == CorpusStatus::Fail);
    CHECK_FALSE(m.at("4.4.2p").details.holds);
}

TEST_CASE("the whole catalog passes on commutative models") {
    for (const FiniteAlgebra& a : {boolean2(), luk(3), luk(4), luk(5), diamond4()}) {
        auto rs = run_corpus(a);
        CHECK(corpus_all_pass(rs));
        for (const auto& r : rs) {
            if (r.entry->diagnostic) continue;
            CHECK(r.status == CorpusStatus::Pass);  // every gate admits these
        }
    }
}

TEST_CASE("printed variant of the product law diverges on the three-element chain") {
    FiniteAlgebra c = luk(3);
    auto m = by_id(run_corpus(c));
    const CorpusResult& printed = m.at("4.4.2p");
    CHECK(printed.entry->diagnostic);
    CHECK(printed.status == CorpusStatus::Fail);
    const CorpusResult& corrected = m.at("4.4.2");
    CHECK(corrected.status == CorpusStatus::Pass);
}

TEST_CASE("non-involutive models only exercise the weak gates") {
    FiniteAlgebra g = godel3();
    auto rs = run_corpus(g);
    for (const auto& r : rs) {
        if (r.entry->gate == Gate::Be || r.entry->gate == Gate::Bounded)
            CHECK(r.status == CorpusStatus::Pass);
        else
            CHECK(r.status == CorpusStatus::Skipped);
    }
    CHECK(corpus_all_pass(rs));
}

TEST_CASE("a qw-breaking mutation surfaces as defining-statement failures") {
    FiniteAlgebra a = example513();
    FiniteAlgebra mut = with_entry(a, el(a, "a"), el(a, "c"), a.one);
    auto rs = run_corpus(mut);
    CHECK_FALSE(corpus_all_pass(rs));
    auto m = by_id(rs);
    CHECK(m.at("qw").status == CorpusStatus::Fail);
    CHECK_FALSE(m.at("qw").details.witness.empty());
    // involutive-gated theorems of plain involutive algebras still pass
    CHECK(m.at("2.1.5").status == CorpusStatus::Pass);
    CHECK(m.at("2.2.3").status == CorpusStatus::Pass);
    // qw-gated entries are skipped rather than blamed
    CHECK(m.at("2.7.1").status == CorpusStatus::Skipped);
    for (const auto& [id, r] : m)
        if (r.status == CorpusStatus::Fail && !r.entry->diagnostic)
            CHECK(std::set<std::string>{"qw", "qw.1", "qw.2"}.count(id) == 1);
}

TEST_CASE("formatting of corpus results") {
    FiniteAlgebra a = example513();
    auto m = by_id(run_corpus(a));
    CHECK(format_corpus_result(a, m.at("2.1.1")) == "CORPUS 2.1.1 PASS");
    CHECK(format_corpus_result(a, m.at("2.8.1")) == "CORPUS 2.8.1 SKIP (outside its class gate)");
    std::string diag = format_corpus_result(a, m.at("4.4.2p"));
    CHECK(diag.find("CORPUS 4.4.2p INFO diverges witness") == 0);
}

TEST_CASE("trivial algebra admits everything vacuously") {
    FiniteAlgebra t = make_algebra(1, {"1"}, {0}, 0, 0);
    auto rs = run_corpus(t);
    for (const auto& r : rs)
        CHECK(r.status != CorpusStatus::Fail);
}
