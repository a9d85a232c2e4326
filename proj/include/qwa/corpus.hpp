#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qwa/algebra.hpp"
#include "qwa/term.hpp"

// The built-in catalog of identities and quasi-identities, each with the
// weakest algebra class it is claimed for (gate) and the quantification
// domain (scope). Catalog files are line-oriented:
//
//     <id> <gate> <scope> [diag] : <statement>
//
// gate:  be | bounded | involutive | qw | wajsberg
// scope: all | center | omlcenter
// diag:  the entry is evaluated and reported but not asserted (used for a
//        printed variant of one distributivity law whose corrected form is
//        the asserted entry)

namespace qwa {

enum class Gate { Be, Bounded, Involutive, Qw, Wajsberg };
enum class Scope { All, Center, OmlCenter };

const char* gate_tag(Gate g);
const char* scope_tag(Scope s);

struct CorpusEntry {
    std::string id;
    Gate gate = Gate::Be;
    Scope scope = Scope::All;
    bool diagnostic = false;
    Statement stmt;
};

std::vector<CorpusEntry> parse_corpus(std::string_view text);
const std::vector<CorpusEntry>& builtin_corpus();

struct GateStatus {
    bool be = false, bounded = false, involutive = false, qw = false, wajsberg = false;
    bool admits(Gate g) const;
};
GateStatus gate_status(const FiniteAlgebra& a);

enum class CorpusStatus { Pass, Fail, Skipped };

struct CorpusResult {
    const CorpusEntry* entry = nullptr;
    CorpusStatus status = CorpusStatus::Skipped;
    HoldsResult details;
};

CorpusResult run_entry(const FiniteAlgebra& a, const CorpusEntry& e, const GateStatus& g);
std::vector<CorpusResult> run_corpus(const FiniteAlgebra& a,
                                     std::span<const CorpusEntry> entries);
std::vector<CorpusResult> run_corpus(const FiniteAlgebra& a);  // built-in catalog

// true when every non-diagnostic, non-skipped entry passes
bool corpus_all_pass(std::span<const CorpusResult> results);

std::string format_corpus_result(const FiniteAlgebra& a, const CorpusResult& r);

}  // namespace qwa
