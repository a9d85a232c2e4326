#include "qwa/corpus.hpp"

#include <sstream>

#include "qwa/axioms.hpp"
#include "qwa/center.hpp"

namespace qwa {

namespace {

// The identity catalog. Hierarchical ids; letters split multi-part facts,
// quasi-identities carry their hypotheses explicitly (commutation hypotheses
// are written out as equations).
const char* kCatalog = R"(# --- implication identities (any algebra of the family) ---
2.1.1  be all : x -> (y -> x) = 1
2.1.2  be all : x <= (x -> y) -> y

# --- bounded ---
2.1.3  bounded all : x -> y' = y -> x'
2.1.4  bounded all : x <= x''

# --- involutive ---
2.1.5  involutive all : x' -> y = y' -> x
2.1.6  involutive all : x' -> y' = y -> x
2.1.7  involutive all : (x -> y)' -> z = x -> (y' -> z)
2.1.8  involutive all : x -> (y -> z) = (x -> y')' -> z
2.1.9  involutive all : (x' -> y)' -> (x' -> y) = (x' -> x)' -> (y' -> y)
2.2.1a involutive all : x <=Q y |- x <= y
2.2.1b involutive all : x <=Q y |- x = y & x
2.2.1c involutive all : x <=Q y |- y = x | y
2.2.2a involutive all : x <=Q x
2.2.2b involutive all : x <=Q y, y <=Q x |- x = y
2.2.3  involutive all : (x & y) -> z = (y -> x) -> (y -> z)
2.2.4  involutive all : (x & y)' -> (y -> x)' = y | (y -> x)'
2.2.5  involutive all : (x & (y & z))' = ((z -> x) & (z -> y)) -> z'
2.2.6  involutive all : x <=Q z, y <=Q z, z -> x = z -> y |- x = y
2.2.7  involutive all : x & y = y . (y -> x)

# --- the defining identities, as statements ---
qw     involutive all : x -> ((x & y) & (z & x)) = (x -> y) & (x -> z)
qw.1   involutive all : x -> (x & y) = x -> y
qw.2   involutive all : x -> (y & (z & x)) = (x -> y) & (x -> z)

# --- basic consequences ---
2.6.1a qw all : x -> (y & x) = x -> y
2.6.1b qw all : (x -> y) -> (y & x) = x
2.6.2a qw all : x <=Q x' -> y
2.6.2b qw all : x <=Q y -> x
2.6.3a qw all : x <= y |- y & x = x
2.6.3b qw all : y & x = x |- x <= y
2.6.4  qw all : (x -> y) | (y -> x) = 1
2.6.5  qw all : x <=Q y |- y = y | x
2.6.6  qw all : x <=Q y |- y' <=Q x'
2.6.7a qw all : x <=Q y |- y -> z <=Q x -> z
2.6.7b qw all : x <=Q y |- z -> x <=Q z -> y
2.6.8a qw all : x <=Q y |- x & z <=Q y & z
2.6.8b qw all : x <=Q y |- x | z <=Q y | z
2.6.9  qw all : x <=Q y |- x . z <=Q y . z
2.7.1  qw all : (x & y) & (y & z) = (x & y) & z
2.7.2  qw all : x <=Q y, y <=Q z |- x <=Q z
2.7.3  qw all : (z & x) -> (y & x) = (z & x) -> y
2.7.4  qw all : x <=Q y, y <= x |- x = y
2.7.5  qw all : x <=Q y |- x & (y & z) = x & z
2.7.6  qw all : z & ((y' -> z) & (x' -> y)) = z & (x' -> y)
2.7.7  qw all : x | (x -> y)' = x
2.7.8a qw all : x = y -> x |- y = x -> y
2.7.8b qw all : y = x -> y |- x = y -> x
2.7.9a qw all : x & y <=Q x -> y
2.7.9b qw all : y & x <=Q x -> y

# --- commutative case ---
2.8.1  wajsberg all : x <=Q y, x <=Q z |- x <=Q y & z
2.8.2  wajsberg all : y <=Q x, z <=Q x |- y | z <=Q x
2.8.3a wajsberg all : x <=Q y |- x | z <=Q y | z
2.8.3b wajsberg all : x <=Q y |- x & z <=Q y & z

# --- commutation facts ---
3.3    qw all : x & y = y & x |- x | y = y | x
3.4.a  qw all : x & y = y & x |- (x -> y) -> (x & y) = x
3.4.b  qw all : (x -> y) -> (x & y) = x |- x & y = y & x
3.5.1  qw all : x & x = x & x
3.5.2a qw all : x <=Q y |- x & y = y & x
3.5.2b qw all : y <=Q x |- x & y = y & x
3.5.3  qw all : x & y = y & x |- x' & y' = y' & x'
3.5.4  qw all : (x & y)' & (x -> y)' = (x -> y)' & (x & y)'
3.7    qw all : x & y = y & x, x & z = z & x |- (x & y) & z = y & (x & z)
3.8    qw all : x & y = y & x, y & z = z & y, x & z = z & x |- (x & y) & z = z & (x & y)
3.10   qw all : y & z = z & y |- x -> (y & z) <=Q (x -> y) & (x -> z)
3.11   qw all : x & y = y & x, x & z = z & x, y & z = z & y |- y & (z & x) <=Q y & z
3.12   qw all : x & y = y & x, x & z = z & x, y & z = z & y |- (x -> y) & (x -> z) <= x -> (y & z)
3.13   qw all : x & y = y & x, x & z = z & x, y & z = z & y |- x -> (y & z) = (x -> y) & (x -> z)
3.14   qw all : y & (z & x)' = (z & x)' & y, y & (z -> x)' = (z -> x)' & y |- (z & x)' -> ((z -> x)' & y) = ((z & x)' -> (z -> x)') & ((z & x)' -> y)
3.15   qw center : (z & x)' -> y = (y' -> z) & (x' -> y)

# --- distributivity on the commutative center ---
4.1.1  qw center : x -> (y & z) = (x -> y) & (x -> z)
4.1.2  qw center : x . (y | z) = (x . y) | (x . z)
4.1.3  qw center : x & (y | z) = (x & y) | (x & z)
4.1.4  qw center : x | (y & z) = (x | y) & (x | z)
4.4.1  qw center : x -> (y | z) = (x -> y) | (x -> z)
4.4.2  qw center : x . (y & z) = (x . y) & (x . z)
4.4.2p qw center diag : x . (y & z) = (x . y) & (x | z)
4.4.3  qw center : (y | z) -> x = (y -> x) & (z -> x)
4.4.4  qw center : (y & z) -> x = (y -> x) | (z -> x)
4.5.1  qw center : x | (y -> z) <=Q (x | y) -> (x | z)
4.5.2  qw center : x & (y -> z) <=Q (x & y) -> (x & z)
4.6.1  qw center : (x' . y) & (x . y') = 0
4.6.2  qw center : (x & x') . (y & y') = 0
4.6.3  qw center : x & x' <=Q y | y'

# --- orthocenter membership consequences (membership as a hypothesis) ---
5.4.1  qw all : x' -> x = x |- x -> (x -> y) = x -> y
5.4.2  qw all : x' -> x = x |- (x -> y) -> x = x
5.4.3  qw all : x' -> x = x |- (y -> x)' -> x = y -> x
5.4.4  qw all : x' -> x = x |- (y -> x)' -> (y -> x) = y -> (y -> x)

# --- the orthocenter operations ---
5.5.1a qw omlcenter : x <=Q y |- x' -> y = y
5.5.1b qw omlcenter : x' -> y = y |- x <=Q y
5.5.2a qw omlcenter : x | y <=Q x || y
5.5.2b qw omlcenter : x && y <=Q x & y
5.5.3a qw omlcenter : (x || y) -> x' = x'
5.5.3b qw omlcenter : (x && y)' -> x = x
5.5.4a qw omlcenter : (x || y)' -> y = x || y
5.5.4b qw omlcenter : (x && y) -> y' = (x && y)'
5.5.5a qw omlcenter : x || y = y || x
5.5.5b qw omlcenter : x && y = y && x
5.5.5c qw omlcenter : (x || y) || z = x || (y || z)
5.5.5d qw omlcenter : (x && y) && z = x && (y && z)
5.5.5e qw omlcenter : x || x = x
5.5.5f qw omlcenter : x && x = x
5.5.5g qw omlcenter : x || (x && y) = x
5.5.5h qw omlcenter : x && (x || y) = x
5.5.5i qw omlcenter : x || 1 = 1
5.5.5j qw omlcenter : x && 0 = 0
5.5.5k qw omlcenter : x || 0 = x
5.5.5l qw omlcenter : x && 1 = x
5.6.1a qw omlcenter : x <=Q y |- y = y || x
5.6.1b qw omlcenter : y = y || x |- x <=Q y
5.6.2  qw omlcenter : x | y = (x -> y)' || y
)";

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream iss(s);
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

}  // namespace

const char* gate_tag(Gate g) {
    switch (g) {
        case Gate::Be: return "be";
        case Gate::Bounded: return "bounded";
        case Gate::Involutive: return "involutive";
        case Gate::Qw: return "qw";
        case Gate::Wajsberg: return "wajsberg";
    }
    return "?";
}

const char* scope_tag(Scope s) {
    switch (s) {
        case Scope::All: return "all";
        case Scope::Center: return "center";
        case Scope::OmlCenter: return "omlcenter";
    }
    return "?";
}

std::vector<CorpusEntry> parse_corpus(std::string_view text) {
    std::vector<CorpusEntry> out;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto colon = raw.find(':');
        if (colon == std::string::npos) {
            // bare statement line: defaults, numbered id
            CorpusEntry e;
            e.id = "s" + std::to_string(out.size() + 1);
            try {
                e.stmt = parse_statement(raw);
            } catch (const ParseError& pe) {
                throw std::runtime_error("catalog line " + std::to_string(lineno) + ": " +
                                         pe.what());
            }
            out.push_back(std::move(e));
            continue;
        }
        auto fields = split_ws(raw.substr(0, colon));
        if (fields.empty())
            throw std::runtime_error("catalog line " + std::to_string(lineno) +
                                     ": missing entry header");
        CorpusEntry e;
        size_t i = 0;
        e.id = fields[i++];
        auto need = [&](const char* what) -> std::string {
            if (i >= fields.size())
                throw std::runtime_error("catalog line " + std::to_string(lineno) + ": missing " +
                                         what);
            return fields[i++];
        };
        std::string g = need("gate");
        if (g == "be")
            e.gate = Gate::Be;
        else if (g == "bounded")
            e.gate = Gate::Bounded;
        else if (g == "involutive")
            e.gate = Gate::Involutive;
        else if (g == "qw")
            e.gate = Gate::Qw;
        else if (g == "wajsberg")
            e.gate = Gate::Wajsberg;
        else
            throw std::runtime_error("catalog line " + std::to_string(lineno) + ": bad gate '" +
                                     g + "'");
        std::string sc = need("scope");
        if (sc == "all")
            e.scope = Scope::All;
        else if (sc == "center")
            e.scope = Scope::Center;
        else if (sc == "omlcenter")
            e.scope = Scope::OmlCenter;
        else
            throw std::runtime_error("catalog line " + std::to_string(lineno) + ": bad scope '" +
                                     sc + "'");
        if (i < fields.size() && fields[i] == "diag") {
            e.diagnostic = true;
            ++i;
        }
        if (i != fields.size())
            throw std::runtime_error("catalog line " + std::to_string(lineno) +
                                     ": unexpected token '" + fields[i] + "'");
        try {
            e.stmt = parse_statement(raw.substr(colon + 1));
        } catch (const ParseError& pe) {
            throw std::runtime_error("catalog line " + std::to_string(lineno) + ": " + pe.what());
        }
        out.push_back(std::move(e));
    }
    return out;
}

const std::vector<CorpusEntry>& builtin_corpus() {
    static const std::vector<CorpusEntry> entries = parse_corpus(kCatalog);
    return entries;
}

bool GateStatus::admits(Gate g) const {
    switch (g) {
        case Gate::Be: return be;
        case Gate::Bounded: return bounded;
        case Gate::Involutive: return involutive;
        case Gate::Qw: return qw;
        case Gate::Wajsberg: return wajsberg;
    }
    return false;
}

GateStatus gate_status(const FiniteAlgebra& a) {
    GateStatus g;
    g.be = check_be(a).pass;
    g.bounded = g.be && check_bounded(a).pass;
    g.involutive = g.bounded && check_involutive(a).pass;
    g.qw = g.involutive && check_qw(a).pass;
    g.wajsberg = g.be && check_wajsberg(a).pass;
    return g;
}

CorpusResult run_entry(const FiniteAlgebra& a, const CorpusEntry& e, const GateStatus& g) {
    CorpusResult r;
    r.entry = &e;
    if (!g.admits(e.gate)) {
        r.status = CorpusStatus::Skipped;
        return r;
    }
    Subset scope = Subset::full(a.n);
    if (e.scope == Scope::Center) scope = wajsberg_center(a);
    if (e.scope == Scope::OmlCenter) scope = oml_center(a);
    r.details = holds(a, e.stmt, scope);
    r.status = r.details.holds ? CorpusStatus::Pass : CorpusStatus::Fail;
    return r;
}

std::vector<CorpusResult> run_corpus(const FiniteAlgebra& a,
                                     std::span<const CorpusEntry> entries) {
    GateStatus g = gate_status(a);
    std::vector<CorpusResult> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(run_entry(a, e, g));
    return out;
}

std::vector<CorpusResult> run_corpus(const FiniteAlgebra& a) {
    return run_corpus(a, builtin_corpus());
}

bool corpus_all_pass(std::span<const CorpusResult> results) {
    for (const auto& r : results)
        if (!r.entry->diagnostic && r.status == CorpusStatus::Fail) return false;
    return true;
}

std::string format_corpus_result(const FiniteAlgebra& a, const CorpusResult& r) {
    std::ostringstream out;
    out << "CORPUS " << r.entry->id << ' ';
    if (r.entry->diagnostic) {
        if (r.status == CorpusStatus::Skipped)
            out << "INFO skipped";
        else if (r.details.holds)
            out << "INFO holds";
        else {
            out << "INFO diverges witness";
            for (const auto& [v, e] : r.details.witness) out << ' ' << v << '=' << a.name(e);
        }
        return out.str();
    }
    switch (r.status) {
        case CorpusStatus::Pass: out << "PASS"; break;
        case CorpusStatus::Skipped: out << "SKIP (outside its class gate)"; break;
        case CorpusStatus::Fail:
            out << "FAIL witness";
            for (const auto& [v, e] : r.details.witness) out << ' ' << v << '=' << a.name(e);
            break;
    }
    return out.str();
}

}  // namespace qwa
