#include "qwa/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace qwa {

FiniteAlgebra make_algebra(int n, std::vector<std::string> names, std::vector<Elem> imp,
                           Elem one, Elem zero) {
    if (n < 1) throw std::invalid_argument("carrier must have at least one element");
    if ((int)names.size() != n) throw std::invalid_argument("need exactly n element names");
    if ((int)imp.size() != n * n) throw std::invalid_argument("implication table must be n*n");
    for (Elem v : imp)
        if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");
    if (one < 0 || one >= n || zero < 0 || zero >= n)
        throw std::invalid_argument("designated element out of range");
    if (n >= 2 && one == zero) throw std::invalid_argument("one and zero must differ for n >= 2");
    {
        std::unordered_set<std::string> seen;
        for (const auto& s : names)
            if (!seen.insert(s).second) throw std::invalid_argument("duplicate element name: " + s);
    }
    FiniteAlgebra a{n, std::move(names), std::move(imp), one, zero, nullptr};
    if (n <= kEagerDeriveLimit) a.derived = std::make_shared<const DerivedTables>(derive_all(a));
    return a;
}

DerivedTables derive_all(const FiniteAlgebra& a) {
    const int n = a.n;
    DerivedTables t;
    t.n = n;
    t.sup.resize(n * n);
    t.inf.resize(n * n);
    t.prod.resize(n * n);
    t.supL.resize(n * n);
    t.infL.resize(n * n);
    t.oplus.resize(n * n);
    t.leq.resize(n * n);
    t.leqQ.resize(n * n);
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
            int i = x * n + y;
            t.sup[i] = a.sup(x, y);
            t.inf[i] = a.inf(x, y);
            t.prod[i] = a.prod(x, y);
            t.supL[i] = a.supL(x, y);
            t.infL[i] = a.infL(x, y);
            t.oplus[i] = a.oplus(x, y);
            t.leq[i] = a.leq(x, y) ? 1 : 0;
            t.leqQ[i] = a.leqQ(x, y) ? 1 : 0;
        }
    }
    return t;
}

std::shared_ptr<const DerivedTables> tables_of(const FiniteAlgebra& a) {
    if (a.derived) return a.derived;
    return std::make_shared<const DerivedTables>(derive_all(a));
}

Subset Subset::of(int n, std::initializer_list<Elem> xs) {
    Subset s = Subset::empty(n);
    for (Elem x : xs) s.member[x] = 1;
    return s;
}

int Subset::count() const {
    int c = 0;
    for (auto m : member) c += m ? 1 : 0;
    return c;
}

std::vector<Elem> Subset::elements() const {
    std::vector<Elem> out;
    for (Elem x = 0; x < n; ++x)
        if (member[x]) out.push_back(x);
    return out;
}

std::string format_subset(const FiniteAlgebra& a, const Subset& s) {
    std::string out = "{";
    bool first = true;
    for (Elem x : s.elements()) {
        if (!first) out += ",";
        out += a.name(x);
        first = false;
    }
    out += "}";
    return out;
}

FiniteAlgebra with_entry(const FiniteAlgebra& a, Elem x, Elem y, Elem v) {
    if (!a.index_ok(x) || !a.index_ok(y) || !a.index_ok(v))
        throw std::out_of_range("element index out of range");
    std::vector<Elem> imp = a.imp;
    imp[x * a.n + y] = v;
    return make_algebra(a.n, a.names, std::move(imp), a.one, a.zero);
}

FiniteAlgebra relabel(const FiniteAlgebra& a, const std::vector<Elem>& pi) {
    const int n = a.n;
    if ((int)pi.size() != n) throw std::invalid_argument("permutation size mismatch");
    std::vector<Elem> imp(n * n);
    std::vector<std::string> names(n);
    for (Elem x = 0; x < n; ++x) names[pi[x]] = a.names[x];
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) imp[pi[x] * n + pi[y]] = pi[a.imp[x * n + y]];
    return make_algebra(n, std::move(names), std::move(imp), pi[a.one], pi[a.zero]);
}

namespace {

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c == '#' || c == ':' || std::isspace((unsigned char)c)) return false;
    return true;
}

// next content line (comments stripped); returns false at eof
bool next_line(std::istream& in, std::string& out, int& lineno) {
    std::string raw;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        bool blank = true;
        for (char c : raw)
            if (!std::isspace((unsigned char)c)) blank = false;
        if (blank) continue;
        out = raw;
        return true;
    }
    return false;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream iss(s);
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

}  // namespace

FiniteAlgebra parse_algebra(std::istream& in) {
    int lineno = 0;
    std::string line;

    auto expect_keyword = [&](const std::string& kw) -> std::vector<std::string> {
        if (!next_line(in, line, lineno))
            throw AlgebraFormatError(lineno, "expected '" + kw + ":' line");
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw AlgebraFormatError(lineno, "expected '" + kw + ":' line");
        auto head = split_ws(line.substr(0, colon));
        if (head.size() != 1 || head[0] != kw)
            throw AlgebraFormatError(lineno, "expected '" + kw + ":' line, got '" + line + "'");
        return split_ws(line.substr(colon + 1));
    };

    auto names = expect_keyword("elements");
    if (names.empty()) throw AlgebraFormatError(lineno, "empty element list");
    const int n = (int)names.size();
    std::unordered_map<std::string, Elem> index;
    for (Elem i = 0; i < n; ++i) {
        if (!valid_name(names[i]))
            throw AlgebraFormatError(lineno, "invalid element name '" + names[i] + "'");
        if (!index.emplace(names[i], i).second)
            throw AlgebraFormatError(lineno, "duplicate element name '" + names[i] + "'");
    }
    auto lookup = [&](const std::string& s) -> Elem {
        auto it = index.find(s);
        if (it == index.end()) throw AlgebraFormatError(lineno, "unknown element '" + s + "'");
        return it->second;
    };

    auto one_toks = expect_keyword("one");
    if (one_toks.size() != 1) throw AlgebraFormatError(lineno, "'one:' takes exactly one name");
    Elem one = lookup(one_toks[0]);
    auto zero_toks = expect_keyword("zero");
    if (zero_toks.size() != 1) throw AlgebraFormatError(lineno, "'zero:' takes exactly one name");
    Elem zero = lookup(zero_toks[0]);

    std::vector<Elem> imp(n * n, -1);
    std::vector<bool> row_seen(n, false);
    for (int k = 0; k < n; ++k) {
        if (!next_line(in, line, lineno)) throw AlgebraFormatError(lineno, "missing row line");
        auto colon = line.find(':');
        if (colon == std::string::npos) throw AlgebraFormatError(lineno, "expected 'row <name>:' line");
        auto head = split_ws(line.substr(0, colon));
        if (head.size() != 2 || head[0] != "row")
            throw AlgebraFormatError(lineno, "expected 'row <name>:' line, got '" + line + "'");
        Elem x = lookup(head[1]);
        if (row_seen[x]) throw AlgebraFormatError(lineno, "duplicate row for '" + head[1] + "'");
        row_seen[x] = true;
        auto vals = split_ws(line.substr(colon + 1));
        if ((int)vals.size() != n)
            throw AlgebraFormatError(lineno, "row '" + head[1] + "' needs exactly " +
                                                 std::to_string(n) + " entries");
        for (Elem y = 0; y < n; ++y) imp[x * n + y] = lookup(vals[y]);
    }
    if (next_line(in, line, lineno))
        throw AlgebraFormatError(lineno, "unexpected trailing content: '" + line + "'");

    FiniteAlgebra a;
    try {
        a = make_algebra(n, std::move(names), std::move(imp), one, zero);
    } catch (const std::invalid_argument& e) {
        throw AlgebraFormatError(lineno, e.what());
    }
    for (Elem x = 0; x < n; ++x)
        if (!a.leq(a.zero, x))
            throw AlgebraFormatError(lineno, "designated zero is not a bottom: zero -> " +
                                                 a.name(x) + " = " + a.name(a.arrow(a.zero, x)));
    return a;
}

FiniteAlgebra parse_algebra_text(const std::string& text) {
    std::istringstream iss(text);
    return parse_algebra(iss);
}

FiniteAlgebra load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_algebra(in);
}

std::string format_algebra(const FiniteAlgebra& a) {
    std::ostringstream out;
    out << "elements:";
    for (const auto& s : a.names) out << ' ' << s;
    out << '\n';
    out << "one: " << a.name(a.one) << '\n';
    out << "zero: " << a.name(a.zero) << '\n';
    for (Elem x = 0; x < a.n; ++x) {
        out << "row " << a.name(x) << ":";
        for (Elem y = 0; y < a.n; ++y) out << ' ' << a.name(a.imp[x * a.n + y]);
        out << '\n';
    }
    return out.str();
}

std::vector<std::string> generated_names(int n) {
    std::vector<std::string> names;
    if (n == 1) {
        names.push_back("1");
        return names;
    }
    names.push_back("0");
    for (int i = 1; i < n - 1; ++i) {
        // a, b, ..., z, e26, e27, ...
        if (i <= 26)
            names.push_back(std::string(1, (char)('a' + i - 1)));
        else
            names.push_back("e" + std::to_string(i));
    }
    names.push_back("1");
    return names;
}

}  // namespace qwa
