#include "qwa/builtins.hpp"

#include <numeric>
#include <sstream>

namespace qwa {

namespace {

// Shipped as data so the table has a single source of truth.
const char* kExample513 =
    "elements: 0 a b c d 1\n"
    "one: 1\n"
    "zero: 0\n"
    "row 0: 1 1 1 1 1 1\n"
    "row a: c 1 1 c 1 1\n"
    "row b: d 1 1 1 d 1\n"
    "row c: a a 1 1 1 1\n"
    "row d: b 1 b 1 1 1\n"
    "row 1: 0 a b c d 1\n";

const char* kBoolean2 =
    "elements: 0 1\n"
    "one: 1\n"
    "zero: 0\n"
    "row 0: 1 1\n"
    "row 1: 0 1\n";

std::string fraction_name(int i, int d) {
    if (i == 0) return "0";
    if (i == d) return "1";
    int g = std::gcd(i, d);
    return std::to_string(i / g) + "/" + std::to_string(d / g);
}

std::string lukasiewicz_text(int n) {
    std::ostringstream out;
    if (n == 1) {
        out << "elements: 1\none: 1\nzero: 1\nrow 1: 1\n";
        return out.str();
    }
    const int d = n - 1;
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(fraction_name(i, d));
    out << "elements:";
    for (const auto& s : names) out << ' ' << s;
    out << "\none: " << names[d] << "\nzero: " << names[0] << '\n';
    for (int i = 0; i < n; ++i) {
        out << "row " << names[i] << ":";
        for (int j = 0; j < n; ++j) out << ' ' << names[std::min(d, d - i + j)];
        out << '\n';
    }
    return out.str();
}

}  // namespace

std::optional<std::string> builtin_algebra_text(std::string_view name) {
    if (name == "boolean-2") return std::string(kBoolean2);
    if (name == "example-5.13") return std::string(kExample513);
    constexpr std::string_view prefix = "lukasiewicz-";
    if (name.substr(0, prefix.size()) == prefix) {
        int n = 0;
        auto digits = name.substr(prefix.size());
        if (digits.empty()) return std::nullopt;
        for (char c : digits) {
            if (c < '0' || c > '9') return std::nullopt;
            n = n * 10 + (c - '0');
            if (n > 1000) return std::nullopt;
        }
        if (n < 1) return std::nullopt;
        return lukasiewicz_text(n);
    }
    return std::nullopt;
}

std::optional<FiniteAlgebra> builtin_algebra(std::string_view name) {
    auto text = builtin_algebra_text(name);
    if (!text) return std::nullopt;
    return parse_algebra_text(*text);
}

std::vector<std::string> builtin_list() {
    return {"boolean-2", "example-5.13", "lukasiewicz-<n>"};
}

}  // namespace qwa
