#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwa/algebra.hpp"

namespace qwa {

// Named built-in algebras:
//   boolean-2          the two-element algebra
//   example-5.13       the six-element MO2-style algebra used throughout the docs
//   lukasiewicz-<n>    the n-element chain with x -> y = min(1, 1 - x + y)
std::optional<FiniteAlgebra> builtin_algebra(std::string_view name);

// Raw text of a built-in in the algebra file format (empty optional if unknown).
std::optional<std::string> builtin_algebra_text(std::string_view name);

std::vector<std::string> builtin_list();

}  // namespace qwa
