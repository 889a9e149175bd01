#pragma once

#include <optional>
#include <vector>

#include "tracefield/field.hpp"

namespace tracefield::linalg {

using Matrix = std::vector<std::vector<Elem>>;  // row-major

std::size_t rank(const FieldCtx& f, Matrix a);
// Some solution of a * x = rhs, or nullopt when inconsistent.
std::optional<std::vector<Elem>> solve(const FieldCtx& f, Matrix a, std::vector<Elem> rhs);

}  // namespace tracefield::linalg
