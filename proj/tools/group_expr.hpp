#pragma once

#include <string_view>

#include "mcayley/group.hpp"

namespace mcayley::cli {

/**
 * Builtin group names:
 *
 *   expr   := factor ('x' factor)*
 *   factor := atom ('^' k)?
 *   atom   := 'Z' n | 'Q8' | 'D' n | 'Dih(' expr ')'
 *
 * D<n> is the dihedral group of order 2n. Dih() requires an abelian argument.
 * Examples: Z3^3, Z4xZ2xZ2, Dih(Z3xZ3). Throws ParseError.
 */
FiniteGroup parse_group(std::string_view text);

}  // namespace mcayley::cli
