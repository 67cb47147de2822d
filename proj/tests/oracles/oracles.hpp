#pragma once

// Straightforward reference implementations used to cross-check the library.
// None of them call into the code under test beyond reading group tables.

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "mcayley/cayley.hpp"
#include "mcayley/group.hpp"

namespace oracle {

using Arc = std::pair<std::uint32_t, std::uint32_t>;

/// Arc set of the m-Cayley digraph straight from the definition.
std::set<Arc> cayley_arcs(const mcayley::FiniteGroup& g, const mcayley::ConnectionMatrix& cm);

/// Every permutation of {0..n-1} preserving `arcs`, by next_permutation.
std::uint64_t automorphism_count(std::size_t n, const std::set<Arc>& arcs);

/// Order of the group generated by `gens` by closing the set of products.
std::uint64_t closure_order(const std::vector<std::vector<std::uint32_t>>& gens);

/// Smallest generating set size by trying every subset of each size.
std::size_t min_generators(const mcayley::FiniteGroup& g);

/// Q8 as the unit quaternions {±1, ±i, ±j, ±k}; element x^a y^b of the
/// presentation maps to i^a j^b. Returns the table in the x^a y^b = a + 4b
/// numbering.
std::vector<std::uint32_t> quaternion_units_table();

bool oriented(const std::set<Arc>& arcs);
/// Common in/out degree over n vertices, or -1.
int regular_degree(std::size_t n, const std::set<Arc>& arcs);
bool weakly_connected(std::size_t n, const std::set<Arc>& arcs);

/// Number of matrices in the raw ternary space that satisfy normalization
/// (T12 empty or 1 in T12) when `normalize`, and regularity when `regular`;
/// counted by building each matrix as explicit sets.
std::uint64_t count_matrices(const mcayley::FiniteGroup& g, std::size_t m, bool normalize,
                             bool regular);

}  // namespace oracle
