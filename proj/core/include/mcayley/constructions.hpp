#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcayley/cayley.hpp"
#include "mcayley/group.hpp"

namespace mcayley {

// Connection matrices of oriented m-Haar digraphs whose automorphism group is
// exactly R(G). Products written "ba" are evaluated as multiply(b, a).
// Every constructor checks its hypotheses (PreconditionViolated) and the set
// identities it relies on (SetInvariantViolated) before returning.

/// From a generating triple (a, b, c) with |a| >= |b| >= 3:
/// S = {1, a, a^-1, b}, T = {b, c, ba, cb}, L = {b, c, ab, a^-1 b}.
struct SmallGenSets {
  std::vector<Element> S, T, L;
};

SmallGenSets small_gen_sets(const FiniteGroup& group, Element a, Element b, Element c);

/// m = 2: T12 = S, T21 = T. Valency 4.
ConnectionMatrix gamma2_small(const FiniteGroup& group, Element a, Element b, Element c);
/// m = 3: T12 = T31 = T32 = S, T21 = T23 = T, T13 = L. Valency 8.
ConnectionMatrix gamma3_small(const FiniteGroup& group, Element a, Element b, Element c);
/// m = 4: T14 = T13 = T34 = T42 = {1}, T21 = {a}, T32 = T41 = {b}, T23 = {c}.
/// Valency 2.
ConnectionMatrix gamma4_small(const FiniteGroup& group, Element a, Element b, Element c);
/// m >= 5: T_{i,i+1} = {1} cyclically (so T_{m,1} = {1, a}), T_{1,m-1} = {a},
/// T_{2,m} = {1}, T_{3,2} = {c}, T_{i,i-1} = {b} for 4 <= i <= m-1. Valency 2.
ConnectionMatrix gammam_small(const FiniteGroup& group, Element a, Element b, Element c,
                              std::size_t m);

/// The sets used for d(G) = t >= 4, built from h_1..h_t.
/// hbar[i-1] = h_1...h_i; htilde[i-1] = product of all h_j in order except h_i.
struct LargeGenSets {
  std::size_t t = 0;
  std::vector<Element> hbar, htilde;
  std::vector<Element> S, T, L, M, N, K, Z, E, F;
};

LargeGenSets large_gen_sets(const FiniteGroup& group, std::span<const Element> gens);

/// m = 2: T12 = S, T21 = T. Valency t + 1.
ConnectionMatrix gamma2_large(const FiniteGroup& group, std::span<const Element> gens);
/// m = 3: T12 = T23 = T31 = S, T13 = T32 = L, T21 = T. Valency 2t + 2.
ConnectionMatrix gamma3_large(const FiniteGroup& group, std::span<const Element> gens);
/// m = 4: T12 = S, T21 = T, T34 = M, T43 = N, T13 = T14 = T23 = T24 = {1},
/// T32 = {h_2}, T31 = T41 = T42 = {h_1}. Valency t + 3.
ConnectionMatrix gamma4_large(const FiniteGroup& group, std::span<const Element> gens);
/// Even m >= 6, valency t + 3. See constructions.cpp for the layout.
ConnectionMatrix gamma_even_large(const FiniteGroup& group, std::span<const Element> gens,
                                  std::size_t m);
/// Even m >= 6 with exactly the printed set assignment. Its in-valencies are
/// t+2 on parts 1, 2 and t+4 on parts 3, 4, so it is not regular; kept for
/// comparison only.
ConnectionMatrix gamma_even_large_as_printed(const FiniteGroup& group,
                                             std::span<const Element> gens, std::size_t m);
/// Odd m >= 5: T12 = T_{m-1,m} = T_{m,m-2} = S, T21 = T, T_{i,i+2} = {1}
/// (1 <= i <= m-3), T_{m,m-1} = T_{m-2,m} = T_{i,i-2} = {h_1} (3 <= i <= m-1),
/// T_{i,i+1} = E (odd 3 <= i <= m-2), T_{i,i-1} = F (even 4 <= i <= m-3).
/// Valency t + 2.
ConnectionMatrix gamma_odd_large(const FiniteGroup& group, std::span<const Element> gens,
                                 std::size_t m);

/// Non-regular 2-POSRs for the small exceptions: "Q8", "Z4", "Z5".
struct PosrWitness {
  FiniteGroup group;
  ConnectionMatrix matrix;
};
PosrWitness posr_witness(std::string_view name);

/// The construction selected by d(G) and m, together with what it promises.
struct Construction {
  std::string family;
  GeneratingSet generators;
  ConnectionMatrix matrix;
  std::size_t valency = 0;
};

/// Dispatches on d(G) = 3 (small families) or d(G) >= 4 (large families).
/// Throws OutOfScope for elementary abelian 2-groups and for d(G) <= 2, and
/// PreconditionViolated for m < 2.
Construction construct_hor(const FiniteGroup& group, std::size_t m);

}  // namespace mcayley
