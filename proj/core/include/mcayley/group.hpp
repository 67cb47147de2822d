#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mcayley {

/// Group elements are dense indices 0..n-1; index 0 is always the identity.
using Element = std::uint32_t;

/**
 * A finite group given by its multiplication table.
 *
 * Values are immutable once constructed and every constructor path validates
 * the group laws, so a FiniteGroup in hand is always a group.
 */
class FiniteGroup {
 public:
  /// Validates the table (row-major, table[g*n+h] = g*h) and derives inverses
  /// and element orders. Throws AxiomViolation naming the failed law.
  static FiniteGroup from_table(std::size_t order, std::vector<Element> table,
                                std::string label);

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return 0; }
  const std::string& label() const noexcept { return label_; }

  /// Range-checked product; throws OutOfRange.
  Element multiply(Element a, Element b) const;

  /// Unchecked product for hot loops.
  Element mul(Element a, Element b) const noexcept {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }

  Element inverse(Element g) const;
  std::uint32_t element_order(Element g) const;

  std::span<const Element> row(Element g) const;
  std::span<const Element> table() const noexcept { return table_; }
  std::span<const Element> inverses() const noexcept { return inverses_; }
  std::span<const std::uint32_t> orders() const noexcept { return orders_; }

  bool is_abelian() const noexcept;

  /// Same table under a different display name.
  FiniteGroup relabeled(std::string label) const;

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::vector<std::uint32_t> orders_;
  std::string label_;
};

/// A generating tuple ordered by non-increasing element order.
struct GeneratingSet {
  std::vector<Element> elements;
  std::vector<std::uint32_t> orders;
};

Element multiply(const FiniteGroup& group, Element a, Element b);
std::uint32_t element_order(const FiniteGroup& group, Element g);

/// Subgroup generated by `gens`, as a sorted element list. closure of the
/// empty set is {identity}.
std::vector<Element> closure(const FiniteGroup& group, std::span<const Element> gens);

bool generates(const FiniteGroup& group, std::span<const Element> gens);

/// Smallest size of a generating set; 0 for the trivial group. Throws
/// CapExceeded when no set of size <= subset_cap generates.
std::size_t minimal_generating_size(const FiniteGroup& group, std::size_t subset_cap = 6);

bool is_elementary_abelian_2(const FiniteGroup& group);

/**
 * Generating tuple used by the m-HOR constructions.
 *
 * For d(G) = 3 the result (a, b, c) satisfies |a| >= |b| >= |c| and |b| >= 3;
 * for d(G) = t >= 4 it satisfies non-increasing orders and |h_1| >= 3. Among
 * qualifying d(G)-tuples (sorted by order desc, then index asc) the one with
 * the lexicographically largest order vector wins, ties broken by the
 * smallest index tuple.
 *
 * Throws WrongGeneratorCount when d(G) <= 2 and NoSuchSet when nothing
 * qualifies (for instance on elementary abelian 2-groups).
 */
GeneratingSet paper_generating_set(const FiniteGroup& group);

// Catalog.
FiniteGroup make_cyclic(std::size_t n);
/// Element (g, h) has index g + |G| * h.
FiniteGroup make_direct_product(const FiniteGroup& left, const FiniteGroup& right);
FiniteGroup make_power(const FiniteGroup& base, std::size_t k);
FiniteGroup make_elementary_abelian_2(std::size_t k);
/// Q8 = <x, y | x^4 = y^4 = 1, x^2 = y^2, x^y = x^-1>; x^i y^j has index i + 4j.
FiniteGroup make_quaternion8();
/// Dihedral group of order 2n.
FiniteGroup make_dihedral(std::size_t n);
/// <H, tau> with tau an involution inverting the abelian group H. Element
/// h * tau^s has index h + |H| * s. Throws NonAbelianInput.
FiniteGroup make_generalized_dihedral(const FiniteGroup& abelian);

/// Parses the Cayley-table text format: n on the first line, then n rows of n
/// space-separated indices. Throws ParseError or AxiomViolation.
FiniteGroup load_cayley_table(std::string_view text, std::string label = {});
std::string to_cayley_table_text(const FiniteGroup& group);

}  // namespace mcayley
