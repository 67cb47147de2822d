#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mcayley {

using Vertex = std::uint32_t;

/**
 * A permutation of 0..n-1 stored as its image array.
 *
 * Composition is left to right: (p * q)(v) = q(p(v)).
 */
class Permutation {
 public:
  Permutation() = default;
  /// Throws Error if `images` is not a bijection.
  explicit Permutation(std::vector<Vertex> images);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }
  Vertex operator()(Vertex v) const noexcept { return images_[v]; }
  std::span<const Vertex> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> images_;
};

/**
 * Exact group order kept as a product of small factors (orbit lengths), so
 * that orders such as 648! stay representable.
 */
class GroupOrder {
 public:
  GroupOrder() = default;
  explicit GroupOrder(std::uint64_t value) { multiply(value); }

  void multiply(std::uint64_t factor);
  /// The order if it fits in 64 bits.
  std::optional<std::uint64_t> value() const;
  bool exceeds(std::uint64_t bound) const;
  std::string to_string() const;

  friend bool operator==(const GroupOrder& a, const GroupOrder& b) {
    return a.to_string() == b.to_string();
  }

 private:
  std::vector<std::uint64_t> factors_;
};

/// A permutation group given by generators on a fixed degree.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::optional<GroupOrder> order = std::nullopt);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  /// Order recorded at construction (e.g. from a stabilizer chain), if any.
  const std::optional<GroupOrder>& known_order() const noexcept { return order_; }

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::optional<GroupOrder> order_;
};

/// Exact order by breadth-first closure of the generators. Throws
/// ClosureCapExceeded once more than `cap` elements have been produced.
std::uint64_t group_order(const PermGroup& group, std::size_t cap = 1'000'000);

/// All elements of the group (identity first). Throws ClosureCapExceeded.
std::vector<Permutation> group_elements(const PermGroup& group, std::size_t cap = 1'000'000);

/// Orbit partition; each orbit sorted, orbits ordered by smallest member.
std::vector<std::vector<Vertex>> orbits(const PermGroup& group, std::size_t vertex_count);

/// True iff no non-identity element fixes a point. Uses the closure.
bool is_semiregular(const PermGroup& group, std::size_t cap = 1'000'000);

}  // namespace mcayley
