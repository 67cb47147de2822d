#include "mcayley/perm.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "mcayley/error.hpp"

namespace mcayley {

namespace {

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const Vertex v : p.images()) {
      h ^= v;
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

Permutation::Permutation(std::vector<Vertex> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (const Vertex v : images_) {
    if (v >= images_.size() || hit[v]) throw Error("permutation images are not a bijection");
    hit[v] = 1;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Vertex> images(n);
  std::iota(images.begin(), images.end(), Vertex{0});
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t v = 0; v < images_.size(); ++v) {
    if (images_[v] != v) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> inv(images_.size());
  for (std::size_t v = 0; v < images_.size(); ++v) inv[images_[v]] = static_cast<Vertex>(v);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw Error("composing permutations of different degree");
  Permutation r;
  r.images_.resize(p.size());
  for (std::size_t v = 0; v < p.size(); ++v) r.images_[v] = q.images_[p.images_[v]];
  return r;
}

void GroupOrder::multiply(std::uint64_t factor) {
  if (factor != 1) factors_.push_back(factor);
}

std::optional<std::uint64_t> GroupOrder::value() const {
  std::uint64_t acc = 1;
  for (const auto f : factors_) {
    if (f == 0) return 0;
    if (acc > UINT64_MAX / f) return std::nullopt;
    acc *= f;
  }
  return acc;
}

bool GroupOrder::exceeds(std::uint64_t bound) const {
  const auto v = value();
  return !v || *v > bound;
}

std::string GroupOrder::to_string() const {
  // Little-endian base 1e9 digits.
  std::vector<std::uint64_t> digits{1};
  constexpr std::uint64_t kBase = 1'000'000'000ULL;
  __extension__ using u128 = unsigned __int128;
  for (const auto f : factors_) {
    std::uint64_t carry = 0;
    for (auto& d : digits) {
      const u128 cur = static_cast<u128>(d) * f + carry;
      d = static_cast<std::uint64_t>(cur % kBase);
      carry = static_cast<std::uint64_t>(cur / kBase);
    }
    while (carry) {
      digits.push_back(carry % kBase);
      carry /= kBase;
    }
  }
  std::string out = std::to_string(digits.back());
  for (std::size_t i = digits.size() - 1; i-- > 0;) {
    const std::string chunk = std::to_string(digits[i]);
    out += std::string(9 - chunk.size(), '0') + chunk;
  }
  return out;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::optional<GroupOrder> order)
    : degree_(degree), generators_(std::move(generators)), order_(std::move(order)) {
  for (const auto& g : generators_) {
    if (g.size() != degree_) throw Error("generator degree does not match group degree");
  }
}

std::vector<Permutation> group_elements(const PermGroup& group, std::size_t cap) {
  std::vector<Permutation> elements{Permutation::identity(group.degree())};
  std::unordered_set<Permutation, PermutationHash> seen(elements.begin(), elements.end());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& s : group.generators()) {
      Permutation next = elements[i] * s;
      if (seen.insert(next).second) {
        if (elements.size() >= cap) {
          throw ClosureCapExceeded("permutation group closure exceeds " + std::to_string(cap) +
                                   " elements");
        }
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

std::uint64_t group_order(const PermGroup& group, std::size_t cap) {
  return group_elements(group, cap).size();
}

std::vector<std::vector<Vertex>> orbits(const PermGroup& group, std::size_t vertex_count) {
  std::vector<std::size_t> parent(vertex_count);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (const auto& g : group.generators()) {
    for (std::size_t v = 0; v < vertex_count; ++v) {
      const auto a = find_root(parent, v);
      const auto b = find_root(parent, g(static_cast<Vertex>(v)));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<Vertex>> result;
  std::vector<std::size_t> slot(vertex_count, SIZE_MAX);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    const auto r = find_root(parent, v);
    if (slot[r] == SIZE_MAX) {
      slot[r] = result.size();
      result.emplace_back();
    }
    result[slot[r]].push_back(static_cast<Vertex>(v));
  }
  return result;
}

bool is_semiregular(const PermGroup& group, std::size_t cap) {
  for (const auto& element : group_elements(group, cap)) {
    if (element.is_identity()) continue;
    for (std::size_t v = 0; v < element.size(); ++v) {
      if (element(static_cast<Vertex>(v)) == v) return false;
    }
  }
  return true;
}

}  // namespace mcayley
