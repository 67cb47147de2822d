#include "mcayley/group.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>

#include "mcayley/error.hpp"

namespace mcayley {

namespace {

constexpr std::size_t kExhaustiveAssociativityLimit = 64;
constexpr std::size_t kSampledAssociativityTriples = 10'000;

std::string triple(Element a, Element b, Element c) {
  std::ostringstream out;
  out << "(" << a << ", " << b << ", " << c << ")";
  return out.str();
}

void check_latin(std::size_t n, const std::vector<Element>& table) {
  std::vector<char> seen(n);
  for (std::size_t g = 0; g < n; ++g) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t h = 0; h < n; ++h) {
      const Element v = table[g * n + h];
      if (v >= n) {
        throw AxiomViolation("entry out of range at row " + std::to_string(g) + ", column " +
                             std::to_string(h));
      }
      if (seen[v]) {
        throw AxiomViolation("Latin square: row " + std::to_string(g) + " repeats " +
                             std::to_string(v));
      }
      seen[v] = 1;
    }
  }
  for (std::size_t h = 0; h < n; ++h) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t g = 0; g < n; ++g) {
      const Element v = table[g * n + h];
      if (seen[v]) {
        throw AxiomViolation("Latin square: column " + std::to_string(h) + " repeats " +
                             std::to_string(v));
      }
      seen[v] = 1;
    }
  }
}

void check_identity(std::size_t n, const std::vector<Element>& table) {
  for (std::size_t g = 0; g < n; ++g) {
    if (table[g] != g || table[g * n] != g) {
      throw AxiomViolation("identity: element 0 is not a two-sided identity at " +
                           std::to_string(g));
    }
  }
}

void check_associative(std::size_t n, const std::vector<Element>& table) {
  auto at = [&](std::size_t a, std::size_t b) { return table[a * n + b]; };
  auto check = [&](Element a, Element b, Element c) {
    if (at(at(a, b), c) != at(a, at(b, c))) {
      throw AxiomViolation("associativity fails at " + triple(a, b, c));
    }
  };
  if (n <= kExhaustiveAssociativityLimit) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c) check(a, b, c);
    return;
  }
  std::mt19937_64 rng(0x5eed'a550c1a7ULL);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  for (std::size_t i = 0; i < kSampledAssociativityTriples; ++i) check(pick(rng), pick(rng), pick(rng));
}

// Closure by breadth-first right multiplication into empty `member`/`elements`.
void generate_into(const FiniteGroup& group, std::span<const Element> gens,
                   std::vector<char>& member, std::vector<Element>& elements) {
  member[group.identity()] = 1;
  elements.push_back(group.identity());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const Element x = elements[i];
    for (const Element s : gens) {
      const Element y = group.mul(x, s);
      if (!member[y]) {
        member[y] = 1;
        elements.push_back(y);
      }
    }
  }
}

bool search_generating(const FiniteGroup& group, std::size_t k, Element next,
                       std::vector<Element>& chosen) {
  const std::size_t n = group.order();
  if (chosen.size() == k) return closure(group, chosen).size() == n;
  std::vector<char> member(n, 0);
  std::vector<Element> current;
  generate_into(group, chosen, member, current);
  for (Element g = next; g < n; ++g) {
    if (member[g]) continue;  // redundant in any minimal set
    chosen.push_back(g);
    if (search_generating(group, k, g + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

// Depth-first search for the index-smallest tuple realising a fixed order
// vector. Equal orders appear with strictly increasing indices.
bool search_with_orders(const FiniteGroup& group, const std::vector<std::uint32_t>& target,
                        const std::vector<std::vector<Element>>& by_order_index,
                        const std::vector<std::uint32_t>& distinct_orders,
                        std::vector<Element>& chosen) {
  const std::size_t n = group.order();
  const std::size_t pos = chosen.size();
  if (pos == target.size()) return closure(group, chosen).size() == n;
  std::vector<char> member(n, 0);
  std::vector<Element> current;
  generate_into(group, chosen, member, current);
  const auto slot = static_cast<std::size_t>(
      std::find(distinct_orders.begin(), distinct_orders.end(), target[pos]) -
      distinct_orders.begin());
  for (const Element g : by_order_index[slot]) {
    if (pos > 0 && target[pos] == target[pos - 1] && g <= chosen.back()) continue;
    if (member[g]) continue;
    chosen.push_back(g);
    if (search_with_orders(group, target, by_order_index, distinct_orders, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

// All non-increasing vectors of length t drawn from `values` (sorted desc),
// emitted in descending lexicographic order.
void order_vectors(const std::vector<std::uint32_t>& values, std::size_t t, std::size_t from,
                   std::vector<std::uint32_t>& prefix,
                   std::vector<std::vector<std::uint32_t>>& out) {
  if (prefix.size() == t) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t i = from; i < values.size(); ++i) {
    prefix.push_back(values[i]);
    order_vectors(values, t, i, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<Element> table,
                                    std::string label) {
  if (order == 0) throw AxiomViolation("group order must be positive");
  if (table.size() != order * order) {
    throw AxiomViolation("table has " + std::to_string(table.size()) + " entries, expected " +
                         std::to_string(order * order));
  }
  check_latin(order, table);
  check_identity(order, table);

  FiniteGroup group;
  group.order_ = order;
  group.table_ = std::move(table);
  group.label_ = std::move(label);
  group.inverses_.assign(order, 0);
  for (Element g = 0; g < order; ++g) {
    for (Element h = 0; h < order; ++h) {
      if (group.mul(g, h) == 0) {
        group.inverses_[g] = h;
        break;
      }
    }
    if (group.mul(group.inverses_[g], g) != 0) {
      throw AxiomViolation("inverse: right inverse of " + std::to_string(g) +
                           " is not a left inverse");
    }
  }
  check_associative(order, group.table_);

  group.orders_.assign(order, 0);
  for (Element g = 0; g < order; ++g) {
    std::uint32_t k = 1;
    for (Element x = g; x != 0; x = group.mul(x, g)) ++k;
    group.orders_[g] = k;
  }
  return group;
}

Element FiniteGroup::multiply(Element a, Element b) const {
  if (a >= order_ || b >= order_) {
    throw OutOfRange("element index out of range for group of order " + std::to_string(order_));
  }
  return mul(a, b);
}

Element FiniteGroup::inverse(Element g) const {
  if (g >= order_) throw OutOfRange("element index out of range");
  return inverses_[g];
}

std::uint32_t FiniteGroup::element_order(Element g) const {
  if (g >= order_) throw OutOfRange("element index out of range");
  return orders_[g];
}

std::span<const Element> FiniteGroup::row(Element g) const {
  if (g >= order_) throw OutOfRange("element index out of range");
  return std::span<const Element>(table_).subspan(static_cast<std::size_t>(g) * order_, order_);
}

bool FiniteGroup::is_abelian() const noexcept {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

FiniteGroup FiniteGroup::relabeled(std::string label) const {
  FiniteGroup copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

Element multiply(const FiniteGroup& group, Element a, Element b) { return group.multiply(a, b); }

std::uint32_t element_order(const FiniteGroup& group, Element g) { return group.element_order(g); }

std::vector<Element> closure(const FiniteGroup& group, std::span<const Element> gens) {
  for (const Element g : gens) {
    if (g >= group.order()) throw OutOfRange("generator index out of range");
  }
  std::vector<char> member(group.order(), 0);
  std::vector<Element> elements;
  generate_into(group, gens, member, elements);
  std::sort(elements.begin(), elements.end());
  return elements;
}

bool generates(const FiniteGroup& group, std::span<const Element> gens) {
  return closure(group, gens).size() == group.order();
}

std::size_t minimal_generating_size(const FiniteGroup& group, std::size_t subset_cap) {
  if (group.order() == 1) return 0;
  for (std::size_t k = 1; k <= subset_cap; ++k) {
    std::vector<Element> chosen;
    if (search_generating(group, k, 1, chosen)) return k;
  }
  throw CapExceeded("no generating set of size <= " + std::to_string(subset_cap) + " for " +
                    group.label());
}

bool is_elementary_abelian_2(const FiniteGroup& group) {
  for (Element g = 0; g < group.order(); ++g) {
    if (group.mul(g, g) != group.identity()) return false;
  }
  return true;
}

GeneratingSet paper_generating_set(const FiniteGroup& group) {
  const std::size_t t = minimal_generating_size(group);
  if (t <= 2) {
    throw WrongGeneratorCount(group.label() + " has d(G) = " + std::to_string(t) +
                              "; the generating-set constructions need d(G) >= 3");
  }

  std::vector<std::uint32_t> distinct;
  for (Element g = 1; g < group.order(); ++g) distinct.push_back(group.orders()[g]);
  std::sort(distinct.begin(), distinct.end(), std::greater<>());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  std::vector<std::vector<Element>> by_order(distinct.size());
  for (Element g = 1; g < group.order(); ++g) {
    const auto slot = static_cast<std::size_t>(
        std::find(distinct.begin(), distinct.end(), group.orders()[g]) - distinct.begin());
    by_order[slot].push_back(g);
  }

  std::vector<std::vector<std::uint32_t>> vectors;
  std::vector<std::uint32_t> prefix;
  order_vectors(distinct, t, 0, prefix, vectors);

  for (const auto& target : vectors) {
    const bool qualifies = t == 3 ? target[1] >= 3 : target[0] >= 3;
    if (!qualifies) continue;
    std::vector<Element> chosen;
    if (search_with_orders(group, target, by_order, distinct, chosen)) {
      return GeneratingSet{chosen, target};
    }
  }
  throw NoSuchSet("no generating " + std::to_string(t) + "-tuple of " + group.label() +
                  " meets the order constraint (|b| >= 3 for t = 3, |h_1| >= 3 for t >= 4)");
}

FiniteGroup make_cyclic(std::size_t n) {
  if (n == 0) throw PreconditionViolated("cyclic group order must be positive");
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Element>((a + b) % n);
  return FiniteGroup::from_table(n, std::move(table), "Z" + std::to_string(n));
}

FiniteGroup make_direct_product(const FiniteGroup& left, const FiniteGroup& right) {
  const std::size_t p = left.order();
  const std::size_t q = right.order();
  const std::size_t n = p * q;
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto g = left.mul(static_cast<Element>(x % p), static_cast<Element>(y % p));
      const auto h = right.mul(static_cast<Element>(x / p), static_cast<Element>(y / p));
      table[x * n + y] = static_cast<Element>(g + p * h);
    }
  }
  return FiniteGroup::from_table(n, std::move(table), left.label() + "x" + right.label());
}

FiniteGroup make_power(const FiniteGroup& base, std::size_t k) {
  if (k == 0) return make_cyclic(1);
  FiniteGroup result = base;
  for (std::size_t i = 1; i < k; ++i) result = make_direct_product(result, base);
  return k == 1 ? result : result.relabeled(base.label() + "^" + std::to_string(k));
}

FiniteGroup make_elementary_abelian_2(std::size_t k) {
  if (k == 0) return make_cyclic(1);
  return make_power(make_cyclic(2), k);
}

FiniteGroup make_quaternion8() {
  // (x^a y^b)(x^c y^d) = x^(a + (-1)^b c + 2bd) y^((b + d) mod 2), using y x = x^-1 y and y^2 = x^2.
  std::vector<Element> table(64);
  for (Element u = 0; u < 8; ++u) {
    for (Element v = 0; v < 8; ++v) {
      const int a = static_cast<int>(u % 4), b = static_cast<int>(u / 4);
      const int c = static_cast<int>(v % 4), d = static_cast<int>(v / 4);
      const int power = (a + (b ? -c : c) + 2 * (b & d) + 8) % 4;
      table[u * 8 + v] = static_cast<Element>(power + 4 * ((b + d) % 2));
    }
  }
  return FiniteGroup::from_table(8, std::move(table), "Q8");
}

FiniteGroup make_generalized_dihedral(const FiniteGroup& abelian) {
  if (!abelian.is_abelian()) {
    throw NonAbelianInput("generalized dihedral needs an abelian group, got " + abelian.label());
  }
  const std::size_t p = abelian.order();
  const std::size_t n = 2 * p;
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto h1 = static_cast<Element>(x % p), s1 = static_cast<Element>(x / p);
      const auto h2 = static_cast<Element>(y % p), s2 = static_cast<Element>(y / p);
      // h1 tau^s1 h2 tau^s2 = h1 (h2 or h2^-1) tau^(s1 + s2)
      const Element moved = s1 ? abelian.inverse(h2) : h2;
      table[x * n + y] = static_cast<Element>(abelian.mul(h1, moved) + p * ((s1 + s2) % 2));
    }
  }
  return FiniteGroup::from_table(n, std::move(table), "Dih(" + abelian.label() + ")");
}

FiniteGroup make_dihedral(std::size_t n) {
  return make_generalized_dihedral(make_cyclic(n)).relabeled("D" + std::to_string(n));
}

FiniteGroup load_cayley_table(std::string_view text, std::string label) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = text.find('\n', pos);
    const std::size_t stop = end == std::string_view::npos ? text.size() : end;
    lines.push_back(text.substr(pos, stop - pos));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string_view::npos) {
    lines.pop_back();
  }

  auto parse_numbers = [](std::string_view line, std::size_t line_no) {
    std::vector<std::uint64_t> values;
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t') {
        ++i;
        continue;
      }
      std::uint64_t value = 0;
      const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
      if (ec != std::errc() ||
          (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t')) {
        throw ParseError("line " + std::to_string(line_no) + ": expected integers");
      }
      values.push_back(value);
      i = static_cast<std::size_t>(ptr - line.data());
    }
    return values;
  };

  if (lines.empty()) throw ParseError("empty Cayley table");
  const auto header = parse_numbers(lines[0], 1);
  if (header.size() != 1 || header[0] == 0) {
    throw ParseError("line 1: expected a single positive order");
  }
  const std::size_t n = header[0];
  if (lines.size() != n + 1) {
    throw ParseError("expected " + std::to_string(n) + " table rows, found " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<Element> table;
  table.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto row = parse_numbers(lines[r + 1], r + 2);
    if (row.size() != n) {
      throw ParseError("line " + std::to_string(r + 2) + ": expected " + std::to_string(n) +
                       " entries, found " + std::to_string(row.size()));
    }
    for (const auto v : row) {
      if (v >= n) throw ParseError("line " + std::to_string(r + 2) + ": entry out of range");
      table.push_back(static_cast<Element>(v));
    }
  }
  if (label.empty()) label = "table(" + std::to_string(n) + ")";
  return FiniteGroup::from_table(n, std::move(table), std::move(label));
}

std::string to_cayley_table_text(const FiniteGroup& group) {
  std::string out = std::to_string(group.order()) + "\n";
  for (Element g = 0; g < group.order(); ++g) {
    const auto row = group.row(g);
    for (std::size_t h = 0; h < row.size(); ++h) {
      if (h) out += ' ';
      out += std::to_string(row[h]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace mcayley
