#include "group_expr.hpp"

#include <cctype>
#include <string>

#include "mcayley/error.hpp"

namespace mcayley::cli {

namespace {

constexpr std::size_t kMaxOrder = 2048;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FiniteGroup parse() {
    FiniteGroup g = expr();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return g;
  }

 private:
  FiniteGroup expr() {
    FiniteGroup g = factor();
    while (peek() == 'x') {
      ++pos_;
      FiniteGroup h = factor();
      check_order(g.order() * h.order());
      g = make_direct_product(g, h);
    }
    return g;
  }

  FiniteGroup factor() {
    FiniteGroup g = atom();
    if (peek() == '^') {
      ++pos_;
      const std::size_t k = number();
      std::size_t order = 1;
      for (std::size_t i = 0; i < k; ++i) check_order(order *= g.order());
      g = make_power(g, k);
    }
    return g;
  }

  FiniteGroup atom() {
    if (text_.substr(pos_, 4) == "Dih(") {
      pos_ += 4;
      FiniteGroup inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      check_order(2 * inner.order());
      return make_generalized_dihedral(inner);
    }
    if (text_.substr(pos_, 2) == "Q8") {
      pos_ += 2;
      return make_quaternion8();
    }
    if (peek() == 'Z') {
      ++pos_;
      const std::size_t n = number();
      check_order(n);
      return make_cyclic(n);
    }
    if (peek() == 'D') {
      ++pos_;
      const std::size_t n = number();
      check_order(2 * n);
      return make_dihedral(n);
    }
    fail("expected Z<n>, Q8, D<n> or Dih(...)");
  }

  std::size_t number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 6) fail("number too large");
    const std::size_t n = std::stoul(std::string(text_.substr(start, pos_ - start)));
    if (n == 0) fail("orders and exponents must be positive");
    return n;
  }

  void check_order(std::size_t order) const {
    if (order > kMaxOrder) fail("group order exceeds " + std::to_string(kMaxOrder));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("group '" + std::string(text_) + "' at position " + std::to_string(pos_) +
                     ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FiniteGroup parse_group(std::string_view text) { return Parser(text).parse(); }

}  // namespace mcayley::cli
