#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcayley/cayley.hpp"
#include "mcayley/group.hpp"
#include "mcayley/perm.hpp"

namespace mcayley {

/// Which representation is being certified: m-HOR (regular) or m-POSR.
enum class Mode { hor, posr };

std::string_view to_string(Mode mode);
/// Accepts "hor" / "posr" (case-insensitive); throws ParseError.
Mode parse_mode(std::string_view text);

struct VerificationReport {
  std::string group_label;
  std::size_t group_order = 0;
  std::size_t parts = 0;

  bool oriented = false;
  bool m_partite = false;  // empty diagonal
  bool regular = false;
  std::optional<std::size_t> valency;
  bool weakly_connected = false;
  bool strongly_connected = false;  // diagnostic only
  bool parts_stabilized = false;

  GroupOrder aut_order;
  PermGroup automorphisms;
  bool equals_RG = false;
  bool semiregular_with_parts_as_orbits = false;

  std::vector<std::string> notes;

  /// Regular m-partite oriented, weakly connected, Aut = R(G).
  bool hor() const noexcept {
    return oriented && m_partite && regular && weakly_connected && equals_RG;
  }
  /// m-partite oriented with Aut = R(G).
  bool posr() const noexcept { return oriented && m_partite && equals_RG; }
  bool passes(Mode mode) const noexcept { return mode == Mode::hor ? hor() : posr(); }
  /// Reasons the given verdict fails, empty when it passes.
  std::vector<std::string> failures(Mode mode) const;
};

struct VerifyOptions {
  std::size_t vertex_cap = 512;
};

/// Builds the m-Cayley digraph and evaluates every structural predicate and
/// the full automorphism group. Never modifies its inputs.
VerificationReport verify(const FiniteGroup& group, const ConnectionMatrix& matrix,
                          const VerifyOptions& options = {});

/// Deterministic JSON rendering. When `mode` is given, a "verdict" block for
/// that mode is included.
std::string to_json(const VerificationReport& report, std::optional<Mode> mode = std::nullopt);

}  // namespace mcayley
