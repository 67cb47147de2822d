#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mcayley/cayley.hpp"
#include "mcayley/group.hpp"
#include "mcayley/report.hpp"

namespace mcayley {

enum class Verdict { witness, none };

std::string_view to_string(Verdict verdict);

struct SearchSpec {
  std::size_t m = 2;
  Mode mode = Mode::hor;
  /// Keep only matrices with T_{1,2} empty or containing 1. Unset means on
  /// for m = 2 and off otherwise.
  std::optional<bool> normalize;
  std::size_t shard_index = 0;
  std::size_t shard_count = 1;
  /// Worker threads; 0 means hardware concurrency.
  std::size_t workers = 1;
  /// Stop after scanning this many indices in one call.
  std::optional<std::uint64_t> matrix_cap;
  /// Stop after this many seconds (checked between chunks).
  std::optional<double> time_cap_seconds;
  std::size_t vertex_cap = 64;
  std::size_t aut_vertex_cap = 512;
  /// Read on start when present, rewritten after every chunk.
  std::optional<std::string> checkpoint_path;
  std::uint64_t chunk_size = std::uint64_t{1} << 18;

  bool normalized() const noexcept { return normalize.value_or(m == 2); }
};

struct CertResult {
  Verdict verdict = Verdict::none;
  std::optional<ConnectionMatrix> witness;
  std::optional<std::uint64_t> witness_index;
  /// Raw enumeration indices scanned, from the shard start up to the end of
  /// the shard or the witness inclusive.
  std::uint64_t matrices_enumerated = 0;
  /// Matrices that passed every structural filter and reached the
  /// automorphism computation.
  std::uint64_t candidates = 0;
  std::uint64_t range_begin = 0;
  std::uint64_t range_end = 0;
  std::size_t shard_index = 0;
  std::size_t shard_count = 1;
  double elapsed_seconds = 0;
};

/**
 * The enumeration order. Digit k = p * n + g, where p runs over the part pairs
 * (i, j), i < j, lexicographically. Digit value 0: neither; 1: g in T_{i,j};
 * 2: g^-1 in T_{j,i}. The index is the base-3 number with digit 0 least
 * significant, so index 0 is the empty matrix.
 */
class MatrixSpace {
 public:
  MatrixSpace(const FiniteGroup& group, std::size_t m);

  std::size_t digit_count() const noexcept { return digits_; }
  /// 3^digit_count; throws CapExceeded if that does not fit in 64 bits.
  std::uint64_t size() const;
  ConnectionMatrix decode(std::uint64_t index) const;
  std::vector<std::uint8_t> digits_of(std::uint64_t index) const;
  ConnectionMatrix matrix_of(const std::vector<std::uint8_t>& digits) const;
  std::pair<std::size_t, std::size_t> pair_of(std::size_t digit) const {
    return pairs_[digit / n_];
  }

 private:
  const FiniteGroup* group_;
  std::size_t m_, n_, digits_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

/// Visits every matrix of the space in index order after the mode's filters
/// (regularity for HOR) and normalization; stops when `visit` returns false.
/// Throws CapExceeded above `spec.vertex_cap` vertices.
void enumerate_matrices(const FiniteGroup& group, const SearchSpec& spec,
                        const std::function<bool(std::uint64_t, const ConnectionMatrix&)>& visit);

/// Exhaustive search over the requested shard. WITNESS carries the matrix with
/// the smallest index, re-verified through verify(). Throws CapExceeded
/// (carrying next_index and partial_count) when a cap stops the run.
CertResult certify(const FiniteGroup& group, const SearchSpec& spec);

/// Depth-first search over matrices of fixed valency k, for k = 1..max_valency
/// in turn. Returns the first witness found, re-verified.
struct EscalationResult {
  std::optional<ConnectionMatrix> witness;
  std::size_t valency = 0;
  std::uint64_t leaves = 0;
};
EscalationResult find_witness_by_valency(const FiniteGroup& group, std::size_t m, Mode mode,
                                         std::size_t max_valency);

/// The answer both classification theorems give for (G, m, mode), with G
/// recognised from its order and element orders.
Verdict expected_verdict(const FiniteGroup& group, std::size_t m, Mode mode);

std::string to_json(const CertResult& result, const FiniteGroup& group, const SearchSpec& spec);

struct ReproduceRow {
  std::string group;
  std::size_t m = 0;
  Mode mode = Mode::hor;
  std::string method;  // exhaustive | construction | escalation
  Verdict expected = Verdict::none;
  std::optional<Verdict> got;
  std::string detail;
  double seconds = 0;

  bool matches() const { return got && *got == expected; }
};

enum class Profile { quick, full, extended };
Profile parse_profile(std::string_view text);

struct ReproduceOptions {
  std::size_t workers = 1;
  std::optional<std::string> checkpoint_dir;
  /// Called after each row is filled in.
  std::function<void(const ReproduceRow&)> on_row;
};

std::vector<ReproduceRow> reproduce_theorems(Profile profile, const ReproduceOptions& options = {});

}  // namespace mcayley
