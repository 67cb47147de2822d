#include "mcayley/certifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "mcayley/autgroup.hpp"
#include "mcayley/constructions.hpp"
#include "mcayley/error.hpp"

namespace mcayley {

namespace {

using Clock = std::chrono::steady_clock;
constexpr std::uint64_t kNoWitness = std::numeric_limits<std::uint64_t>::max();

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Everything one worker needs to scan a contiguous index range. Digit state is
// kept incrementally so that stepping to the next index is amortised O(1).
class Scanner {
 public:
  Scanner(const FiniteGroup& group, const MatrixSpace& space, std::size_t m, Mode mode,
          bool normalize, const std::vector<Permutation>& rg, std::size_t aut_cap)
      : group_(group),
        space_(space),
        m_(m),
        n_(group.order()),
        mode_(mode),
        normalize_(normalize),
        rg_(rg),
        aut_cap_(aut_cap),
        digits_(space.digit_count(), 0),
        out_(m, 0),
        in_(m, 0) {
    for (std::size_t v = 0; v < m * n_; ++v) part_of_.push_back(static_cast<Vertex>(v / n_));
  }

  void load(std::uint64_t index) {
    std::fill(out_.begin(), out_.end(), 0);
    std::fill(in_.begin(), in_.end(), 0);
    t12_ = 0;
    digits_ = space_.digits_of(index);
    for (std::size_t k = 0; k < digits_.size(); ++k) apply(k, digits_[k], +1);
  }

  void increment() {
    std::size_t k = 0;
    while (k < digits_.size() && digits_[k] == 2) {
      apply(k, 2, -1);
      digits_[k] = 0;
      ++k;
    }
    if (k == digits_.size()) return;
    apply(k, digits_[k], -1);
    ++digits_[k];
    apply(k, digits_[k], +1);
  }

  bool structural_ok() const {
    if (normalize_ && t12_ != 0 && (digits_.empty() || digits_[0] != 1)) return false;
    if (mode_ == Mode::hor) {
      const int k = out_[0];
      for (std::size_t i = 0; i < m_; ++i) {
        if (out_[i] != k || in_[i] != k) return false;
      }
    }
    return true;
  }

  // Connectivity (HOR only) and then |Aut| = |G|.
  bool passes() const { return passes(digits_); }

  bool passes(const std::vector<std::uint8_t>& digits) const {
    const PartitionedDigraph d = digraph(digits);
    if (mode_ == Mode::hor && !is_weakly_connected(d)) return false;
    AutSearchOptions options;
    options.vertex_cap = aut_cap_;
    options.order_bound = n_;
    options.known_automorphisms = rg_;
    const auto result = search_automorphisms(d, options);
    return !result.bound_exceeded && result.order.value() == n_;
  }

  const std::vector<std::uint8_t>& digits() const { return digits_; }

 private:
  void apply(std::size_t k, std::uint8_t value, int delta) {
    if (value == 0) return;
    const auto [i, j] = space_.pair_of(k);
    if (value == 1) {
      out_[i] += delta;
      in_[j] += delta;
      if (k < n_) t12_ += delta;
    } else {
      out_[j] += delta;
      in_[i] += delta;
    }
  }

  PartitionedDigraph digraph(const std::vector<std::uint8_t>& digits) const {
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (std::size_t k = 0; k < digits.size(); ++k) {
      if (digits[k] == 0) continue;
      const auto [i, j] = space_.pair_of(k);
      const Element g = static_cast<Element>(k % n_);
      const auto from = digits[k] == 1 ? i : j;
      const auto to = digits[k] == 1 ? j : i;
      const Element t = digits[k] == 1 ? g : group_.inverse(g);
      for (Element x = 0; x < n_; ++x) {
        arcs.emplace_back(vertex_id(n_, x, from), vertex_id(n_, group_.mul(t, x), to));
      }
    }
    return PartitionedDigraph(m_, n_, part_of_, arcs);
  }

  const FiniteGroup& group_;
  const MatrixSpace& space_;
  std::size_t m_, n_;
  Mode mode_;
  bool normalize_;
  const std::vector<Permutation>& rg_;
  std::size_t aut_cap_;
  std::vector<std::uint8_t> digits_;
  std::vector<int> out_, in_;
  int t12_ = 0;
  std::vector<Vertex> part_of_;
};

struct WorkerOutcome {
  std::uint64_t candidates = 0;
  std::uint64_t witness = kNoWitness;
  std::exception_ptr error;
};

void scan_range(Scanner& scanner, std::uint64_t lo, std::uint64_t hi,
                std::atomic<std::uint64_t>& best, WorkerOutcome& outcome) {
  if (lo >= hi) return;
  scanner.load(lo);
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    if (idx > best.load(std::memory_order_relaxed)) return;
    if (idx != lo) scanner.increment();
    if (!scanner.structural_ok()) continue;
    ++outcome.candidates;
    if (scanner.passes()) {
      outcome.witness = idx;
      std::uint64_t cur = best.load();
      while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
      }
      return;
    }
  }
}

std::uint64_t shard_bound(std::uint64_t total, std::size_t index, std::size_t count) {
  __extension__ using u128 = unsigned __int128;
  return static_cast<std::uint64_t>(static_cast<u128>(total) * index / count);
}

nlohmann::ordered_json spec_json(const FiniteGroup& group, const SearchSpec& spec) {
  nlohmann::ordered_json j;
  j["group"] = group.label();
  j["order"] = group.order();
  j["m"] = spec.m;
  j["mode"] = std::string(to_string(spec.mode));
  j["normalize"] = spec.normalized();
  j["shard"] = {spec.shard_index, spec.shard_count};
  return j;
}

struct Checkpoint {
  std::uint64_t next_index = 0;
  std::uint64_t partial_count = 0;
  std::optional<std::uint64_t> witness_index;
};

std::optional<Checkpoint> read_checkpoint(const std::string& path, const nlohmann::ordered_json& spec) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("checkpoint " + path + ": " + e.what());
  }
  if (!doc.contains("spec") || doc["spec"] != spec) {
    throw PreconditionViolated("checkpoint " + path + " belongs to a different search");
  }
  Checkpoint cp;
  cp.next_index = doc.at("next_index").get<std::uint64_t>();
  cp.partial_count = doc.at("partial_count").get<std::uint64_t>();
  if (doc.contains("witness_index") && !doc["witness_index"].is_null()) {
    cp.witness_index = doc["witness_index"].get<std::uint64_t>();
  }
  return cp;
}

void write_checkpoint(const std::string& path, const nlohmann::ordered_json& spec,
                      const Checkpoint& cp) {
  nlohmann::ordered_json doc;
  doc["spec"] = spec;
  doc["next_index"] = cp.next_index;
  doc["partial_count"] = cp.partial_count;
  if (cp.witness_index) doc["witness_index"] = *cp.witness_index;
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write checkpoint " + tmp);
    out << doc.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

// Re-runs a claimed witness through the full verification pipeline.
void reverify(const FiniteGroup& group, const ConnectionMatrix& cm, Mode mode,
              std::size_t aut_cap) {
  VerifyOptions options;
  options.vertex_cap = aut_cap;
  const auto report = verify(group, cm, options);
  if (!report.passes(mode)) {
    std::string reasons;
    for (const auto& r : report.failures(mode)) reasons += (reasons.empty() ? "" : "; ") + r;
    throw Error("witness failed re-verification: " + reasons);
  }
}

}  // namespace

std::string_view to_string(Verdict verdict) {
  return verdict == Verdict::witness ? "WITNESS" : "NONE";
}

MatrixSpace::MatrixSpace(const FiniteGroup& group, std::size_t m)
    : group_(&group), m_(m), n_(group.order()) {
  if (m < 2) throw PreconditionViolated("m must be at least 2");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) pairs_.emplace_back(i, j);
  digits_ = pairs_.size() * n_;
}

std::uint64_t MatrixSpace::size() const {
  // 3^40 < 2^64 <= 3^41.
  if (digits_ > 40) {
    throw CapExceeded("enumeration space 3^" + std::to_string(digits_) + " exceeds 64 bits");
  }
  std::uint64_t s = 1;
  for (std::size_t k = 0; k < digits_; ++k) s *= 3;
  return s;
}

std::vector<std::uint8_t> MatrixSpace::digits_of(std::uint64_t index) const {
  std::vector<std::uint8_t> d(digits_, 0);
  for (std::size_t k = 0; k < digits_ && index != 0; ++k) {
    d[k] = static_cast<std::uint8_t>(index % 3);
    index /= 3;
  }
  if (index != 0) throw OutOfRange("matrix index beyond the enumeration space");
  return d;
}

ConnectionMatrix MatrixSpace::matrix_of(const std::vector<std::uint8_t>& digits) const {
  if (digits.size() != digits_) throw DimensionMismatch("digit vector has the wrong length");
  ConnectionMatrix cm(m_);
  for (std::size_t k = 0; k < digits_; ++k) {
    const auto [i, j] = pairs_[k / n_];
    const Element g = static_cast<Element>(k % n_);
    if (digits[k] == 1) cm.insert(i, j, g);
    if (digits[k] == 2) cm.insert(j, i, group_->inverse(g));
  }
  return cm;
}

ConnectionMatrix MatrixSpace::decode(std::uint64_t index) const {
  return matrix_of(digits_of(index));
}

void enumerate_matrices(const FiniteGroup& group, const SearchSpec& spec,
                        const std::function<bool(std::uint64_t, const ConnectionMatrix&)>& visit) {
  if (spec.m * group.order() > spec.vertex_cap) {
    throw CapExceeded(std::to_string(spec.m * group.order()) + " vertices exceeds the cap of " +
                      std::to_string(spec.vertex_cap));
  }
  const MatrixSpace space(group, spec.m);
  const std::uint64_t total = space.size();
  const std::uint64_t begin = shard_bound(total, spec.shard_index, spec.shard_count);
  const std::uint64_t end = shard_bound(total, spec.shard_index + 1, spec.shard_count);
  const std::vector<Permutation> none;
  Scanner scanner(group, space, spec.m, spec.mode, spec.normalized(), none, spec.aut_vertex_cap);
  if (begin >= end) return;
  scanner.load(begin);
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    if (idx != begin) scanner.increment();
    if (!scanner.structural_ok()) continue;
    if (!visit(idx, space.matrix_of(scanner.digits()))) return;
  }
}

CertResult certify(const FiniteGroup& group, const SearchSpec& spec) {
  const auto start = Clock::now();
  if (spec.shard_count == 0 || spec.shard_index >= spec.shard_count) {
    throw PreconditionViolated("shard index must be below shard count");
  }
  if (spec.m * group.order() > spec.vertex_cap) {
    throw CapExceeded(std::to_string(spec.m * group.order()) + " vertices exceeds the cap of " +
                      std::to_string(spec.vertex_cap));
  }
  const MatrixSpace space(group, spec.m);
  const std::uint64_t total = space.size();

  CertResult result;
  result.shard_index = spec.shard_index;
  result.shard_count = spec.shard_count;
  result.range_begin = shard_bound(total, spec.shard_index, spec.shard_count);
  result.range_end = shard_bound(total, spec.shard_index + 1, spec.shard_count);

  const auto sj = spec_json(group, spec);
  Checkpoint cp{result.range_begin, 0, std::nullopt};
  if (spec.checkpoint_path) {
    if (auto loaded = read_checkpoint(*spec.checkpoint_path, sj)) cp = *loaded;
  }

  const std::vector<Permutation> rg = right_translation_group(group, spec.m).generators();
  std::size_t workers = spec.workers ? spec.workers : std::thread::hardware_concurrency();
  workers = std::max<std::size_t>(1, workers);
  std::vector<Scanner> scanners;
  for (std::size_t w = 0; w < workers; ++w) {
    scanners.emplace_back(group, space, spec.m, spec.mode, spec.normalized(), rg,
                          spec.aut_vertex_cap);
  }

  const std::uint64_t call_begin = cp.next_index;
  while (!cp.witness_index && cp.next_index < result.range_end) {
    std::uint64_t chunk_end = cp.next_index + std::max<std::uint64_t>(1, spec.chunk_size) * workers;
    chunk_end = std::min(chunk_end, result.range_end);
    if (spec.matrix_cap) chunk_end = std::min(chunk_end, call_begin + *spec.matrix_cap);
    const bool over_time = spec.time_cap_seconds && seconds_since(start) > *spec.time_cap_seconds;
    if (chunk_end <= cp.next_index || over_time) {
      if (spec.checkpoint_path) write_checkpoint(*spec.checkpoint_path, sj, cp);
      throw CapExceeded("search stopped by cap at index " + std::to_string(cp.next_index),
                        cp.next_index, cp.partial_count);
    }

    const std::uint64_t span = chunk_end - cp.next_index;
    std::atomic<std::uint64_t> best{kNoWitness};
    std::vector<WorkerOutcome> outcomes(workers);
    std::vector<std::uint64_t> bounds(workers + 1);
    for (std::size_t w = 0; w <= workers; ++w) bounds[w] = cp.next_index + span * w / workers;
    auto run = [&](std::size_t w) {
      try {
        scan_range(scanners[w], bounds[w], bounds[w + 1], best, outcomes[w]);
      } catch (...) {
        outcomes[w].error = std::current_exception();
      }
    };
    if (workers == 1) {
      run(0);
    } else {
      std::vector<std::thread> threads;
      for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(run, w);
      for (auto& t : threads) t.join();
    }
    for (const auto& o : outcomes) {
      if (o.error) std::rethrow_exception(o.error);
    }

    const std::uint64_t witness = best.load();
    for (std::size_t w = 0; w < workers; ++w) {
      if (bounds[w] > witness) break;
      cp.partial_count += outcomes[w].candidates;
    }
    if (witness != kNoWitness) {
      cp.witness_index = witness;
      cp.next_index = witness + 1;
    } else {
      cp.next_index = chunk_end;
    }
    if (spec.checkpoint_path) write_checkpoint(*spec.checkpoint_path, sj, cp);
  }

  result.candidates = cp.partial_count;
  if (cp.witness_index) {
    result.verdict = Verdict::witness;
    result.witness_index = cp.witness_index;
    result.witness = space.decode(*cp.witness_index);
    reverify(group, *result.witness, spec.mode, spec.aut_vertex_cap);
    result.matrices_enumerated = *cp.witness_index - result.range_begin + 1;
  } else {
    result.verdict = Verdict::none;
    result.matrices_enumerated = result.range_end - result.range_begin;
  }
  result.elapsed_seconds = seconds_since(start);
  return result;
}

EscalationResult find_witness_by_valency(const FiniteGroup& group, std::size_t m, Mode mode,
                                         std::size_t max_valency) {
  const MatrixSpace space(group, m);
  const std::size_t D = space.digit_count();
  const std::vector<Permutation> rg = right_translation_group(group, m).generators();
  const Scanner scanner(group, space, m, mode, false, rg, 512);

  EscalationResult result;
  std::vector<std::uint8_t> digits(D, 0);
  std::vector<int> out(m), in(m), rem(m);

  for (std::size_t k = 1; k <= max_valency; ++k) {
    const int K = static_cast<int>(k);
    std::fill(out.begin(), out.end(), 0);
    std::fill(in.begin(), in.end(), 0);
    std::fill(rem.begin(), rem.end(), 0);
    for (std::size_t d = 0; d < D; ++d) {
      const auto [i, j] = space.pair_of(d);
      ++rem[i];
      ++rem[j];
    }
    bool found = false;
    std::function<void(std::size_t)> dfs = [&](std::size_t d) {
      if (found) return;
      if (d == D) {
        ++result.leaves;
        if (scanner.passes(digits)) found = true;
        return;
      }
      const auto [i, j] = space.pair_of(d);
      --rem[i];
      --rem[j];
      for (std::uint8_t v = 0; v < 3 && !found; ++v) {
        const std::size_t src = v == 2 ? j : i, dst = v == 2 ? i : j;
        if (v != 0) {
          ++out[src];
          ++in[dst];
        }
        const bool ok = out[src] <= K && in[dst] <= K &&
                        (K - out[i]) + (K - in[i]) <= rem[i] &&
                        (K - out[j]) + (K - in[j]) <= rem[j];
        if (ok) {
          digits[d] = v;
          dfs(d + 1);
        }
        if (v != 0) {
          --out[src];
          --in[dst];
        }
      }
      if (!found) digits[d] = 0;
      ++rem[i];
      ++rem[j];
    };
    dfs(0);
    if (found) {
      result.witness = space.matrix_of(digits);
      result.valency = k;
      reverify(group, *result.witness, mode, 512);
      return result;
    }
  }
  return result;
}

Verdict expected_verdict(const FiniteGroup& group, std::size_t m, Mode mode) {
  const std::size_t n = group.order();
  const auto orders = group.orders();
  const auto involutions = std::count(orders.begin(), orders.end(), 2u);
  const bool cyclic = std::find(orders.begin(), orders.end(), n) != orders.end();
  const bool ea2 = is_elementary_abelian_2(group);
  const bool q8 = n == 8 && involutions == 1 && !cyclic;
  bool none = false;
  if (mode == Mode::hor) {
    if (m == 2) none = q8 || (ea2 && (n == 4 || n == 8 || n == 16)) || (cyclic && n <= 5);
    if (m == 3) none = cyclic && n <= 2;
    if (m >= 4 && m <= 6) none = n == 1;
  } else {
    none = m == 2 && ((cyclic && n == 3) || (ea2 && (n == 4 || n == 8)));
  }
  return none ? Verdict::none : Verdict::witness;
}

std::string to_json(const CertResult& result, const FiniteGroup& group, const SearchSpec& spec) {
  nlohmann::ordered_json doc;
  doc["spec"] = spec_json(group, spec);
  doc["verdict"] = std::string(to_string(result.verdict));
  if (result.witness) {
    doc["witness"] = nlohmann::ordered_json::parse(to_json(*result.witness, group.order()));
    doc["witness_index"] = *result.witness_index;
  } else {
    doc["witness"] = nullptr;
  }
  doc["matrices_enumerated"] = result.matrices_enumerated;
  doc["candidates"] = result.candidates;
  doc["range"] = {result.range_begin, result.range_end};
  doc["metadata"] = {{"elapsed_seconds", result.elapsed_seconds}};
  return doc.dump(2);
}

Profile parse_profile(std::string_view text) {
  if (text == "quick") return Profile::quick;
  if (text == "full") return Profile::full;
  if (text == "extended") return Profile::extended;
  throw ParseError("unknown profile '" + std::string(text) + "', expected quick, full or extended");
}

namespace {

struct Cell {
  FiniteGroup group;
  std::size_t m;
  Mode mode;
  std::string method;
};

std::vector<Cell> cells_for(Profile profile) {
  std::vector<Cell> cells;
  auto exhaustive = [&](const FiniteGroup& g, std::size_t m, Mode mode) {
    cells.push_back({g, m, mode, "exhaustive"});
  };
  const auto z = [](std::size_t n) { return make_cyclic(n); };

  for (const auto& g : {z(1), z(2), z(3), z(4), make_elementary_abelian_2(2), z(5)}) {
    exhaustive(g, 2, Mode::hor);
    exhaustive(g, 2, Mode::posr);
  }
  for (std::size_t m = 3; m <= 6; ++m) exhaustive(z(1), m, Mode::hor);
  exhaustive(z(2), 3, Mode::hor);
  exhaustive(z(3), 3, Mode::hor);
  exhaustive(z(2), 4, Mode::hor);
  if (profile == Profile::quick) return cells;

  for (const auto& g : {make_quaternion8(), make_elementary_abelian_2(3), z(6), make_dihedral(3),
                        z(7), z(8), make_direct_product(z(4), z(2)), make_dihedral(4)}) {
    exhaustive(g, 2, Mode::hor);
    exhaustive(g, 2, Mode::posr);
  }
  const FiniteGroup z2 = z(2), z3 = z(3);
  const std::vector<FiniteGroup> constructed = {
      make_power(z3, 3),
      make_direct_product(make_direct_product(z(4), z2), z2),
      make_generalized_dihedral(make_direct_product(z3, z3)),
      make_power(z3, 4),
      make_direct_product(make_direct_product(make_direct_product(z(4), z2), z2), z2),
  };
  for (const auto& g : constructed) {
    for (std::size_t m = 2; m <= 8; ++m) cells.push_back({g, m, Mode::hor, "construction"});
  }
  if (profile == Profile::full) return cells;

  exhaustive(make_elementary_abelian_2(4), 2, Mode::hor);
  cells.push_back({z(1), 7, Mode::hor, "escalation"});
  return cells;
}

}  // namespace

std::vector<ReproduceRow> reproduce_theorems(Profile profile, const ReproduceOptions& options) {
  std::vector<ReproduceRow> rows;
  for (const auto& cell : cells_for(profile)) {
    const auto start = Clock::now();
    ReproduceRow row;
    row.group = cell.group.label();
    row.m = cell.m;
    row.mode = cell.mode;
    row.method = cell.method;
    row.expected = expected_verdict(cell.group, cell.m, cell.mode);
    try {
      if (cell.method == "exhaustive") {
        SearchSpec spec;
        spec.m = cell.m;
        spec.mode = cell.mode;
        spec.workers = options.workers;
        if (options.checkpoint_dir) {
          spec.checkpoint_path = *options.checkpoint_dir + "/" + row.group + "_m" +
                                 std::to_string(cell.m) + "_" +
                                 std::string(to_string(cell.mode)) + ".json";
        }
        const auto r = certify(cell.group, spec);
        row.got = r.verdict;
        row.detail = std::to_string(r.matrices_enumerated) + " scanned, " +
                     std::to_string(r.candidates) + " candidates";
      } else if (cell.method == "construction") {
        const auto c = construct_hor(cell.group, cell.m);
        VerifyOptions vo;
        vo.vertex_cap = 1024;
        const auto report = verify(cell.group, c.matrix, vo);
        const bool ok = report.hor() && report.valency == c.valency;
        row.got = ok ? Verdict::witness : Verdict::none;
        row.detail = c.family + ", valency " +
                     (report.valency ? std::to_string(*report.valency) : std::string("irregular")) +
                     ", |Aut| = " + report.aut_order.to_string();
      } else {
        const auto r = find_witness_by_valency(cell.group, cell.m, cell.mode, 3);
        row.got = r.witness ? Verdict::witness : Verdict::none;
        row.detail = r.witness ? "valency " + std::to_string(r.valency) : "none up to valency 3";
        row.detail += ", " + std::to_string(r.leaves) + " leaves";
      }
    } catch (const CapExceeded& e) {
      row.detail = std::string("cap: ") + e.what();
    } catch (const Error& e) {
      row.detail = std::string("error: ") + e.what();
    }
    row.seconds = seconds_since(start);
    if (options.on_row) options.on_row(row);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace mcayley
