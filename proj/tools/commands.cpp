#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "group_expr.hpp"
#include "json.hpp"
#include "mcayley/certifier.hpp"
#include "mcayley/constructions.hpp"
#include "mcayley/error.hpp"
#include "mcayley/report.hpp"

namespace mcayley::cli {

namespace {

struct Options {
  std::string group;
  std::string table;
  std::size_t m = 0;
  std::string mode = "hor";
  std::string out;
  std::string emit;
  std::string matrix;
  std::size_t workers = 0;
  std::string shard;
  std::string checkpoint;
  std::string profile = "quick";
  std::string expect;
  bool no_normalize = false;
  bool normalize = false;
  std::uint64_t max_matrices = 0;
  double time_cap = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

// Writes to `path`, or to `out` when no path was given.
void emit_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

FiniteGroup resolve_group(const Options& o) {
  if (!o.group.empty() && !o.table.empty()) throw ParseError("give either --group or --table");
  if (!o.table.empty()) {
    return load_cayley_table(read_file(o.table), std::filesystem::path(o.table).stem().string());
  }
  if (o.group.empty()) throw ParseError("a group is required (--group or --table)");
  return parse_group(o.group);
}

std::pair<std::size_t, std::size_t> parse_shard(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) throw std::invalid_argument("no slash");
    std::size_t used = 0;
    const std::size_t i = std::stoul(text.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument("index");
    const std::string rest = text.substr(slash + 1);
    const std::size_t n = std::stoul(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("count");
    if (n == 0 || i >= n) throw std::invalid_argument("range");
    return {i, n};
  } catch (const std::logic_error&) {
    throw ParseError("--shard expects I/N with 0 <= I < N, got '" + text + "'");
  }
}

std::string group_summary(const FiniteGroup& g) {
  nlohmann::ordered_json doc;
  doc["group"] = g.label();
  doc["order"] = g.order();
  doc["abelian"] = g.is_abelian();
  doc["elementary_abelian_2"] = is_elementary_abelian_2(g);
  doc["d"] = minimal_generating_size(g);
  doc["element_orders"] = std::vector<std::uint32_t>(g.orders().begin(), g.orders().end());
  try {
    const auto gens = paper_generating_set(g);
    doc["generating_set"] = {{"elements", gens.elements}, {"orders", gens.orders}};
  } catch (const Error&) {
    doc["generating_set"] = nullptr;
  }
  auto expectations = nlohmann::ordered_json::object();
  for (std::size_t m = 2; m <= 7; ++m) {
    expectations["m=" + std::to_string(m)] = {
        {"hor", std::string(to_string(expected_verdict(g, m, Mode::hor)))},
        {"posr", std::string(to_string(expected_verdict(g, m, Mode::posr)))}};
  }
  doc["expected"] = std::move(expectations);
  return doc.dump(2) + "\n";
}

int cmd_catalog(const Options& o, std::ostream& out) {
  if (!o.group.empty() || !o.table.empty()) {
    const FiniteGroup g = resolve_group(o);
    if (!o.out.empty()) write_file(o.out, to_cayley_table_text(g));
    out << group_summary(g);
    return kPass;
  }
  static const char* names[] = {"Z1",    "Z2",         "Z3",        "Z4",        "Z2^2",
                                "Z5",    "Z6",         "D3",        "Z7",        "Z8",
                                "Z4xZ2", "Z2^3",       "D4",        "Q8",        "Z2^4",
                                "Z3^3",  "Z4xZ2xZ2",   "Dih(Z3xZ3)", "Dih(Z5)",  "Z3^4",
                                "Z4xZ2xZ2xZ2"};
  out << std::left << std::setw(14) << "group" << std::setw(7) << "order" << std::setw(4) << "d"
      << "2-HOR  2-POSR\n";
  for (const char* name : names) {
    const FiniteGroup g = parse_group(name);
    out << std::setw(14) << g.label() << std::setw(7) << g.order() << std::setw(4)
        << minimal_generating_size(g) << std::setw(7) << to_string(expected_verdict(g, 2, Mode::hor))
        << to_string(expected_verdict(g, 2, Mode::posr)) << "\n";
  }
  return kPass;
}

int cmd_construct(const Options& o, std::ostream& out, std::ostream& err) {
  const FiniteGroup g = resolve_group(o);
  Construction c;
  try {
    c = construct_hor(g, o.m);
  } catch (const OutOfScope& e) {
    const bool ea2 = is_elementary_abelian_2(g);
    err << "out of scope: " << (ea2 ? "external constructions" : "see Proposition 2.3 exceptions")
        << " (" << e.what() << ")\n";
    err << "expected by Theorem 1.1 for (" << g.label() << ", m=" << o.m
        << "): " << (expected_verdict(g, o.m, Mode::hor) == Verdict::witness ? "an m-HOR exists"
                                                                            : "no m-HOR exists")
        << "\n";
    return kMismatch;
  }
  if (!o.emit.empty()) write_file(o.emit, to_json(c.matrix, g.order()) + "\n");
  VerifyOptions vo;
  vo.vertex_cap = 1024;
  const auto report = verify(g, c.matrix, vo);
  emit_text(o.out, to_json(report, Mode::hor) + "\n", out);
  const bool ok = report.hor() && report.valency == c.valency;
  err << c.family << " on " << g.label() << ", m=" << o.m << ": valency "
      << (report.valency ? std::to_string(*report.valency) : std::string("irregular"))
      << " (expected " << c.valency << "), |Aut| = " << report.aut_order.to_string() << ", "
      << (ok ? "m-HOR verified" : "NOT verified") << "\n";
  return ok ? kPass : kMismatch;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const FiniteGroup g = resolve_group(o);
  if (o.matrix.empty()) throw ParseError("verify needs a matrix file");
  const ConnectionMatrix cm = matrix_from_json(read_file(o.matrix), g.order());
  validate(cm, g);
  const Mode mode = parse_mode(o.mode);
  VerifyOptions vo;
  vo.vertex_cap = 1024;
  const auto report = verify(g, cm, vo);
  emit_text(o.out, to_json(report, mode) + "\n", out);
  const auto reasons = report.failures(mode);
  err << to_string(mode) << " " << (reasons.empty() ? "pass" : "fail");
  for (const auto& r : reasons) err << "; " << r;
  err << "\n";
  return reasons.empty() ? kPass : kMismatch;
}

int cmd_certify(const Options& o, std::ostream& out, std::ostream& err) {
  const FiniteGroup g = resolve_group(o);
  SearchSpec spec;
  spec.m = o.m;
  spec.mode = parse_mode(o.mode);
  if (o.normalize && o.no_normalize) throw ParseError("--normalize and --no-normalize conflict");
  if (o.normalize) spec.normalize = true;
  if (o.no_normalize) spec.normalize = false;
  spec.workers = o.workers;
  if (!o.shard.empty()) std::tie(spec.shard_index, spec.shard_count) = parse_shard(o.shard);
  if (!o.checkpoint.empty()) spec.checkpoint_path = o.checkpoint;
  if (o.max_matrices) spec.matrix_cap = o.max_matrices;
  if (o.time_cap > 0) spec.time_cap_seconds = o.time_cap;

  Verdict expected = expected_verdict(g, spec.m, spec.mode);
  if (!o.expect.empty()) {
    std::string e = o.expect;
    std::transform(e.begin(), e.end(), e.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (e == "witness") {
      expected = Verdict::witness;
    } else if (e == "none") {
      expected = Verdict::none;
    } else {
      throw ParseError("--expect must be witness or none");
    }
  }

  CertResult result;
  try {
    result = certify(g, spec);
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << " (next_index " << e.next_index() << ", partial_count "
        << e.partial_count() << ")\n";
    return kCap;
  }
  emit_text(o.out, to_json(result, g, spec) + "\n", out);
  const bool match = result.verdict == expected;
  err << g.label() << ", m=" << spec.m << ", " << to_string(spec.mode) << ": "
      << to_string(result.verdict) << " (expected " << to_string(expected) << ") after "
      << result.matrices_enumerated << " matrices\n";
  return match ? kPass : kMismatch;
}

int cmd_reproduce(const Options& o, std::ostream& out, std::ostream& err) {
  const Profile profile = parse_profile(o.profile);
  ReproduceOptions ro;
  ro.workers = o.workers ? o.workers : 1;
  if (!o.checkpoint.empty()) {
    std::filesystem::create_directories(o.checkpoint);
    ro.checkpoint_dir = o.checkpoint;
  }
  ro.on_row = [&](const ReproduceRow& r) {
    err << (r.matches() ? "ok   " : "FAIL ") << r.group << " m=" << r.m << " "
        << to_string(r.mode) << "\n";
  };
  const auto rows = reproduce_theorems(profile, ro);

  std::ostringstream table;
  table << std::left << std::setw(14) << "group" << std::setw(4) << "m" << std::setw(6) << "mode"
        << std::setw(13) << "method" << std::setw(9) << "expected" << std::setw(9) << "got"
        << std::setw(7) << "match"
        << "detail\n";
  std::size_t mismatches = 0, capped = 0;
  for (const auto& r : rows) {
    if (!r.matches()) ++mismatches;
    if (!r.got && r.detail.rfind("cap:", 0) == 0) ++capped;
    table << std::setw(14) << r.group << std::setw(4) << r.m << std::setw(6) << to_string(r.mode)
          << std::setw(13) << r.method << std::setw(9) << to_string(r.expected) << std::setw(9)
          << (r.got ? std::string(to_string(*r.got)) : std::string("-")) << std::setw(7)
          << (r.matches() ? "yes" : "NO") << r.detail << "\n";
  }
  table << rows.size() - mismatches << "/" << rows.size() << " cells match\n";
  out << table.str();
  if (!o.out.empty()) write_file(o.out, table.str());
  if (mismatches == capped && capped > 0) return kCap;
  return mismatches == 0 ? kPass : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"m-partite oriented Cayley digraphs: construct, verify and certify", "mcayley"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--group", o.group, "builtin group, e.g. Z3^3, Z4xZ2xZ2, Q8, D4, Dih(Z3xZ3)");
    sub->add_option("--table", o.table, "Cayley table file");
  };

  auto* catalog = app.add_subcommand("catalog", "list builtin groups or describe one");
  add_group(catalog);
  catalog->add_option("--out", o.out, "write the Cayley table here");

  auto* construct = app.add_subcommand("construct", "build and verify the m-HOR construction");
  add_group(construct);
  construct->add_option("--m", o.m, "number of parts")->required()->check(CLI::Range(2, 64));
  construct->add_option("--out", o.out, "report file (default stdout)");
  construct->add_option("--emit", o.emit, "write the connection matrix JSON here");

  auto* verify_cmd = app.add_subcommand("verify", "verify a connection matrix file");
  add_group(verify_cmd);
  verify_cmd->add_option("--matrix,matrix", o.matrix, "connection matrix JSON")->required();
  verify_cmd->add_option("--mode", o.mode, "hor or posr");
  verify_cmd->add_option("--out", o.out, "report file (default stdout)");

  auto* certify_cmd = app.add_subcommand("certify", "exhaustive search for a witness");
  add_group(certify_cmd);
  certify_cmd->add_option("--m", o.m, "number of parts")->required()->check(CLI::Range(2, 64));
  certify_cmd->add_option("--mode", o.mode, "hor or posr");
  certify_cmd->add_option("--out", o.out, "result file (default stdout)");
  certify_cmd->add_option("--workers", o.workers, "worker threads (default: all cores)");
  certify_cmd->add_option("--shard", o.shard, "I/N: search only the I-th of N ranges");
  certify_cmd->add_option("--checkpoint", o.checkpoint, "checkpoint file to resume from / update");
  certify_cmd->add_option("--expect", o.expect, "witness or none (default: theorem)");
  certify_cmd->add_flag("--normalize", o.normalize, "force normalization on");
  certify_cmd->add_flag("--no-normalize", o.no_normalize, "force normalization off");
  certify_cmd->add_option("--max-matrices", o.max_matrices, "stop after this many indices");
  certify_cmd->add_option("--time-cap", o.time_cap, "stop after this many seconds");

  auto* reproduce = app.add_subcommand("reproduce", "cross-check the theorems");
  reproduce->add_option("--profile", o.profile, "quick, full or extended");
  reproduce->add_option("--out", o.out, "also write the table here");
  reproduce->add_option("--workers", o.workers, "worker threads for exhaustive cells");
  reproduce->add_option("--checkpoint", o.checkpoint, "directory for checkpoints");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kMismatch;
  }

  try {
    if (catalog->parsed()) return cmd_catalog(o, out);
    if (construct->parsed()) return cmd_construct(o, out, err);
    if (verify_cmd->parsed()) return cmd_verify(o, out, err);
    if (certify_cmd->parsed()) return cmd_certify(o, out, err);
    return cmd_reproduce(o, out, err);
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kMismatch;
  }
}

}  // namespace mcayley::cli
