#include "mcayley/report.hpp"

#include <algorithm>
#include <cctype>

#include "json.hpp"
#include "mcayley/autgroup.hpp"
#include "mcayley/error.hpp"

namespace mcayley {

std::string_view to_string(Mode mode) { return mode == Mode::hor ? "hor" : "posr"; }

Mode parse_mode(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "hor") return Mode::hor;
  if (lower == "posr") return Mode::posr;
  throw ParseError("unknown mode '" + std::string(text) + "', expected hor or posr");
}

std::vector<std::string> VerificationReport::failures(Mode mode) const {
  std::vector<std::string> reasons;
  if (!m_partite) reasons.emplace_back("diagonal not empty");
  if (!oriented) reasons.emplace_back("not oriented");
  if (mode == Mode::hor && !regular) reasons.emplace_back("not regular");
  if (mode == Mode::hor && !weakly_connected) reasons.emplace_back("not weakly connected");
  if (!equals_RG) {
    reasons.push_back("Aut order " + aut_order.to_string() + " ≠ " + std::to_string(group_order));
  }
  return reasons;
}

VerificationReport verify(const FiniteGroup& group, const ConnectionMatrix& matrix,
                          const VerifyOptions& options) {
  const PartitionedDigraph digraph = build(group, matrix);
  const std::size_t n = group.order();
  const std::size_t m = matrix.parts();

  VerificationReport report;
  report.group_label = group.label();
  report.group_order = n;
  report.parts = m;
  report.m_partite = matrix.diagonal_empty();
  report.oriented = is_oriented(matrix, group);
  if (report.oriented != is_oriented(digraph)) {
    report.notes.emplace_back("matrix-level and digraph-level orientation checks disagree");
    report.oriented = false;
  }
  report.valency = regular_valency(digraph);
  report.regular = report.valency.has_value();
  report.weakly_connected = is_weakly_connected(digraph);
  report.strongly_connected = is_strongly_connected(digraph);

  AutSearchOptions search;
  search.vertex_cap = options.vertex_cap;
  search.known_automorphisms = right_translation_group(group, m).generators();
  const auto aut = search_automorphisms(digraph, search);
  report.aut_order = aut.order;
  report.automorphisms = aut.group;
  report.equals_RG = aut.order.value() == n;

  const auto aut_orbits = orbits(aut.group, digraph.vertex_count());
  report.parts_stabilized = std::all_of(aut_orbits.begin(), aut_orbits.end(), [&](const auto& o) {
    return std::all_of(o.begin(), o.end(),
                       [&](Vertex v) { return digraph.part_of(v) == digraph.part_of(o.front()); });
  });
  const bool orbits_are_parts = aut_orbits.size() == m && report.parts_stabilized;
  report.semiregular_with_parts_as_orbits = orbits_are_parts && report.equals_RG;
  return report;
}

std::string to_json(const VerificationReport& report, std::optional<Mode> mode) {
  nlohmann::ordered_json doc;
  doc["group"] = report.group_label;
  doc["order"] = report.group_order;
  doc["m"] = report.parts;
  doc["oriented"] = report.oriented;
  doc["m_partite"] = report.m_partite;
  doc["regular"] = report.regular;
  doc["valency"] = report.valency ? nlohmann::ordered_json(*report.valency) : nullptr;
  doc["weakly_connected"] = report.weakly_connected;
  doc["strongly_connected"] = report.strongly_connected;
  doc["parts_stabilized"] = report.parts_stabilized;
  if (const auto v = report.aut_order.value()) {
    doc["aut_order"] = *v;
  } else {
    doc["aut_order"] = report.aut_order.to_string();
  }
  doc["equals_RG"] = report.equals_RG;
  doc["semiregular_with_parts_as_orbits"] = report.semiregular_with_parts_as_orbits;
  doc["certification_route"] = "order equality: R(G) <= Aut and |Aut| = |G|";

  nlohmann::ordered_json group;
  if (const auto v = report.aut_order.value()) {
    group["order"] = *v;
  } else {
    group["order"] = report.aut_order.to_string();
  }
  auto gens = nlohmann::ordered_json::array();
  for (const auto& g : report.automorphisms.generators()) {
    gens.push_back(std::vector<Vertex>(g.images().begin(), g.images().end()));
  }
  group["generators"] = std::move(gens);
  doc["automorphism_group"] = std::move(group);

  if (mode) {
    nlohmann::ordered_json verdict;
    verdict["mode"] = std::string(to_string(*mode));
    verdict["pass"] = report.passes(*mode);
    verdict["reasons"] = report.failures(*mode);
    doc["verdict"] = std::move(verdict);
  }
  doc["notes"] = report.notes;
  return doc.dump(2);
}

}  // namespace mcayley
