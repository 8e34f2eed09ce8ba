#include "cocyc/classify.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "cocyc/generators.hpp"
#include "cocyc/group.hpp"

namespace cocyc {

GroupMode parse_group_mode(std::string_view text) {
  if (text == "hstar") return GroupMode::hstar;
  if (text == "hprime") return GroupMode::hprime;
  throw std::invalid_argument("unknown group mode '" + std::string(text) +
                              "' (expected hstar or hprime)");
}

namespace {

// Two diagrams assemble to the same matrix exactly when they differ by
// complementing an even number of full grid rows (8 diagrams per matrix).
// Orbits are computed on these matrix classes: every generator descends to
// them, so the closure is a genuine group action and orbit sizes divide
// the group order. The plain 4-element V-classes do not support this:
// swaps that move class 1 send V-equivalent diagrams to V-inequivalent
// ones whose matrices still agree.
Diagram matrix_canonical(const Diagram& d) {
  static constexpr uint8_t kEvenRowSets[8] = {0b0000, 0b0011, 0b0101, 0b1001,
                                              0b0110, 0b1010, 0b1100, 0b1111};
  Diagram best = d;
  for (uint8_t rows : kEvenRowSets) {
    if (!rows) continue;
    Diagram cand = d;
    for (int r = 0; r < 4; ++r)
      if (rows >> r & 1) cand.flip_row(r);
    if (cand.lex_less(best)) best = cand;
  }
  return best;
}

}  // namespace

std::vector<HPrimeElement> classify_generators(GroupMode mode, int t) {
  require_valid_t(t);
  std::vector<HPrimeElement> gens;
  gens.push_back(hp_rotate(1, t));                                   // x
  gens.push_back(hp_compose(hp_swap(1, 2), hp_swap(3, 4), t));       // u
  gens.push_back(hp_compose(hp_swap(1, 3), hp_swap(2, 4), t));       // v
  for (int r : units_mod(t))
    if (r != 1) gens.push_back(hp_dilate(r, t));                     // h_r family
  gens.push_back(hp_compose(hp_c2(), hp_swap(2, 3), t));             // h_23
  gens.push_back(hp_compose(hp_swap(2, 3), hp_swap(2, 4), t));       // h_243
  if (mode == GroupMode::hprime) gens.push_back(hp_c2());
  return gens;
}

std::vector<Diagram> orbit(const Diagram& d, GroupMode mode, int t) {
  if (d.t() != t) throw std::invalid_argument("diagram t does not match");
  const auto gens = classify_generators(mode, t);
  std::set<Diagram> seen;
  std::vector<Diagram> frontier;
  frontier.push_back(matrix_canonical(d));
  seen.insert(frontier.back());
  while (!frontier.empty()) {
    std::vector<Diagram> next;
    for (const Diagram& cur : frontier)
      for (const auto& g : gens) {
        Diagram image = matrix_canonical(hp_apply(g, cur));
        if (seen.insert(image).second) next.push_back(std::move(image));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

Diagram canonical(const Diagram& d, GroupMode mode, int t) {
  return orbit(d, mode, t).front();  // set iteration is lex-sorted
}

std::vector<OrbitReport> census(const std::vector<std::vector<int>>& sets, GroupMode mode,
                                int t) {
  require_valid_t(t);
  // Deduplicate mod V, then assign whole orbits at a time.
  std::set<Diagram> dedup;
  for (const auto& s : sets) dedup.insert(v_canonical(diagram_from_set(s, t)));

  std::map<Diagram, OrbitReport> classes;  // canonical rep -> report
  std::map<Diagram, const Diagram*> member_to_canon;
  for (const Diagram& vd : dedup) {
    const Diagram d = matrix_canonical(vd);
    if (!member_to_canon.count(d)) {
      std::vector<Diagram> orb = orbit(d, mode, t);
      OrbitReport report;
      report.mode = mode;
      report.canon = orb.front();
      report.orbit_size = static_cast<long long>(orb.size());
      report.orthogonal = hadamard_full(assemble(set_from_diagram(orb.front()), t, true));
      const Diagram canon_key = orb.front();
      auto [it, inserted] = classes.emplace(canon_key, std::move(report));
      for (const Diagram& m : orb) member_to_canon.emplace(m, &it->first);
    }
    classes.at(*member_to_canon.at(d)).members_found += 1;
  }

  std::vector<OrbitReport> out;
  out.reserve(classes.size());
  for (const auto& entry : classes) out.push_back(entry.second);
  return out;
}

std::string format_census(const std::vector<OrbitReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    out += format_index_set(set_from_diagram(r.canon));
    out += ' ';
    out += std::to_string(r.orbit_size);
    out += ' ';
    out += std::to_string(r.members_found);
    out += ' ';
    out += r.orthogonal ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace cocyc
