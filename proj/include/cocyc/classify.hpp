#pragma once

#include <string>
#include <vector>

#include "cocyc/diagram.hpp"
#include "cocyc/hprime.hpp"

// Orbits and canonical forms of diagrams under H* (the translated bundle
// actions) or the full H', acting on cocycle classes, and census reports
// over lists of index sets.

namespace cocyc {

enum class GroupMode { hstar, hprime };

GroupMode parse_group_mode(std::string_view text);

// hstar: the alpha images of the six bundle generator families
// (T_1, s12 s34, s13 s24, V_r for every unit r, C2 s23, s23 s24);
// hprime adds C2.
std::vector<HPrimeElement> classify_generators(GroupMode mode, int t);

// Breadth-first closure of the V-canonical class of d under the chosen
// generators, canonicalizing mod V after every step. Members are
// V-canonical diagrams sorted lexicographically.
std::vector<Diagram> orbit(const Diagram& d, GroupMode mode, int t);

// Lexicographically smallest member of orbit(d); constant on orbits.
Diagram canonical(const Diagram& d, GroupMode mode, int t);

struct OrbitReport {
  GroupMode mode = GroupMode::hstar;
  Diagram canon;
  long long orbit_size = 0;
  long long members_found = 0;  // distinct V-classes of the input in this orbit
  bool orthogonal = false;
};

// Groups the input sets by canonical form (inputs are deduplicated mod V
// first). Reports are sorted by canonical representative.
std::vector<OrbitReport> census(const std::vector<std::vector<int>>& sets, GroupMode mode, int t);

// One line per class: "<canonical set> <orbit_size> <members_found> <orthogonal:0|1>".
std::string format_census(const std::vector<OrbitReport>& reports);

}  // namespace cocyc
