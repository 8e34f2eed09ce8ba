#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "cocyc/diagram.hpp"
#include "cocyc/generators.hpp"

using namespace cocyc;

namespace {

const std::vector<int> kOrth28 = {4, 6, 9, 10, 11, 12, 14, 20, 21, 25};
const char* kGrid28 =
    "---xxx-\n"
    "----x--\n"
    "--x-x-x\n"
    "xx--x--\n";

Diagram random_diagram(int t, std::mt19937_64& rng) {
  Diagram d(t);
  for (int row = 0; row < 4; ++row)
    for (int col = 0; col < t; ++col)
      if (rng() & 1) d.set_mark(row, col, true);
  return d;
}

}  // namespace

TEST_CASE("set to grid mapping reproduces the worked example") {
  CHECK(render(diagram_from_set(kOrth28, 7)) == kGrid28);
  CHECK(set_from_diagram(diagram_from_set(kOrth28, 7)) == kOrth28);
}

TEST_CASE("small mappings") {
  CHECK(render(Diagram(3)) == "---\n---\n---\n---\n");

  Diagram d = diagram_from_set(std::vector<int>{2}, 3);
  CHECK(d.marked(0, 0));  // row 1, rightmost column
  CHECK(render(d) == "--x\n---\n---\n---\n");

  CHECK_THROWS_AS(diagram_from_set(std::vector<int>{13}, 3), std::invalid_argument);
}

TEST_CASE("set/diagram round trip") {
  std::mt19937_64 rng(17);
  for (int t : {3, 5, 7})
    for (int i = 0; i < 50; ++i) {
      const Diagram d = random_diagram(t, rng);
      CHECK(diagram_from_set(set_from_diagram(d), t) == d);
    }
}

TEST_CASE("render/parse round trip and errors") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 100; ++i) {
    const Diagram d = random_diagram(7, rng);
    CHECK(parse_diagram(render(d), 7) == d);
  }
  CHECK_THROWS_AS(parse_diagram("---\n---\n---\n", 3), parse_error);        // 3 lines
  CHECK_THROWS_AS(parse_diagram("----\n---\n---\n---\n", 3), parse_error);  // bad width
  CHECK_THROWS_AS(parse_diagram("--?\n---\n---\n---\n", 3), parse_error);   // bad char
  try {
    parse_diagram("---\n-?-\n---\n---\n", 3);
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(e.line == 2);
    CHECK(e.col == 2);
  }
}

TEST_CASE("V translates") {
  const auto tr = v_translates(Diagram(3));
  CHECK(render(tr[0]) == "---\n---\n---\n---\n");
  CHECK(render(tr[1]) == "xxx\n---\nxxx\n---\n");
  CHECK(render(tr[2]) == "---\nxxx\nxxx\n---\n");
  CHECK(render(tr[3]) == "xxx\nxxx\n---\n---\n");

  std::mt19937_64 rng(29);
  for (int i = 0; i < 50; ++i) {
    const Diagram d = random_diagram(5, rng);
    const auto trs = v_translates(d);
    std::set<std::vector<int>> distinct;
    for (const auto& x : trs) {
      distinct.insert(set_from_diagram(x));
      CHECK(assemble(set_from_diagram(x), 5, true) == assemble(set_from_diagram(d), 5, true));
    }
    CHECK(distinct.size() == 4);
  }

  // all four translates of the worked t=7 example assemble identically
  const SignMatrix h28 = assemble(kOrth28, 7, true);
  for (const auto& x : v_translates(diagram_from_set(kOrth28, 7)))
    CHECK(assemble(set_from_diagram(x), 7, true) == h28);
}

TEST_CASE("V canonical form") {
  Diagram rows12(3);
  rows12.flip_row(0);
  rows12.flip_row(1);
  CHECK(v_canonical(rows12) == Diagram(3));

  const Diagram a = diagram_from_set(kOrth28, 7);
  CHECK(v_canonical(a) == a);

  std::mt19937_64 rng(31);
  for (int i = 0; i < 1000; ++i) {
    const Diagram d = random_diagram(7, rng);
    const Diagram c = v_canonical(d);
    CHECK(v_canonical(c) == c);
    for (const auto& x : v_translates(d)) CHECK(v_canonical(x) == c);
  }
}

TEST_CASE("index set text format") {
  CHECK(parse_index_set("4,6,9", 7) == std::vector<int>{4, 6, 9});
  CHECK(parse_index_set("9, 6 ,4", 7) == std::vector<int>{4, 6, 9});
  CHECK(parse_index_set("", 7).empty());
  CHECK(parse_index_set("-", 7).empty());
  CHECK(format_index_set(std::vector<int>{4, 6, 9}) == "4,6,9");
  CHECK(format_index_set(std::vector<int>{}) == "-");
  CHECK_THROWS_AS(parse_index_set("4,,6", 7), std::invalid_argument);
  CHECK_THROWS_AS(parse_index_set("4,6,4", 7), std::invalid_argument);
  CHECK_THROWS_AS(parse_index_set("0", 7), std::invalid_argument);
  CHECK_THROWS_AS(parse_index_set("29", 7), std::invalid_argument);
  CHECK_THROWS_AS(parse_index_set("4;6", 7), std::invalid_argument);
}
