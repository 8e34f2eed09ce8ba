#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// The 4 x t diagram of a coboundary index set. Grid rows hold the residue
// classes mod 4 in the order 2, 3, 0, 1 top to bottom; the cell in row k
// (1-based) and column label j corresponds to index 4j + r_k with
// (r_1..r_4) = (2,3,4,1), so the column label equals the x-exponent of the
// element. Columns render left to right as C_{t-1}, ..., C_0.

namespace cocyc {

struct parse_error : std::runtime_error {
  parse_error(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                           std::to_string(col_) + ")"),
        line(line_),
        col(col_) {}
  int line;
  int col;
};

class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(int t);

  int t() const { return t_; }
  int words_per_row() const { return wpr_; }

  bool marked(int row, int col) const {
    return w_[static_cast<size_t>(row) * wpr_ + (col >> 6)] >> (col & 63) & 1;
  }
  void set_mark(int row, int col, bool on);
  void flip_row(int row);  // complement all t cells of one grid row
  void swap_rows(int r1, int r2);
  int mark_count() const;

  std::span<const uint64_t> row(int r) const {
    return {w_.data() + static_cast<size_t>(r) * wpr_, static_cast<size_t>(wpr_)};
  }

  bool operator==(const Diagram&) const = default;
  // Lexicographic order of the rendered grid, row-major with the leftmost
  // (highest-label) column most significant; unmarked sorts first.
  bool lex_less(const Diagram& other) const;

 private:
  int t_ = 0;
  int wpr_ = 0;
  std::vector<uint64_t> w_;
};

inline bool operator<(const Diagram& a, const Diagram& b) { return a.lex_less(b); }

// Grid row (0-based) holding residue class r = d mod 4.
int diagram_row_of_residue(int r);

Diagram diagram_from_set(std::span<const int> indices, int t);
Diagram diagram_from_set(const std::vector<int>& indices, int t);
std::vector<int> set_from_diagram(const Diagram& d);

std::string render(const Diagram& d);
Diagram parse_diagram(std::string_view text, int t);

// D, D with rows {1,3} complemented, rows {2,3}, rows {1,2} (1-based grid
// rows). All four assemble to the same matrix; they are pairwise distinct.
std::array<Diagram, 4> v_translates(const Diagram& d);
Diagram v_canonical(const Diagram& d);

// Index-set text format: ascending comma-separated 1-based integers;
// "-" (or an empty string) denotes the empty set.
std::vector<int> parse_index_set(std::string_view text, int t);
std::string format_index_set(std::span<const int> indices);
std::string format_index_set(const std::vector<int>& indices);

}  // namespace cocyc
