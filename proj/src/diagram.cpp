#include "cocyc/diagram.hpp"

#include <algorithm>
#include <charconv>

#include "cocyc/group.hpp"

namespace cocyc {

Diagram::Diagram(int t) : t_(t), wpr_((t + 63) / 64), w_(static_cast<size_t>(4) * wpr_, 0) {
  require_valid_t(t);
}

void Diagram::set_mark(int row, int col, bool on) {
  uint64_t& word = w_[static_cast<size_t>(row) * wpr_ + (col >> 6)];
  const uint64_t bit = 1ull << (col & 63);
  if (on)
    word |= bit;
  else
    word &= ~bit;
}

void Diagram::flip_row(int row) {
  uint64_t* r = w_.data() + static_cast<size_t>(row) * wpr_;
  for (int w = 0; w < wpr_; ++w) r[w] = ~r[w];
  const int tail = t_ & 63;
  if (tail) r[wpr_ - 1] &= (1ull << tail) - 1;
}

void Diagram::swap_rows(int r1, int r2) {
  uint64_t* a = w_.data() + static_cast<size_t>(r1) * wpr_;
  uint64_t* b = w_.data() + static_cast<size_t>(r2) * wpr_;
  for (int w = 0; w < wpr_; ++w) std::swap(a[w], b[w]);
}

int Diagram::mark_count() const {
  int c = 0;
  for (uint64_t w : w_) c += std::popcount(w);
  return c;
}

bool Diagram::lex_less(const Diagram& other) const {
  for (int r = 0; r < 4; ++r)
    for (int w = wpr_ - 1; w >= 0; --w) {
      const uint64_t a = w_[static_cast<size_t>(r) * wpr_ + w];
      const uint64_t b = other.w_[static_cast<size_t>(r) * wpr_ + w];
      if (a != b) return a < b;
    }
  return false;
}

int diagram_row_of_residue(int r) {
  static constexpr int kRow[4] = {2, 3, 0, 1};  // residues 0,1,2,3
  return kRow[r & 3];
}

Diagram diagram_from_set(std::span<const int> indices, int t) {
  Diagram d(t);
  for (int idx : indices) {
    if (idx < 1 || idx > 4 * t)
      throw std::invalid_argument("set index " + std::to_string(idx) + " out of 1.." +
                                  std::to_string(4 * t));
    d.set_mark(diagram_row_of_residue(idx % 4), (idx - 1) / 4, true);
  }
  return d;
}

Diagram diagram_from_set(const std::vector<int>& indices, int t) {
  return diagram_from_set(std::span<const int>(indices), t);
}

std::vector<int> set_from_diagram(const Diagram& d) {
  static constexpr int kResidue[4] = {2, 3, 4, 1};  // grid rows 0..3
  std::vector<int> out;
  for (int row = 0; row < 4; ++row)
    for (int col = 0; col < d.t(); ++col)
      if (d.marked(row, col)) out.push_back(4 * col + kResidue[row]);
  std::sort(out.begin(), out.end());
  return out;
}

std::string render(const Diagram& d) {
  std::string out;
  out.reserve(static_cast<size_t>(4) * (d.t() + 1));
  for (int row = 0; row < 4; ++row) {
    for (int col = d.t() - 1; col >= 0; --col) out.push_back(d.marked(row, col) ? 'x' : '-');
    out.push_back('\n');
  }
  return out;
}

Diagram parse_diagram(std::string_view text, int t) {
  require_valid_t(t);
  Diagram d(t);
  int row = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    if (line.empty() && pos >= text.size()) break;  // trailing newline
    if (row >= 4) throw parse_error("diagram has more than 4 rows", row + 1, 1);
    if (static_cast<int>(line.size()) != t)
      throw parse_error("diagram row has " + std::to_string(line.size()) +
                            " characters, expected " + std::to_string(t),
                        row + 1, static_cast<int>(line.size()) + 1);
    for (int i = 0; i < t; ++i) {
      const char ch = line[i];
      if (ch != 'x' && ch != '-')
        throw parse_error(std::string("bad diagram character '") + ch + "'", row + 1, i + 1);
      if (ch == 'x') d.set_mark(row, t - 1 - i, true);
    }
    ++row;
  }
  if (row != 4) throw parse_error("diagram has " + std::to_string(row) + " rows, expected 4",
                                  row + 1, 1);
  return d;
}

std::array<Diagram, 4> v_translates(const Diagram& d) {
  std::array<Diagram, 4> out = {d, d, d, d};
  out[1].flip_row(0);
  out[1].flip_row(2);
  out[2].flip_row(1);
  out[2].flip_row(2);
  out[3].flip_row(0);
  out[3].flip_row(1);
  return out;
}

Diagram v_canonical(const Diagram& d) {
  auto tr = v_translates(d);
  const Diagram* best = &tr[0];
  for (int i = 1; i < 4; ++i)
    if (tr[i].lex_less(*best)) best = &tr[i];
  return *best;
}

std::vector<int> parse_index_set(std::string_view text, int t) {
  require_valid_t(t);
  std::vector<int> out;
  if (text.empty() || text == "-") return out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || p != tok.data() + tok.size() || tok.empty())
      throw std::invalid_argument("bad set token '" + std::string(tok) + "'");
    if (value < 1 || value > 4 * t)
      throw std::invalid_argument("set index " + std::to_string(value) + " out of 1.." +
                                  std::to_string(4 * t));
    out.push_back(value);
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw std::invalid_argument("duplicate index in set");
  return out;
}

std::string format_index_set(std::span<const int> indices) {
  if (indices.empty()) return "-";
  std::string out;
  for (size_t i = 0; i < indices.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(indices[i]);
  }
  return out;
}

std::string format_index_set(const std::vector<int>& indices) {
  return format_index_set(std::span<const int>(indices));
}

}  // namespace cocyc
