#include "cocyc/sign_matrix.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace cocyc {

SignMatrix::SignMatrix(int n) : n_(n), wpr_((n + 63) / 64), w_(static_cast<size_t>(n) * wpr_, 0) {
  if (n <= 0) throw std::invalid_argument("matrix order must be positive");
}

void SignMatrix::set(int r, int c, int value) {
  uint64_t& word = w_[static_cast<size_t>(r) * wpr_ + (c >> 6)];
  const uint64_t bit = 1ull << (c & 63);
  if (value < 0)
    word |= bit;
  else
    word &= ~bit;
}

void SignMatrix::negate_row(int r) {
  uint64_t* row = w_.data() + static_cast<size_t>(r) * wpr_;
  for (int w = 0; w < wpr_; ++w) row[w] = ~row[w];
  // keep tail bits clear
  const int tail = n_ & 63;
  if (tail) row[wpr_ - 1] &= (1ull << tail) - 1;
}

void SignMatrix::negate_col(int c) {
  const int w = c >> 6;
  const uint64_t bit = 1ull << (c & 63);
  for (int r = 0; r < n_; ++r) w_[static_cast<size_t>(r) * wpr_ + w] ^= bit;
}

void SignMatrix::negate_all() {
  for (int r = 0; r < n_; ++r) negate_row(r);
}

int SignMatrix::neg_count(int r) const {
  const uint64_t* row = w_.data() + static_cast<size_t>(r) * wpr_;
  int c = 0;
  for (int w = 0; w < wpr_; ++w) c += std::popcount(row[w]);
  return c;
}

void SignMatrix::xor_row(int r, std::span<const uint64_t> words) {
  uint64_t* row = w_.data() + static_cast<size_t>(r) * wpr_;
  for (int w = 0; w < wpr_; ++w) row[w] ^= words[w];
}

void SignMatrix::hprod_inplace(const SignMatrix& other) {
  if (other.n_ != n_) throw std::invalid_argument("order mismatch in pointwise product");
  for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= other.w_[i];
}

std::string SignMatrix::to_text() const {
  std::string out;
  out.reserve(static_cast<size_t>(n_) * (n_ + 1));
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) out.push_back(at(r, c) < 0 ? '-' : '+');
    out.push_back('\n');
  }
  return out;
}

SignMatrix SignMatrix::from_text(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    if (nl > pos) lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  if (lines.empty()) throw std::invalid_argument("empty matrix text");
  const int n = static_cast<int>(lines.size());
  SignMatrix m(n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(lines[r].size()) != n)
      throw std::invalid_argument("matrix text is not square at line " + std::to_string(r + 1));
    for (int c = 0; c < n; ++c) {
      const char ch = lines[r][c];
      if (ch != '+' && ch != '-')
        throw std::invalid_argument(std::string("bad matrix character '") + ch + "' at line " +
                                    std::to_string(r + 1));
      if (ch == '-') m.set(r, c, -1);
    }
  }
  return m;
}

SignMatrix hprod(SignMatrix a, const SignMatrix& b) {
  a.hprod_inplace(b);
  return a;
}

SignMatrix negated(SignMatrix m) {
  m.negate_all();
  return m;
}

SignMatrix transpose(const SignMatrix& m) {
  const int n = m.order();
  SignMatrix out(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (m.at(r, c) < 0) out.set(c, r, -1);
  return out;
}

bool hadamard_full(const SignMatrix& m) {
  const int n = m.order();
  const int wpr = m.words_per_row();
  if (n == 1) return true;
  if (n % 2) return false;
  for (int r = 0; r < n; ++r) {
    auto row_r = m.row(r);
    for (int s = r + 1; s < n; ++s) {
      auto row_s = m.row(s);
      int diff = 0;
      for (int w = 0; w < wpr; ++w) diff += std::popcount(row_r[w] ^ row_s[w]);
      if (diff * 2 != n) return false;
    }
  }
  return true;
}

bool hadamard_rowsum(const SignMatrix& m) {
  const int n = m.order();
  if (n == 1) return true;
  if (n % 2) return false;
  for (int r = 1; r < n; ++r)
    if (m.neg_count(r) * 2 != n) return false;
  return true;
}

}  // namespace cocyc
