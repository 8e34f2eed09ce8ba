#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cocyc {

// Square +-1 matrix, one bit per entry (set bit = -1). Pointwise products
// are word XORs and row sums come from popcounts, which is what the search
// inner loop runs on. Rows of order <= 64 fit one word; larger orders use
// several words per row with the same semantics.
class SignMatrix {
 public:
  SignMatrix() = default;
  explicit SignMatrix(int n);  // all +1

  int order() const { return n_; }
  int words_per_row() const { return wpr_; }

  int at(int r, int c) const {  // +1 or -1
    return (w_[static_cast<size_t>(r) * wpr_ + (c >> 6)] >> (c & 63)) & 1 ? -1 : 1;
  }
  void set(int r, int c, int value);
  void negate_row(int r);
  void negate_col(int c);
  void negate_all();

  int neg_count(int r) const;

  std::span<const uint64_t> row(int r) const {
    return {w_.data() + static_cast<size_t>(r) * wpr_, static_cast<size_t>(wpr_)};
  }
  void xor_row(int r, std::span<const uint64_t> words);

  // Pointwise (Hadamard) product.
  void hprod_inplace(const SignMatrix& other);

  // One '+'/'-' line per row, first line = row 1.
  std::string to_text() const;
  static SignMatrix from_text(std::string_view text);

  bool operator==(const SignMatrix&) const = default;

 private:
  int n_ = 0;
  int wpr_ = 0;
  std::vector<uint64_t> w_;
};

SignMatrix hprod(SignMatrix a, const SignMatrix& b);
SignMatrix negated(SignMatrix m);
SignMatrix transpose(const SignMatrix& m);

// Gram test: every pair of distinct rows orthogonal.
bool hadamard_full(const SignMatrix& m);
// Row-sum shortcut: every row but the first has exactly n/2 entries -1.
// Agrees with hadamard_full on every matrix whose first row is constant
// and whose rows group-develop, which covers everything assemble() emits.
bool hadamard_rowsum(const SignMatrix& m);

}  // namespace cocyc
