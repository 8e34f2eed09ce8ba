#include "cocyc/hprime.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "cocyc/group.hpp"

namespace cocyc {

namespace {

// Grid row (0-based) holding class label l (0-based, c1..c4): classes sit
// top to bottom as c2, c3, c4, c1.
inline int row_of_label(int l) { return (l + 3) & 3; }

int parse_int_token(std::string_view tok) {
  int value = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || p != tok.data() + tok.size() || tok.empty())
    throw std::invalid_argument("bad op argument '" + std::string(tok) + "'");
  return value;
}

}  // namespace

HPrimeElement hp_identity() { return {}; }

HPrimeElement hp_c2() {
  HPrimeElement e;
  e.eps = true;
  return e;
}

HPrimeElement hp_swap(int i, int j) {
  if (i < 1 || i > 4 || j < 1 || j > 4 || i == j)
    throw std::invalid_argument("swap labels must be distinct and in 1..4");
  HPrimeElement e;
  std::swap(e.pi[i - 1], e.pi[j - 1]);
  return e;
}

HPrimeElement hp_rotate(int k, int t) {
  require_valid_t(t);
  HPrimeElement e;
  e.k = mod_pos(k, t);
  return e;
}

HPrimeElement hp_dilate(int r, int t) {
  require_valid_t(t);
  inverse_mod(r, t);  // unit check
  HPrimeElement e;
  e.r = mod_pos(r, t);
  return e;
}

bool perm_odd(const std::array<uint8_t, 4>& pi) {
  int inversions = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (pi[i] > pi[j]) ++inversions;
  return inversions & 1;
}

HPrimeElement hp_compose(const HPrimeElement& e1, const HPrimeElement& e2, int t) {
  HPrimeElement out;
  out.eps = e1.eps != e2.eps;
  for (int i = 0; i < 4; ++i) out.pi[i] = e1.pi[e2.pi[i]];
  out.k = mod_pos(e1.k + static_cast<long long>(e1.r) * e2.k, t);
  out.r = mod_pos(static_cast<long long>(e1.r) * e2.r, t);
  return out;
}

HPrimeElement hp_inverse(const HPrimeElement& e, int t) {
  HPrimeElement out;
  out.eps = e.eps;
  for (int i = 0; i < 4; ++i) out.pi[e.pi[i]] = static_cast<uint8_t>(i);
  out.r = inverse_mod(e.r, t);
  out.k = mod_pos(-static_cast<long long>(out.r) * e.k, t);
  return out;
}

Diagram op_complement(const Diagram& d) {
  Diagram out = d;
  out.flip_row(0);
  return out;
}

Diagram op_swap(int i, int j, const Diagram& d) {
  if (i < 1 || i > 4 || j < 1 || j > 4 || i == j)
    throw std::invalid_argument("swap labels must be distinct and in 1..4");
  Diagram out = d;
  out.swap_rows(row_of_label(i - 1), row_of_label(j - 1));
  return out;
}

Diagram op_rotate(int k, const Diagram& d) {
  const int t = d.t();
  k = mod_pos(k, t);
  if (k == 0) return d;
  Diagram out(t);
  for (int row = 0; row < 4; ++row)
    for (int col = 0; col < t; ++col)
      if (d.marked(row, col)) out.set_mark(row, mod_pos(col - k, t), true);
  return out;
}

Diagram op_dilate(int r, const Diagram& d) {
  const int t = d.t();
  inverse_mod(r, t);  // unit check
  r = mod_pos(r, t);
  if (r == 1) return d;
  Diagram out(t);
  for (int row = 0; row < 4; ++row)
    for (int col = 0; col < t; ++col)
      if (d.marked(row, col))
        out.set_mark(row, mod_pos(static_cast<long long>(col) * r, t), true);
  return out;
}

Diagram hp_apply(const HPrimeElement& e, const Diagram& d) {
  const int t = d.t();
  Diagram cur = op_dilate(e.r, d);
  cur = op_rotate(mod_pos(e.k, t), cur);
  if (e.pi != std::array<uint8_t, 4>{0, 1, 2, 3}) {
    Diagram permuted(t);
    for (int l = 0; l < 4; ++l) {
      const int src = row_of_label(l);
      const int dst = row_of_label(e.pi[l]);
      for (int col = 0; col < t; ++col)
        if (cur.marked(src, col)) permuted.set_mark(dst, col, true);
    }
    cur = permuted;
  }
  if (e.eps) cur.flip_row(0);
  return cur;
}

bool hp_lambda(const HPrimeElement& e) { return e.eps != perm_odd(e.pi); }

bool in_hstar(const HPrimeElement& e) { return !hp_lambda(e); }

std::vector<HPrimeElement> hp_enumerate(int t) {
  require_valid_t(t);
  const std::vector<int> units = units_mod(t);
  std::array<uint8_t, 4> perm = {0, 1, 2, 3};
  std::vector<std::array<uint8_t, 4>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<HPrimeElement> out;
  out.reserve(static_cast<size_t>(2) * perms.size() * t * units.size());
  for (int eps = 0; eps < 2; ++eps)
    for (const auto& p : perms)
      for (int k = 0; k < t; ++k)
        for (int r : units) out.push_back({eps != 0, p, k, r});
  return out;
}

std::vector<HPrimeElement> parse_op_word(std::string_view word, int t) {
  require_valid_t(t);
  std::vector<HPrimeElement> ops;
  size_t pos = 0;
  while (pos <= word.size()) {
    size_t semi = word.find(';', pos);
    if (semi == std::string_view::npos) semi = word.size();
    std::string_view tok = word.substr(pos, semi - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.empty()) {
      if (semi == word.size() && !ops.empty()) break;
      throw std::invalid_argument("empty op token");
    }
    if (tok == "C2") {
      ops.push_back(hp_c2());
    } else if (tok.size() == 3 && tok[0] == 's' && tok[1] >= '1' && tok[1] <= '4' &&
               tok[2] >= '1' && tok[2] <= '4' && tok[1] != tok[2]) {
      ops.push_back(hp_swap(tok[1] - '0', tok[2] - '0'));
    } else if (tok.rfind("T:", 0) == 0) {
      const int k = parse_int_token(tok.substr(2));
      if (k < 0 || k >= t)
        throw std::invalid_argument("rotation out of range in '" + std::string(tok) + "'");
      ops.push_back(hp_rotate(k, t));
    } else if (tok.rfind("V:", 0) == 0) {
      const int r = parse_int_token(tok.substr(2));
      if (r < 1 || r >= t || std::gcd(r, t) != 1)
        throw std::invalid_argument("dilatation '" + std::string(tok) + "' is not a unit mod " +
                                    std::to_string(t));
      ops.push_back(hp_dilate(r, t));
    } else {
      throw std::invalid_argument("unknown op token '" + std::string(tok) + "'");
    }
    if (semi == word.size()) break;
    pos = semi + 1;
  }
  if (ops.empty()) throw std::invalid_argument("empty op word");
  return ops;
}

Diagram apply_op_word(const std::vector<HPrimeElement>& ops, const Diagram& d) {
  Diagram cur = d;
  for (const auto& op : ops) cur = hp_apply(op, cur);
  return cur;
}

}  // namespace cocyc
