#include "cocyc/generators.hpp"

#include <stdexcept>
#include <string>

#include "cocyc/group.hpp"

namespace cocyc {

namespace {

constexpr int kB[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};

constexpr int kBPrime[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};

// Blocks A_0..A_3 indexed by i mod 4, built from D = ((-1,1),(1,-1)) and
// DR = ((1,-1),(-1,1)): A_0 = antidiag(DR,DR), A_1 = diag(D,D),
// A_2 = diag(DR,DR), A_3 = antidiag(D,D); blank positions are +1.
constexpr int kA[4][4][4] = {
    {{1, 1, 1, -1}, {1, 1, -1, 1}, {1, -1, 1, 1}, {-1, 1, 1, 1}},
    {{-1, 1, 1, 1}, {1, -1, 1, 1}, {1, 1, -1, 1}, {1, 1, 1, -1}},
    {{1, -1, 1, 1}, {-1, 1, 1, 1}, {1, 1, 1, -1}, {1, 1, -1, 1}},
    {{1, 1, -1, 1}, {1, 1, 1, -1}, {-1, 1, 1, 1}, {1, -1, 1, 1}},
};

// 0-based element index product; element i <-> (a = i/4, o = i%4).
inline int mul_idx(int i, int j, int t) {
  return (((i >> 2) + (j >> 2)) % t) * 4 + ((i ^ j) & 3);
}

}  // namespace

SignMatrix rho_matrix(int t) {
  require_valid_t(t);
  const int n = 4 * t;
  SignMatrix m(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (kB[r & 3][c & 3] < 0) m.set(r, c, -1);
  return m;
}

SignMatrix k_matrix(int t) {
  require_valid_t(t);
  const int n = 4 * t;
  SignMatrix m(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (kBPrime[r & 3][c & 3] < 0) m.set(r, c, -1);
  return m;
}

SignMatrix delta_matrix(int d, int t) {
  require_valid_t(t);
  const int n = 4 * t;
  if (d < 1 || d > n)
    throw std::invalid_argument("coboundary index " + std::to_string(d) + " out of 1.." +
                                std::to_string(n));
  const int e = d - 1;
  SignMatrix m(n);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const int count = (g == e) + (h == e) + (mul_idx(g, h, t) == e);
      if (count & 1) m.set(g, h, -1);
    }
  return m;
}

SignMatrix block_gen_matrix(int i, int t) {
  require_valid_t(t);
  const int n = 4 * t;
  if (i < 1 || i > n)
    throw std::invalid_argument("generator index " + std::to_string(i) + " out of 1.." +
                                std::to_string(n));
  const int cls = i % 4;
  const int start_col = (i + 3) / 4 - 1;  // 0-based block column of A in block row 0
  SignMatrix m(n);
  for (int br = 0; br < t; ++br) {
    const int bc = mod_pos(start_col - br, t);  // back diagonal
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        if (kA[cls][r][c] < 0) m.set(4 * br + r, 4 * bc + c, -1);
  }
  return m;
}

SignMatrix assemble(std::span<const int> indices, int t, bool include_rho) {
  require_valid_t(t);
  const int n = 4 * t;
  SignMatrix m = include_rho ? rho_matrix(t) : SignMatrix(n);
  bool negate = false;
  for (int d : indices) {
    if (d < 1 || d > n)
      throw std::invalid_argument("set index " + std::to_string(d) + " out of 1.." +
                                  std::to_string(n));
    m.hprod_inplace(delta_matrix(d, t));
    if (d == 1) negate = true;  // normalized generator at the identity element
  }
  if (negate) m.negate_all();
  return m;
}

SignMatrix assemble(const std::vector<int>& indices, int t, bool include_rho) {
  return assemble(std::span<const int>(indices), t, include_rho);
}

SignMatrix assemble_mask(std::span<const uint64_t> mask, int t, bool include_rho) {
  std::vector<int> indices;
  for (size_t w = 0; w < mask.size(); ++w)
    for (int b = 0; b < 64; ++b)
      if (mask[w] >> b & 1) indices.push_back(static_cast<int>(64 * w + b) + 1);
  return assemble(std::span<const int>(indices), t, include_rho);
}

bool is_cocycle(const SignMatrix& m, int t) {
  require_valid_t(t);
  const int n = 4 * t;
  if (m.order() != n)
    throw std::invalid_argument("matrix order " + std::to_string(m.order()) +
                                " does not match 4t = " + std::to_string(n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const int gh = mul_idx(g, h, t);
      for (int k = 0; k < n; ++k) {
        const int hk = mul_idx(h, k, t);
        if (m.at(g, h) * m.at(gh, k) != m.at(g, hk) * m.at(h, k)) return false;
      }
    }
  return true;
}

}  // namespace cocyc
