#include "cocyc/bundle.hpp"

#include <stdexcept>
#include <string>

#include "cocyc/generators.hpp"

namespace cocyc {

namespace {

void require_order(const SignMatrix& m, int t) {
  require_valid_t(t);
  if (m.order() != 4 * t)
    throw std::invalid_argument("matrix order " + std::to_string(m.order()) +
                                " does not match 4t = " + std::to_string(4 * t));
}

// Klein part of alpha: images of the shifts 1, u, v, uv as class-label
// permutations (0-based labels).
constexpr std::array<uint8_t, 4> kOffsetPerm[4] = {
    {0, 1, 2, 3},  // identity
    {1, 0, 3, 2},  // u -> s12 s34
    {2, 3, 0, 1},  // v -> s13 s24
    {3, 2, 1, 0},  // uv -> s14 s23
};

}  // namespace

SignMatrix shift_matrix(const SignMatrix& m, GroupElement a, int t) {
  require_order(m, t);
  const int n = 4 * t;
  const int ia = elem_index(a, t) - 1;
  SignMatrix out(n);
  for (int g = 0; g < n; ++g) {
    const GroupElement ge = elem_of_index(g + 1, t);
    const int iag = elem_index(g_mul(a, ge, t), t) - 1;
    out.xor_row(g, m.row(iag));
    out.xor_row(g, m.row(ia));
  }
  return out;
}

SignMatrix aut_matrix(const SignMatrix& m, const Automorphism& th, int t) {
  require_order(m, t);
  const int n = 4 * t;
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i)
    p[i] = elem_index(aut_apply(th, elem_of_index(i + 1, t), t), t) - 1;
  SignMatrix out(n);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (m.at(p[g], p[h]) < 0) out.set(g, h, -1);
  return out;
}

SignMatrix bundle_apply(const SignMatrix& m, const BundleElement& h, int t) {
  return shift_matrix(aut_matrix(m, h.aut, t), h.shift, t);
}

HPrimeElement alpha(const BundleElement& h, int t) {
  require_valid_t(t);
  const auto& off = kOffsetPerm[h.shift.o];
  // The automorphism part acts on coboundary indices through its inverse
  // (theta sends the delta at k to the delta at theta^-1(k)), so the class
  // permutation is sigma^-1 and the dilatation is V_{r^-1}.
  std::array<uint8_t, 4> sig_inv;
  for (int i = 0; i < 4; ++i) sig_inv[h.aut.sigma[i]] = static_cast<uint8_t>(i);
  HPrimeElement e;
  e.eps = perm_odd(h.aut.sigma);
  for (int i = 0; i < 4; ++i) e.pi[i] = off[sig_inv[i]];
  e.k = mod_pos(h.shift.a, t);
  e.r = inverse_mod(h.aut.r, t);
  return e;
}

bool verify_translation(int t, const BundleElement& h, std::span<const int> indices) {
  const SignMatrix lhs = bundle_apply(assemble(indices, t, true), h, t);
  const Diagram image = hp_apply(alpha(h, t), diagram_from_set(indices, t));
  const SignMatrix rhs = assemble(set_from_diagram(image), t, true);
  return lhs == rhs;
}

bool verify_translation(int t, const BundleElement& h, const std::vector<int>& indices) {
  return verify_translation(t, h, std::span<const int>(indices));
}

}  // namespace cocyc
