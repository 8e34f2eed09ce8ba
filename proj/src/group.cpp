#include "cocyc/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cocyc {

void require_valid_t(int t) {
  if (t <= 1 || t % 2 == 0)
    throw std::invalid_argument("t must be an odd integer > 1, got " + std::to_string(t));
}

int mod_pos(long long v, int m) {
  long long r = v % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

int inverse_mod(int r, int t) {
  int a = mod_pos(r, t), b = t;
  int s0 = 1, s1 = 0;
  while (b != 0) {
    int q = a / b;
    a -= q * b;
    std::swap(a, b);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  if (a != 1)
    throw std::invalid_argument(std::to_string(r) + " is not a unit mod " + std::to_string(t));
  return mod_pos(s0, t);
}

std::vector<int> units_mod(int t) {
  std::vector<int> out;
  for (int r = 1; r < t; ++r)
    if (std::gcd(r, t) == 1) out.push_back(r);
  return out;
}

int euler_phi(int t) { return static_cast<int>(units_mod(t).size()); }

GroupElement g_identity() { return {0, 0}; }
GroupElement g_x() { return {1, 0}; }
GroupElement g_u() { return {0, 1}; }
GroupElement g_v() { return {0, 2}; }

int elem_index(GroupElement e, int t) {
  require_valid_t(t);
  if (e.a < 0 || e.a >= t || e.o < 0 || e.o > 3)
    throw std::invalid_argument("group element out of range");
  return 4 * e.a + e.o + 1;
}

GroupElement elem_of_index(int d, int t) {
  require_valid_t(t);
  if (d < 1 || d > 4 * t)
    throw std::invalid_argument("element index " + std::to_string(d) + " out of 1.." +
                                std::to_string(4 * t));
  return {(d - 1) / 4, (d - 1) % 4};
}

GroupElement g_mul(GroupElement g1, GroupElement g2, int t) {
  return {mod_pos(static_cast<long long>(g1.a) + g2.a, t), g1.o ^ g2.o};
}

GroupElement g_inv(GroupElement g, int t) { return {mod_pos(-g.a, t), g.o}; }

Automorphism aut_identity() { return {}; }

Automorphism aut_h23() { return {1, {0, 2, 1, 3}}; }

Automorphism aut_h243() { return {1, {0, 3, 1, 2}}; }  // u->uv, v->u, uv->v

Automorphism aut_hr(int r, int t) {
  require_valid_t(t);
  inverse_mod(r, t);  // unit check
  return {mod_pos(r, t), {0, 1, 2, 3}};
}

GroupElement aut_apply(const Automorphism& th, GroupElement g, int t) {
  return {mod_pos(static_cast<long long>(th.r) * g.a, t), th.sigma[g.o]};
}

Automorphism aut_compose(const Automorphism& outer, const Automorphism& inner, int t) {
  Automorphism out;
  out.r = mod_pos(static_cast<long long>(outer.r) * inner.r, t);
  for (int o = 0; o < 4; ++o) out.sigma[o] = outer.sigma[inner.sigma[o]];
  return out;
}

Automorphism aut_inverse(const Automorphism& th, int t) {
  Automorphism out;
  out.r = inverse_mod(th.r, t);
  for (int o = 0; o < 4; ++o) out.sigma[th.sigma[o]] = static_cast<uint8_t>(o);
  return out;
}

BundleElement h_identity() { return {}; }
BundleElement h_shift(GroupElement a) { return {a, aut_identity()}; }
BundleElement h_aut(const Automorphism& th) { return {g_identity(), th}; }

BundleElement h_compose(const BundleElement& h1, const BundleElement& h2, int t) {
  BundleElement out;
  out.shift = g_mul(h1.shift, aut_apply(aut_inverse(h1.aut, t), h2.shift, t), t);
  out.aut = aut_compose(h2.aut, h1.aut, t);
  return out;
}

BundleElement h_inverse(const BundleElement& h, int t) {
  BundleElement out;
  out.aut = aut_inverse(h.aut, t);
  out.shift = aut_apply(h.aut, g_inv(h.shift, t), t);
  return out;
}

std::vector<BundleElement> h_enumerate(int t) {
  require_valid_t(t);
  const std::vector<int> units = units_mod(t);
  std::array<uint8_t, 3> perm = {1, 2, 3};
  std::vector<std::array<uint8_t, 4>> sigmas;
  do {
    sigmas.push_back({0, perm[0], perm[1], perm[2]});
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<BundleElement> out;
  out.reserve(static_cast<size_t>(4 * t) * units.size() * sigmas.size());
  for (int a = 0; a < t; ++a)
    for (int o = 0; o < 4; ++o)
      for (int r : units)
        for (const auto& s : sigmas) out.push_back({{a, o}, {r, s}});
  return out;
}

}  // namespace cocyc
