#pragma once

#include <array>
#include <cstdint>
#include <vector>

// Arithmetic in G = Z_t x Z_2^2, its automorphisms, and the semidirect
// product H = G x| Aut(G) that acts on cocyclic matrices.

namespace cocyc {

// Throws std::invalid_argument unless t is odd and > 1.
void require_valid_t(int t);

int mod_pos(long long v, int m);
int inverse_mod(int r, int t);        // extended Euclid; throws if gcd(r,t) != 1
std::vector<int> units_mod(int t);
int euler_phi(int t);

// An element x^a u^p v^q. The offset o packs the Z_2^2 part two bits wide
// (bit 0 = u, bit 1 = v), so o = 0,1,2,3 reads 1, u, v, uv and matches the
// element ordering (x^i,1) < (x^i,u) < (x^i,v) < (x^i,uv).
struct GroupElement {
  int a = 0;
  int o = 0;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

GroupElement g_identity();
GroupElement g_x();   // (1, 0)
GroupElement g_u();   // (0, 1)
GroupElement g_v();   // (0, 2)

// 1-based position of e in the element ordering: 4a + o + 1.
int elem_index(GroupElement e, int t);
GroupElement elem_of_index(int d, int t);

GroupElement g_mul(GroupElement g1, GroupElement g2, int t);
GroupElement g_inv(GroupElement g, int t);

// Automorphism x -> x^r plus a permutation of the offsets {1,2,3}
// (= {u,v,uv}); offset 0 is always fixed. sigma[o] is the image offset.
struct Automorphism {
  int r = 1;
  std::array<uint8_t, 4> sigma = {0, 1, 2, 3};
  friend bool operator==(const Automorphism&, const Automorphism&) = default;
};

Automorphism aut_identity();
Automorphism aut_h23();           // u <-> v
Automorphism aut_h243();          // u -> uv -> v -> u
Automorphism aut_hr(int r, int t);

GroupElement aut_apply(const Automorphism& th, GroupElement g, int t);
// outer(inner(g)); plain function composition.
Automorphism aut_compose(const Automorphism& outer, const Automorphism& inner, int t);
Automorphism aut_inverse(const Automorphism& th, int t);

// Element of H. Composition follows the semidirect law
//   (a, th1) o (b, th2) = (a * th1^-1(b), th1 then th2),
// i.e. the automorphism part of a product applies th1 first.
struct BundleElement {
  GroupElement shift;
  Automorphism aut;
  friend bool operator==(const BundleElement&, const BundleElement&) = default;
};

BundleElement h_identity();
BundleElement h_shift(GroupElement a);
BundleElement h_aut(const Automorphism& th);
BundleElement h_compose(const BundleElement& h1, const BundleElement& h2, int t);
BundleElement h_inverse(const BundleElement& h, int t);

// All 24 t phi(t) elements of H, in a fixed deterministic order.
std::vector<BundleElement> h_enumerate(int t);

}  // namespace cocyc
