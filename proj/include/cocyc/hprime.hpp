#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "cocyc/diagram.hpp"

// The four diagram operation families (complement, swaps, rotations,
// dilatations) and the group H' they generate, held as normal forms
// C2^eps S_pi T_k V_r with the composition law
//   (e1,p1,k1,r1) * (e2,p2,k2,r2) = (e1^e2, p1 o p2, k1 + r1 k2, r1 r2);
// a product applies its right factor first. There are 48 t phi(t) normal
// forms. Grid-level evaluation applies V, then T, then the row permutation,
// then C2; swapping C2 past a row permutation only changes the grid by
// full-row complements, which leave the assembled matrix fixed, so on
// cocycles the evaluation is a group action.

namespace cocyc {

struct HPrimeElement {
  bool eps = false;                         // complement count mod 2
  std::array<uint8_t, 4> pi = {0, 1, 2, 3}; // class-label permutation, 0-based c1..c4
  int k = 0;                                // rotation
  int r = 1;                                // dilatation
  friend bool operator==(const HPrimeElement&, const HPrimeElement&) = default;
};

HPrimeElement hp_identity();
HPrimeElement hp_c2();
HPrimeElement hp_swap(int i, int j);        // class labels in 1..4, i != j
HPrimeElement hp_rotate(int k, int t);
HPrimeElement hp_dilate(int r, int t);      // r must be a unit mod t

bool perm_odd(const std::array<uint8_t, 4>& pi);

HPrimeElement hp_compose(const HPrimeElement& e1, const HPrimeElement& e2, int t);
HPrimeElement hp_inverse(const HPrimeElement& e, int t);

// Grid-level operations.
Diagram op_complement(const Diagram& d);            // complement row of class 2
Diagram op_swap(int i, int j, const Diagram& d);    // swap the rows of classes i, j
Diagram op_rotate(int k, const Diagram& d);         // indices -4k; columns k right
Diagram op_dilate(int r, const Diagram& d);         // column j -> jr mod t

Diagram hp_apply(const HPrimeElement& e, const Diagram& d);

// Parity map lambda(eps,pi,k,r) = eps xor sgn(pi); its kernel is the
// index-2 subgroup H* realized by the algebraic bundle actions.
bool hp_lambda(const HPrimeElement& e);
bool in_hstar(const HPrimeElement& e);

std::vector<HPrimeElement> hp_enumerate(int t);

// Op words for the CLI: ops separated by ';', applied left to right.
// Tokens: C2, s12..s34, T:<k>, V:<r>.
std::vector<HPrimeElement> parse_op_word(std::string_view word, int t);
Diagram apply_op_word(const std::vector<HPrimeElement>& ops, const Diagram& d);

}  // namespace cocyc
