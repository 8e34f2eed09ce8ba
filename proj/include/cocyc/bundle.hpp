#pragma once

#include <span>
#include <vector>

#include "cocyc/diagram.hpp"
#include "cocyc/group.hpp"
#include "cocyc/hprime.hpp"
#include "cocyc/sign_matrix.hpp"

// Matrix-level shift and automorphism actions of H, and the translation
// homomorphism alpha : H -> H' that realizes every bundle action as a
// diagram operation.

namespace cocyc {

// (psi . a)(g, h) = psi(ag, h) psi(a, h); row g of the result is row ag
// XORed with row a. Preserves the Hadamard property.
SignMatrix shift_matrix(const SignMatrix& m, GroupElement a, int t);

// (psi o (th x th))(g, h) = psi(th g, th h): simultaneous row and column
// permutation under th. Preserves the Hadamard property.
SignMatrix aut_matrix(const SignMatrix& m, const Automorphism& th, int t);

// Evaluation of a bundle element: the automorphism part is applied first,
// then the shift. Under the semidirect law of h_compose this is the order
// that makes the evaluation an action:
//   bundle_apply(m, h_compose(h1, h2)) == bundle_apply(bundle_apply(m, h2), h1).
// (The reverse order fails the law; the two parametrizations trace out the
// same orbits since shift-then-aut by (a, th) equals aut-then-shift by
// (th(a), th).)
SignMatrix bundle_apply(const SignMatrix& m, const BundleElement& h, int t);

// Translation onto diagram operations: x -> T_1, u -> s12 s34,
// v -> s13 s24, h_r -> V_{r^-1}, h_23 -> C2 s23, h_243 -> s23 s24.
// Injective homomorphism onto the kernel of the parity map lambda.
HPrimeElement alpha(const BundleElement& h, int t);

// True iff the matrix route and the diagram route agree bit-exact:
// bundle_apply(assemble(S, rho), h) == assemble(hp_apply(alpha(h), D_S), rho).
bool verify_translation(int t, const BundleElement& h, std::span<const int> indices);
bool verify_translation(int t, const BundleElement& h, const std::vector<int>& indices);

}  // namespace cocyc
