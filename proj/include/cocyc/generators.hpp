#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cocyc/sign_matrix.hpp"

// Generator matrices of the cocycle group over Z_t x Z_2^2 and assembly of
// cocyclic matrices as pointwise products, plus the cocycle/Hadamard checks.

namespace cocyc {

// M_rho = J_t (x) B with B rows (1,1,1,1),(1,-1,1,-1),(1,-1,-1,1),(1,1,-1,-1).
// The entry at (g, h) depends only on the offsets of g and h.
SignMatrix rho_matrix(int t);

// Coboundary matrix of the delta function at the d-th element:
// entry (g,h) = delta(g) delta(h) delta(gh), delta(e) = -1 iff index(e) = d.
// d = 1 gives the non-normalized variant whose first row is all -1.
SignMatrix delta_matrix(int d, int t);

// The same coboundary with row d and column d negated, built independently
// as a 4x4-block back-diagonal matrix from the blocks A_0..A_3.
SignMatrix block_gen_matrix(int i, int t);

// K = J_t (x) B' with B' rows (1,1,1,1),(1,1,-1,-1),(1,-1,1,-1),(1,-1,-1,1);
// equals the pointwise product of the class-2 coboundaries (indices 2 mod 4).
SignMatrix k_matrix(int t);

// Pointwise product of the normalized coboundary generators for d in S,
// times M_rho when include_rho is set. The d = 1 factor is the negated
// delta matrix (first row +1): with that normalization every assembled
// matrix has constant +1 first row and the shift actions permute index
// sets exactly. For sets not containing 1 this is plainly the product of
// delta_matrix(d) over S.
SignMatrix assemble(std::span<const int> indices, int t, bool include_rho);
SignMatrix assemble(const std::vector<int>& indices, int t, bool include_rho);

// Mask form: bit d-1 set means index d is in the set.
SignMatrix assemble_mask(std::span<const uint64_t> mask, int t, bool include_rho);

// Exhaustive check of psi(g,h) psi(gh,k) = psi(g,hk) psi(h,k) over all
// (4t)^3 triples. Test oracle, not a hot path.
bool is_cocycle(const SignMatrix& m, int t);

}  // namespace cocyc
