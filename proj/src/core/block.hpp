#ifndef NIEPTK_BLOCK_HPP
#define NIEPTK_BLOCK_HPP

#include "circulant.hpp"
#include "types.hpp"

namespace nieptk {

// n-by-n grid of order-m circulant blocks, stored as first-row vectors.
struct CirculantBlockMatrix {
    std::size_t n = 0;  // grid dimension
    std::size_t m = 0;  // block order
    std::vector<std::vector<CVec>> blocks;  // blocks[i][j] is the first row of A(i,j)

    CMat materialize() const;  // full mn-by-mn matrix
};

// m coefficient matrices S_0..S_{m-1}, each n-by-n.
struct SFamily {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<CMat> s;  // s[k] is S_k
};

using LFamily = SFamily;  // same layout; l[k] is L_k

CirculantBlockMatrix block_matrix_from_rows(std::vector<std::vector<CVec>> blocks);

// S_k[i][j] = sum_l a_l(i,j) omega^{kl} = e_k^T a(i,j).
SFamily s_matrices(const CirculantBlockMatrix& a);

// L_k = (1/m) sum_l S_l omega^{-kl}; sum_k L_k = S_0.
LFamily l_matrices(const SFamily& s);

// Block matrix with a(u,v)_k = L_k[u][v]; inverse of s_matrices.
CirculantBlockMatrix assemble(const SFamily& s);

// All L_k entrywise real >= -tol with imaginary residue <= tol;
// equivalent to entrywise nonnegativity of assemble(s).
bool is_nonnegative_family(const SFamily& s, double tol);

bool is_nonnegative_block_matrix(const CirculantBlockMatrix& a, double tol);

// Multiset union of the sigma(S_k). Circulant S_k use the closed form,
// otherwise the char-poly/root oracle (n <= 12).
CVec spectrum(const CirculantBlockMatrix& a);
CVec family_spectrum(const SFamily& s);

// True within tol if m is a circulant-patterned matrix.
bool is_circulant_matrix(const CMat& m, double tol);

struct EigenPair {
    cplx beta;
    CVec u;              // eigenvector of S_k
    std::size_t k = 0;   // harmonic index
};

// max over pairs of ||A(u kron e_k) - beta (u kron e_k)||_inf, normalized.
double eigenpair_residuals(const CirculantBlockMatrix& a, const std::vector<EigenPair>& pairs);

// Eigenvalues of a general square matrix via char_poly + poly_roots (n <= 12).
CVec matrix_eigenvalues(const CMat& m);

}  // namespace nieptk

#endif
