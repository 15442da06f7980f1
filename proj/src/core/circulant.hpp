#ifndef NIEPTK_CIRCULANT_HPP
#define NIEPTK_CIRCULANT_HPP

#include "types.hpp"

namespace nieptk {

// Circulant matrix stored by its first row; entry (i,j) = first_row[(j-i) mod m].
struct Circulant {
    CVec first_row;
    std::size_t order() const { return first_row.size(); }
    CMat materialize() const;
};

Circulant circulant_from_row(const CVec& first_row);
CVec eigenvalues(const Circulant& c);

// Inverse of eigenvalues: spectrum given in DFT index order (position k binds
// to e_k). Complex rows are permitted; realness is a separate check.
Circulant circulant_from_spectrum(const CVec& spectrum);

struct NonnegativityVerdict {
    bool nonnegative = false;
    double min_entry = 0.0;    // most negative real part seen
    double max_imag = 0.0;     // largest imaginary residue
};

NonnegativityVerdict nonnegativity(const Circulant& c, double tol);
bool is_nonnegative(const Circulant& c, double tol);

// (n-1)a + n*max{0, b/sqrt(n) - a}: the least lambda_1 making
// (lambda_1, -a+bi, -a-bi, ...) realizable.
double conjugate_pair_guo_bound(std::size_t n, double a, double b);

// The realizing circulant: diagonal value (lambda_1-(n-1)a)/n, off-diagonal
// first-row entries alternating (lambda_1+a+sqrt(n)b)/n, (lambda_1+a-sqrt(n)b)/n.
// Odd n only.
Circulant conjugate_pair_circulant(std::size_t n, double lambda1, double a, double b);

struct CompanionWitness {
    std::size_t n = 0;
    CVec coefficients;   // monic descending char poly of the shifted list
    double shift = 0.0;
    CMat matrix;         // companion form, superdiagonal ones
    bool nonnegative = false;
};

// Companion realization of sigma' = ((n-1)(a+s), -(a+s)+bi, -(a+s)-bi, ...).
// The verdict is true iff all trailing char-poly coefficients are <= 1e-9,
// equivalently a+s >= b/sqrt(n).
CompanionWitness companion_oracle(std::size_t n, double a, double b, double s);

// Sign-propagation check: if the x^{d-2} coefficient is <= tol, all later
// coefficients must be too. Vacuously true otherwise.
bool laffey_smigoc_sign_check(const CVec& coefficients);

}  // namespace nieptk

#endif
