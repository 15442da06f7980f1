#ifndef NIEPTK_POLYNOMIAL_HPP
#define NIEPTK_POLYNOMIAL_HPP

#include "types.hpp"

namespace nieptk {

// Coefficient vectors are monic descending: p(x) = x^d + c[1] x^{d-1} + ... + c[d],
// stored as {1, c[1], ..., c[d]}.

// Characteristic polynomial det(xI - M) via the Faddeev-LeVerrier recurrence.
// Restricted to n <= 12.
CVec char_poly(const CMat& m);

// Monic polynomial from its power sums s_1..s_n (Newton identities).
CVec poly_from_power_sums(const CVec& power_sums);

// Monic polynomial with the given roots.
CVec poly_from_roots(const CVec& roots);

cplx poly_eval(const CVec& coeffs, cplx x);
CVec poly_derivative(const CVec& coeffs);

struct RootResult {
    CVec roots;
    bool converged = true;
    std::size_t iterations = 0;
};

// All roots by simultaneous Durand-Kerner iteration, one Newton refinement
// step each at the end. Degree <= 12, leading coefficient 1.
RootResult poly_roots(const CVec& coeffs);

}  // namespace nieptk

#endif
