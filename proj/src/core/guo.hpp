#ifndef NIEPTK_GUO_HPP
#define NIEPTK_GUO_HPP

#include "circulant.hpp"
#include "types.hpp"

namespace nieptk {

// Permutation alpha of {0..n-1} with alpha(0) = 0 and alpha(n-k) = n - alpha(k).
using GuoAssignment = std::vector<std::size_t>;

// Every admissible assignment, lexicographic order. 2 <= n <= 11.
std::vector<GuoAssignment> enumerate_assignments(std::size_t n);

// Least lambda_0 making every first-row entry of the circulant built from
// (lambda_0, tail[alpha(1)-1], ..., tail[alpha(n-1)-1]) nonnegative:
// max over j of -sum_l Re[tail_{alpha(l)} tau^{-jl}].
double lambda0_for_assignment(const CVec& tail, const GuoAssignment& alpha);

// Printed trigonometric form of the same quantity, defined for odd n; used as
// a cross-check of the direct DFT evaluation.
double lambda0_for_assignment_trig(const CVec& tail, const GuoAssignment& alpha);

struct GuoResult {
    double lambda0 = 0.0;
    GuoAssignment assignment;
    Circulant witness;
    double max_tail_modulus = 0.0;
};

// Minimum of lambda0_for_assignment over all assignments; the tail is
// canonically re-paired so tail[n-k-1] = conj(tail[k-1]) first.
GuoResult guo_index(const CVec& tail);

}  // namespace nieptk

#endif
