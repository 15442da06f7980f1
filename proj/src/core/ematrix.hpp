#ifndef NIEPTK_EMATRIX_HPP
#define NIEPTK_EMATRIX_HPP

#include "block.hpp"
#include "types.hpp"

namespace nieptk {

// n-by-m eigenvalue layout: column l+1 (0-based l) lists the spectrum of S_l
// in DFT order, Perron entry at (0,0).
struct EMatrix {
    std::size_t rows = 0;  // n, order of each S_l
    std::size_t cols = 0;  // m, number of coefficient matrices / block order
    CMat entries;          // rows x cols

    cplx perron() const { return entries[0][0]; }
    CVec column(std::size_t j) const;
    CVec multiset() const;  // all entries, row-major
};

EMatrix ematrix_from_entries(CMat entries);

struct EMatrixReport {
    bool conjugation_closed = false;
    bool perron_max_modulus = false;   // (1,1) real positive, max modulus
    bool column_conjugation = false;   // column l+1 conjugate to column m-l+1
    bool middle_column_real = true;    // even m only
    bool s0_nonnegative = false;       // column 1 realizable by a nonnegative circulant
    bool ok() const {
        return conjugation_closed && perron_max_modulus && column_conjugation &&
               middle_column_real && s0_nonnegative;
    }
};

EMatrixReport validate_ematrix(const EMatrix& e, double tol);

// S_l = circ(idft of column l); S_0 real, S_l^* = S_{m-l}.
SFamily s_family_from_ematrix(const EMatrix& e);

// Least epsilon_11 making every L_k first-row entry nonnegative:
// max over k = 0..m-1 and j = 0..n-1 of the negated real part of the
// non-Perron sum. The (1,1) entry of e is ignored.
double phi(const EMatrix& e, double tol);

// Assemble the realizing block matrix from the L_k. Requires
// perron >= phi(e) - tol.
CirculantBlockMatrix realize_ematrix(const EMatrix& e, double tol);

// A bijection of the entry multiset, stored as the rearranged layout.
bool is_e_nnss(const EMatrix& e, const EMatrix& rearranged, double tol);

struct BlockGuoResult {
    double minimal_perron = 0.0;
    double trace_floor = 0.0;
    EMatrix layout;                // minimizing rearrangement, (0,0) = minimal_perron
    CirculantBlockMatrix witness;
    bool search_complete = true;
    std::size_t candidates_tried = 0;
};

// Minimum of phi over enumerated E-NNSS rearrangements, floored at the trace
// bound. Exhaustive (multiset permutations) within the candidate budget, a
// generator family beyond it.
BlockGuoResult min_perron(const EMatrix& e, std::size_t budget = 200000);

}  // namespace nieptk

#endif
