#ifndef NIEPTK_SPECTRA_HPP
#define NIEPTK_SPECTRA_HPP

#include <optional>

#include "types.hpp"

namespace nieptk {

struct NecessaryConditionsReport {
    bool perron_in_list = false;
    bool conjugation_closed = false;
    bool moments_nonnegative = false;
    bool jll = false;
    bool overall() const {
        return perron_in_list && conjugation_closed && moments_nonnegative && jll;
    }
};

// True iff the multiset equals the multiset of its conjugates within tol.
// Empty lists are vacuously closed.
bool is_closed_under_conjugation(const CVec& list, double tol);

// Power sums s_1..s_kmax.
CVec moments(const CVec& list, std::size_t kmax);

// Perron-Frobenius style necessary conditions for realizability.
NecessaryConditionsReport check_necessary_conditions(const CVec& list,
                                                     std::size_t kmax = 6,
                                                     std::size_t mmax = 3);

// Reorders a conjugation-closed list into circulant-real form:
// entry 0 real with max modulus, entry n-k conjugate to entry k.
// Returns nullopt if no such arrangement exists within tol.
std::optional<CVec> canonical_circulant_real_order(const CVec& list, double tol);

// Multiset comparison with greedy minimal-distance matching; returns the
// max matched distance, or +inf on size mismatch.
double multiset_match_distance(CVec a, CVec b);

}  // namespace nieptk

#endif
