#ifndef NIEPTK_TEST_HELPERS_HPP
#define NIEPTK_TEST_HELPERS_HPP

#include <algorithm>
#include <complex>
#include <random>

#include "core/types.hpp"

namespace testutil {

using nieptk::cplx;
using nieptk::CMat;
using nieptk::CVec;

inline bool close(const cplx& a, const cplx& b, double tol = 1e-9) {
    return std::abs(a - b) <= tol;
}

inline bool close_vec(const CVec& a, const CVec& b, double tol = 1e-9) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!close(a[i], b[i], tol)) return false;
    return true;
}

inline bool close_mat(const CMat& a, const CMat& b, double tol = 1e-9) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!close_vec(a[i], b[i], tol)) return false;
    return true;
}

// max over greedy min-distance matching, +inf on size mismatch
inline double multiset_distance(CVec a, CVec b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (const cplx& x : a) {
        auto it = std::min_element(b.begin(), b.end(), [&](const cplx& p, const cplx& q) {
            return std::abs(p - x) < std::abs(q - x);
        });
        worst = std::max(worst, std::abs(*it - x));
        b.erase(it);
    }
    return worst;
}

inline std::mt19937& rng(std::uint32_t seed = 12345) {
    static std::mt19937 gen(seed);
    return gen;
}

inline double uniform(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(rng());
}

// conjugation-symmetric tail of length n-1 (circulant-real DFT order without
// the Perron slot): tail[n-1-k] = conj(tail[k-1]) under 1-based pairing
inline CVec random_symmetric_tail(std::size_t n) {
    CVec tail(n - 1);
    for (std::size_t k = 1; 2 * k < n; ++k) {
        cplx z(uniform(-2.0, 2.0), uniform(-2.0, 2.0));
        tail[k - 1] = z;
        tail[n - 1 - k] = std::conj(z);
    }
    if (n % 2 == 0) tail[n / 2 - 1] = uniform(-2.0, 2.0);
    return tail;
}

inline CMat random_real_matrix(std::size_t n, double lo = -2.0, double hi = 2.0) {
    CMat m(n, CVec(n));
    for (auto& row : m)
        for (auto& v : row) v = uniform(lo, hi);
    return m;
}

}  // namespace testutil

#endif
