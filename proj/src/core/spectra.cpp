#include "spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nieptk {

bool is_closed_under_conjugation(const CVec& list, double tol) {
    if (tol < 0) throw invalid_argument_error("is_closed_under_conjugation: tol must be >= 0");
    // sort by (Re, |Im|, Im sign) so conjugate partners sit next to each other,
    // then greedily pair each entry with an unused conjugate
    std::vector<std::size_t> idx(list.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        const cplx &x = list[a], &y = list[b];
        if (x.real() != y.real()) return x.real() < y.real();
        double ax = std::abs(x.imag()), ay = std::abs(y.imag());
        if (ax != ay) return ax < ay;
        if (x.imag() != y.imag()) return x.imag() < y.imag();
        return a < b;
    });
    std::vector<bool> used(list.size(), false);
    for (std::size_t i : idx) {
        if (used[i]) continue;
        if (std::abs(list[i].imag()) <= tol) {
            used[i] = true;  // self-conjugate
            continue;
        }
        bool found = false;
        for (std::size_t j : idx) {
            if (j == i || used[j]) continue;
            if (std::abs(list[j] - std::conj(list[i])) <= tol) {
                used[i] = used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

CVec moments(const CVec& list, std::size_t kmax) {
    if (kmax == 0) throw invalid_argument_error("moments: kmax must be >= 1");
    CVec s(kmax, cplx(0.0, 0.0));
    for (const cplx& lam : list) {
        cplx p = 1.0;
        for (std::size_t k = 0; k < kmax; ++k) {
            p *= lam;
            s[k] += p;
        }
    }
    return s;
}

NecessaryConditionsReport check_necessary_conditions(const CVec& list, std::size_t kmax,
                                                     std::size_t mmax) {
    if (list.empty()) throw invalid_argument_error("check_necessary_conditions: empty list");
    const double tol = 1e-9;
    NecessaryConditionsReport rep;

    double rho = 0.0;
    for (const cplx& lam : list) rho = std::max(rho, std::abs(lam));
    for (const cplx& lam : list) {
        if (std::abs(lam.imag()) <= tol && lam.real() >= -tol && std::abs(lam) >= rho - tol) {
            rep.perron_in_list = true;
            break;
        }
    }

    rep.conjugation_closed = is_closed_under_conjugation(list, tol);

    CVec s = moments(list, kmax * mmax);
    rep.moments_nonnegative = true;
    for (std::size_t k = 0; k < kmax; ++k)
        if (s[k].real() < -tol) rep.moments_nonnegative = false;

    rep.jll = true;
    double n = static_cast<double>(list.size());
    for (std::size_t k = 1; k <= kmax; ++k)
        for (std::size_t m = 1; m <= mmax; ++m) {
            double skm = s[k * m - 1].real();
            double lhs = std::pow(s[k - 1].real(), static_cast<double>(m));
            if (lhs > std::pow(n, static_cast<double>(m - 1)) * skm + tol) rep.jll = false;
        }
    return rep;
}

std::optional<CVec> canonical_circulant_real_order(const CVec& list, double tol) {
    std::size_t n = list.size();
    if (n == 0) return std::nullopt;

    // Perron entry: real, nonnegative, maximum modulus
    double rho = 0.0;
    for (const cplx& lam : list) rho = std::max(rho, std::abs(lam));
    std::size_t perron = n;
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(list[i].imag()) <= tol && list[i].real() >= -tol &&
            std::abs(list[i]) >= rho - tol) {
            perron = i;
            break;
        }
    if (perron == n) return std::nullopt;

    CVec rest;
    for (std::size_t i = 0; i < n; ++i)
        if (i != perron) rest.push_back(list[i]);

    CVec out(n, cplx(0.0, 0.0));
    out[0] = cplx(list[perron].real(), 0.0);

    // pair up the tail so position n-k holds the conjugate of position k
    std::vector<bool> used(rest.size(), false);
    std::size_t slot = 1;
    std::size_t pair_slots = (n - 1) / 2;
    // deterministic: sort candidates (Re, Im) descending modulus not needed; stable index order
    for (std::size_t ps = 0; ps < pair_slots; ++ps, ++slot) {
        // complex entries first, so a lone real survives for the self-paired slot
        std::size_t i = rest.size();
        for (std::size_t c = 0; c < rest.size(); ++c)
            if (!used[c] && std::abs(rest[c].imag()) > tol) {
                i = c;
                break;
            }
        if (i == rest.size())
            for (std::size_t c = 0; c < rest.size(); ++c)
                if (!used[c]) {
                    i = c;
                    break;
                }
        if (i == rest.size()) return std::nullopt;
        used[i] = true;
        std::size_t j = rest.size();
        for (std::size_t c = 0; c < rest.size(); ++c)
            if (!used[c] && std::abs(rest[c] - std::conj(rest[i])) <= tol) {
                j = c;
                break;
            }
        if (j == rest.size()) return std::nullopt;
        used[j] = true;
        out[slot] = rest[i];
        out[n - slot] = rest[j];
    }
    if (n % 2 == 0) {
        // self-paired slot n/2 must hold a real entry
        std::size_t i = rest.size();
        for (std::size_t c = 0; c < rest.size(); ++c)
            if (!used[c] && std::abs(rest[c].imag()) <= tol) {
                i = c;
                break;
            }
        if (i == rest.size()) return std::nullopt;
        used[i] = true;
        out[n / 2] = cplx(rest[i].real(), 0.0);
    }
    return out;
}

double multiset_match_distance(CVec a, CVec b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    std::vector<bool> used(b.size(), false);
    for (const cplx& x : a) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t bj = b.size();
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            double d = std::abs(x - b[j]);
            if (d < best) {
                best = d;
                bj = j;
            }
        }
        if (bj == b.size()) return std::numeric_limits<double>::infinity();
        used[bj] = true;
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace nieptk
