#include "guo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dft.hpp"

namespace nieptk {

namespace {

// re-pair the tail so slot n-k holds the conjugate of slot k (slots 1..n-1)
CVec canonical_symmetric_tail(const CVec& tail, double tol) {
    std::size_t n = tail.size() + 1;
    CVec out(tail.size());
    std::vector<bool> used(tail.size(), false);
    std::size_t pair_slots = (n - 1) / 2;
    for (std::size_t slot = 1; slot <= pair_slots; ++slot) {
        // complex entries first, so a lone real survives for the self-paired slot
        std::size_t i = tail.size();
        for (std::size_t c = 0; c < tail.size(); ++c)
            if (!used[c] && std::abs(tail[c].imag()) > tol) {
                i = c;
                break;
            }
        if (i == tail.size())
            for (std::size_t c = 0; c < tail.size(); ++c)
                if (!used[c]) {
                    i = c;
                    break;
                }
        used[i] = true;
        std::size_t j = tail.size();
        for (std::size_t c = 0; c < tail.size(); ++c)
            if (!used[c] && std::abs(tail[c] - std::conj(tail[i])) <= tol) {
                j = c;
                break;
            }
        if (j == tail.size())
            throw invalid_argument_error("guo_index: tail is not conjugation-symmetric");
        used[j] = true;
        out[slot - 1] = tail[i];
        out[n - slot - 1] = tail[j];
    }
    if (n % 2 == 0) {
        std::size_t i = tail.size();
        for (std::size_t c = 0; c < tail.size(); ++c)
            if (!used[c] && std::abs(tail[c].imag()) <= tol) {
                i = c;
                break;
            }
        if (i == tail.size())
            throw invalid_argument_error("guo_index: no real entry for the self-paired slot");
        out[n / 2 - 1] = cplx(tail[i].real(), 0.0);
    }
    return out;
}

void check_assignment(std::size_t n, const GuoAssignment& alpha) {
    if (alpha.size() != n || alpha[0] != 0)
        throw invalid_argument_error("assignment: alpha(0) = 0 required");
    std::vector<bool> seen(n, false);
    for (std::size_t v : alpha) {
        if (v >= n || seen[v]) throw invalid_argument_error("assignment: not a permutation");
        seen[v] = true;
    }
    for (std::size_t k = 1; k < n; ++k)
        if (alpha[n - k] != n - alpha[k])
            throw invalid_argument_error("assignment: alpha(n-k) = n - alpha(k) violated");
}

}  // namespace

std::vector<GuoAssignment> enumerate_assignments(std::size_t n) {
    if (n < 2 || n > 11) throw unsupported_size_error("enumerate_assignments: 2 <= n <= 11");
    std::size_t h = (n - 1) / 2;  // number of conjugate pair slots
    std::vector<std::size_t> reps(h);
    for (std::size_t i = 0; i < h; ++i) reps[i] = i + 1;

    std::vector<GuoAssignment> out;
    std::vector<std::size_t> perm = reps;
    std::sort(perm.begin(), perm.end());
    do {
        for (std::size_t mask = 0; mask < (std::size_t{1} << h); ++mask) {
            GuoAssignment alpha(n);
            alpha[0] = 0;
            if (n % 2 == 0) alpha[n / 2] = n / 2;
            for (std::size_t i = 0; i < h; ++i) {
                std::size_t k = reps[i];
                std::size_t v = perm[i];
                if (mask & (std::size_t{1} << i)) v = n - v;
                alpha[k] = v;
                alpha[n - k] = n - v;
            }
            out.push_back(std::move(alpha));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
}

double lambda0_for_assignment(const CVec& tail, const GuoAssignment& alpha) {
    std::size_t n = tail.size() + 1;
    check_assignment(n, alpha);
    double scale = 1.0;
    for (const cplx& z : tail) scale = std::max(scale, std::abs(z));
    CVec mu(n - 1);
    for (std::size_t l = 1; l < n; ++l) mu[l - 1] = tail[alpha[l] - 1];
    for (std::size_t l = 1; l < n; ++l)
        if (std::abs(mu[(n - l) - 1] - std::conj(mu[l - 1])) > 1e-9 * scale)
            throw invalid_argument_error(
                "lambda0_for_assignment: conjugation symmetry violated after permutation");
    double best = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        cplx sum = 0.0;
        for (std::size_t l = 1; l < n; ++l)
            sum += mu[l - 1] * root_power(n, -static_cast<long long>(j) * static_cast<long long>(l));
        if (std::abs(sum.imag()) > 1e-9 * scale * static_cast<double>(n))
            throw numeric_error("lambda0_for_assignment: imaginary residue above tolerance");
        double v = -sum.real();
        if (j == 0 || v > best) best = v;
    }
    return best;
}

double lambda0_for_assignment_trig(const CVec& tail, const GuoAssignment& alpha) {
    std::size_t n = tail.size() + 1;
    if (n % 2 == 0)
        throw unsupported_size_error("lambda0_for_assignment_trig: odd n only");
    check_assignment(n, alpha);
    std::size_t h = (n - 1) / 2;
    double best = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double v = 0.0;
        for (std::size_t l = 1; l <= h; ++l) {
            cplx mu = tail[alpha[l] - 1];
            double angle = 2.0 * std::numbers::pi * static_cast<double>(j * l) /
                           static_cast<double>(n);
            v -= 2.0 * (mu.real() * std::cos(angle) + mu.imag() * std::sin(angle));
        }
        if (j == 0 || v > best) best = v;
    }
    return best;
}

GuoResult guo_index(const CVec& tail) {
    std::size_t n = tail.size() + 1;
    if (n < 2 || n > 11) throw unsupported_size_error("guo_index: 2 <= n <= 11");
    double scale = 1.0;
    for (const cplx& z : tail) scale = std::max(scale, std::abs(z));
    CVec canon = canonical_symmetric_tail(tail, 1e-9 * scale);

    GuoResult res;
    bool first = true;
    for (const GuoAssignment& alpha : enumerate_assignments(n)) {
        double v = lambda0_for_assignment(canon, alpha);
        if (first || v < res.lambda0) {
            res.lambda0 = v;
            res.assignment = alpha;
            first = false;
        }
    }
    CVec spectrum(n);
    spectrum[0] = res.lambda0;
    for (std::size_t l = 1; l < n; ++l) spectrum[l] = canon[res.assignment[l] - 1];
    res.witness = circulant_from_spectrum(spectrum);
    for (const cplx& z : tail) res.max_tail_modulus = std::max(res.max_tail_modulus, std::abs(z));
    return res;
}

}  // namespace nieptk
