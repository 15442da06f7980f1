#include "dft.hpp"

#include <cmath>
#include <numbers>

namespace nieptk {

cplx primitive_root(std::size_t order) {
    if (order == 0) throw invalid_argument_error("primitive_root: order must be positive");
    return root_power(order, 1);
}

cplx root_power(std::size_t order, long long exponent) {
    if (order == 0) throw invalid_argument_error("root_power: order must be positive");
    long long m = static_cast<long long>(order);
    long long e = ((exponent % m) + m) % m;
    // exact values at the axes, to keep small cases clean
    if (4 * e == 0) return {1.0, 0.0};
    if (4 * e == m) return {0.0, 1.0};
    if (4 * e == 2 * m) return {-1.0, 0.0};
    if (4 * e == 3 * m) return {0.0, -1.0};
    double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(m);
    return {std::cos(angle), std::sin(angle)};
}

CMat fourier_matrix(std::size_t order) {
    if (order == 0) throw invalid_argument_error("fourier_matrix: order must be positive");
    double scale = 1.0 / std::sqrt(static_cast<double>(order));
    CMat f = zeros(order, order);
    for (std::size_t p = 0; p < order; ++p)
        for (std::size_t q = 0; q < order; ++q)
            f[p][q] = scale * root_power(order, static_cast<long long>(p) * static_cast<long long>(q));
    return f;
}

CVec harmonic_vector(std::size_t k, std::size_t m) {
    if (m == 0 || k >= m) throw invalid_argument_error("harmonic_vector: require 0 <= k < m");
    CVec e(m);
    for (std::size_t j = 0; j < m; ++j)
        e[j] = root_power(m, static_cast<long long>(k) * static_cast<long long>(j));
    return e;
}

CVec dft_eigenvalues(const CVec& first_row) {
    std::size_t m = first_row.size();
    if (m == 0) throw invalid_argument_error("dft_eigenvalues: empty input");
    CVec lambda(m, cplx(0.0, 0.0));
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l)
            lambda[k] += first_row[l] * root_power(m, static_cast<long long>(k) * static_cast<long long>(l));
    return lambda;
}

CVec idft_coefficients(const CVec& spectrum) {
    std::size_t m = spectrum.size();
    if (m == 0) throw invalid_argument_error("idft_coefficients: empty input");
    CVec a(m, cplx(0.0, 0.0));
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t l = 0; l < m; ++l)
            a[k] += spectrum[l] * root_power(m, -static_cast<long long>(k) * static_cast<long long>(l));
        a[k] /= static_cast<double>(m);
    }
    return a;
}

}  // namespace nieptk
