#ifndef NIEPTK_DFT_HPP
#define NIEPTK_DFT_HPP

#include "types.hpp"

namespace nieptk {

// omega = cos(2*pi/order) + i*sin(2*pi/order), the primitive root of unity.
cplx primitive_root(std::size_t order);

// omega^e with the exponent reduced mod order before trig evaluation.
cplx root_power(std::size_t order, long long exponent);

// Unitary DFT matrix, entries (1/sqrt(order)) * omega^{pq}.
CMat fourier_matrix(std::size_t order);

// e_k = (1, omega^k, omega^{2k}, ..., omega^{(m-1)k}).
CVec harmonic_vector(std::size_t k, std::size_t m);

// lambda_k = sum_l a_l omega^{kl}; index k binds to eigenvector e_k.
CVec dft_eigenvalues(const CVec& first_row);

// a_k = (1/m) sum_l lambda_l omega^{-kl}; exact inverse of dft_eigenvalues.
CVec idft_coefficients(const CVec& spectrum);

}  // namespace nieptk

#endif
