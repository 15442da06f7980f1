#include "circulant.hpp"

#include <cmath>

#include "dft.hpp"
#include "polynomial.hpp"

namespace nieptk {

CMat Circulant::materialize() const {
    std::size_t m = order();
    CMat a = zeros(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            a[i][j] = first_row[(j + m - i) % m];
    return a;
}

Circulant circulant_from_row(const CVec& first_row) {
    if (first_row.empty()) throw invalid_argument_error("circulant_from_row: empty row");
    return Circulant{first_row};
}

CVec eigenvalues(const Circulant& c) { return dft_eigenvalues(c.first_row); }

Circulant circulant_from_spectrum(const CVec& spectrum) {
    return Circulant{idft_coefficients(spectrum)};
}

NonnegativityVerdict nonnegativity(const Circulant& c, double tol) {
    if (tol < 0) throw invalid_argument_error("nonnegativity: tol must be >= 0");
    NonnegativityVerdict v;
    v.nonnegative = true;
    bool first = true;
    for (const cplx& z : c.first_row) {
        if (first || z.real() < v.min_entry) v.min_entry = z.real();
        first = false;
        v.max_imag = std::max(v.max_imag, std::abs(z.imag()));
        if (z.real() < -tol || std::abs(z.imag()) > tol) v.nonnegative = false;
    }
    return v;
}

bool is_nonnegative(const Circulant& c, double tol) { return nonnegativity(c, tol).nonnegative; }

double conjugate_pair_guo_bound(std::size_t n, double a, double b) {
    if (n < 2) throw invalid_argument_error("conjugate_pair_guo_bound: n >= 2 required");
    if (a <= 0 || b <= 0)
        throw invalid_argument_error("conjugate_pair_guo_bound: a, b must be positive");
    double nn = static_cast<double>(n);
    return (nn - 1.0) * a + nn * std::max(0.0, b / std::sqrt(nn) - a);
}

Circulant conjugate_pair_circulant(std::size_t n, double lambda1, double a, double b) {
    if (n < 2) throw invalid_argument_error("conjugate_pair_circulant: n >= 2 required");
    if (n % 2 == 0)
        throw invalid_argument_error(
            "conjugate_pair_circulant: even n unsupported (alternating row does not close up)");
    if (a <= 0 || b <= 0)
        throw invalid_argument_error("conjugate_pair_circulant: a, b must be positive");
    double nn = static_cast<double>(n);
    double diag = (lambda1 - (nn - 1.0) * a) / nn;
    double plus = (lambda1 + a + std::sqrt(nn) * b) / nn;
    double minus = (lambda1 + a - std::sqrt(nn) * b) / nn;
    CVec row(n);
    row[0] = diag;
    for (std::size_t j = 1; j < n; ++j) row[j] = (j % 2 == 1) ? plus : minus;
    return Circulant{row};
}

CompanionWitness companion_oracle(std::size_t n, double a, double b, double s) {
    if (n < 2) throw invalid_argument_error("companion_oracle: n >= 2 required");
    if (a <= 0 || b <= 0) throw invalid_argument_error("companion_oracle: a, b must be positive");
    if (s < 0) throw invalid_argument_error("companion_oracle: s must be >= 0");

    // power sums of sigma' = ((n-1)(a+s), (n-1)/2 copies of the pair -(a+s)+-bi)
    double nn = static_cast<double>(n);
    double c = a + s;
    cplx z(-c, b);
    CVec power_sums(n);
    cplx zp = 1.0;
    double lp = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
        zp *= z;
        lp *= (nn - 1.0) * c;
        power_sums[k - 1] = lp + (nn - 1.0) * zp.real();
    }
    CompanionWitness w;
    w.n = n;
    w.shift = s;
    w.coefficients = poly_from_power_sums(power_sums);

    // companion matrix: superdiagonal ones, last row (b_n, ..., b_2, 0)
    // with b_j = -alpha_j from p(x) = x^n + alpha_1 x^{n-1} + ... + alpha_n
    w.matrix = zeros(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) w.matrix[i][i + 1] = 1.0;
    for (std::size_t j = 0; j < n; ++j) w.matrix[n - 1][j] = -w.coefficients[n - j];

    w.nonnegative = true;
    for (std::size_t k = 1; k <= n; ++k)
        if (w.coefficients[k].real() > 1e-9) w.nonnegative = false;
    return w;
}

bool laffey_smigoc_sign_check(const CVec& coefficients) {
    if (coefficients.size() < 3) return true;
    const double tol = 1e-9;
    if (coefficients[2].real() > tol) return true;  // implication vacuous
    for (std::size_t k = 2; k < coefficients.size(); ++k)
        if (coefficients[k].real() > tol) return false;
    return true;
}

}  // namespace nieptk
