#ifndef NIEPTK_TYPES_HPP
#define NIEPTK_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace nieptk {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;
using CMat = std::vector<std::vector<cplx>>;

struct invalid_argument_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct unsupported_size_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A construction threshold was not met; carries the threshold for diagnostics.
struct not_realizable_error : std::runtime_error {
    double threshold;
    not_realizable_error(const std::string& msg, double t)
        : std::runtime_error(msg), threshold(t) {}
};

inline CMat zeros(std::size_t rows, std::size_t cols) {
    return CMat(rows, CVec(cols, cplx(0.0, 0.0)));
}

inline CMat identity(std::size_t n) {
    CMat m = zeros(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
    return m;
}

inline CMat matmul(const CMat& a, const CMat& b) {
    std::size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
    CMat out = zeros(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            cplx av = a[i][t];
            if (av == cplx(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < c; ++j) out[i][j] += av * b[t][j];
        }
    return out;
}

inline cplx trace(const CMat& m) {
    cplx t = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
}

inline bool all_finite(const CVec& v) {
    for (const cplx& z : v)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

}  // namespace nieptk

#endif
