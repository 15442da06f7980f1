#include "block.hpp"

#include <cmath>

#include "dft.hpp"
#include "polynomial.hpp"

namespace nieptk {

CMat CirculantBlockMatrix::materialize() const {
    CMat full = zeros(n * m, n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t c = 0; c < m; ++c)
                    full[i * m + r][j * m + c] = blocks[i][j][(c + m - r) % m];
    return full;
}

CirculantBlockMatrix block_matrix_from_rows(std::vector<std::vector<CVec>> blocks) {
    CirculantBlockMatrix a;
    a.n = blocks.size();
    if (a.n == 0) throw invalid_argument_error("block matrix: empty grid");
    a.m = blocks[0].empty() ? 0 : blocks[0][0].size();
    if (a.m == 0) throw invalid_argument_error("block matrix: empty blocks");
    for (const auto& row : blocks) {
        if (row.size() != a.n) throw invalid_argument_error("block matrix: grid not square");
        for (const auto& b : row)
            if (b.size() != a.m) throw invalid_argument_error("block matrix: ragged block order");
    }
    a.blocks = std::move(blocks);
    return a;
}

SFamily s_matrices(const CirculantBlockMatrix& a) {
    SFamily fam;
    fam.n = a.n;
    fam.m = a.m;
    fam.s.assign(a.m, zeros(a.n, a.n));
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j) {
            CVec lam = dft_eigenvalues(a.blocks[i][j]);
            for (std::size_t k = 0; k < a.m; ++k) fam.s[k][i][j] = lam[k];
        }
    return fam;
}

static void check_family(const SFamily& s) {
    if (s.m == 0 || s.s.size() != s.m) throw invalid_argument_error("S-family: empty");
    for (const CMat& mat : s.s) {
        if (mat.size() != s.n) throw invalid_argument_error("S-family: dimension mismatch");
        for (const auto& row : mat)
            if (row.size() != s.n) throw invalid_argument_error("S-family: dimension mismatch");
    }
}

LFamily l_matrices(const SFamily& s) {
    check_family(s);
    LFamily out;
    out.n = s.n;
    out.m = s.m;
    out.s.assign(s.m, zeros(s.n, s.n));
    for (std::size_t k = 0; k < s.m; ++k)
        for (std::size_t l = 0; l < s.m; ++l) {
            cplx w = root_power(s.m, -static_cast<long long>(k) * static_cast<long long>(l)) /
                     static_cast<double>(s.m);
            for (std::size_t i = 0; i < s.n; ++i)
                for (std::size_t j = 0; j < s.n; ++j) out.s[k][i][j] += w * s.s[l][i][j];
        }
    return out;
}

CirculantBlockMatrix assemble(const SFamily& s) {
    LFamily lk = l_matrices(s);
    CirculantBlockMatrix a;
    a.n = s.n;
    a.m = s.m;
    a.blocks.assign(a.n, std::vector<CVec>(a.n, CVec(a.m)));
    for (std::size_t u = 0; u < a.n; ++u)
        for (std::size_t v = 0; v < a.n; ++v)
            for (std::size_t k = 0; k < a.m; ++k) a.blocks[u][v][k] = lk.s[k][u][v];
    return a;
}

bool is_nonnegative_family(const SFamily& s, double tol) {
    LFamily lk = l_matrices(s);
    for (const CMat& mat : lk.s)
        for (const auto& row : mat)
            for (const cplx& z : row)
                if (z.real() < -tol || std::abs(z.imag()) > tol) return false;
    return true;
}

bool is_nonnegative_block_matrix(const CirculantBlockMatrix& a, double tol) {
    for (const auto& row : a.blocks)
        for (const CVec& b : row)
            for (const cplx& z : b)
                if (z.real() < -tol || std::abs(z.imag()) > tol) return false;
    return true;
}

bool is_circulant_matrix(const CMat& m, double tol) {
    std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (std::abs(m[i][j] - m[0][(j + n - i) % n]) > tol) return false;
    return true;
}

CVec matrix_eigenvalues(const CMat& m) {
    if (m.size() > 12)
        throw unsupported_size_error("matrix_eigenvalues: n <= 12 required");
    RootResult rr = poly_roots(char_poly(m));
    if (!rr.converged) throw numeric_error("matrix_eigenvalues: root iteration did not converge");
    return rr.roots;
}

CVec family_spectrum(const SFamily& s) {
    check_family(s);
    CVec all;
    for (std::size_t k = 0; k < s.m; ++k) {
        const CMat& sk = s.s[k];
        CVec eig;
        if (is_circulant_matrix(sk, 1e-12)) {
            CVec row(sk.empty() ? CVec{} : sk[0]);
            eig = dft_eigenvalues(row);
        } else {
            if (s.n > 12)
                throw unsupported_size_error("family_spectrum: non-circulant S_k with n > 12");
            eig = matrix_eigenvalues(sk);
        }
        all.insert(all.end(), eig.begin(), eig.end());
    }
    return all;
}

CVec spectrum(const CirculantBlockMatrix& a) { return family_spectrum(s_matrices(a)); }

double eigenpair_residuals(const CirculantBlockMatrix& a, const std::vector<EigenPair>& pairs) {
    double worst = 0.0;
    CMat full = a.materialize();
    std::size_t dim = a.n * a.m;
    for (const EigenPair& p : pairs) {
        if (p.u.size() != a.n || p.k >= a.m)
            throw invalid_argument_error("eigenpair_residuals: dimension mismatch");
        CVec ek = harmonic_vector(p.k, a.m);
        CVec v(dim);
        double vn = 0.0;
        for (std::size_t i = 0; i < a.n; ++i)
            for (std::size_t r = 0; r < a.m; ++r) {
                v[i * a.m + r] = p.u[i] * ek[r];
                vn = std::max(vn, std::abs(v[i * a.m + r]));
            }
        double resid = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            cplx acc = 0.0;
            for (std::size_t j = 0; j < dim; ++j) acc += full[i][j] * v[j];
            resid = std::max(resid, std::abs(acc - p.beta * v[i]));
        }
        worst = std::max(worst, resid / std::max(1.0, vn));
    }
    return worst;
}

}  // namespace nieptk
