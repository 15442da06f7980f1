#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/dft.hpp"
#include "helpers.hpp"

using namespace nieptk;
using testutil::close;
using testutil::close_vec;

TEST_CASE("root powers hit the axes exactly") {
    CHECK(root_power(4, 0) == cplx(1.0, 0.0));
    CHECK(root_power(4, 1) == cplx(0.0, 1.0));
    CHECK(root_power(4, 2) == cplx(-1.0, 0.0));
    CHECK(root_power(4, 3) == cplx(0.0, -1.0));
    CHECK(root_power(4, -1) == cplx(0.0, -1.0));  // exponent reduced mod order
    CHECK(root_power(4, 7) == cplx(0.0, -1.0));
    CHECK(root_power(8, 2) == cplx(0.0, 1.0));
    CHECK(root_power(1, 5) == cplx(1.0, 0.0));
}

TEST_CASE("primitive root is on the unit circle with the right argument") {
    for (std::size_t m = 1; m <= 12; ++m) {
        cplx w = primitive_root(m);
        CHECK(std::abs(std::abs(w) - 1.0) < 1e-15);
        // w^m = 1
        cplx p = 1.0;
        for (std::size_t i = 0; i < m; ++i) p *= w;
        CHECK(close(p, cplx(1.0, 0.0), 1e-12));
    }
}

TEST_CASE("fourier matrix is unitary for every order up to 12") {
    for (std::size_t m = 1; m <= 12; ++m) {
        CMat f = fourier_matrix(m);
        // F F^* = I
        CMat fh(m, CVec(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) fh[i][j] = std::conj(f[j][i]);
        CMat prod = matmul(f, fh);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                CHECK(close(prod[i][j], i == j ? cplx(1.0, 0.0) : cplx(0.0, 0.0), 1e-12));
    }
}

TEST_CASE("harmonic vector matches the root powers") {
    for (std::size_t m = 1; m <= 8; ++m)
        for (std::size_t k = 0; k < m; ++k) {
            CVec e = harmonic_vector(k, m);
            REQUIRE(e.size() == m);
            for (std::size_t l = 0; l < m; ++l)
                CHECK(close(e[l], root_power(m, static_cast<long long>(k * l)), 1e-14));
        }
}

TEST_CASE("shift-row spectrum is the roots of unity") {
    CVec row{0.0, 1.0, 0.0, 0.0};
    CVec eigs = dft_eigenvalues(row);
    CVec want{cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};
    CHECK(close_vec(eigs, want, 1e-12));
}

TEST_CASE("two-point example: (1/2, 7/2) maps to (4, -3)") {
    CVec eigs = dft_eigenvalues({0.5, 3.5});
    CHECK(close(eigs[0], cplx(4.0, 0.0), 1e-12));
    CHECK(close(eigs[1], cplx(-3.0, 0.0), 1e-12));
    CVec back = idft_coefficients({cplx(4, 0), cplx(-3, 0)});
    CHECK(close_vec(back, {0.5, 3.5}, 1e-12));
}

TEST_CASE("single entry is its own spectrum") {
    CVec eigs = dft_eigenvalues({cplx(2.5, -1.0)});
    REQUIRE(eigs.size() == 1);
    CHECK(close(eigs[0], cplx(2.5, -1.0), 1e-15));
}

TEST_CASE("dft and idft are inverse on random rows, all sizes to 12") {
    for (std::size_t m = 1; m <= 12; ++m)
        for (int rep = 0; rep < 5; ++rep) {
            CVec row(m);
            for (auto& v : row) v = cplx(testutil::uniform(-3, 3), testutil::uniform(-3, 3));
            CHECK(close_vec(idft_coefficients(dft_eigenvalues(row)), row, 1e-10));
            CHECK(close_vec(dft_eigenvalues(idft_coefficients(row)), row, 1e-10));
        }
}

TEST_CASE("dft is linear") {
    CVec a{1.0, cplx(0, 2), -3.0}, b{cplx(2, 1), 0.5, 1.0};
    CVec sum(3);
    for (int i = 0; i < 3; ++i) sum[i] = a[i] + 2.0 * b[i];
    CVec lhs = dft_eigenvalues(sum);
    CVec da = dft_eigenvalues(a), db = dft_eigenvalues(b);
    for (int i = 0; i < 3; ++i) CHECK(close(lhs[i], da[i] + 2.0 * db[i], 1e-12));
}

TEST_CASE("real rows give conjugation-symmetric spectra") {
    for (std::size_t m = 2; m <= 9; ++m) {
        CVec row(m);
        for (auto& v : row) v = testutil::uniform(0, 3);
        CVec eigs = dft_eigenvalues(row);
        CHECK(std::abs(eigs[0].imag()) < 1e-12);
        for (std::size_t k = 1; k < m; ++k) CHECK(close(eigs[m - k], std::conj(eigs[k]), 1e-10));
    }
}
