#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/structure.hpp"
#include "helpers.hpp"

using namespace nieptk;

namespace {

SFamily family_of(std::vector<CMat> mats, std::size_t n, std::size_t m) {
    SFamily s;
    s.n = n;
    s.m = m;
    s.s = std::move(mats);
    return s;
}

CMat random_symmetric(std::size_t n) {
    CMat m = testutil::random_real_matrix(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) m[j][i] = m[i][j];
    return m;
}

CMat random_circulant(std::size_t n) {
    CVec row(n);
    for (auto& v : row) v = testutil::uniform(-2, 2);
    return Circulant{row}.materialize();
}

}  // namespace

TEST_CASE("a single circulant matrix is permutative with the cyclic-shift tuple") {
    CMat c = Circulant{{1.0, 2.0, 3.0}}.materialize();
    auto tuple = permutative_equivalence({c}, 1e-10);
    REQUIRE(tuple.has_value());
    REQUIRE(tuple->size() == 3);
    CHECK((*tuple)[0] == std::vector<std::size_t>{0, 1, 2});
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(testutil::close(c[i][j], c[0][(*tuple)[i][j]], 1e-12));
}

TEST_CASE("permutative equivalence needs one common tuple across all matrices") {
    CMat a{{1.0, 2.0}, {2.0, 1.0}};  // swap tuple works
    CMat b{{3.0, 4.0}, {4.0, 3.0}};  // same swap
    CHECK(permutative_equivalence({a, b}, 1e-10).has_value());
    CMat c{{3.0, 4.0}, {3.0, 4.0}};  // needs identity, conflicts with the swap
    // a forces the swap, c forces identity (4 != 3): no common tuple
    CHECK_FALSE(permutative_equivalence({a, c}, 1e-10).has_value());
}

TEST_CASE("diagonal factors give a block-diagonal matrix") {
    CMat d0 = zeros(2, 2), d1 = zeros(2, 2);
    d0[0][0] = 1;
    d0[1][1] = 2;
    d1[0][0] = 3;
    d1[1][1] = -1;
    SFamily s = family_of({d0, d1}, 2, 2);
    StructureReport rep = classify_family(s, 1e-10);
    CHECK(rep.diagonal);
    CirculantBlockMatrix a = assemble(s);
    StructureReport drep = detect_block_structure(a, 1e-10);
    CHECK(drep.diagonal);
    // off-diagonal blocks vanish
    for (const cplx& v : a.blocks[0][1]) CHECK(std::abs(v) < 1e-12);
}

TEST_CASE("circulant factors iff block-circulant layout") {
    for (int rep = 0; rep < 30; ++rep) {
        std::size_t n = 2 + static_cast<std::size_t>(testutil::uniform(0, 2.99));
        std::size_t m = 1 + static_cast<std::size_t>(testutil::uniform(0, 2.99));
        std::vector<CMat> mats;
        for (std::size_t k = 0; k < m; ++k) mats.push_back(random_circulant(n));
        SFamily s = family_of(mats, n, m);
        CHECK(classify_family(s, 1e-9).circulant);
        CirculantBlockMatrix a = assemble(s);
        CHECK(detect_block_structure(a, 1e-9).circulant);
        // a single-entry perturbation destroys the structure (n >= 2)
        a.blocks[1][0][0] += 0.37;
        StructureReport broken = detect_block_structure(a, 1e-9);
        CHECK_FALSE(broken.circulant);
        CHECK_FALSE(classify_family(s_matrices(a), 1e-9).circulant);
    }
}

TEST_CASE("symmetric real factors iff symmetric assembled matrix") {
    for (int rep = 0; rep < 30; ++rep) {
        std::size_t n = 2 + static_cast<std::size_t>(testutil::uniform(0, 2.99));
        std::size_t m = 1 + static_cast<std::size_t>(testutil::uniform(0, 2.99));
        // S_l real symmetric with S_{m-l} = S_l so the blocks stay real
        std::vector<CMat> mats(m);
        for (std::size_t k = 0; k + k <= m; ++k) {
            if (k >= m) break;
            mats[k] = random_symmetric(n);
            if (k > 0 && m - k < m) mats[m - k] = mats[k];
        }
        SFamily s = family_of(mats, n, m);
        CHECK(classify_family(s, 1e-9).symmetric_real);
        CirculantBlockMatrix a = assemble(s);
        CHECK(detect_block_structure(a, 1e-9).symmetric_real);
        CMat full = a.materialize();
        for (std::size_t i = 0; i < full.size(); ++i)
            for (std::size_t j = 0; j < full.size(); ++j)
                CHECK(testutil::close(full[i][j], full[j][i], 1e-9));
        a.blocks[0][n - 1][0] += 0.37;
        CHECK_FALSE(detect_block_structure(a, 1e-9).symmetric_real);
    }
}

TEST_CASE("permutatively equivalent factors iff block-permutative matrix") {
    for (int rep = 0; rep < 30; ++rep) {
        std::size_t n = 3, m = 2;
        // one tuple, two matrices following it
        std::vector<std::vector<std::size_t>> tuple{{0, 1, 2}, {2, 0, 1}, {1, 2, 0}};
        std::vector<CMat> mats;
        for (std::size_t k = 0; k < m; ++k) {
            CVec row(n);
            for (auto& v : row) v = testutil::uniform(-2, 2);
            CMat mat(n, CVec(n));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) mat[i][j] = row[tuple[i][j]];
            mats.push_back(mat);
        }
        SFamily s = family_of(mats, n, m);
        StructureReport rep1 = classify_family(s, 1e-9);
        REQUIRE(rep1.permutatively_equivalent.has_value());
        CirculantBlockMatrix a = assemble(s);
        StructureReport rep2 = detect_block_structure(a, 1e-9);
        CHECK(rep2.permutatively_equivalent.has_value());
    }
}

TEST_CASE("classification agrees between factor view and block view") {
    for (int rep = 0; rep < 40; ++rep) {
        std::size_t n = 2 + static_cast<std::size_t>(testutil::uniform(0, 1.99));
        std::size_t m = 1 + static_cast<std::size_t>(testutil::uniform(0, 2.99));
        CirculantBlockMatrix a;
        a.n = n;
        a.m = m;
        a.blocks.assign(n, std::vector<CVec>(n, CVec(m)));
        for (auto& row : a.blocks)
            for (auto& blk : row)
                for (auto& v : blk) v = testutil::uniform(-1, 1);
        StructureReport from_factors = classify_family(s_matrices(a), 1e-8);
        StructureReport from_blocks = detect_block_structure(a, 1e-8);
        CHECK(from_factors.circulant == from_blocks.circulant);
        CHECK(from_factors.symmetric_real == from_blocks.symmetric_real);
        CHECK(from_factors.permutatively_equivalent.has_value() ==
              from_blocks.permutatively_equivalent.has_value());
    }
}
