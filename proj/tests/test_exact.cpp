#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/exact.hpp"
#include "helpers.hpp"

using namespace nieptk;
using namespace nieptk::exact;

TEST_CASE("rational parsing") {
    CHECK(*parse_rational("7/2") == Rat(7, 2));
    CHECK(*parse_rational("-3") == Rat(-3));
    CHECK(*parse_rational("0.5") == Rat(1, 2));
    CHECK(*parse_rational("-0.25") == Rat(-1, 4));
    CHECK(*parse_rational("1.75") == Rat(7, 4));
    CHECK_FALSE(parse_rational("abc").has_value());
    CHECK(to_string(Rat(7, 2)) == "7/2");
    CHECK(to_string(Rat(-3)) == "-3");
}

TEST_CASE("cyclotomic field basics") {
    auto f4 = make_field(4);
    CHECK(f4->degree() == 2);  // phi(4) = 2, minimal polynomial x^2 + 1
    Cyclo i = Cyclo::root_power(f4, 1);
    Cyclo minus_one = i * i;
    CHECK(minus_one.is_rational());
    CHECK(minus_one.rational() == Rat(-1));
    CHECK(testutil::close(i.to_complex(), cplx(0, 1), 1e-15));
    // conjugation: zeta -> zeta^{-1}
    Cyclo c = i.conj();
    CHECK(testutil::close(c.to_complex(), cplx(0, -1), 1e-15));
    CHECK((i * c).rational() == Rat(1));
}

TEST_CASE("third roots of unity sum to zero") {
    auto f3 = make_field(3);
    Cyclo sum = Cyclo(f3, Rat(1)) + Cyclo::root_power(f3, 1) + Cyclo::root_power(f3, 2);
    CHECK(sum.is_rational());
    CHECK(sum.rational() == Rat(0));
}

TEST_CASE("power table wraps around") {
    for (std::size_t m : {2u, 3u, 4u, 6u, 8u, 12u}) {
        auto f = make_field(m);
        for (long long e = 0; e < static_cast<long long>(m); ++e) {
            Cyclo z = Cyclo::root_power(f, e);
            CHECK(Cyclo::root_power(f, e + static_cast<long long>(m)) == z);
            CHECK(testutil::close(z.to_complex(),
                                  std::polar(1.0, 2 * M_PI * double(e) / double(m)), 1e-12));
        }
    }
}

TEST_CASE("exact inverse transform of (4, -3) is (1/2, 7/2)") {
    auto f2 = make_field(2);
    CycloVec spec{Cyclo(f2, Rat(4)), Cyclo(f2, Rat(-3))};
    CycloVec row = idft_coefficients(f2, spec);
    REQUIRE(row.size() == 2);
    CHECK(row[0].rational() == Rat(1, 2));
    CHECK(row[1].rational() == Rat(7, 2));
}

TEST_CASE("exact forward and inverse transforms are inverse on rationals") {
    for (std::size_t m : {2u, 3u, 4u, 5u, 6u}) {
        auto f = make_field(m);
        std::vector<Rat> row;
        for (std::size_t i = 0; i < m; ++i) {
            Rat v(static_cast<long>(i * 7 % 5) - 2, 3);
            v.canonicalize();
            row.push_back(v);
        }
        CycloVec back = idft_coefficients(f, dft_eigenvalues(f, row));
        for (std::size_t i = 0; i < m; ++i) {
            CHECK(back[i].is_rational());
            CHECK(back[i].rational() == row[i]);
        }
    }
}

TEST_CASE("exact block assembly reproduces the worked example exactly") {
    auto f3 = make_field(3);
    std::vector<std::vector<std::vector<Rat>>> s(3);
    s[0] = {{Rat(1, 2), Rat(7, 2)}, {Rat(7, 2), Rat(1, 2)}};
    s[1] = {{Rat(1, 2), Rat(-1)}, {Rat(1), Rat(1, 2)}};
    s[2] = s[1];
    auto blocks = assemble(f3, s);
    auto rat = [](const Cyclo& v) {
        REQUIRE(v.is_rational());
        return v.rational();
    };
    CHECK(rat(blocks[0][0][0]) == Rat(1, 2));
    CHECK(rat(blocks[0][0][1]) == Rat(0));
    CHECK(rat(blocks[0][0][2]) == Rat(0));
    CHECK(rat(blocks[0][1][0]) == Rat(1, 2));
    CHECK(rat(blocks[0][1][1]) == Rat(3, 2));
    CHECK(rat(blocks[0][1][2]) == Rat(3, 2));
    CHECK(rat(blocks[1][0][0]) == Rat(11, 6));
    CHECK(rat(blocks[1][0][1]) == Rat(5, 6));
    CHECK(rat(blocks[1][0][2]) == Rat(5, 6));
    CHECK(rat(blocks[1][1][0]) == Rat(1, 2));
    CHECK(rat(blocks[1][1][1]) == Rat(0));
    CHECK(rat(blocks[1][1][2]) == Rat(0));
}

TEST_CASE("exact and floating L matrices agree") {
    auto f4 = make_field(4);
    std::vector<std::vector<std::vector<Rat>>> s(4);
    for (std::size_t k = 0; k < 4; ++k)
        s[k] = {{Rat(static_cast<long>(k) + 1), Rat(1, static_cast<long>(k) + 2)},
                {Rat(-1, 3), Rat(static_cast<long>(k))}};
    // make the family consistent with real blocks: S_{m-l} = conj(S_l) = S_l
    s[3] = s[1];
    auto l = l_matrices(f4, s);
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                cplx approx = l[k][i][j].to_complex();
                CHECK(std::abs(approx.imag()) < 1e-12);
            }
}
