#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace homcob;

namespace {

bool is_identity_abs_det(const IntMatrix& m) { return abs(det(m)) == 1; }

void check_snf(const IntMatrix& a) {
    SmithNormalForm s = smith_normal_form(a);
    REQUIRE(s.u * a * s.v == s.d);
    REQUIRE(is_identity_abs_det(s.u));
    REQUIRE(is_identity_abs_det(s.v));

    const std::size_t n = std::min(a.rows(), a.cols());
    std::vector<Int> diag;
    for (std::size_t i = 0; i < n; ++i) diag.push_back(s.d(i, i));
    for (std::size_t i = 0; i < s.d.rows(); ++i)
        for (std::size_t j = 0; j < s.d.cols(); ++j)
            if (i != j) REQUIRE(s.d(i, j) == 0);
    for (std::size_t i = 0; i < n; ++i) {
        REQUIRE(diag[i] >= 0);
        if (i + 1 < n) {
            if (diag[i] == 0) REQUIRE(diag[i + 1] == 0);
            else REQUIRE(diag[i + 1] % diag[i] == 0);
        }
    }
    std::vector<Int> expected = oracles::invariant_factors_by_minors(a);
    std::vector<Int> nonzero;
    for (const Int& v : diag)
        if (v != 0) nonzero.push_back(v);
    REQUIRE(nonzero == expected);
}

} // namespace

TEST_CASE("smith normal form on random matrices") {
    std::mt19937 rng(Catch::rngSeed());
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int iter = 0; iter < 1000; ++iter)
        check_snf(oracles::random_matrix(rng, dim(rng), dim(rng), -9, 9));
}

TEST_CASE("smith normal form frozen examples") {
    IntMatrix a{{2, 4}, {6, 8}};
    SmithNormalForm s = smith_normal_form(a);
    REQUIRE(s.d(0, 0) == 2);
    REQUIRE(s.d(1, 1) == 4);

    IntMatrix zero(3, 2);
    SmithNormalForm z = smith_normal_form(zero);
    REQUIRE(z.d == zero);

    IntMatrix empty(0, 0);
    REQUIRE(smith_normal_form(empty).d == empty);

    // Regression: this shape once drove the elimination into runaway entry
    // growth. It must finish instantly with the diagonal below.
    IntMatrix blowup{{0, 0, 0, 5, 0, 0, 0, 0, 1},  {0, 0, 0, 0, 9, 0, 0, 0, 2},
                     {0, 0, 0, 0, 0, 7, 0, 0, -2}, {0, 0, 0, 0, 0, 0, 11, 0, -9},
                     {0, 0, 0, 0, 0, 0, 0, 9, 8},  {0, 0, 0, 0, 0, 0, 0, 0, 2},
                     {2, 2, 2, 1, 1, 1, 1, 1, 0}};
    check_snf(blowup);
    SmithNormalForm b = smith_normal_form(blowup);
    REQUIRE(b.d(5, 5) == 18);
    REQUIRE(b.d(6, 6) == 6930);
}

TEST_CASE("bareiss determinant matches cofactor expansion") {
    std::mt19937 rng(Catch::rngSeed());
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int iter = 0; iter < 300; ++iter) {
        std::size_t n = dim(rng);
        IntMatrix a = oracles::random_matrix(rng, n, n, -9, 9);
        REQUIRE(det(a) == oracles::cofactor_det(a));
    }
}

TEST_CASE("cokernel is invariant under unimodular row and column operations") {
    std::mt19937 rng(Catch::rngSeed());
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t rows = dim(rng), cols = dim(rng);
        IntMatrix a = oracles::random_matrix(rng, rows, cols, -6, 6);
        IntMatrix u = oracles::random_unimodular(rng, rows);
        IntMatrix v = oracles::random_unimodular(rng, cols);
        Cokernel c1 = cokernel(a);
        Cokernel c2 = cokernel(u * a * v);
        REQUIRE(c1.group.rank == c2.group.rank);
        REQUIRE(c1.group.torsion == c2.group.torsion);
    }
}

TEST_CASE("cokernel generator map respects the relations") {
    // each relation row must map to zero in the quotient
    std::mt19937 rng(Catch::rngSeed());
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int iter = 0; iter < 200; ++iter) {
        IntMatrix a = oracles::random_matrix(rng, dim(rng), dim(rng), -6, 6);
        Cokernel c = cokernel(a);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            AbelianElement acc = c.group.zero();
            for (std::size_t j = 0; j < a.cols(); ++j)
                acc = c.group.add(acc, c.group.scale(a(r, j), c.group.gen_map[j]));
            REQUIRE(acc == c.group.zero());
        }
    }
}

TEST_CASE("rational inverse multiplies to the identity") {
    std::mt19937 rng(Catch::rngSeed());
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    int found = 0;
    while (found < 100) {
        std::size_t n = dim(rng);
        IntMatrix a = oracles::random_matrix(rng, n, n, -9, 9);
        if (det(a) == 0) continue;
        ++found;
        RatMatrix inv = rational_inverse(a);
        RatMatrix prod = inv * to_rational(a);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                REQUIRE(prod(i, j) == (i == j ? Rat(1) : Rat(0)));
    }
    IntMatrix sing{{1, 2}, {2, 4}};
    REQUIRE_THROWS_AS(rational_inverse(sing), SingularMatrix);
}

TEST_CASE("abelian group formatting and element orders") {
    Cokernel c = cokernel(IntMatrix{{2, 0}, {0, 0}});
    REQUIRE(c.group.to_string() == "Z + Z/2");
    Cokernel t = cokernel(IntMatrix{{12, 0}, {0, 18}});
    REQUIRE(t.group.torsion == std::vector<Int>{6, 36});
    REQUIRE(canonical_torsion_chain({12, 18}) == std::vector<Int>{6, 36});
    REQUIRE(canonical_torsion_chain({1, 1}) == std::vector<Int>{});
}
