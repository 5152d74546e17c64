#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace homcob;

namespace {

FreeWord random_word(std::mt19937& rng, int n_gens, int len) {
    std::uniform_int_distribution<int> gen(1, n_gens);
    std::uniform_int_distribution<int> exp(-2, 2);
    FreeWord w;
    for (int i = 0; i < len; ++i) {
        int e = exp(rng);
        if (e != 0) w.append(gen(rng), e);
    }
    return w;
}

} // namespace

TEST_CASE("free words reduce, invert and parse") {
    FreeWord w = FreeWord::parse("x1 x2^-1 x3^2");
    REQUIRE(w.to_string() == "x1 x2^-1 x3^2");
    REQUIRE(w.inverse().to_string() == "x3^-2 x2 x1^-1");
    REQUIRE((w * w.inverse()).reduced().empty());
    REQUIRE(FreeWord::parse("1").empty());
    REQUIRE(FreeWord::parse("x1 x1^-1").reduced().empty());
    REQUIRE(commutator(FreeWord::generator(1), FreeWord::generator(2)).to_string() ==
            "x1 x2 x1^-1 x2^-1");
    REQUIRE(FreeWord::parse("x2^3").exponent_sum(2) == 3);
    REQUIRE_THROWS_AS(FreeWord::parse("x0"), ParseError);
    REQUIRE_THROWS_AS(FreeWord::parse("y1"), ParseError);
    try {
        FreeWord::parse("x1 q");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        REQUIRE(e.pos == 3);
    }
}

TEST_CASE("expansion of single generators") {
    TruncatedSeries s = magnus_expansion(FreeWord::generator(1), 3, 2);
    REQUIRE(s.coefficient({}) == 1);
    REQUIRE(s.coefficient({1}) == 1);
    REQUIRE(s.coefficient({2}) == 0);
    REQUIRE(s.coefficient({1, 1}) == 0);

    // 1/(1+X) = 1 - X + X^2 - ...
    TruncatedSeries inv = magnus_expansion(FreeWord::generator(1, -1), 3, 1);
    REQUIRE(inv.coefficient({1}) == -1);
    REQUIRE(inv.coefficient({1, 1}) == 1);
    REQUIRE(inv.coefficient({1, 1, 1}) == -1);

    TruncatedSeries cube = magnus_expansion(FreeWord::generator(1, 3), 3, 1);
    REQUIRE(cube.coefficient({1}) == 3);
    REQUIRE(cube.coefficient({1, 1}) == 3);
    REQUIRE(cube.coefficient({1, 1, 1}) == 1);

    REQUIRE(magnus_expansion(FreeWord::parse("x1 x1^-1"), 4, 1) == TruncatedSeries::one(1, 4));
}

TEST_CASE("commutator expansion starts in degree two") {
    FreeWord c = commutator(FreeWord::generator(1), FreeWord::generator(2));
    TruncatedSeries s = magnus_expansion(c, 2, 2);
    REQUIRE(s.coefficient({}) == 1);
    REQUIRE(s.coefficient({1}) == 0);
    REQUIRE(s.coefficient({2}) == 0);
    REQUIRE(s.coefficient({1, 2}) == 1);
    REQUIRE(s.coefficient({2, 1}) == -1);
    REQUIRE(s.coefficient({1, 1}) == 0);
}

TEST_CASE("expansion is a homomorphism") {
    std::mt19937 rng(Catch::rngSeed());
    for (int iter = 0; iter < 60; ++iter) {
        FreeWord a = random_word(rng, 3, 4);
        FreeWord b = random_word(rng, 3, 4);
        REQUIRE(magnus_expansion(a * b, 4, 3) ==
                magnus_expansion(a, 4, 3) * magnus_expansion(b, 4, 3));
        REQUIRE(magnus_expansion(a, 4, 3) * magnus_expansion(a.inverse(), 4, 3) ==
                TruncatedSeries::one(3, 4));
        REQUIRE(magnus_expansion(a, 4, 3) == magnus_expansion(a.reduced(), 4, 3));
    }
}

TEST_CASE("mu values on the catalog") {
    REQUIRE(mu(borromean().longitudes, {1, 2, 3}) == 1);
    REQUIRE(abs(mu_bar(borromean().longitudes, {1, 2, 3}).value) == 1);
    REQUIRE(abs(mu_bar(whitehead().longitudes, {1, 1, 2, 2}).value) == 1);
    for (long long k = 1; k <= 5; ++k) {
        MuBar m = mu_bar(cabled_borromean(k).longitudes, {1, 2, 3});
        REQUIRE(m.modulus == 0);
        REQUIRE(abs(m.value) == k);
    }
}

TEST_CASE("mu is cyclically invariant and antisymmetric in length three") {
    std::vector<FreeWord> l = borromean().longitudes;
    Int v = mu(l, {1, 2, 3});
    REQUIRE(mu(l, {2, 3, 1}) == v);
    REQUIRE(mu(l, {3, 1, 2}) == v);
    REQUIRE(mu(l, {2, 1, 3}) == -v);
    REQUIRE(mu(l, {1, 3, 2}) == -v);
    REQUIRE(mu(l, {3, 2, 1}) == -v);
}

TEST_CASE("indeterminacy follows the linking numbers") {
    // two components with linking number two in both directions
    LinkCatalogEntry e = make_link("hand", IntMatrix{{0, 2}, {2, 0}},
                                   {FreeWord::parse("x2^2"), FreeWord::parse("x1^2")});
    MuBar m = mu_bar(e.longitudes, {1, 1, 2});
    REQUIRE(m.modulus == 2);
    REQUIRE(m.value == 1);

    // linking numbers equal exponent sums equal mu of length two
    REQUIRE(mu(e.longitudes, {1, 2}) == 2);
    REQUIRE(mu(e.longitudes, {2, 1}) == 2);
}

TEST_CASE("milnor degree of the nested bracket family") {
    for (int d = 3; d <= 5; ++d) {
        MilnorDegree deg = milnor_degree(link_family_L(d).longitudes, d + 1);
        REQUIRE(deg == MilnorDegree::exactly(d));
    }
    REQUIRE(milnor_degree(unlink(3).longitudes, 5) == MilnorDegree::at_least(6));
    REQUIRE(milnor_degree(borromean().longitudes, 6) == MilnorDegree::exactly(3));
    REQUIRE(milnor_degree(whitehead().longitudes, 6) == MilnorDegree::exactly(4));
}

TEST_CASE("multi index parsing") {
    REQUIRE(parse_multi_index("123") == std::vector<int>{1, 2, 3});
    REQUIRE(parse_multi_index("1,2,3") == std::vector<int>{1, 2, 3});
    REQUIRE(parse_multi_index("10,2") == std::vector<int>{10, 2});
    REQUIRE_THROWS_AS(parse_multi_index("1"), ParseError);
    REQUIRE_THROWS_AS(parse_multi_index(""), ParseError);
    REQUIRE_THROWS_AS(parse_multi_index("1,,2"), ParseError);
    REQUIRE_THROWS_AS(parse_multi_index("0,1"), ParseError);
}

TEST_CASE("mu validates the index against the link") {
    REQUIRE_THROWS_AS(mu(borromean().longitudes, {1, 2, 4}), IndexOutOfRange);
    REQUIRE_THROWS_AS(mu(borromean().longitudes, {1}), BadParameter);
}

TEST_CASE("degree combination rules") {
    auto ex = MilnorDegree::exactly(3);
    auto ex5 = MilnorDegree::exactly(5);
    auto al = MilnorDegree::at_least(7);
    auto al4 = MilnorDegree::at_least(4);
    auto inf = MilnorDegree::infinite();
    REQUIRE(combine_degrees(ex, ex5) == ex);
    REQUIRE(combine_degrees(ex, inf) == ex);
    REQUIRE(combine_degrees(inf, inf) == inf);
    REQUIRE(combine_degrees(ex, al) == ex);
    REQUIRE(combine_degrees(ex5, al4) == MilnorDegree::at_least(4));
    REQUIRE(combine_degrees(al, al4) == MilnorDegree::at_least(4));
    REQUIRE(combine_degrees(al, inf) == al);
}
