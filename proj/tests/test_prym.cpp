#include "abcov/enumerate.hpp"
#include "abcov/error.hpp"
#include "abcov/prym.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace abcov;

TEST_CASE("default_sigma") {
    CHECK(default_sigma(ModuliVector{10}).str() == "5");
    CHECK(default_sigma(ModuliVector{10, 5}).str() == "5,0");
    CHECK_THROWS_AS(default_sigma(ModuliVector{7}), PreconditionError);
    CHECK(is_default_sigma(Character(ModuliVector{10, 5}, {5, 0})));
    CHECK_FALSE(is_default_sigma(Character(ModuliVector{10, 6}, {5, 3})));
}

TEST_CASE("PrymDatum requires an involution in the Galois group") {
    const auto m = fixture::cyclic(10, 10);
    CHECK_THROWS_AS(PrymDatum(m, Character(ModuliVector{10}, {2})), InvalidInput);
    CHECK_THROWS_AS(PrymDatum(m, Character(ModuliVector{10}, {0})), InvalidInput);
    // span {0, 2, 4} has no element of order 2
    CHECK_THROWS_AS(PrymDatum(fixture::cyclic(6, 6, 2), Character(ModuliVector{6}, {3})), InvalidInput);
}

TEST_CASE("check_prym_datum") {
    auto dc = check_prym_datum(PrymDatum(fixture::cyclic(10, 10), Character(ModuliVector{10}, {5})));
    CHECK(dc.fixed_point_count == 10);
    CHECK(dc.kind == DoubleCoverKind::ramified_other);
    CHECK(dc.sigma_in_column_spans);

    dc = check_prym_datum(PrymDatum(fixture::ten_five(), Character(ModuliVector{10, 5}, {5, 0})));
    CHECK(dc.fixed_point_count == 50);

    SUBCASE("sigma outside the span or only in some column subgroups") {
        const CoveringMatrix m(ModuliVector{10}, {{2}, {2}, {2}, {4}});
        REQUIRE(validate(m).valid);
        CHECK_THROWS_AS(PrymDatum(m, Character(ModuliVector{10}, {5})), InvalidInput);
        const CoveringMatrix m2(ModuliVector{2, 5}, {{0, 1}, {0, 1}, {0, 3}, {1, 0}, {1, 0}});
        REQUIRE(validate(m2).valid);
        const auto d2 = check_prym_datum(PrymDatum(m2, Character(ModuliVector{2, 5}, {1, 0})));
        CHECK(d2.fixed_point_count == 10);
    }
    SUBCASE("every column subgroup contains sigma") {
        const CoveringMatrix m(ModuliVector{2}, {{1}, {1}, {1}, {1}});
        const auto d = check_prym_datum(PrymDatum(m, Character(ModuliVector{2}, {1})));
        CHECK(d.fixed_point_count == 4);
        CHECK(d.kind == DoubleCoverKind::ramified_other);
    }
}

TEST_CASE("classification from fixed points") {
    // Z/2 x Z/2 with sigma = (1, 0): only columns generating a subgroup containing sigma count
    const CoveringMatrix m(ModuliVector{2, 2}, {{0, 1}, {0, 1}, {1, 1}, {1, 1}});
    REQUIRE(validate(m).valid);
    const auto dc = check_prym_datum(PrymDatum(m, Character(ModuliVector{2, 2}, {1, 0})));
    CHECK(dc.fixed_point_count == 0);
    CHECK(dc.kind == DoubleCoverKind::unramified);
    CHECK_FALSE(dc.sigma_in_column_spans);

    const CoveringMatrix m2(ModuliVector{2, 2}, {{1, 0}, {1, 0}, {0, 1}, {0, 1}, {0, 1}, {0, 1}});
    REQUIRE(validate(m2).valid);
    const auto dc2 = check_prym_datum(PrymDatum(m2, Character(ModuliVector{2, 2}, {1, 0})));
    CHECK(dc2.fixed_point_count == 4);

    const CoveringMatrix m3(ModuliVector{2, 2}, {{1, 1}, {1, 0}, {0, 1}});
    REQUIRE(validate(m3).valid);
    const auto dc3 = check_prym_datum(PrymDatum(m3, Character(ModuliVector{2, 2}, {1, 0})));
    CHECK(dc3.fixed_point_count == 2);
    CHECK(dc3.kind == DoubleCoverKind::ramified_two);
}

TEST_CASE("quotient_genus") {
    CHECK(quotient_genus(36, 10) == 16);
    CHECK(quotient_genus(276, 50) == 126);
    CHECK(quotient_genus(2 * 7 - 1, 0) == 7);
    CHECK_THROWS_AS(quotient_genus(36, 9), ConsistencyError);
}

TEST_CASE("odd_characters") {
    auto odd = odd_characters(PrymDatum(fixture::cyclic(10, 10), Character(ModuliVector{10}, {5})));
    REQUIRE(odd.size() == 5);
    for (std::size_t i = 0; i < odd.size(); ++i) CHECK(odd[i][0] == static_cast<std::int64_t>(2 * i + 1));
    CHECK(odd_characters(PrymDatum(fixture::ten_five(), Character(ModuliVector{10, 5}, {5, 0}))).size() == 25);
    odd = odd_characters(PrymDatum(fixture::cyclic(6, 6), Character(ModuliVector{6}, {3})));
    CHECK(odd.size() == 3);

    const CoveringMatrix m(ModuliVector{2, 2}, {{1, 0}, {1, 0}, {0, 1}, {0, 1}, {1, 1}, {1, 1}});
    CHECK_THROWS_AS(odd_characters(PrymDatum(m, Character(ModuliVector{2, 2}, {1, 1}))), PreconditionError);
}

TEST_CASE("prym_profile") {
    auto p = prym_profile(PrymDatum(fixture::cyclic(10, 10), Character(ModuliVector{10}, {5})));
    CHECK(p.genus_tilde == 36);
    CHECK(p.quotient_genus == 16);
    CHECK(p.prym_dimension == 20);

    p = prym_profile(PrymDatum(fixture::ten_five(), Character(ModuliVector{10, 5}, {5, 0})));
    CHECK(p.genus_tilde == 276);
    CHECK(p.quotient_genus == 126);
    CHECK(p.prym_dimension == 150);

    p = prym_profile(PrymDatum(fixture::cyclic(6, 6), Character(ModuliVector{6}, {3})));
    CHECK(p.genus_tilde == 10);
    CHECK(p.quotient_genus == 4);
    CHECK(p.prym_dimension == 6);
}

TEST_CASE("dual computation and parity partition over small totally ramified families") {
    for (std::int64_t p : {5, 7}) {
        for (std::int64_t m : {1, 2}) {
            for (const auto& sig : enumerate_signatures(p, m, 2 * p + (m - 1) * p + 2 * p)) {
                const auto mat = to_matrix(sig);
                const PrymDatum d(mat, default_sigma(mat.moduli()));
                const auto prof = prym_profile(d);
                const auto moduli = oracle::tr_moduli(p, sig.counts.size());
                const auto cols = oracle::totally_ramified_columns(sig.counts);

                std::int64_t odd = 0, even = 0;
                for (const auto& chi : oracle::elements(moduli)) {
                    const auto dim = oracle::tr_eigen_dim(p, sig.counts, chi);
                    (chi[0] % 2 ? odd : even) += dim;
                }
                CHECK(prof.genus_tilde == oracle::genus_by_euler(moduli, cols));
                CHECK(prof.prym_dimension == odd);
                CHECK(odd + even == prof.genus_tilde);
                CHECK(even == prof.quotient_genus);

                const auto dc = check_prym_datum(d);
                const auto order = group_order(mat);
                for (std::size_t j = 0; j < mat.branch_count(); ++j)
                    if (mat.entry(0, j) != 0) CHECK(dc.fixed_point_count % (order / ramification_order(mat, j)) == 0);
            }
        }
    }
}
