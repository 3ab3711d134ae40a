#include "abcov/cover.hpp"
#include "abcov/error.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace abcov;

TEST_CASE("construction checks shape and reduction") {
    CHECK_THROWS_AS(CoveringMatrix(ModuliVector{10}, {{10}}), InvalidInput);
    CHECK_THROWS_AS(CoveringMatrix(ModuliVector{10}, {{-1}}), InvalidInput);
    CHECK_THROWS_AS(CoveringMatrix(ModuliVector{10, 5}, {{1}}), InvalidInput);
    const auto m = fixture::ten_five();
    CHECK(m.rows() == 2);
    CHECK(m.branch_count() == 15);
    CHECK(m.entry(0, 0) == 1);
    CHECK(m.entry(1, 14) == 1);
    CHECK(m.column_element(12).str() == "0,1");
}

TEST_CASE("validate") {
    auto r = validate(fixture::cyclic(10, 10));
    CHECK(r.valid);
    CHECK(r.totally_ramified);
    CHECK(r.group_is_full_product);

    r = validate(fixture::cyclic(10, 4));
    CHECK_FALSE(r.valid);
    REQUIRE_FALSE(r.messages.empty());
    CHECK(r.messages.front().find("column sum 4") != std::string::npos);

    r = validate(fixture::ten_five());
    CHECK(r.valid);
    CHECK(r.totally_ramified);

    SUBCASE("too few branch points") {
        CHECK_FALSE(validate(CoveringMatrix(ModuliVector{2}, {{1}, {1}})).valid);
    }
    SUBCASE("zero column") {
        const auto bad = CoveringMatrix(ModuliVector{6}, {{1}, {5}, {0}});
        CHECK_FALSE(validate(bad).valid);
        CHECK_THROWS_AS(require_valid(bad), PreconditionError);
    }
    SUBCASE("proper subgroup is reported but valid") {
        const auto m = fixture::cyclic(6, 6, 2);
        const auto rep = validate(m);
        CHECK(rep.valid);
        CHECK_FALSE(rep.group_is_full_product);
        CHECK_FALSE(rep.totally_ramified);
    }
    SUBCASE("non-unit entries are not totally ramified") {
        CHECK_FALSE(validate(fixture::cyclic(10, 10, 3)).totally_ramified);
    }
}

TEST_CASE("group order and ramification order") {
    CHECK(group_order(fixture::cyclic(10, 10)) == 10);
    CHECK(group_order(fixture::ten_five()) == 50);
    CHECK(group_order(fixture::cyclic(6, 6, 2)) == 3);
    CHECK(column_span(fixture::cyclic(6, 6, 2)).size() == 3);
    CHECK_FALSE(is_full_span(fixture::cyclic(6, 6, 2)));

    const auto m = fixture::ten_five();
    CHECK(ramification_order(m, 0) == 10);
    CHECK(ramification_order(m, 14) == 5);
    CHECK(ramification_order(fixture::cyclic(6, 6, 2), 0) == 3);
}

TEST_CASE("genus_cover") {
    CHECK(genus_cover(fixture::cyclic(10, 10)) == 36);
    CHECK(genus_cover(fixture::cyclic(6, 6)) == 10);
    CHECK(genus_cover(fixture::ten_five()) == 276);
    CHECK_THROWS_AS(genus_cover(fixture::cyclic(10, 4)), PreconditionError);
}

TEST_CASE("eigenspace_dim") {
    const auto c10 = fixture::cyclic(10, 10);
    CHECK(eigenspace_dim(c10, Character(ModuliVector{10}, {3})) == 6);
    CHECK(eigenspace_dim(c10, Character::trivial(ModuliVector{10})) == 0);
    CHECK(eigenspace_dim(fixture::ten_five(), Character(ModuliVector{10, 5}, {1, 1})) == 12);
    CHECK_THROWS_AS(eigenspace_dim(c10, Character(ModuliVector{10, 5}, {1, 1})), InvalidInput);

    SUBCASE("non-full span rejects characters that restrict trivially") {
        const auto m = fixture::cyclic(6, 6, 2);
        CHECK_THROWS_AS(eigenspace_dim(m, Character(ModuliVector{6}, {3})), PreconditionError);
        CHECK(eigenspace_dim(m, Character(ModuliVector{6}, {1})) >= 0);
    }
}

TEST_CASE("eigenspace_table") {
    const auto t = eigenspace_table(fixture::cyclic(10, 10));
    REQUIRE(t.size() == 10);
    for (std::int64_t n = 1; n < 10; ++n) CHECK(t.at(Character(ModuliVector{10}, {n})) == 9 - n);
    CHECK(t.at(Character::trivial(ModuliVector{10})) == 0);

    std::int64_t total = 0;
    for (const auto& [chi, d] : eigenspace_table(fixture::cyclic(6, 6))) {
        if (!chi.is_trivial()) CHECK(d == 5 - chi[0]);
        total += d;
    }
    CHECK(total == 10);

    total = 0;
    for (const auto& [chi, d] : eigenspace_table(fixture::ten_five())) total += d;
    CHECK(total == 276);

    CHECK_THROWS_AS(eigenspace_table(fixture::cyclic(6, 6, 2)), PreconditionError);
}

TEST_CASE("eigenform_basis") {
    const auto m = fixture::cyclic(10, 10);
    const ModuliVector mv{10};
    const auto b = eigenform_basis(m, Character(mv, {1}));
    REQUIRE(b.size() == 8);
    for (std::size_t i = 0; i < b.size(); ++i) {
        CHECK(b[i].nu == static_cast<std::int64_t>(i));
        for (auto e : b[i].floor_exponents) CHECK(e == -1);
    }
    CHECK(eigenform_basis(m, Character(mv, {9})).empty());
    CHECK_THROWS_AS(eigenform_basis(m, Character::trivial(mv)), PreconditionError);

    const auto basis = eigenform_basis(fixture::ten_five(), Character(ModuliVector{10, 5}, {1, 0}));
    REQUIRE_FALSE(basis.empty());
    CHECK(basis[0].floor_exponents[0] == -1);
    CHECK(basis[0].floor_exponents[14] == 0);
}

TEST_CASE("random valid matrices agree with the brute-force oracles") {
    std::mt19937_64 rng(20240611);
    int full = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const auto f = oracle::random_family(rng, 2, 20);
        const CoveringMatrix m(ModuliVector(f.moduli), f.cols);
        REQUIRE(validate(m).valid);
        CHECK(group_order(m) == oracle::group_order_by_duality(f.moduli, f.cols));
        CHECK(genus_cover(m) == oracle::genus_by_euler(f.moduli, f.cols));
        for (std::size_t j = 0; j < f.cols.size(); ++j)
            CHECK(ramification_order(m, j) == oracle::element_order(f.moduli, f.cols[j]));

        // genus = sum of d over the characters of the Galois group, full span or not
        std::int64_t total = 0;
        for (const auto& chi : span_characters(m)) {
            const auto d = eigenspace_dim(m, chi);
            std::vector<std::int64_t> raw(chi.components().begin(), chi.components().end());
            CHECK(d == oracle::eigen_dim(f.moduli, f.cols, raw));
            if (!chi.is_trivial()) CHECK(eigenform_basis(m, chi).size() == static_cast<std::size_t>(d));
            total += d;
        }
        CHECK(static_cast<std::int64_t>(span_characters(m).size()) == group_order(m));
        CHECK(total == genus_cover(m));
        full += is_full_span(m);
    }
    CHECK(full > 0);
}

TEST_CASE("closed forms and the duality shadow for cyclic totally ramified covers") {
    for (std::int64_t N : {4, 6, 10, 14}) {
        for (std::int64_t s = N; s <= 3 * N; s += N) {
            const auto m = fixture::cyclic(N, static_cast<std::size_t>(s));
            CHECK(genus_cover(m) == (s / 2 - 1) * (N - 1));
            const ModuliVector mv{N};
            for (std::int64_t n = 1; n < N; ++n) {
                const auto d = eigenspace_dim(m, Character(mv, {n}));
                CHECK(d * N == -N + s * (N - n));
                CHECK(d + eigenspace_dim(m, Character(mv, {N - n})) == s - 2);
            }
        }
    }
}

TEST_CASE("span_characters picks one representative per restriction") {
    const auto m = fixture::cyclic(6, 6, 2);
    const auto reps = span_characters(m);
    REQUIRE(reps.size() == 3);
    std::set<Rational> values;
    for (const auto& chi : reps) values.insert(char_pairing(chi, m.column(0)));
    CHECK(values.size() == 3);
    CHECK(reps.front().is_trivial());
}
