#include "abcov/certify.hpp"
#include "abcov/enumerate.hpp"
#include "abcov/error.hpp"

#include "fixtures.hpp"

#include <doctest.h>

using namespace abcov;

namespace {

ObstructionCertificate certify_counts(std::int64_t p, const std::vector<std::int64_t>& counts) {
    const auto m = totally_ramified_matrix(p, counts);
    return certify_family(PrymDatum(m, default_sigma(m.moduli())));
}

}  // namespace

TEST_CASE("certificate for p = 5, s = 10") {
    const auto c = certify_counts(5, {10});
    CHECK(c.verdict == Verdict::obstructed);
    REQUIRE(c.steps.size() == 6);
    CHECK(c.step("S1").status == StepStatus::passed);
    CHECK(c.step("S2").status == StepStatus::passed);
    CHECK(c.step("S2").inputs.at("witness") == "1");
    CHECK(c.step("S2").computed == Rational(8));
    CHECK(c.step("S3").computed == Rational(12));
    CHECK(c.step("S4").status == StepStatus::assumed);
    CHECK(c.step("S5").status == StepStatus::assumed);
    CHECK(c.step("S6").inputs.at("genus") == 36);
    CHECK(c.step("S6").inputs.at("prym_dim") == 20);
    CHECK(c.step("S6").status == StepStatus::passed);
    CHECK(c.step("S3").inputs.at("closed_form_cross_check").at("relied_upon") == false);
    CHECK_THROWS_AS(c.step("S9"), PreconditionError);
}

TEST_CASE("certificate for p = 5, counts (10, 5)") {
    const auto c = certify_counts(5, {10, 5});
    CHECK(c.verdict == Verdict::obstructed);
    CHECK(c.step("S2").inputs.at("witness") == "1,1");
    CHECK(c.step("S3").computed == Rational(64));
    CHECK(c.step("S6").inputs.at("genus") == 276);
    CHECK(c.step("S6").inputs.at("prym_dim") == 150);
}

TEST_CASE("small primes are not applicable") {
    const auto c = certify_counts(3, {6});
    CHECK(c.verdict == Verdict::not_applicable);
    CHECK(c.step("S1").status == StepStatus::failed);
    REQUIRE(c.profile);
    CHECK(c.profile->prym_dimension == 6);
    CHECK(c.step("S6").status == StepStatus::failed);
    CHECK(verify_certificate(to_json(c)).ok);
}

TEST_CASE("certificates outside the supported shape contain S1 only") {
    const auto m = fixture::cyclic(6, 6, 2);
    REQUIRE(validate(m).valid);
    const CoveringMatrix m2(ModuliVector{2, 2}, {{1, 0}, {1, 0}, {0, 1}, {0, 1}, {1, 1}, {1, 1}});
    const auto c = certify_family(PrymDatum(m2, Character(ModuliVector{2, 2}, {1, 1})));
    CHECK(c.steps.size() == 1);
    CHECK(c.verdict == Verdict::not_applicable);
    CHECK_FALSE(c.profile);
    const auto j = to_json(c);
    CHECK(j.at("profile").is_null());
    CHECK(verify_certificate(j).ok);
}

TEST_CASE("invalid matrices are rejected") {
    const CoveringMatrix bad(ModuliVector{10}, {{1}, {1}, {1}, {7}, {5}});
    REQUIRE_FALSE(validate(bad).valid);
    // sigma = 5 lies in the span, so the datum builds; certification must refuse
    CHECK_THROWS_AS(certify_family(PrymDatum(bad, Character(ModuliVector{10}, {5}))), PreconditionError);
}

TEST_CASE("verify_certificate detects tampering") {
    const auto good = to_json(certify_counts(5, {10}));
    CHECK(verify_certificate(good).ok);

    auto j = good;
    j["steps"][2]["computed"] = 13;
    CHECK_FALSE(verify_certificate(j).ok);

    j = good;
    j["steps"][5]["inputs"]["prym_dim"] = 7;
    CHECK_FALSE(verify_certificate(j).ok);

    j = good;
    j["verdict"] = "inconclusive";
    CHECK_FALSE(verify_certificate(j).ok);

    j = good;
    j["steps"][3]["passed"] = true;
    CHECK_FALSE(verify_certificate(j).ok);

    j = good;
    j["steps"][2]["inputs"]["bounds"]["1"] = -1;
    CHECK_FALSE(verify_certificate(j).ok);

    j = good;
    j.erase("steps");
    const auto check = verify_certificate(j);
    CHECK_FALSE(check.ok);
    CHECK_FALSE(check.problems.empty());
}

TEST_CASE("soundness, monotonicity and determinism over small families") {
    for (std::int64_t p : {5, 7}) {
        for (std::int64_t m : {1, 2}) {
            for (const auto& sig : enumerate_signatures(p, m, 6 * p)) {
                const auto c = certify_counts(p, sig.counts);
                const auto j = to_json(c);
                CHECK(verify_certificate(j).ok);
                CHECK(to_json(certify_counts(p, sig.counts)).dump() == j.dump());
                if (c.verdict != Verdict::obstructed) continue;

                CHECK(j["steps"][2]["computed"].get<std::int64_t>() >= kFlatRankThreshold);
                CHECK(j["steps"][5]["inputs"]["prym_dim"].get<std::int64_t>() >= kPrymThreshold);

                // growing any row by one valid step keeps the family obstructed
                for (std::size_t k = 0; k < sig.counts.size(); ++k) {
                    auto grown = sig.counts;
                    grown[k] += k == 0 ? 2 * p : p;
                    CHECK(certify_counts(p, grown).verdict == Verdict::obstructed);
                }
            }
        }
    }
}

TEST_CASE("closed_form_report") {
    auto r = closed_form_report(5, 10);
    CHECK(r.match);
    CHECK(r.general_genus == 36);
    for (std::int64_t n = 1; n < 10; ++n) CHECK(r.closed_dims[n] == 9 - n);

    r = closed_form_report(7, 14);
    CHECK(r.match);
    CHECK(r.closed_genus == 78);

    CHECK_THROWS_AS(closed_form_report(5, 7), PreconditionError);
    CHECK_THROWS_AS(closed_form_report(4, 8), PreconditionError);
}
