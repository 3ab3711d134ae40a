#include "abcov/certify.hpp"

#include "abcov/error.hpp"
#include "abcov/higgs.hpp"
#include "abcov/io.hpp"

#include <algorithm>

namespace abcov {

std::string_view to_string(StepStatus s) {
    switch (s) {
        case StepStatus::passed: return "passed";
        case StepStatus::failed: return "failed";
        case StepStatus::assumed: return "assumed";
    }
    return "?";
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::obstructed: return "obstructed";
        case Verdict::inconclusive: return "inconclusive";
        case Verdict::not_applicable: return "not_applicable";
    }
    return "?";
}

const CertificateStep& ObstructionCertificate::step(std::string_view id) const {
    for (const auto& s : steps)
        if (s.id == id) return s;
    throw PreconditionError("certificate has no step " + std::string(id));
}

namespace {

StepStatus status_of(bool ok) { return ok ? StepStatus::passed : StepStatus::failed; }

// p if the moduli are (2p, p, ..., p), else 0.
std::int64_t shape_prime(const ModuliVector& moduli) {
    if (moduli[0] % 2 != 0) return 0;
    const std::int64_t p = moduli[0] / 2;
    for (std::size_t k = 1; k < moduli.size(); ++k)
        if (moduli[k] != p) return 0;
    return p;
}

CertificateStep applicability_step(const PrymDatum& d, const ValidationReport& report, bool& ok) {
    const auto& moduli = d.matrix().moduli();
    const std::int64_t p = shape_prime(moduli);
    const bool prime = is_prime(p);
    const bool sigma_ok = is_default_sigma(d.sigma());
    ok = report.totally_ramified && report.group_is_full_product && p != 0 && prime &&
         p >= kMinPrime && sigma_ok;

    CertificateStep s;
    s.id = "S1";
    s.statement =
        "family is totally ramified with Galois group Z/2p x (Z/p)^(m-1), p >= 5 prime, and sigma "
        "negates the first coordinate only";
    s.anchor = "applicability";
    s.inputs["moduli"] = std::vector<std::int64_t>(moduli.values().begin(), moduli.values().end());
    s.inputs["m"] = moduli.size();
    s.inputs["p"] = p;
    s.inputs["moduli_shape_2p_p"] = p != 0;
    s.inputs["p_is_prime"] = prime;
    s.inputs["p_min"] = kMinPrime;
    s.inputs["totally_ramified"] = report.totally_ramified;
    s.inputs["full_span"] = report.group_is_full_product;
    s.inputs["default_sigma"] = sigma_ok;
    s.computed = p;
    s.status = status_of(ok);
    return s;
}

struct RankGap {
    std::optional<Character> witness;
    std::int64_t gap = 0;
};

CertificateStep rank_gap_step(const CoveringMatrix& m, const HiggsRankProfile& ranks,
                              Json& negative_pairs) {
    const std::int64_t n1 = m.moduli()[0];
    RankGap best;
    for (const auto& [chi, r] : ranks.ranks) {
        const std::int64_t gap = r.e10 - r.e01;
        const std::int64_t lift = mod(-chi[0], n1);
        if (gap > 0 && 2 * lift >= n1 && gap > best.gap) best = {chi, gap};
    }

    CertificateStep s;
    s.id = "S2";
    s.statement =
        "some odd character chi has e10(chi) > e10(chi^-1) with first-coordinate lift N_1 - n_1 >= "
        "N_1/2, forcing a nonzero flat (1,0) part";
    s.anchor = "flat-part-nonvanishing";
    s.inputs["modulus"] = n1;
    negative_pairs = Json::array();
    if (best.witness) {
        const auto& chi = *best.witness;
        const auto& r = ranks.ranks.at(chi);
        s.inputs["witness"] = chi.str();
        s.inputs["e10"] = r.e10;
        s.inputs["e10_inverse"] = r.e01;
        s.inputs["distinguished_lift"] = mod(-chi[0], n1);
        const Character partner = char_inverse(chi);
        for (const auto& [other, unused] : ranks.ranks) {
            (void)unused;
            const std::int64_t x = intersection_number(m, partner, other);
            if (x < 0)
                negative_pairs.push_back(
                    {{"chi", partner.str()}, {"chi_prime", other.str()}, {"intersection", x}});
        }
        s.inputs["negative_pairs"] = negative_pairs;
    } else {
        s.inputs["witness"] = nullptr;
    }
    s.computed = best.gap;
    s.status = status_of(best.witness.has_value());
    return s;
}

CertificateStep flat_rank_step(const FlatBound& flat, const CoveringMatrix& m, std::int64_t p) {
    CertificateStep s;
    s.id = "S3";
    s.statement = "total flat (1,0) rank lower bound sum_chi max(0, e10(chi) - e10(chi^-1)) >= 3";
    s.anchor = "flat-rank-total";
    Json bounds = Json::object();
    for (const auto& [chi, b] : flat.bounds) bounds[chi.str()] = b;
    s.inputs["bounds"] = std::move(bounds);
    s.inputs["threshold"] = kFlatRankThreshold;
    if (m.rows() == 1 && p > 0) {
        // closed form r*n/8 with r := s, n := p; reported for comparison only
        s.inputs["closed_form_cross_check"] = {
            {"value", to_json(Rational(static_cast<std::int64_t>(m.branch_count()) * p, 8))},
            {"relied_upon", false}};
    }
    s.computed = flat.total;
    s.status = status_of(flat.total >= kFlatRankThreshold);
    return s;
}

CertificateStep second_fibration_step(std::int64_t flat_total, const Json& negative_pairs) {
    CertificateStep s;
    s.id = "S4";
    s.statement =
        "after base change there is a second fibration S -> B' with g(B') >= rk F10 (geometric, "
        "not decidable from the matrix)";
    s.anchor = "second-fibration";
    s.inputs["base_genus_lower_bound"] = flat_total;
    s.inputs["supporting_negative_pairs"] = negative_pairs;
    s.computed = flat_total;
    s.status = StepStatus::assumed;
    return s;
}

CertificateStep fiber_degree_step(std::int64_t order) {
    CertificateStep s;
    s.id = "S5";
    s.statement =
        "the second fibration restricted to any fiber has degree >= 3, since the fibers are not "
        "double covers of a fixed curve (geometric)";
    s.anchor = "fibration-degree";
    s.inputs["group_order"] = order;
    s.inputs["degree_lower_bound"] = kFiberDegreeLowerBound;
    s.computed = kFiberDegreeLowerBound;
    s.status = StepStatus::assumed;
    return s;
}

CertificateStep threshold_step(const PrymProfile& p, std::int64_t flat_total) {
    CertificateStep s;
    s.id = "S6";
    s.statement =
        "g~ >= 16 and g_P >= 8, so Riemann-Hurwitz 2g~ - 2 >= 3(2g(B') - 2) with g(B') >= rk F10 "
        "contradicts p(F) = rk F10 on a singular fiber";
    s.anchor = "riemann-hurwitz-clash";
    s.inputs["genus"] = p.genus_tilde;
    s.inputs["quotient_genus"] = p.quotient_genus;
    s.inputs["prym_dim"] = p.prym_dimension;
    s.inputs["genus_threshold"] = kGenusThreshold;
    s.inputs["prym_threshold"] = kPrymThreshold;
    s.inputs["genus_equals_twice_prym_dim"] = p.genus_tilde == 2 * p.prym_dimension;
    s.inputs["base_genus_lower_bound"] = flat_total;
    s.computed = p.prym_dimension;
    s.status = status_of(p.genus_tilde >= kGenusThreshold && p.prym_dimension >= kPrymThreshold);
    return s;
}

}  // namespace

ObstructionCertificate certify_family(const PrymDatum& d) {
    const auto& m = d.matrix();
    require_valid(m);
    const auto report = validate(m);

    ObstructionCertificate c{m, d.sigma(), std::nullopt, std::nullopt, {}, Verdict::not_applicable};
    bool applicable = false;
    c.steps.push_back(applicability_step(d, report, applicable));

    // Without the default involution and the full group there is no
    // character-level profile to evaluate.
    if (!is_default_sigma(d.sigma()) || !report.group_is_full_product) return c;

    c.profile = prym_profile(d);
    c.double_cover = check_prym_datum(d);
    const auto ranks = rank_profile(d);
    const auto flat = flat_lower_bounds(ranks);

    Json negative_pairs;
    c.steps.push_back(rank_gap_step(m, ranks, negative_pairs));
    c.steps.push_back(flat_rank_step(flat, m, shape_prime(m.moduli())));
    c.steps.push_back(second_fibration_step(flat.total, negative_pairs));
    c.steps.push_back(fiber_degree_step(group_order(m)));
    c.steps.push_back(threshold_step(*c.profile, flat.total));

    if (!applicable)
        c.verdict = Verdict::not_applicable;
    else if (std::all_of(c.steps.begin(), c.steps.end(),
                         [](const CertificateStep& s) { return s.status != StepStatus::failed; }))
        c.verdict = Verdict::obstructed;
    else
        c.verdict = Verdict::inconclusive;
    return c;
}

Json to_json(const ObstructionCertificate& c) {
    Json family = to_json(c.matrix);
    family["sigma"] = to_json(c.sigma);

    Json j;
    j["family"] = std::move(family);
    if (c.profile && c.double_cover)
        j["profile"] = to_json(*c.profile, *c.double_cover);
    else
        j["profile"] = nullptr;
    Json steps = Json::array();
    for (const auto& s : c.steps) {
        Json step;
        step["id"] = s.id;
        step["statement"] = s.statement;
        step["anchor"] = s.anchor;
        step["inputs"] = s.inputs;
        step["computed"] = to_json(s.computed);
        if (s.status == StepStatus::assumed)
            step["passed"] = "assumed";
        else
            step["passed"] = s.status == StepStatus::passed;
        steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
    j["verdict"] = std::string(to_string(c.verdict));
    return j;
}

// ------------------------------------------------------------ verification

namespace {

class Checker {
public:
    explicit Checker(CertificateCheck& out) : out_(out) {}

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            out_.ok = false;
            out_.problems.push_back(what);
        }
    }

private:
    CertificateCheck& out_;
};

std::int64_t get_int(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw InvalidInput(std::string("certificate field \"") + key + "\" missing or not an integer");
    return j.at(key).get<std::int64_t>();
}

bool get_bool(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_boolean())
        throw InvalidInput(std::string("certificate field \"") + key + "\" missing or not a boolean");
    return j.at(key).get<bool>();
}

}  // namespace

CertificateCheck verify_certificate(const Json& cert) {
    CertificateCheck out;
    Checker check(out);
    try {
        const auto& steps = cert.at("steps");
        const std::string verdict = cert.at("verdict").get<std::string>();
        check.expect(steps.is_array() && !steps.empty(), "steps must be a nonempty array");

        const auto& s1 = steps.at(0);
        check.expect(s1.at("id") == "S1", "first step must be S1");
        const auto& in1 = s1.at("inputs");
        const std::int64_t p = get_int(in1, "p");
        const bool s1_ok = get_bool(in1, "moduli_shape_2p_p") && get_bool(in1, "p_is_prime") &&
                           p >= get_int(in1, "p_min") && get_bool(in1, "totally_ramified") &&
                           get_bool(in1, "full_span") && get_bool(in1, "default_sigma");
        check.expect(get_int(in1, "p_min") == kMinPrime, "S1: p_min must be 5");
        check.expect(!get_bool(in1, "p_is_prime") || is_prime(p), "S1: p_is_prime is false for p");
        check.expect(get_bool(s1, "passed") == s1_ok, "S1: passed flag disagrees with its inputs");

        if (steps.size() == 1) {
            check.expect(!s1_ok, "applicable certificate has no further steps");
            check.expect(verdict == "not_applicable", "single-step certificate must be not_applicable");
            return out;
        }
        check.expect(steps.size() == 6, "expected steps S1..S6");
        const char* ids[] = {"S1", "S2", "S3", "S4", "S5", "S6"};
        for (std::size_t i = 0; i < steps.size() && i < 6; ++i)
            check.expect(steps.at(i).at("id") == ids[i], std::string("step ") + ids[i] + " out of order");

        // S2: gap and lift
        const auto& s2 = steps.at(1);
        const auto& in2 = s2.at("inputs");
        bool s2_ok = false;
        if (!in2.at("witness").is_null()) {
            const std::int64_t gap = get_int(in2, "e10") - get_int(in2, "e10_inverse");
            const std::int64_t lift = get_int(in2, "distinguished_lift");
            const std::int64_t n1 = get_int(in2, "modulus");
            check.expect(gap == s2.at("computed").get<std::int64_t>(), "S2: computed gap mismatch");
            s2_ok = gap > 0 && 2 * lift >= n1;
            for (const auto& pr : in2.at("negative_pairs"))
                check.expect(get_int(pr, "intersection") < 0, "S2: listed pair is not negative");
        }
        check.expect(get_bool(s2, "passed") == s2_ok, "S2: passed flag disagrees with its inputs");

        // S3: total of embedded bounds
        const auto& s3 = steps.at(2);
        const auto& in3 = s3.at("inputs");
        std::int64_t total = 0;
        for (const auto& [key, b] : in3.at("bounds").items()) {
            (void)key;
            check.expect(b.is_number_integer() && b.get<std::int64_t>() >= 0,
                         "S3: bounds must be nonnegative integers");
            total += b.get<std::int64_t>();
        }
        check.expect(get_int(in3, "threshold") == kFlatRankThreshold, "S3: threshold must be 3");
        check.expect(total == s3.at("computed").get<std::int64_t>(), "S3: computed is not the sum of bounds");
        const bool s3_ok = total >= kFlatRankThreshold;
        check.expect(get_bool(s3, "passed") == s3_ok, "S3: passed flag disagrees with its inputs");

        for (std::size_t i : {3u, 4u})
            check.expect(steps.at(i).at("passed") == "assumed", std::string(ids[i]) + " must be assumed");

        // S6: thresholds
        const auto& s6 = steps.at(5);
        const auto& in6 = s6.at("inputs");
        const std::int64_t g = get_int(in6, "genus");
        const std::int64_t gc = get_int(in6, "quotient_genus");
        const std::int64_t gp = get_int(in6, "prym_dim");
        check.expect(gp == g - gc, "S6: prym_dim != genus - quotient_genus");
        check.expect(get_int(in6, "genus_threshold") == kGenusThreshold, "S6: genus threshold must be 16");
        check.expect(get_int(in6, "prym_threshold") == kPrymThreshold, "S6: Prym threshold must be 8");
        const bool s6_ok = g >= kGenusThreshold && gp >= kPrymThreshold;
        check.expect(get_bool(s6, "passed") == s6_ok, "S6: passed flag disagrees with its inputs");

        const auto& prof = cert.at("profile");
        if (!prof.is_null()) {
            check.expect(get_int(prof, "genus") == g && get_int(prof, "prym_dim") == gp &&
                             get_int(prof, "quotient_genus") == gc,
                         "profile disagrees with S6 inputs");
        }

        const char* expected = !s1_ok                                     ? "not_applicable"
                               : (s2_ok && s3_ok && s6_ok)                ? "obstructed"
                                                                          : "inconclusive";
        check.expect(verdict == expected, std::string("verdict should be ") + expected);
    } catch (const nlohmann::json::exception& e) {
        check.expect(false, std::string("malformed certificate: ") + e.what());
    } catch (const Error& e) {
        check.expect(false, e.what());
    }
    return out;
}

// -------------------------------------------------------------- closed form

ClosedFormReport closed_form_report(std::int64_t p, std::int64_t s) {
    if (!is_prime(p)) throw PreconditionError("closed form report needs a prime p, got " + std::to_string(p));
    const std::int64_t n = 2 * p;
    if (s <= 0 || s % n != 0)
        throw PreconditionError("s = " + std::to_string(s) + " is not a positive multiple of 2p = " +
                                std::to_string(n) + "; the all-ones matrix has a nonzero column sum");

    const CoveringMatrix m(ModuliVector{n}, std::vector<std::vector<std::int64_t>>(s, {1}));
    ClosedFormReport r;
    r.p = p;
    r.s = s;
    r.modulus = n;
    const auto table = eigenspace_table(m);
    r.closed_dims.assign(n, 0);
    r.general_dims.assign(n, 0);
    for (std::int64_t k = 1; k < n; ++k) {
        Rational closed = Rational(-1) + Rational(s) * (Rational(1) - Rational(k, n));
        if (!closed.is_integer()) throw ConsistencyError("closed-form eigenspace dimension " + closed.str());
        r.closed_dims[k] = closed.num();
        r.general_dims[k] = table.at(Character(m.moduli(), {k}));
    }
    Rational closed_genus = (Rational(-1) + Rational(s, 2)) * Rational(n - 1);
    if (!closed_genus.is_integer()) throw ConsistencyError("closed-form genus " + closed_genus.str());
    r.closed_genus = closed_genus.num();
    r.general_genus = genus_cover(m);
    r.match = r.closed_dims == r.general_dims && r.closed_genus == r.general_genus;
    return r;
}

Json to_json(const ClosedFormReport& r) {
    Json j;
    j["p"] = r.p;
    j["s"] = r.s;
    j["modulus"] = r.modulus;
    Json dims = Json::array();
    for (std::int64_t k = 1; k < r.modulus; ++k)
        dims.push_back({{"n", k}, {"closed_form", r.closed_dims[k]}, {"general", r.general_dims[k]}});
    j["eigenspace_dims"] = std::move(dims);
    j["genus"] = {{"closed_form", r.closed_genus}, {"general", r.general_genus}};
    j["match"] = r.match;
    return j;
}

}  // namespace abcov
