#pragma once

#include "abcov/arith.hpp"
#include "abcov/cover.hpp"
#include "abcov/prym.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace abcov {

/*
 * Obstruction certificates.
 *
 * A certificate replays the exclusion argument for non-compact Shimura
 * curves in the Prym locus of a concrete totally ramified family:
 *
 *   S1  applicability   totally ramified, moduli (2p, p, ..., p), p >= 5 prime
 *   S2  rank gap        an odd chi with e10(chi) > e10(chi^-1), whose first
 *                       coordinate lift (N_1 - n_1) is at least N_1/2
 *   S3  flat rank       sum of flat lower bounds >= 3
 *   S4  (assumed)       a second fibration with g(B') >= rk F10 exists
 *   S5  (assumed)       that fibration has degree >= 3 on every fiber
 *   S6  thresholds      g~ >= 16 and g_P >= 8
 *
 * S4 and S5 are geometric and cannot be decided from the matrix; they are
 * recorded as assumptions. Every other step carries the integers it was
 * decided from, so verify_certificate() can re-check it without the family.
 */

using Json = nlohmann::ordered_json;

enum class StepStatus { passed, failed, assumed };
enum class Verdict { obstructed, inconclusive, not_applicable };

std::string_view to_string(StepStatus s);
std::string_view to_string(Verdict v);

struct CertificateStep {
    std::string id;
    std::string statement;
    std::string anchor;
    Json inputs = Json::object();
    Rational computed;
    StepStatus status = StepStatus::failed;
};

struct ObstructionCertificate {
    CoveringMatrix matrix;
    Character sigma;
    std::optional<PrymProfile> profile;
    std::optional<DoubleCoverClass> double_cover;
    std::vector<CertificateStep> steps;
    Verdict verdict = Verdict::not_applicable;

    const CertificateStep& step(std::string_view id) const;
};

// Thresholds used by the argument.
inline constexpr std::int64_t kMinPrime = 5;
inline constexpr std::int64_t kFlatRankThreshold = 3;
inline constexpr std::int64_t kFiberDegreeLowerBound = 3;
inline constexpr std::int64_t kGenusThreshold = 16;
inline constexpr std::int64_t kPrymThreshold = 8;

// Throws only for an invalid matrix.
ObstructionCertificate certify_family(const PrymDatum& d);

Json to_json(const ObstructionCertificate& c);

struct CertificateCheck {
    bool ok = true;
    std::vector<std::string> problems;
};

// Re-checks every decided step of a certificate from its embedded inputs.
CertificateCheck verify_certificate(const Json& certificate);

// Closed forms for the totally ramified cyclic Z/2p cover with s branch
// points, against the general formulas.
struct ClosedFormReport {
    std::int64_t p = 0;
    std::int64_t s = 0;
    std::int64_t modulus = 0;
    std::vector<std::int64_t> closed_dims;   // index n = 0..N-1, d_0 = 0
    std::vector<std::int64_t> general_dims;  // same indexing
    std::int64_t closed_genus = 0;
    std::int64_t general_genus = 0;
    bool match = false;
};

ClosedFormReport closed_form_report(std::int64_t p, std::int64_t s);
Json to_json(const ClosedFormReport& r);

}  // namespace abcov
