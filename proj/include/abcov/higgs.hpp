#pragma once

#include "abcov/arith.hpp"
#include "abcov/cover.hpp"
#include "abcov/prym.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace abcov {

/*
 * Rank bookkeeping for the eigenspace decomposition of the Hodge bundle of
 * the Prym part. Nothing here models bundles or Higgs fields: only the
 * integer ranks and fiber degrees that the obstruction argument consumes.
 */

struct HodgeRanks {
    std::int64_t e10 = 0;  // rank of the (1,0) piece in the chi-eigenspace, = d_chi
    std::int64_t e01 = 0;  // rank of the (0,1) piece, = d_{chi^-1}

    friend bool operator==(const HodgeRanks&, const HodgeRanks&) = default;
};

struct HiggsRankProfile {
    std::map<Character, HodgeRanks> ranks;  // odd characters only
    std::int64_t total_e10 = 0;
};

// Lower bounds on the rank of the flat (1,0) part per odd character.
//
// The ample part has rk A10(chi) = rk A01(chi) = rk A10(chi^-1), so
// rk F10(chi) - rk F10(chi^-1) = e10(chi) - e10(chi^-1), and since both
// flat ranks are >= 0, rk F10(chi) >= max(0, e10(chi) - e10(chi^-1)).
struct FlatBound {
    std::map<Character, std::int64_t> bounds;
    std::int64_t total = 0;
};

struct GaloisOrbitSet {
    std::vector<std::vector<Character>> orbits;  // each sorted; sorted by first element
    std::int64_t acting_group_order = 0;         // |(Z/L)^*|
};

HiggsRankProfile rank_profile(const PrymDatum& d);
FlatBound flat_lower_bounds(const HiggsRankProfile& p);

// Orbits of odd characters under chi -> k*chi, k in (Z/L)^*, L = lcm of the
// moduli. Never assumed transitive.
GaloisOrbitSet galois_orbits(const PrymDatum& d);

// Degree of L_chi restricted to a general fiber: sum_j <a_j(chi)>.
std::int64_t fiber_line_bundle_degree(const CoveringMatrix& m, const Character& chi);

// Fiber degree of omega(R)_- (x) L_chi^-1 (x) L_chi'^-1, taking the fiber
// degree of omega(R)_- to be s. Negative values trigger the trivialization
// argument for the flat parts of chi and chi'.
std::int64_t intersection_number(const CoveringMatrix& m, const Character& chi,
                                 const Character& chi_prime);

}  // namespace abcov
