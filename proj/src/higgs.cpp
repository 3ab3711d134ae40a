#include "abcov/higgs.hpp"

#include "abcov/error.hpp"

#include <algorithm>
#include <set>

namespace abcov {

HiggsRankProfile rank_profile(const PrymDatum& d) {
    const auto prym = prym_profile(d);
    const auto table = eigenspace_table(d.matrix());

    HiggsRankProfile p;
    for (const auto& chi : prym.odd_characters) {
        HodgeRanks r{table.at(chi), table.at(char_inverse(chi))};
        p.total_e10 = checked::add(p.total_e10, r.e10);
        p.ranks.emplace(chi, r);
    }
    if (p.total_e10 != prym.prym_dimension)
        throw ConsistencyError("sum of (1,0) ranks " + std::to_string(p.total_e10) +
                               " differs from the Prym dimension " +
                               std::to_string(prym.prym_dimension));
    return p;
}

FlatBound flat_lower_bounds(const HiggsRankProfile& p) {
    FlatBound f;
    for (const auto& [chi, r] : p.ranks) {
        auto inv = p.ranks.find(char_inverse(chi));
        if (inv == p.ranks.end())
            throw PreconditionError("rank profile lacks the inverse of " + chi.str());
        std::int64_t b = std::max<std::int64_t>(0, r.e10 - inv->second.e10);
        f.bounds.emplace(chi, b);
        f.total = checked::add(f.total, b);
    }
    return f;
}

GaloisOrbitSet galois_orbits(const PrymDatum& d) {
    const auto odd = odd_characters(d);
    const std::int64_t L = d.matrix().moduli().lcm();
    std::vector<std::int64_t> units;
    for (std::int64_t k = 1; k < L; ++k)
        if (gcd(k, L) == 1) units.push_back(k);

    GaloisOrbitSet out;
    out.acting_group_order = static_cast<std::int64_t>(units.size());
    std::set<Character> placed;
    for (const auto& chi : odd) {
        if (placed.count(chi)) continue;
        std::set<Character> orbit;
        for (auto k : units) orbit.insert(char_scale(chi, k));
        for (const auto& x : orbit) {
            if (x[0] % 2 != 1)
                throw ConsistencyError("Galois action moved odd " + chi.str() + " to " + x.str());
            placed.insert(x);
        }
        out.orbits.emplace_back(orbit.begin(), orbit.end());
    }
    return out;
}

std::int64_t fiber_line_bundle_degree(const CoveringMatrix& m, const Character& chi) {
    if (chi.is_trivial()) throw PreconditionError("fiber degree requires a nontrivial character");
    if (chi.moduli() != m.moduli())
        throw InvalidInput("character " + chi.str() + " is not over the matrix moduli");
    Rational deg;
    for (std::size_t j = 0; j < m.branch_count(); ++j) deg += char_pairing(chi, m.column(j));
    if (!deg.is_integer())
        throw ConsistencyError("fiber degree " + deg.str() + " of " + chi.str() +
                               " is not an integer; the matrix has a nonvanishing row sum");
    return deg.num();
}

std::int64_t intersection_number(const CoveringMatrix& m, const Character& chi,
                                 const Character& chi_prime) {
    const auto s = static_cast<std::int64_t>(m.branch_count());
    return s - fiber_line_bundle_degree(m, chi) - fiber_line_bundle_degree(m, chi_prime);
}

}  // namespace abcov
