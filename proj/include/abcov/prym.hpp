#pragma once

#include "abcov/arith.hpp"
#include "abcov/cover.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace abcov {

// A cover together with an involution sigma of its Galois group.
class PrymDatum {
public:
    // Throws InvalidInput unless sigma has exact order 2 and lies in the
    // column span.
    PrymDatum(CoveringMatrix matrix, Character sigma);

    const CoveringMatrix& matrix() const { return matrix_; }
    const Character& sigma() const { return sigma_; }

private:
    CoveringMatrix matrix_;
    Character sigma_;
};

enum class DoubleCoverKind { unramified, ramified_two, ramified_other };

std::string_view to_string(DoubleCoverKind k);

struct DoubleCoverClass {
    std::int64_t fixed_point_count = 0;
    DoubleCoverKind kind = DoubleCoverKind::unramified;
    bool sigma_in_column_spans = false;
};

struct PrymProfile {
    std::int64_t genus_tilde = 0;
    std::int64_t quotient_genus = 0;
    std::int64_t prym_dimension = 0;
    std::vector<Character> odd_characters;
};

// (N_1/2, 0, ..., 0): the involution negating w_1 only. Requires N_1 even.
Character default_sigma(const ModuliVector& moduli);
bool is_default_sigma(const Character& sigma);

// Fixed points of sigma on the cover. Points over z_j form d/ord_j cosets of
// the local stabilizer <T_j>, and sigma fixes them iff sigma is in <T_j>.
DoubleCoverClass check_prym_datum(const PrymDatum& d);

// Riemann-Hurwitz for the degree-2 quotient: 2g~ - 2 = 2(2g_C - 2) + f.
std::int64_t quotient_genus(std::int64_t genus_tilde, std::int64_t fixed_points);
std::int64_t quotient_genus(const PrymDatum& d);

// Characters with n_1 odd (the sigma-anti-invariant eigenspaces). Requires
// the default involution.
std::vector<Character> odd_characters(const PrymDatum& d);

// g~, g_C and g_P, with g_P computed both as g~ - g_C and as the sum of
// d_chi over odd chi. Throws ConsistencyError if they differ.
PrymProfile prym_profile(const PrymDatum& d);

}  // namespace abcov
