#include "abcov/prym.hpp"

#include "abcov/error.hpp"

#include <algorithm>

namespace abcov {

namespace {

// Is g in the cyclic subgroup generated by t?
bool in_cyclic_subgroup(const Character& g, const Character& t) {
    Character x = Character::trivial(t.moduli());
    for (std::int64_t i = 0, n = t.order(); i < n; ++i) {
        if (x == g) return true;
        x = char_add(x, t);
    }
    return false;
}

void require_default_sigma(const PrymDatum& d) {
    if (!is_default_sigma(d.sigma()))
        throw PreconditionError("involution " + d.sigma().str() +
                                " is not of the form (N_1/2, 0, ..., 0); general involutions are"
                                " not supported");
}

}  // namespace

PrymDatum::PrymDatum(CoveringMatrix matrix, Character sigma)
    : matrix_(std::move(matrix)), sigma_(std::move(sigma)) {
    if (sigma_.moduli() != matrix_.moduli())
        throw InvalidInput("involution " + sigma_.str() + " is not over the matrix moduli");
    if (sigma_.order() != 2)
        throw InvalidInput("involution " + sigma_.str() + " has order " +
                           std::to_string(sigma_.order()) + ", expected exact order 2");
    auto span = column_span(matrix_);
    if (!std::binary_search(span.begin(), span.end(), sigma_))
        throw InvalidInput("involution " + sigma_.str() + " is not in the group generated by the columns");
}

std::string_view to_string(DoubleCoverKind k) {
    switch (k) {
        case DoubleCoverKind::unramified: return "unramified";
        case DoubleCoverKind::ramified_two: return "ramified_two";
        case DoubleCoverKind::ramified_other: return "ramified_other";
    }
    return "?";
}

Character default_sigma(const ModuliVector& moduli) {
    if (moduli[0] % 2 != 0)
        throw PreconditionError("no default involution: N_1 = " + std::to_string(moduli[0]) + " is odd");
    std::vector<std::int64_t> c(moduli.size(), 0);
    c[0] = moduli[0] / 2;
    return Character(moduli, std::move(c));
}

bool is_default_sigma(const Character& sigma) {
    if (sigma.moduli()[0] % 2 != 0) return false;
    return sigma == default_sigma(sigma.moduli());
}

DoubleCoverClass check_prym_datum(const PrymDatum& d) {
    const auto& m = d.matrix();
    require_valid(m);
    const std::int64_t order = group_order(m);
    DoubleCoverClass out;
    for (std::size_t j = 0; j < m.branch_count(); ++j) {
        const Character t = m.column_element(j);
        if (in_cyclic_subgroup(d.sigma(), t)) {
            out.sigma_in_column_spans = true;
            out.fixed_point_count = checked::add(out.fixed_point_count, order / t.order());
        }
    }
    if (out.fixed_point_count == 0)
        out.kind = DoubleCoverKind::unramified;
    else if (out.fixed_point_count == 2)
        out.kind = DoubleCoverKind::ramified_two;
    else
        out.kind = DoubleCoverKind::ramified_other;
    return out;
}

std::int64_t quotient_genus(std::int64_t genus_tilde, std::int64_t fixed_points) {
    std::int64_t num = checked::sub(checked::add(checked::mul(2, genus_tilde), 2), fixed_points);
    if (num < 0 || num % 4 != 0)
        throw ConsistencyError("quotient genus (2*" + std::to_string(genus_tilde) + " + 2 - " +
                               std::to_string(fixed_points) + ")/4 is not a nonnegative integer");
    return num / 4;
}

std::int64_t quotient_genus(const PrymDatum& d) {
    return quotient_genus(genus_cover(d.matrix()), check_prym_datum(d).fixed_point_count);
}

std::vector<Character> odd_characters(const PrymDatum& d) {
    require_default_sigma(d);
    std::vector<Character> out;
    for (auto& chi : all_characters(d.matrix().moduli()))
        if (chi[0] % 2 == 1) out.push_back(std::move(chi));
    return out;
}

PrymProfile prym_profile(const PrymDatum& d) {
    require_default_sigma(d);
    const auto table = eigenspace_table(d.matrix());

    PrymProfile p;
    p.genus_tilde = genus_cover(d.matrix());
    p.quotient_genus = quotient_genus(p.genus_tilde, check_prym_datum(d).fixed_point_count);
    p.odd_characters = odd_characters(d);
    p.prym_dimension = p.genus_tilde - p.quotient_genus;

    std::int64_t odd_sum = 0;
    for (const auto& chi : p.odd_characters) odd_sum = checked::add(odd_sum, table.at(chi));
    if (odd_sum != p.prym_dimension)
        throw ConsistencyError("Prym dimension mismatch: g~ - g_C = " +
                               std::to_string(p.prym_dimension) + " but the odd-character sum is " +
                               std::to_string(odd_sum));
    return p;
}

}  // namespace abcov
