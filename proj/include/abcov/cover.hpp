#pragma once

#include "abcov/arith.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace abcov {

/*
 * Matrix of an abelian cover of the projective line.
 *
 * Column j is the local monodromy around the branch point z_j, an element of
 * prod Z/N_k. Row k is reduced mod N_k. The Galois group is the subgroup
 * generated by the columns.
 *
 * Construction only checks shape and that entries are reduced; the
 * remaining invariants (s >= 3, vanishing row sums, nonzero columns) are
 * reported by validate() so that invalid families can still be inspected.
 */
class CoveringMatrix {
public:
    CoveringMatrix(ModuliVector moduli, const std::vector<std::vector<std::int64_t>>& columns);

    const ModuliVector& moduli() const { return moduli_; }
    std::size_t rows() const { return moduli_.size(); }
    std::size_t branch_count() const { return cols_; }

    std::span<const std::int64_t> column(std::size_t j) const;
    std::int64_t entry(std::size_t k, std::size_t j) const { return entries_[j * rows() + k]; }
    Character column_element(std::size_t j) const;

    std::vector<std::vector<std::int64_t>> columns() const;

    friend bool operator==(const CoveringMatrix&, const CoveringMatrix&) = default;

private:
    ModuliVector moduli_;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> entries_;  // column-major
};

struct ValidationReport {
    bool valid = false;
    bool totally_ramified = false;
    bool group_is_full_product = false;
    std::vector<std::string> messages;
};

using EigenspaceTable = std::map<Character, std::int64_t>;

// One basis 1-form z^nu * w^n * prod_j (z - z_j)^{e_j} dz of an eigenspace.
struct EigenformDescriptor {
    Character character;
    std::int64_t nu = 0;
    std::vector<std::int64_t> floor_exponents;

    friend bool operator==(const EigenformDescriptor&, const EigenformDescriptor&) = default;
};

ValidationReport validate(const CoveringMatrix& m);
// Throws PreconditionError naming the first violated invariant.
void require_valid(const CoveringMatrix& m);

// The subgroup of prod Z/N_k generated by the columns, sorted.
std::vector<Character> column_span(const CoveringMatrix& m);
std::int64_t group_order(const CoveringMatrix& m);
bool is_full_span(const CoveringMatrix& m);

// Order of column j in prod Z/N_k: lcm_k N_k / gcd(N_k, r_kj).
std::int64_t ramification_order(const CoveringMatrix& m, std::size_t j);

// Riemann-Hurwitz genus of the cover; integrality is asserted.
std::int64_t genus_cover(const CoveringMatrix& m);

/*
 * Dimension of the chi-eigenspace of holomorphic 1-forms,
 * d_chi = -1 + sum_j <-a_j(chi)> with a_j(chi) = char_pairing(chi, column j),
 * and 0 for characters trivial on the Galois group.
 *
 * When the columns do not span the full product group, chi is read through
 * its restriction to the span; a nontrivial chi that restricts trivially is
 * not a character of the Galois group and is rejected.
 */
std::int64_t eigenspace_dim(const CoveringMatrix& m, const Character& chi);

// All characters of the full product group. Requires full span.
EigenspaceTable eigenspace_table(const CoveringMatrix& m);

// One representative per character of the span (the lexicographically
// smallest ambient character with that restriction), sorted.
std::vector<Character> span_characters(const CoveringMatrix& m);

std::vector<EigenformDescriptor> eigenform_basis(const CoveringMatrix& m, const Character& chi);

}  // namespace abcov
