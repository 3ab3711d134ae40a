#pragma once

#include "abcov/certify.hpp"
#include "abcov/cover.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace abcov {

// Column multiplicities of a totally ramified family with moduli
// (2p, p, ..., p): counts[k] columns equal to the k-th unit vector.
struct FamilySignature {
    std::int64_t p = 0;
    std::vector<std::int64_t> counts;

    std::size_t m() const { return counts.size(); }
    std::int64_t branch_count() const;
    std::string counts_str(char sep = ';') const;

    friend auto operator<=>(const FamilySignature&, const FamilySignature&) = default;
};

// Checks the signature invariants (p prime, s_1 a positive multiple of 2p,
// s_k positive multiples of p, rows 2..m weakly decreasing).
void require_canonical(const FamilySignature& sig);

// The matrix with moduli (2p, p, ..., p) and counts[k] copies of e_k.
// Only the column-sum conditions are enforced, so non-prime p or
// unsorted counts still build (S1 of a certificate judges those).
CoveringMatrix totally_ramified_matrix(std::int64_t p, const std::vector<std::int64_t>& counts);
CoveringMatrix to_matrix(const FamilySignature& sig);

// All canonical signatures with sum of counts <= s_max, in lexicographic
// order of counts.
std::vector<FamilySignature> enumerate_signatures(std::int64_t p, std::int64_t m, std::int64_t s_max);

struct ScanRow {
    FamilySignature signature;
    std::int64_t genus = 0;
    std::int64_t prym_dim = 0;
    std::int64_t flat_total = 0;
    Verdict verdict = Verdict::not_applicable;
};

std::vector<ScanRow> scan(std::int64_t p, std::int64_t m, std::int64_t s_max);

// Columns: p, m, counts, s, genus, prym_dim, flat_total, verdict.
void write_csv(std::ostream& os, const std::vector<ScanRow>& rows);
void write_markdown(std::ostream& os, const std::vector<ScanRow>& rows);
Json to_json(const std::vector<ScanRow>& rows);

}  // namespace abcov
