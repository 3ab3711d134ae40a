#include "abcov/cover.hpp"

#include "abcov/error.hpp"

#include <algorithm>
#include <set>

namespace abcov {

namespace {

// Closure enumeration over a dense visited table; bounded so that a huge
// ambient group fails loudly instead of exhausting memory.
constexpr std::int64_t kMaxAmbientOrder = 1 << 24;

std::int64_t encode(std::span<const std::int64_t> comps, const ModuliVector& moduli) {
    std::int64_t idx = 0;
    for (std::size_t k = 0; k < comps.size(); ++k) idx = idx * moduli[k] + comps[k];
    return idx;
}

std::vector<std::int64_t> decode(std::int64_t idx, const ModuliVector& moduli) {
    std::vector<std::int64_t> comps(moduli.size());
    for (std::size_t k = moduli.size(); k-- > 0;) {
        comps[k] = idx % moduli[k];
        idx /= moduli[k];
    }
    return comps;
}

std::vector<Rational> pairings(const CoveringMatrix& m, const Character& chi) {
    if (chi.moduli() != m.moduli())
        throw InvalidInput("character " + chi.str() + " is not over the matrix moduli");
    std::vector<Rational> a;
    a.reserve(m.branch_count());
    for (std::size_t j = 0; j < m.branch_count(); ++j) a.push_back(char_pairing(chi, m.column(j)));
    return a;
}

}  // namespace

// ----------------------------------------------------------- CoveringMatrix

CoveringMatrix::CoveringMatrix(ModuliVector moduli,
                               const std::vector<std::vector<std::int64_t>>& columns)
    : moduli_(std::move(moduli)), cols_(columns.size()) {
    entries_.reserve(cols_ * rows());
    for (std::size_t j = 0; j < cols_; ++j) {
        const auto& c = columns[j];
        if (c.size() != rows())
            throw InvalidInput("column " + std::to_string(j + 1) + " has " +
                               std::to_string(c.size()) + " entries, expected " +
                               std::to_string(rows()));
        for (std::size_t k = 0; k < rows(); ++k) {
            if (c[k] < 0 || c[k] >= moduli_[k])
                throw InvalidInput("entry (" + std::to_string(k + 1) + "," + std::to_string(j + 1) +
                                   ") = " + std::to_string(c[k]) + " is not reduced mod " +
                                   std::to_string(moduli_[k]));
            entries_.push_back(c[k]);
        }
    }
}

std::span<const std::int64_t> CoveringMatrix::column(std::size_t j) const {
    return std::span<const std::int64_t>(entries_).subspan(j * rows(), rows());
}

Character CoveringMatrix::column_element(std::size_t j) const {
    auto c = column(j);
    return Character(moduli_, std::vector<std::int64_t>(c.begin(), c.end()));
}

std::vector<std::vector<std::int64_t>> CoveringMatrix::columns() const {
    std::vector<std::vector<std::int64_t>> out;
    for (std::size_t j = 0; j < cols_; ++j) {
        auto c = column(j);
        out.emplace_back(c.begin(), c.end());
    }
    return out;
}

// ---------------------------------------------------------------- validate

ValidationReport validate(const CoveringMatrix& m) {
    ValidationReport r;
    const std::size_t s = m.branch_count();
    if (s < 3)
        r.messages.push_back("branch count s = " + std::to_string(s) + " violates s >= 3");
    for (std::size_t k = 0; k < m.rows(); ++k) {
        std::int64_t sum = 0;
        for (std::size_t j = 0; j < s; ++j) sum = checked::add(sum, m.entry(k, j));
        if (mod(sum, m.moduli()[k]) != 0)
            r.messages.push_back("row " + std::to_string(k + 1) + ": column sum " +
                                 std::to_string(sum) + " is not 0 mod " +
                                 std::to_string(m.moduli()[k]));
    }
    bool tot = s > 0;
    for (std::size_t j = 0; j < s; ++j) {
        auto c = m.column(j);
        if (std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; }))
            r.messages.push_back("column " + std::to_string(j + 1) + " is zero (not a branch point)");
        auto ones = std::count(c.begin(), c.end(), 1);
        auto zeros = std::count(c.begin(), c.end(), 0);
        if (ones != 1 || ones + zeros != static_cast<std::ptrdiff_t>(c.size())) tot = false;
    }
    r.valid = r.messages.empty();
    r.totally_ramified = tot;
    const std::int64_t order = group_order(m);
    r.group_is_full_product = order == m.moduli().group_order();
    if (!r.group_is_full_product)
        r.messages.push_back("columns generate a proper subgroup of order " + std::to_string(order) +
                             " (not an error)");
    return r;
}

void require_valid(const CoveringMatrix& m) {
    auto r = validate(m);
    if (!r.valid) throw PreconditionError("invalid covering matrix: " + r.messages.front());
}

// ------------------------------------------------------------ group theory

std::vector<Character> column_span(const CoveringMatrix& m) {
    const auto& moduli = m.moduli();
    const std::int64_t total = moduli.group_order();
    if (total > kMaxAmbientOrder)
        throw InvalidInput("ambient group order " + std::to_string(total) + " is too large");

    std::vector<char> seen(static_cast<std::size_t>(total), 0);
    std::vector<std::int64_t> frontier{0};
    seen[0] = 1;
    while (!frontier.empty()) {
        std::int64_t cur = frontier.back();
        frontier.pop_back();
        auto comps = decode(cur, moduli);
        for (std::size_t j = 0; j < m.branch_count(); ++j) {
            auto col = m.column(j);
            std::vector<std::int64_t> next(comps.size());
            for (std::size_t k = 0; k < comps.size(); ++k) next[k] = (comps[k] + col[k]) % moduli[k];
            std::int64_t idx = encode(next, moduli);
            if (!seen[idx]) {
                seen[idx] = 1;
                frontier.push_back(idx);
            }
        }
    }
    std::vector<Character> out;
    for (std::int64_t i = 0; i < total; ++i)
        if (seen[i]) out.emplace_back(moduli, decode(i, moduli));
    return out;
}

std::int64_t group_order(const CoveringMatrix& m) {
    return static_cast<std::int64_t>(column_span(m).size());
}

bool is_full_span(const CoveringMatrix& m) { return group_order(m) == m.moduli().group_order(); }

std::int64_t ramification_order(const CoveringMatrix& m, std::size_t j) {
    if (j >= m.branch_count())
        throw InvalidInput("column index " + std::to_string(j) + " out of range");
    return m.column_element(j).order();
}

std::int64_t genus_cover(const CoveringMatrix& m) {
    require_valid(m);
    const std::int64_t d = group_order(m);
    const auto s = static_cast<std::int64_t>(m.branch_count());
    Rational inv_orders;
    for (std::size_t j = 0; j < m.branch_count(); ++j) inv_orders += Rational(1, ramification_order(m, j));
    Rational g = Rational(1) + Rational(d) * (Rational(s - 2, 2) - Rational(1, 2) * inv_orders);
    if (!g.is_integer() || g < Rational(0))
        throw ConsistencyError("genus formula produced " + g.str() + ", not a nonnegative integer");
    return g.num();
}

// ------------------------------------------------------------- eigenspaces

namespace {

// Assumes m already validated.
std::int64_t eigenspace_dim_of_valid(const CoveringMatrix& m, const Character& chi) {
    const auto a = pairings(m, chi);
    const bool restricts_trivially =
        std::all_of(a.begin(), a.end(), [](const Rational& q) { return q == Rational(0); });
    if (restricts_trivially) {
        if (!chi.is_trivial())
            throw PreconditionError("character " + chi.str() +
                                    " is trivial on every column but is not the trivial character;"
                                    " it is not a character of the Galois group");
        return 0;
    }
    Rational sum(-1);
    for (const auto& q : a) sum += frac(-q);
    if (!sum.is_integer() || sum < Rational(0))
        throw ConsistencyError("eigenspace dimension for " + chi.str() + " evaluated to " + sum.str());
    return sum.num();
}

}  // namespace

std::int64_t eigenspace_dim(const CoveringMatrix& m, const Character& chi) {
    require_valid(m);
    return eigenspace_dim_of_valid(m, chi);
}

EigenspaceTable eigenspace_table(const CoveringMatrix& m) {
    require_valid(m);
    if (!is_full_span(m))
        throw PreconditionError("eigenspace table requires columns spanning the full product group");
    EigenspaceTable t;
    for (auto& chi : all_characters(m.moduli())) {
        auto d = eigenspace_dim_of_valid(m, chi);
        t.emplace(std::move(chi), d);
    }
    return t;
}

std::vector<Character> span_characters(const CoveringMatrix& m) {
    std::set<std::vector<Rational>> restrictions;
    std::vector<Character> out;
    for (auto& chi : all_characters(m.moduli()))
        if (restrictions.insert(pairings(m, chi)).second) out.push_back(std::move(chi));
    return out;
}

std::vector<EigenformDescriptor> eigenform_basis(const CoveringMatrix& m, const Character& chi) {
    if (chi.is_trivial()) throw PreconditionError("eigenform basis requires a nontrivial character");
    const std::int64_t d = eigenspace_dim(m, chi);
    std::vector<std::int64_t> exps;
    for (const auto& a : pairings(m, chi)) exps.push_back((-a).floor());
    std::vector<EigenformDescriptor> out;
    for (std::int64_t nu = 0; nu < d; ++nu) out.push_back({chi, nu, exps});
    return out;
}

}  // namespace abcov
