#include "abcov/enumerate.hpp"

#include "abcov/error.hpp"
#include "abcov/prym.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace abcov {

std::int64_t FamilySignature::branch_count() const {
    std::int64_t s = 0;
    for (auto c : counts) s = checked::add(s, c);
    return s;
}

std::string FamilySignature::counts_str(char sep) const {
    std::string out;
    for (std::size_t k = 0; k < counts.size(); ++k) {
        if (k) out += sep;
        out += std::to_string(counts[k]);
    }
    return out;
}

void require_canonical(const FamilySignature& sig) {
    if (!is_prime(sig.p)) throw PreconditionError("signature: p = " + std::to_string(sig.p) + " is not prime");
    if (sig.counts.empty()) throw PreconditionError("signature: m must be >= 1");
    if (sig.counts[0] < 2 * sig.p || sig.counts[0] % (2 * sig.p) != 0)
        throw PreconditionError("signature: s_1 = " + std::to_string(sig.counts[0]) +
                                " must be a positive multiple of 2p");
    for (std::size_t k = 1; k < sig.counts.size(); ++k) {
        if (sig.counts[k] < sig.p || sig.counts[k] % sig.p != 0)
            throw PreconditionError("signature: s_" + std::to_string(k + 1) + " = " +
                                    std::to_string(sig.counts[k]) + " must be a positive multiple of p");
        if (k >= 2 && sig.counts[k] > sig.counts[k - 1])
            throw PreconditionError("signature: counts of rows 2..m must be weakly decreasing");
    }
}

CoveringMatrix totally_ramified_matrix(std::int64_t p, const std::vector<std::int64_t>& counts) {
    if (p < 2) throw InvalidInput("p = " + std::to_string(p) + " must be at least 2");
    if (counts.empty()) throw InvalidInput("counts must list at least one row");
    std::vector<std::int64_t> moduli(counts.size(), p);
    moduli[0] = 2 * p;
    std::vector<std::vector<std::int64_t>> columns;
    for (std::size_t k = 0; k < counts.size(); ++k) {
        if (counts[k] <= 0 || counts[k] % moduli[k] != 0)
            throw InvalidInput("count s_" + std::to_string(k + 1) + " = " + std::to_string(counts[k]) +
                               " violates the column-sum condition: must be a positive multiple of " +
                               std::to_string(moduli[k]));
        std::vector<std::int64_t> e(counts.size(), 0);
        e[k] = 1;
        columns.insert(columns.end(), static_cast<std::size_t>(counts[k]), e);
    }
    return CoveringMatrix(ModuliVector(std::move(moduli)), columns);
}

CoveringMatrix to_matrix(const FamilySignature& sig) { return totally_ramified_matrix(sig.p, sig.counts); }

namespace {

void extend(std::int64_t p, std::size_t m, std::int64_t budget, std::vector<std::int64_t>& prefix,
            std::vector<FamilySignature>& out) {
    if (prefix.size() == m) {
        out.push_back({p, prefix});
        return;
    }
    const std::size_t k = prefix.size();
    const std::int64_t step = k == 0 ? 2 * p : p;
    // room left for the remaining rows, each needing at least p columns
    const std::int64_t reserve = static_cast<std::int64_t>(m - k - 1) * p;
    std::int64_t cap = budget - reserve;
    if (k >= 2) cap = std::min(cap, prefix.back());
    for (std::int64_t c = step; c <= cap; c += step) {
        prefix.push_back(c);
        extend(p, m, budget - c, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<FamilySignature> enumerate_signatures(std::int64_t p, std::int64_t m, std::int64_t s_max) {
    if (!is_prime(p)) throw PreconditionError("enumerate: p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw PreconditionError("enumerate: m must be >= 1");
    if (s_max < 3) throw PreconditionError("enumerate: max s must be >= 3");
    std::vector<FamilySignature> out;
    std::vector<std::int64_t> prefix;
    extend(p, static_cast<std::size_t>(m), s_max, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ScanRow> scan(std::int64_t p, std::int64_t m, std::int64_t s_max) {
    const auto sigs = enumerate_signatures(p, m, s_max);
    std::vector<ScanRow> rows(sigs.size());

    // Rows are independent; the output order is fixed by the signature sort.
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&] {
        for (std::size_t i = next++; i < sigs.size(); i = next++) {
            try {
                const auto mat = to_matrix(sigs[i]);
                const PrymDatum datum(mat, default_sigma(mat.moduli()));
                const auto cert = certify_family(datum);
                ScanRow& r = rows[i];
                r.signature = sigs[i];
                r.verdict = cert.verdict;
                if (cert.profile) {
                    r.genus = cert.profile->genus_tilde;
                    r.prym_dim = cert.profile->prym_dimension;
                    r.flat_total = cert.step("S3").computed.num();
                }
            } catch (...) {
                std::lock_guard lock(failure_mu);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const std::size_t n_threads =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(1, sigs.size()));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return rows;
}

void write_csv(std::ostream& os, const std::vector<ScanRow>& rows) {
    os << "p,m,counts,s,genus,prym_dim,flat_total,verdict\n";
    for (const auto& r : rows)
        os << r.signature.p << ',' << r.signature.m() << ',' << r.signature.counts_str(';') << ','
           << r.signature.branch_count() << ',' << r.genus << ',' << r.prym_dim << ',' << r.flat_total
           << ',' << to_string(r.verdict) << '\n';
}

void write_markdown(std::ostream& os, const std::vector<ScanRow>& rows) {
    os << "| p | m | counts | s | genus | prym_dim | flat_total | verdict |\n";
    os << "|---|---|---|---|---|---|---|---|\n";
    for (const auto& r : rows)
        os << "| " << r.signature.p << " | " << r.signature.m() << " | " << r.signature.counts_str(',')
           << " | " << r.signature.branch_count() << " | " << r.genus << " | " << r.prym_dim << " | "
           << r.flat_total << " | " << to_string(r.verdict) << " |\n";
}

Json to_json(const std::vector<ScanRow>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) {
        Json j;
        j["p"] = r.signature.p;
        j["m"] = r.signature.m();
        j["counts"] = r.signature.counts;
        j["s"] = r.signature.branch_count();
        j["genus"] = r.genus;
        j["prym_dim"] = r.prym_dim;
        j["flat_total"] = r.flat_total;
        j["verdict"] = std::string(to_string(r.verdict));
        out.push_back(std::move(j));
    }
    return out;
}

}  // namespace abcov
