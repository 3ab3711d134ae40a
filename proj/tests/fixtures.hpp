#pragma once

#include "abcov/cover.hpp"

#include <cstdint>
#include <vector>

namespace fixture {

// 1 x s matrix mod N with every entry r.
inline abcov::CoveringMatrix cyclic(std::int64_t N, std::size_t s, std::int64_t r = 1) {
    return abcov::CoveringMatrix(abcov::ModuliVector{N}, std::vector<std::vector<std::int64_t>>(s, {r}));
}

// Moduli (10, 5): ten columns (1,0), five columns (0,1).
inline abcov::CoveringMatrix ten_five() {
    std::vector<std::vector<std::int64_t>> cols(10, {1, 0});
    cols.insert(cols.end(), 5, {0, 1});
    return abcov::CoveringMatrix(abcov::ModuliVector{10, 5}, cols);
}

}  // namespace fixture
