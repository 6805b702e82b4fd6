#pragma once

// Shared helpers for the test binaries: seeded random specs and matchings.

#include "chs/spec.hpp"

#include <random>
#include <vector>

namespace chs::testing {

inline std::mt19937& rng() {
    static std::mt19937 gen(20240611u);
    return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Random non-decreasing rows with m rows and all k <= max_k.
inline std::vector<Row> random_rows(std::size_t m, int max_k) {
    std::vector<Row> rows;
    int k = 1, h = 1;
    for (std::size_t i = 0; i < m; ++i) {
        int nk = uniform(k, max_k);
        int nh = uniform(h, nk);
        rows.push_back({nk, nh});
        k = nk;
        h = nh;
    }
    return rows;
}

inline ChsSpec random_monotonic(std::size_t max_rows, int max_k) {
    return validate_monotonic(random_rows(static_cast<std::size_t>(uniform(1, static_cast<int>(max_rows))), max_k));
}

/// Random turning spec; the lower half's last row is shifted to match the
/// upper turning row's length.
inline TurningChsSpec random_turning(std::size_t max_rows, int max_k) {
    for (;;) {
        auto up = random_rows(static_cast<std::size_t>(uniform(2, static_cast<int>(max_rows))), max_k);
        auto low = random_rows(static_cast<std::size_t>(uniform(2, static_cast<int>(max_rows))), max_k);
        const int len = up.back().k - up.back().h;
        Row& last = low.back();
        const Row& prev = low[low.size() - 2];
        // Keep k' and h' non-decreasing while forcing k'-h' = len.
        std::vector<int> choices;
        for (int h = prev.h; h + len <= max_k; ++h)
            if (h + len >= prev.k) choices.push_back(h);
        if (choices.empty()) continue;
        const int h = choices[static_cast<std::size_t>(uniform(0, static_cast<int>(choices.size()) - 1))];
        last = {h + len, h};
        return validate_turning(up, low);
    }
}

}  // namespace chs::testing
