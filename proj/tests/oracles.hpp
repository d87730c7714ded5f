// Test-only oracles. These deliberately use different algorithms from the
// library (selection masks, Pascal's triangle, bitmask subset scans) so they
// can arbitrate its results.
#ifndef ARS_TESTS_ORACLES_HPP
#define ARS_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

namespace oracles {

// Rows 0..n_max of Pascal's triangle via the additive recurrence.
inline std::vector<std::vector<std::uint64_t>> pascal_triangle(int n_max) {
    std::vector<std::vector<std::uint64_t>> rows(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        auto& row = rows[static_cast<std::size_t>(n)];
        row.assign(static_cast<std::size_t>(n) + 1, 1);
        for (int m = 1; m < n; ++m) {
            row[static_cast<std::size_t>(m)] =
                rows[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(m - 1)] +
                rows[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(m)];
        }
    }
    return rows;
}

// All c-element subsets of `labels` in ascending lexicographic order of
// member lists, generated by stepping a selection mask with prev_permutation.
inline std::vector<std::vector<std::int64_t>> lex_combinations(
    const std::vector<std::int64_t>& labels, int c) {
    std::vector<std::vector<std::int64_t>> result;
    const int k = static_cast<int>(labels.size());
    std::vector<char> mask(static_cast<std::size_t>(k), 0);
    std::fill(mask.begin(), mask.begin() + c, 1);
    do {
        std::vector<std::int64_t> members;
        for (int i = 0; i < k; ++i) {
            if (mask[static_cast<std::size_t>(i)]) members.push_back(labels[static_cast<std::size_t>(i)]);
        }
        result.push_back(std::move(members));
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return result;
}

// Nonempty subsets of a k-set, counted one bitmask at a time.
inline std::int64_t count_nonempty_subsets(int k) {
    std::int64_t count = 0;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << k); ++bits) ++count;
    return count;
}

} // namespace oracles

#endif // ARS_TESTS_ORACLES_HPP
