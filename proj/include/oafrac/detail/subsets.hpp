#pragma once

#include <vector>

namespace oafrac::detail {

inline std::vector<int> first_subset(int t) {
    std::vector<int> c(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i) c[static_cast<size_t>(i)] = i;
    return c;
}

/// Advance `c` to the next size-|c| subset of {0..n-1} in lexicographic
/// order; returns false when `c` was the last one.
inline bool next_subset(std::vector<int>& c, int n) {
    int t = static_cast<int>(c.size());
    int i = t - 1;
    while (i >= 0 && c[static_cast<size_t>(i)] == n - t + i) --i;
    if (i < 0) return false;
    ++c[static_cast<size_t>(i)];
    for (int j = i + 1; j < t; ++j) c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
    return true;
}

}  // namespace oafrac::detail
