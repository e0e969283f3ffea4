#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace testutil {

// Log-spaced grid including both endpoints. Matches the grid the analysis
// CLI produces for `table --log`.
inline std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> grid;
    grid.reserve(n);
    const double log_lo = std::log(lo);
    const double log_hi = std::log(hi);
    for (int i = 0; i < n; ++i) {
        const double t = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
        grid.push_back(std::exp(log_lo + t * (log_hi - log_lo)));
    }
    return grid;
}

// After sorting, a prefix and its extension become neighbors, so checking
// adjacent pairs covers all pairs in O(n log n) instead of O(n^2).
inline bool is_prefix_free(std::vector<std::string> words) {
    std::sort(words.begin(), words.end());
    for (std::size_t i = 0; i + 1 < words.size(); ++i) {
        const std::string& a = words[i];
        const std::string& b = words[i + 1];
        if (a.size() <= b.size() && b.compare(0, a.size(), a) == 0) return false;
    }
    return true;
}

}  // namespace testutil
