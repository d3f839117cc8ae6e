#include "midlevels/common.hpp"

namespace midlevels {

std::uint64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t catalan(int k) {
    if (k < 0) throw UsageError("catalan: negative index");
    if (k > 33) throw UsageError("catalan: index too large for 64-bit result");
    return binom(2 * k, k) / static_cast<std::uint64_t>(k + 1);
}

} // namespace midlevels
