#include "midlevels/words.hpp"

namespace midlevels {

std::uint64_t aleph_word(std::uint64_t w, int n) {
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i) {
        if (!((w >> (n - 1 - i)) & 1u)) r |= 1ull << i;
    }
    return r;
}

std::uint64_t min_rotation(std::uint64_t w, int n) { return translate(w, min_rotation_shift(w, n), n); }

int min_rotation_shift(std::uint64_t w, int n) {
    int best_r = 0;
    std::uint64_t best = w;
    for (int r = 1; r < n; ++r) {
        std::uint64_t cand = translate(w, r, n);
        if (word_str_less(cand, best)) {
            best = cand;
            best_r = r;
        }
    }
    return best_r;
}

std::string word_str(std::uint64_t w, int n) {
    std::string s;
    s.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s.push_back(((w >> i) & 1u) ? '1' : '0');
    return s;
}

std::uint64_t word_from_str(const std::string& s) {
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == '1') w |= 1ull << i;
    return w;
}

} // namespace midlevels
