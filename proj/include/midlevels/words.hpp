#ifndef MIDLEVELS_WORDS_HPP
#define MIDLEVELS_WORDS_HPP

#include <bit>
#include <cstdint>

#include "midlevels/treecodec.hpp"

namespace midlevels {

// Binary n-tuples b_0 b_1 ... b_{n-1} are held in the low n bits of a
// 64-bit word, bit i = position i. All helpers below work modulo n.

inline int weight(std::uint64_t w) { return std::popcount(w); }

inline std::uint64_t word_mask(int n) { return (n == 64) ? ~0ull : (1ull << n) - 1; }

// Translation mod n: position j of the input lands at position (j+i) mod n.
inline std::uint64_t translate(std::uint64_t w, int i, int n) {
    i %= n;
    if (i < 0) i += n;
    if (i == 0) return w;
    return ((w << i) | (w >> (n - i))) & word_mask(n);
}

// Complemented reversal: bit i of the result = complement of bit n-1-i.
std::uint64_t aleph_word(std::uint64_t w, int n);

// b_0 b_1 ... b_{n-1} reads as a string with b_0 first; this order on words
// is what "lexicographically least" means below.
inline bool word_str_less(std::uint64_t a, std::uint64_t b) {
    std::uint64_t d = a ^ b;
    if (!d) return false;
    return !((a >> std::countr_zero(d)) & 1u);
}

// Canonical necklace representative: lexicographically least rotation.
std::uint64_t min_rotation(std::uint64_t w, int n);

// Rotation index r minimizing translate(w, r); canonical = translate(w, r).
int min_rotation_shift(std::uint64_t w, int n);

std::string word_str(std::uint64_t w, int n);
std::uint64_t word_from_str(const std::string& s);

inline BinaryWord as_binary_word(std::uint64_t w, int n) { return BinaryWord{w, n}; }

} // namespace midlevels

#endif
