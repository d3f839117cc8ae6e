#ifndef MIDLEVELS_COMMON_HPP
#define MIDLEVELS_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace midlevels {

// Binomial coefficient; exact in 64 bits for n <= 62.
std::uint64_t binom(int n, int k);

// k-th Catalan number C_k = binom(2k,k)/(k+1); exact for k <= 33.
std::uint64_t catalan(int k);

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace midlevels

#endif
