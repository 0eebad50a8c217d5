#pragma once

#include <cstdint>

#include "spshuffle/integer.hpp"

namespace spshuffle {

// C(a, b) for all integers a, b:
//   b < 0            -> 0
//   a >= 0           -> usual coefficient (0 when b > a)
//   a < 0, b >= 0    -> (-1)^b * multiset(-a, b)
Integer binomial_extended(std::int64_t a, std::int64_t b);

// Selections of k items from n kinds with repetition, C(n+k-1, k).
Integer multiset(std::int64_t n, std::int64_t k);

}  // namespace spshuffle
