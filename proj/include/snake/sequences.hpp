#pragma once

#include <cstddef>

#include "snake/bigint.hpp"

namespace snake {

// Memoized classical sequences. The memo tables are append-only and
// guarded, so the functions can be called from concurrent tasks.

/// C_0 = 1, C_{n+1} = sum_{i=0..n} C_i C_{n-i}.
BigInt catalan_number(std::size_t n);

/// F_0 = 0, F_1 = 1, F_{n+1} = F_n + F_{n-1}.
BigInt fibonacci_number(std::size_t n);

/// P_0 = 0, P_1 = 1, P_n = 2 P_{n-1} + P_{n-2}.
BigInt pell_number(std::size_t n);

}  // namespace snake
