#include "snake/sequences.hpp"

#include <mutex>
#include <vector>

namespace snake {

namespace {

template <typename Extend>
BigInt memo_term(std::vector<BigInt>& memo, std::mutex& mu, std::size_t n, Extend extend) {
    std::lock_guard<std::mutex> lock(mu);
    while (memo.size() <= n) extend(memo);
    return memo[n];
}

}  // namespace

BigInt catalan_number(std::size_t n) {
    static std::vector<BigInt> memo{BigInt(1)};
    static std::mutex mu;
    return memo_term(memo, mu, n, [](std::vector<BigInt>& m) {
        // C_{k+1} = sum C_i C_{k-i} with k = m.size()-1
        BigInt next = 0;
        const std::size_t k = m.size() - 1;
        for (std::size_t i = 0; i <= k; ++i) next += m[i] * m[k - i];
        m.push_back(std::move(next));
    });
}

BigInt fibonacci_number(std::size_t n) {
    static std::vector<BigInt> memo{BigInt(0), BigInt(1)};
    static std::mutex mu;
    return memo_term(memo, mu, n, [](std::vector<BigInt>& m) {
        m.push_back(m[m.size() - 1] + m[m.size() - 2]);
    });
}

BigInt pell_number(std::size_t n) {
    static std::vector<BigInt> memo{BigInt(0), BigInt(1)};
    static std::mutex mu;
    return memo_term(memo, mu, n, [](std::vector<BigInt>& m) {
        m.push_back(2 * m[m.size() - 1] + m[m.size() - 2]);
    });
}

}  // namespace snake
