#pragma once

#include <cstdint>
#include <vector>

#include "snake/bigint.hpp"
#include "snake/tri_dag.hpp"

namespace snake {

/// Dense square matrix of arbitrary-precision integers, row-major.
class ExactMatrix {
public:
    ExactMatrix() = default;  // the 0x0 matrix
    explicit ExactMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n, 0) {}

    int size() const { return n_; }

    BigInt& at(int i, int j) { return entries_[index(i, j)]; }
    const BigInt& at(int i, int j) const { return entries_[index(i, j)]; }

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j);
    }

    int n_ = 0;
    std::vector<BigInt> entries_;
};

/// Number of directed paths from u to v; path_count(u, u) = 1.
BigInt path_count(const TriDag& t, int u, int v);

/// k x k matrix with entry (i,j) = number of paths from s_i to t_j.
ExactMatrix path_matrix(const TriDag& t);

/// Exact determinant by fraction-free Bareiss elimination. det of the 0x0
/// matrix is 1.
BigInt determinant(const ExactMatrix& m);

/// All k-routes, sorted lexicographically on their arc lists. Throws
/// CapExceeded once more than `cap` routes exist.
std::vector<Route> enumerate_routes(const TriDag& t, std::uint64_t cap);

}  // namespace snake
