#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "snake/bigint.hpp"
#include "snake/exact_matrix.hpp"

namespace snake {

struct SequenceKind {
    enum class Tag { Catalan, Fibonacci, Pell, Custom };

    Tag tag{Tag::Catalan};
    std::vector<BigInt> custom;  // used only when tag == Custom

    static SequenceKind catalan() { return {Tag::Catalan, {}}; }
    static SequenceKind fibonacci() { return {Tag::Fibonacci, {}}; }
    static SequenceKind pell() { return {Tag::Pell, {}}; }
    static SequenceKind custom_terms(std::vector<BigInt> terms) {
        return {Tag::Custom, std::move(terms)};
    }
};

/// n-th term, exact. Custom sequences throw IndexOutOfRange past their end.
BigInt sequence(const SequenceKind& kind, std::size_t n);

/// Hankel matrix over the sequence: entry (i,j) = b_{i+j-2} (unshifted,
/// H_n) or b_{i+j-1} (shifted, H'_n), for 1-based i, j.
ExactMatrix hankel(const SequenceKind& kind, int n, bool shifted);

/// H_k(C) + H'_k(C), minus E_{k,k} in the even case. Determinants are
/// F_{2k+1} (odd) and F_{2k} (even).
ExactMatrix hankel_sum_matrix(int k, bool even_case);

/// Closed form of the path matrix of the vertical ladder L_{2k-1} (odd
/// case) or L_{2k-2} (even case): tridiagonal with F_2 off the diagonal and
/// F_3 / F_4 on it. The even case at k = 1 is the empty ladder, hence the
/// 0x0 matrix.
ExactMatrix ladder_closed_form_matrix(int k, bool even_case);

/// Closed form of the path matrix of G_h(l_1, 2, l_2, 2, ..., 2, l_k):
/// diagonal F_{l_i+2}, subdiagonal F_2, upper entries
/// F_{l_i+1} F_{l_j+1} prod F_{l_r}, zero elsewhere. Requires every l >= 2.
ExactMatrix general_fib_matrix(std::span<const int> lengths);

/// The Pell matrices M_k (odd case, det P_{2k+1}) and M'_k (even case,
/// det P_{2k}).
ExactMatrix pell_matrix(int k, bool odd_case);

struct IdentityReport {
    std::string identity;
    std::string parameter;
    BigInt left;
    BigInt right;
    bool holds{};
    std::string note;  // extra cross-checks performed, if any

    friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

/// Known identity names:
///   catalan-fib-odd, catalan-fib-even, ladder-odd, ladder-even,
///   hankel-shift-unit, general-fib, pell-odd, pell-even.
const std::vector<std::string>& identity_names();

/// Checks one identity for every parameter up to k_max, each side computed
/// by an independent route (closed-form determinant vs. sequence value,
/// plus the actual path matrix of the corresponding snake graph where one
/// exists). Throws UnknownIdentity for other names.
std::vector<IdentityReport> verify_identity(std::string_view name, int k_max);

}  // namespace snake
