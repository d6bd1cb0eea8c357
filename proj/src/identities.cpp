#include "snake/identities.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>

#include "snake/errors.hpp"
#include "snake/matchings.hpp"
#include "snake/sequences.hpp"
#include "snake/snake_graph.hpp"
#include "snake/tri_dag.hpp"

namespace snake {

BigInt sequence(const SequenceKind& kind, std::size_t n) {
    switch (kind.tag) {
        case SequenceKind::Tag::Catalan:
            return catalan_number(n);
        case SequenceKind::Tag::Fibonacci:
            return fibonacci_number(n);
        case SequenceKind::Tag::Pell:
            return pell_number(n);
        case SequenceKind::Tag::Custom:
            if (n >= kind.custom.size()) throw IndexOutOfRange(n, kind.custom.size());
            return kind.custom[n];
    }
    throw UnknownIdentity("unreachable sequence tag");
}

ExactMatrix hankel(const SequenceKind& kind, int n, bool shifted) {
    ExactMatrix m(n);
    const std::size_t offset = shifted ? 1 : 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m.at(i - 1, j - 1) =
                sequence(kind, static_cast<std::size_t>(i + j) - 2 + offset);
    return m;
}

ExactMatrix hankel_sum_matrix(int k, bool even_case) {
    ExactMatrix m(k);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            const std::size_t base = static_cast<std::size_t>(i + j) - 2;
            m.at(i - 1, j - 1) = catalan_number(base) + catalan_number(base + 1);
        }
    if (even_case) m.at(k - 1, k - 1) -= 1;
    return m;
}

ExactMatrix ladder_closed_form_matrix(int k, bool even_case) {
    if (even_case && k == 1) return ExactMatrix();  // L_0: no graph, 0x0 matrix
    ExactMatrix m(k);
    for (int i = 0; i < k; ++i) {
        const bool corner = (i == 0) || (even_case && i == k - 1);
        m.at(i, i) = corner ? fibonacci_number(3) : fibonacci_number(4);
        if (i + 1 < k) {
            m.at(i, i + 1) = fibonacci_number(2);
            m.at(i + 1, i) = fibonacci_number(2);
        }
    }
    return m;
}

ExactMatrix general_fib_matrix(std::span<const int> lengths) {
    if (lengths.empty()) throw BadChainLength("no chain lengths given");
    for (int l : lengths)
        if (l < 2) throw BadChainLength("length " + std::to_string(l) + " is < 2");

    const int k = static_cast<int>(lengths.size());
    ExactMatrix m(k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            const auto li = static_cast<std::size_t>(lengths[static_cast<std::size_t>(i)]);
            const auto lj = static_cast<std::size_t>(lengths[static_cast<std::size_t>(j)]);
            if (i == j) {
                m.at(i, j) = fibonacci_number(li + 2);
            } else if (i == j + 1) {
                m.at(i, j) = fibonacci_number(2);
            } else if (i < j) {
                BigInt prod = fibonacci_number(li + 1) * fibonacci_number(lj + 1);
                for (int r = i + 1; r < j; ++r)
                    prod *= fibonacci_number(
                        static_cast<std::size_t>(lengths[static_cast<std::size_t>(r)]));
                m.at(i, j) = prod;
            }  // else F_0 = 0
        }
    }
    return m;
}

ExactMatrix pell_matrix(int k, bool odd_case) {
    const BigInt f2 = fibonacci_number(2), f3 = fibonacci_number(3), f4 = fibonacci_number(4),
                 f5 = fibonacci_number(5);
    if (!odd_case && k == 1) {
        // Degenerate: the underlying graph of M'_1 is the single tile
        // (continued fraction [2]); its path matrix is [[2]] with det P_2.
        ExactMatrix m(1);
        m.at(0, 0) = f3;
        return m;
    }
    ExactMatrix m(k);
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
            BigInt& e = m.at(i - 1, j - 1);
            if (odd_case) {
                if (i == 1 && j == 1)
                    e = f5;
                else if (i == j)
                    e = f5 + f3;
                else if (i == 1 && j > 1)
                    e = f4 * f3;
                else if (i < j)
                    e = (f4 + f2) * f3;
                else if (i == j + 1)
                    e = f2;
            } else {
                if (i == 1 && j == 1)
                    e = f5;
                else if (i == j && j < k)
                    e = f5 + f3;
                else if (i == 1 && j > 1 && j < k)
                    e = f4 * f3;
                else if (i < j && j < k)
                    e = (f4 + f2) * f3;
                else if (j == k && i > 1 && i < k)
                    e = f4 + f2;
                else if (j == k && (i == 1 || i == k))
                    e = f4;
                else if (i == j + 1)
                    e = f2;
            }
        }
    }
    return m;
}

namespace {

std::string param_k(int k) { return "k=" + std::to_string(k); }

IdentityReport report(std::string identity, std::string parameter, BigInt left, BigInt right,
                      std::string note = {}) {
    const bool holds = left == right;
    return IdentityReport{std::move(identity), std::move(parameter), std::move(left),
                          std::move(right), holds, std::move(note)};
}

SnakeGraph vertical_ladder(int n) {
    return SnakeGraph::from_word(std::string(static_cast<std::size_t>(n - 1), 'U'));
}

// G_h(l_1, 2, l_2, 2, ..., 2, l_k)
SnakeGraph hourglass_family_graph(std::span<const int> lengths) {
    ChainSpec spec;
    spec.orientation = Orientation::Horizontal;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        if (i > 0) spec.lengths.push_back(2);
        spec.lengths.push_back(lengths[i]);
    }
    return snake_from_chains(spec);
}

// Path matrices of the contractions whose terminal count is exactly k.
// Not every length tuple admits a single assignment with k terminals (the
// hourglass condition is a parity constraint on prefix sums), so this list
// may be empty; for the Pell family both assignments qualify.
std::vector<std::pair<Assignment, ExactMatrix>> path_matrices_with_terminals(
    const SnakeGraph& g, std::size_t k) {
    std::vector<std::pair<Assignment, ExactMatrix>> out;
    for (Assignment a : {Assignment::Standard, Assignment::Opposite}) {
        TriDag t = contract(g, a);
        if (terminals(t).k() == k) out.emplace_back(a, path_matrix(t));
    }
    return out;
}

void verify_catalan_fib(std::vector<IdentityReport>& out, int k_max, bool even_case) {
    const std::string name = even_case ? "catalan-fib-even" : "catalan-fib-odd";
    for (int k = 1; k <= k_max; ++k) {
        BigInt det = determinant(hankel_sum_matrix(k, even_case));
        BigInt fib = fibonacci_number(static_cast<std::size_t>(even_case ? 2 * k : 2 * k + 1));
        out.push_back(report(name, param_k(k), std::move(det), std::move(fib)));
    }
}

void verify_ladder(std::vector<IdentityReport>& out, int k_max, bool even_case) {
    const std::string name = even_case ? "ladder-even" : "ladder-odd";
    for (int k = 1; k <= k_max; ++k) {
        ExactMatrix closed = ladder_closed_form_matrix(k, even_case);
        BigInt det = determinant(closed);
        BigInt fib = fibonacci_number(static_cast<std::size_t>(even_case ? 2 * k : 2 * k + 1));
        const int tiles = even_case ? 2 * k - 2 : 2 * k - 1;
        std::string note;
        bool graph_ok = true;
        if (tiles >= 1) {
            ExactMatrix from_graph = path_matrix(contract(vertical_ladder(tiles)));
            graph_ok = (from_graph == closed);
            note = graph_ok ? "matches path matrix of vertical L_" + std::to_string(tiles)
                            : "path matrix of vertical L_" + std::to_string(tiles) + " differs";
        } else {
            note = "L_0 is empty; closed form is the 0x0 matrix";
        }
        IdentityReport r = report(name, param_k(k), std::move(det), std::move(fib),
                                  std::move(note));
        r.holds = r.holds && graph_ok;
        out.push_back(std::move(r));
    }
}

void verify_hankel_shift_unit(std::vector<IdentityReport>& out, int k_max) {
    for (int n = 1; n <= k_max; ++n) {
        BigInt det = determinant(hankel(SequenceKind::catalan(), n, true));
        out.push_back(report("hankel-shift-unit", "n=" + std::to_string(n), std::move(det), 1));
    }
}

void tuples_up_to(int k, int lo, int hi, std::vector<int>& cur,
                  const std::function<void(std::span<const int>)>& fn) {
    if (static_cast<int>(cur.size()) == k) {
        fn(cur);
        return;
    }
    for (int l = lo; l <= hi; ++l) {
        cur.push_back(l);
        tuples_up_to(k, lo, hi, cur, fn);
        cur.pop_back();
    }
}

void verify_general_fib(std::vector<IdentityReport>& out, int k_max) {
    for (int k = 1; k <= k_max; ++k) {
        std::vector<int> cur;
        tuples_up_to(k, 2, 5, cur, [&](std::span<const int> lengths) {
            std::string param = "l=[";
            for (std::size_t i = 0; i < lengths.size(); ++i) {
                if (i > 0) param += ',';
                param += std::to_string(lengths[i]);
            }
            param += ']';

            ExactMatrix closed = general_fib_matrix(lengths);
            SnakeGraph g = hourglass_family_graph(lengths);
            BigInt det = determinant(closed);
            BigInt count = count_matchings(g);

            auto candidates = path_matrices_with_terminals(g, lengths.size());
            bool matrix_ok = true;
            std::string note;
            if (!candidates.empty()) {
                matrix_ok = std::any_of(candidates.begin(), candidates.end(),
                                        [&](const auto& c) { return c.second == closed; });
                note = matrix_ok ? "path matrix with k terminals matches"
                                 : "path matrix with k terminals DIFFERS";
            } else {
                note = "no single assignment yields k terminals "
                       "(hourglass hypothesis needs mixed contractions); "
                       "determinant identity still checked";
            }
            IdentityReport r =
                report("general-fib", std::move(param), std::move(det), std::move(count),
                       std::move(note));
            r.holds = r.holds && matrix_ok;
            out.push_back(std::move(r));
        });
    }
}

void verify_pell(std::vector<IdentityReport>& out, int k_max, bool odd_case) {
    const std::string name = odd_case ? "pell-odd" : "pell-even";
    for (int k = 1; k <= k_max; ++k) {
        ExactMatrix m = pell_matrix(k, odd_case);
        BigInt det = determinant(m);
        BigInt pell = pell_number(static_cast<std::size_t>(odd_case ? 2 * k + 1 : 2 * k));

        // Same value must come out of the continuant of the all-2 continued
        // fraction of length 2k (odd) or 2k-1 (even).
        ContinuedFraction cf{std::vector<int>(static_cast<std::size_t>(odd_case ? 2 * k : 2 * k - 1),
                                              2)};
        BigInt continuant = cf_numerator(cf);

        // And the matrix itself is the path matrix of that graph's
        // triangular snake graph.
        SnakeGraph g = snake_from_cf(cf);
        auto candidates = path_matrices_with_terminals(g, static_cast<std::size_t>(m.size()));
        const bool matrix_ok =
            std::any_of(candidates.begin(), candidates.end(),
                        [&](const auto& c) { return c.second == m; });

        std::string note = "continuant of " + format_cf(cf) + " = " + continuant.str() +
                           (matrix_ok ? "; path matrix matches" : "; path matrix DIFFERS");
        IdentityReport r = report(name, param_k(k), std::move(det), std::move(pell),
                                  std::move(note));
        r.holds = r.holds && continuant == r.right && matrix_ok;
        out.push_back(std::move(r));
    }
}

}  // namespace

const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names = {
        "catalan-fib-odd", "catalan-fib-even", "ladder-odd",
        "ladder-even",     "hankel-shift-unit", "general-fib",
        "pell-odd",        "pell-even"};
    return names;
}

std::vector<IdentityReport> verify_identity(std::string_view name, int k_max) {
    std::vector<IdentityReport> out;
    if (name == "catalan-fib-odd") {
        verify_catalan_fib(out, k_max, false);
    } else if (name == "catalan-fib-even") {
        verify_catalan_fib(out, k_max, true);
    } else if (name == "ladder-odd") {
        verify_ladder(out, k_max, false);
    } else if (name == "ladder-even") {
        verify_ladder(out, k_max, true);
    } else if (name == "hankel-shift-unit") {
        verify_hankel_shift_unit(out, k_max);
    } else if (name == "general-fib") {
        verify_general_fib(out, std::min(k_max, 3));
    } else if (name == "pell-odd") {
        verify_pell(out, k_max, true);
    } else if (name == "pell-even") {
        verify_pell(out, k_max, false);
    } else {
        throw UnknownIdentity(std::string(name));
    }
    return out;
}

}  // namespace snake
