#include "snake/exact_matrix.hpp"

#include <algorithm>
#include <utility>

#include "snake/errors.hpp"

namespace snake {

BigInt path_count(const TriDag& t, int u, int v) {
    t.node(u);
    t.node(v);
    // Node ids are sorted by (x, y) and every arc strictly increases x, so
    // id order is a topological order.
    std::vector<BigInt> count(t.nodes().size(), 0);
    count[static_cast<std::size_t>(u)] = 1;
    for (int id = u; id <= v; ++id) {
        if (count[static_cast<std::size_t>(id)] == 0) continue;
        for (int a : t.out_arcs(id)) {
            const TriArc& arc = t.arcs()[static_cast<std::size_t>(a)];
            count[static_cast<std::size_t>(arc.to)] += count[static_cast<std::size_t>(id)];
        }
    }
    return count[static_cast<std::size_t>(v)];
}

ExactMatrix path_matrix(const TriDag& t) {
    Terminals term = terminals(t);
    const int k = static_cast<int>(term.k());
    ExactMatrix m(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            m.at(i, j) = path_count(t, term.sources[static_cast<std::size_t>(i)],
                                    term.sinks[static_cast<std::size_t>(j)]);
    return m;
}

BigInt determinant(const ExactMatrix& m) {
    const int n = m.size();
    if (n == 0) return 1;

    ExactMatrix w = m;
    int sign = 1;
    BigInt prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            int pivot_row = -1;
            for (int r = k + 1; r < n; ++r) {
                if (w.at(r, k) != 0) {
                    pivot_row = r;
                    break;
                }
            }
            if (pivot_row < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(pivot_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                // Exact division: Bareiss guarantees the previous pivot
                // divides this product difference.
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign * w.at(n - 1, n - 1);
}

namespace {

// All paths source -> sink as arc-id lists, in lexicographic order (out-arc
// lists are ascending, so DFS emits them sorted).
std::vector<std::vector<int>> all_paths(const TriDag& t, int source, int sink) {
    std::vector<std::vector<int>> paths;
    std::vector<int> stack;
    auto dfs = [&](auto&& self, int at) -> void {
        if (at == sink) {
            paths.push_back(stack);
            return;
        }
        for (int a : t.out_arcs(at)) {
            stack.push_back(a);
            self(self, t.arcs()[static_cast<std::size_t>(a)].to);
            stack.pop_back();
        }
    };
    dfs(dfs, source);
    return paths;
}

std::vector<int> path_nodes(const TriDag& t, int source, const std::vector<int>& path) {
    std::vector<int> nodes{source};
    for (int a : path) nodes.push_back(t.arcs()[static_cast<std::size_t>(a)].to);
    return nodes;
}

}  // namespace

std::vector<Route> enumerate_routes(const TriDag& t, std::uint64_t cap) {
    Terminals term = terminals(t);
    const std::size_t k = term.k();

    std::vector<std::vector<std::vector<int>>> choices(k);
    for (std::size_t i = 0; i < k; ++i)
        choices[i] = all_paths(t, term.sources[i], term.sinks[i]);

    std::vector<Route> out;
    std::vector<char> used(t.nodes().size(), 0);
    Route current;
    current.paths.resize(k);

    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == k) {
            if (out.size() == cap) throw CapExceeded(cap);
            out.push_back(current);
            return;
        }
        for (const auto& path : choices[i]) {
            std::vector<int> nodes = path_nodes(t, term.sources[i], path);
            if (std::any_of(nodes.begin(), nodes.end(),
                            [&](int n) { return used[static_cast<std::size_t>(n)]; }))
                continue;
            for (int n : nodes) used[static_cast<std::size_t>(n)] = 1;
            current.paths[i] = path;
            self(self, i + 1);
            for (int n : nodes) used[static_cast<std::size_t>(n)] = 0;
        }
    };
    rec(rec, 0);

    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace snake
