#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "clutterkit/binary_space.hpp"
#include "clutterkit/bitvector.hpp"

namespace clutterkit {

/// Undirected multigraph. Vertices are 1..vertex_count; loops and parallel
/// edges are allowed, and a loop counts as incident to no vertex for parity
/// purposes. Edge labels are 1..m in list order.
struct Graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    static Graph of(int vertices, std::vector<std::pair<int, int>> edge_list) {
        if (vertices < 0) throw std::invalid_argument("graph: negative vertex count");
        for (auto& [u, v] : edge_list) {
            if (u < 1 || u > vertices || v < 1 || v > vertices)
                throw std::invalid_argument("graph: edge endpoint out of range");
            if (u > v) std::swap(u, v);
        }
        return Graph{vertices, std::move(edge_list)};
    }

    int edge_count() const { return static_cast<int>(edges.size()); }

    bool is_loop(int edge_label) const {
        const auto& e = edges.at(static_cast<std::size_t>(edge_label - 1));
        return e.first == e.second;
    }
};

/// Is the edge set a cycle, i.e. does every vertex meet an even number of its
/// edges? Loops never affect parity.
inline bool is_graph_cycle(const Graph& g, const BitVector& edge_set) {
    if (edge_set.width() != g.edge_count()) throw std::invalid_argument("is_graph_cycle: width mismatch");
    std::vector<int> degree(static_cast<std::size_t>(g.vertex_count) + 1, 0);
    for (int e : edge_set.support()) {
        const auto& [u, v] = g.edges[static_cast<std::size_t>(e)];
        if (u == v) continue;
        ++degree[static_cast<std::size_t>(u)];
        ++degree[static_cast<std::size_t>(v)];
    }
    for (int d : degree)
        if (d % 2) return false;
    return true;
}

/// Span of the fundamental cycles of a depth-first forest (roots and neighbour
/// edges in ascending label order).
inline BinarySpace cycle_space(const Graph& g) {
    int m = g.edge_count();
    std::vector<std::vector<std::pair<int, int>>> adjacent(static_cast<std::size_t>(g.vertex_count) + 1);
    for (int e = 0; e < m; ++e) {
        const auto& [u, v] = g.edges[static_cast<std::size_t>(e)];
        if (u == v) continue;
        adjacent[static_cast<std::size_t>(u)].emplace_back(e, v);
        adjacent[static_cast<std::size_t>(v)].emplace_back(e, u);
    }

    std::vector<BitVector> to_root(static_cast<std::size_t>(g.vertex_count) + 1, BitVector(m));
    std::vector<bool> visited(static_cast<std::size_t>(g.vertex_count) + 1, false);
    std::vector<bool> tree_edge(static_cast<std::size_t>(m), false);

    for (int root = 1; root <= g.vertex_count; ++root) {
        if (visited[static_cast<std::size_t>(root)]) continue;
        visited[static_cast<std::size_t>(root)] = true;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (const auto& [e, w] : adjacent[static_cast<std::size_t>(u)]) {
                if (visited[static_cast<std::size_t>(w)]) continue;
                visited[static_cast<std::size_t>(w)] = true;
                tree_edge[static_cast<std::size_t>(e)] = true;
                to_root[static_cast<std::size_t>(w)] = to_root[static_cast<std::size_t>(u)];
                to_root[static_cast<std::size_t>(w)].set(e, true);
                stack.push_back(w);
            }
        }
    }

    std::vector<BitVector> generators;
    for (int e = 0; e < m; ++e) {
        if (tree_edge[static_cast<std::size_t>(e)]) continue;
        const auto& [u, v] = g.edges[static_cast<std::size_t>(e)];
        BitVector cyc = to_root[static_cast<std::size_t>(u)] ^ to_root[static_cast<std::size_t>(v)];
        cyc.set(e, true);
        generators.push_back(std::move(cyc));
    }
    return BinarySpace::span(m, generators);
}

/// Edges lying in no cycle (1-based labels).
inline std::vector<int> bridges(const Graph& g) {
    BinarySpace space = cycle_space(g);
    BitVector seen(g.edge_count());
    for (const auto& row : space.basis()) seen |= row;
    std::vector<int> out;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!seen.get(e)) out.push_back(e + 1);
    return out;
}

/// delta(X): edges with exactly one end in X. Loops are never cut edges.
inline BitVector cut(const Graph& g, const std::vector<int>& vertex_set) {
    std::vector<bool> in(static_cast<std::size_t>(g.vertex_count) + 1, false);
    for (int v : vertex_set) {
        if (v < 1 || v > g.vertex_count) throw std::invalid_argument("cut: vertex out of range");
        in[static_cast<std::size_t>(v)] = true;
    }
    BitVector out(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& [u, v] = g.edges[static_cast<std::size_t>(e)];
        if (in[static_cast<std::size_t>(u)] != in[static_cast<std::size_t>(v)]) out.set(e, true);
    }
    return out;
}

// Fixture graphs. The Petersen labeling is fixed so expected outputs are
// reproducible: outer 5-cycle on vertices 1..5 (edges 1..5), inner pentagram
// on 6..10 (edges 6..10), spokes i -- i+5 (edges 11..15).
inline Graph petersen() {
    return Graph::of(10, {{1, 2},
                          {2, 3},
                          {3, 4},
                          {4, 5},
                          {1, 5},
                          {6, 8},
                          {6, 9},
                          {7, 9},
                          {7, 10},
                          {8, 10},
                          {1, 6},
                          {2, 7},
                          {3, 8},
                          {4, 9},
                          {5, 10}});
}

inline Graph complete_graph(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= k; ++u)
        for (int v = u + 1; v <= k; ++v) edges.emplace_back(u, v);
    return Graph::of(k, std::move(edges));
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= a; ++u)
        for (int v = a + 1; v <= a + b; ++v) edges.emplace_back(u, v);
    return Graph::of(a + b, std::move(edges));
}

inline Graph triangular_prism() {
    return Graph::of(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {1, 4}, {2, 5}, {3, 6}});
}

/// Two triangles sharing one vertex.
inline Graph bowtie() {
    return Graph::of(5, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}});
}

/// The Wagner graph V8: an 8-cycle 1..8 plus the chords {i, i+4}.
inline Graph wagner_graph() {
    return Graph::of(8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {1, 8},
                         {1, 5}, {2, 6}, {3, 7}, {4, 8}});
}

}  // namespace clutterkit
