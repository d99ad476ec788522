#pragma once

// Concrete loopless multigraphs on at most 8 nodes with edge multiplicities
// in {0,1,2}, plus the block machinery the C-tree predicate needs: a
// biconnectivity decomposition where a double edge forms a 2-cycle block.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ctrees {

inline constexpr int kMaxNodes = 8;
inline constexpr int kMaxPairs = kMaxNodes * (kMaxNodes - 1) / 2;

struct MultiGraph {
    int n = 0;
    std::array<uint8_t, kMaxPairs> mult{};  // upper triangle, pair_index order

    // Index of the unordered pair {i, j}, i < j, rows packed in order.
    static int pair_index(int i, int j) {
        return i * (2 * kMaxNodes - i - 1) / 2 + (j - i - 1);
    }

    uint8_t get(int i, int j) const {
        if (i == j) return 0;
        if (i > j) std::swap(i, j);
        return mult[pair_index(i, j)];
    }

    void set(int i, int j, uint8_t m) {
        if (i == j) throw std::invalid_argument("MultiGraph: no self-loops");
        if (i > j) std::swap(i, j);
        mult[pair_index(i, j)] = m;
    }

    int degree(int v) const {
        int d = 0;
        for (int u = 0; u < n; ++u) d += get(v, u);
        return d;
    }

    int edge_total() const {
        int e = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) e += get(i, j);
        return e;
    }

    uint8_t adjacency_mask(int v) const {
        uint8_t m = 0;
        for (int u = 0; u < n; ++u)
            if (u != v && get(v, u)) m |= uint8_t(1u << u);
        return m;
    }

    bool operator==(const MultiGraph& o) const = default;
};

inline bool is_connected(const MultiGraph& g) {
    if (g.n == 0) return false;
    uint8_t seen = 1;
    uint8_t frontier = 1;
    while (frontier) {
        uint8_t next = 0;
        for (int v = 0; v < g.n; ++v)
            if (frontier & (1u << v)) next |= g.adjacency_mask(v);
        frontier = uint8_t(next & ~seen);
        seen |= next;
    }
    return seen == uint8_t((1u << g.n) - 1);
}

struct Block {
    uint8_t node_mask = 0;
    int node_count = 0;
    int edge_count = 0;

    bool is_bridge() const { return edge_count == 1; }
    // A 2-connected block is a cycle iff #edges == #nodes (a double edge is
    // the 2-cycle: 2 nodes, 2 parallel edges).
    bool is_cycle() const { return edge_count >= 2 && edge_count == node_count; }
    int cycle_length() const { return node_count; }
};

struct BlockDecomposition {
    std::vector<Block> blocks;
    uint8_t cut_nodes = 0;  // bitmask
};

// Biconnected components over the expanded edge list (a double edge becomes
// two parallel edges, which the edge-indexed DFS keeps apart).
inline BlockDecomposition decompose_blocks(const MultiGraph& g) {
    struct Edge {
        int u, v;
    };
    std::vector<Edge> edges;
    std::array<std::vector<int>, kMaxNodes> incident;  // edge ids per node
    for (int i = 0; i < g.n; ++i) {
        for (int j = i + 1; j < g.n; ++j) {
            for (int m = 0; m < g.get(i, j); ++m) {
                int id = static_cast<int>(edges.size());
                edges.push_back({i, j});
                incident[i].push_back(id);
                incident[j].push_back(id);
            }
        }
    }

    BlockDecomposition result;
    std::array<int, kMaxNodes> depth{};
    std::array<int, kMaxNodes> low{};
    std::array<bool, kMaxNodes> visited{};
    std::vector<int> edge_stack;

    auto pop_block = [&](int until_edge) {
        Block b;
        while (true) {
            int e = edge_stack.back();
            edge_stack.pop_back();
            uint8_t m = uint8_t((1u << edges[e].u) | (1u << edges[e].v));
            b.node_mask |= m;
            ++b.edge_count;
            if (e == until_edge) break;
        }
        b.node_count = __builtin_popcount(b.node_mask);
        result.blocks.push_back(b);
    };

    // Iterative DFS; parent edge excluded by id so parallel edges register
    // as back edges.
    struct Frame {
        int v;
        int parent_edge;
        size_t next;
        int children = 0;
    };
    for (int root = 0; root < g.n; ++root) {
        if (visited[root]) continue;
        std::vector<Frame> stack;
        visited[root] = true;
        depth[root] = 0;
        low[root] = 0;
        stack.push_back({root, -1, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < incident[f.v].size()) {
                int e = incident[f.v][f.next++];
                if (e == f.parent_edge) continue;
                int w = edges[e].u == f.v ? edges[e].v : edges[e].u;
                if (!visited[w]) {
                    edge_stack.push_back(e);
                    visited[w] = true;
                    depth[w] = depth[f.v] + 1;
                    low[w] = depth[w];
                    ++f.children;
                    stack.push_back({w, e, 0});
                } else if (depth[w] < depth[f.v]) {
                    edge_stack.push_back(e);
                    if (depth[w] < low[f.v]) low[f.v] = depth[w];
                }
            } else {
                Frame done = f;
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& p = stack.back();
                    if (low[done.v] < low[p.v]) low[p.v] = low[done.v];
                    if (low[done.v] >= depth[p.v]) {
                        // p.v separates the subtree below done.v
                        pop_block(done.parent_edge);
                        bool is_root = stack.size() == 1;
                        if ((!is_root) || p.children > 1) result.cut_nodes |= uint8_t(1u << p.v);
                    }
                }
            }
        }
    }
    return result;
}

inline bool is_ctree(const MultiGraph& g) {
    if (g.n < 1) return false;
    if (!is_connected(g)) return false;
    BlockDecomposition d = decompose_blocks(g);
    uint8_t in_cycle = 0;
    for (const Block& b : d.blocks) {
        if (b.is_bridge()) continue;
        if (!b.is_cycle()) return false;
        // no node may belong to two cycle blocks
        if (in_cycle & b.node_mask) return false;
        in_cycle |= b.node_mask;
    }
    return true;
}

// Contract each cycle block to a single node; the bridges become the edges
// of the resulting skeleton tree.
inline MultiGraph skeleton(const MultiGraph& g) {
    if (!is_ctree(g)) throw std::invalid_argument("skeleton: input is not a C-tree");
    BlockDecomposition d = decompose_blocks(g);
    std::array<int, kMaxNodes> super{};
    super.fill(-1);
    int next_id = 0;
    for (const Block& b : d.blocks) {
        if (!b.is_cycle()) continue;
        for (int v = 0; v < g.n; ++v)
            if (b.node_mask & (1u << v)) super[v] = next_id;
        ++next_id;
    }
    for (int v = 0; v < g.n; ++v)
        if (super[v] < 0) super[v] = next_id++;
    MultiGraph t;
    t.n = next_id;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.get(i, j) == 1 && super[i] != super[j]) t.set(super[i], super[j], 1);
    return t;
}

}  // namespace ctrees
