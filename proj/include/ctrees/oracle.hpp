#pragma once

// Brute-force enumeration of C-trees on few nodes, fully independent of the
// series pipeline.  Candidates are exhaustive multiplicity assignments,
// filtered by edge count and connectivity before the block predicate, then
// reduced to one canonical representative per isomorphism class.
//
// Canonical keys minimize the multiplicity matrix (and any mark bytes)
// lexicographically over the relabelings that sort node degrees, which both
// prunes the permutation search and keeps keys isomorphism-invariant.

#include <ctrees/multigraph.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace ctrees {

struct CanonicalForm {
    std::vector<uint8_t> key;
    auto operator<=>(const CanonicalForm&) const = default;
};

namespace detail {

// Marks are encoded as permutation-covariant bytes appended to the matrix key.
enum class MarkKind { none, node, node_set, edge, directed_edge };

struct Mark {
    MarkKind kind = MarkKind::none;
    int a = 0, b = 0;      // node / edge endpoints
    uint8_t mask = 0;      // node set

    void append(std::vector<uint8_t>& key, const int* perm) const {
        switch (kind) {
            case MarkKind::none:
                break;
            case MarkKind::node:
                key.push_back(uint8_t(perm[a]));
                break;
            case MarkKind::node_set: {
                uint8_t m = 0;
                for (int v = 0; v < kMaxNodes; ++v)
                    if (mask & (1u << v)) m |= uint8_t(1u << perm[v]);
                key.push_back(m);
                break;
            }
            case MarkKind::edge: {
                uint8_t pa = uint8_t(perm[a]), pb = uint8_t(perm[b]);
                key.push_back(std::min(pa, pb));
                key.push_back(std::max(pa, pb));
                break;
            }
            case MarkKind::directed_edge:
                key.push_back(uint8_t(perm[a]));
                key.push_back(uint8_t(perm[b]));
                break;
        }
    }
};

// Enumerate the permutations that place the nodes in non-increasing degree
// order (any two nodes with equal degree may still swap), and take the
// lexicographically least (matrix, mark) encoding.
inline CanonicalForm canonical_key(const MultiGraph& g, const Mark& mark) {
    int n = g.n;
    std::vector<int> by_degree(n);
    for (int v = 0; v < n; ++v) by_degree[v] = v;
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
        return deg[a] != deg[b] ? deg[a] > deg[b] : a < b;
    });

    // group nodes of equal degree; positions are assigned group by group
    std::vector<std::vector<int>> groups;
    for (int idx = 0; idx < n; ++idx) {
        if (idx == 0 || deg[by_degree[idx]] != deg[by_degree[idx - 1]])
            groups.emplace_back();
        groups.back().push_back(by_degree[idx]);
    }

    std::vector<uint8_t> best;
    std::vector<uint8_t> cur;
    int perm[kMaxNodes];  // perm[old] = new position
    auto consider = [&]() {
        int pos = 0;
        for (const auto& grp : groups)
            for (int v : grp) perm[v] = pos++;
        cur.clear();
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                // entry for new pair (i, j); find old labels
                cur.push_back(0);
            }
        }
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                uint8_t m = g.mult[MultiGraph::pair_index(u, v)];
                if (!m) continue;
                int pu = perm[u], pv = perm[v];
                if (pu > pv) std::swap(pu, pv);
                cur[static_cast<size_t>(pu * (2 * n - pu - 1) / 2 + (pv - pu - 1))] = m;
            }
        mark.append(cur, perm);
        if (best.empty() || cur < best) best = cur;
    };

    // odometer over per-group permutations
    for (auto& grp : groups) std::sort(grp.begin(), grp.end());
    while (true) {
        consider();
        int gi = static_cast<int>(groups.size()) - 1;
        while (gi >= 0 && !std::next_permutation(groups[gi].begin(), groups[gi].end()))
            --gi;
        if (gi < 0) break;
    }
    best.insert(best.begin(), uint8_t(n));
    return CanonicalForm{std::move(best)};
}

}  // namespace detail

inline CanonicalForm canonical_form(const MultiGraph& g) {
    if (g.n > kMaxNodes) throw std::invalid_argument("canonical_form: too many nodes");
    return detail::canonical_key(g, {});
}

struct VariantCaps {
    static int max_nodes(bool allow_two_cycles) { return allow_two_cycles ? 6 : 7; }
};

namespace detail {

inline void check_cap(int n, bool allow_two_cycles) {
    int cap = VariantCaps::max_nodes(allow_two_cycles);
    if (n < 1 || n > cap) {
        std::ostringstream os;
        os << "oracle: n=" << n << " outside supported range 1.." << cap
           << (allow_two_cycles ? " (double edges allowed)" : " (simple graphs)");
        throw std::invalid_argument(os.str());
    }
}

}  // namespace detail

namespace detail {

inline std::vector<MultiGraph> enumerate_ctrees_impl(int n, bool allow_two_cycles) {
    int pairs = n * (n - 1) / 2;
    int max_mult = allow_two_cycles ? 2 : 1;
    // a C-tree has n-1 bridges-or-cycle-edges minimum and at most
    // n-1 + floor(n/2) edges in total (each extra edge closes one cycle)
    int max_edges = n - 1 + n / 2;

    std::set<CanonicalForm> seen;
    std::vector<MultiGraph> reps;
    std::vector<int> assign(static_cast<size_t>(std::max(pairs, 1)), 0);
    MultiGraph g;
    g.n = n;
    int edge_sum = 0;
    // map local pair slot -> (i, j)
    std::vector<std::pair<int, int>> slot;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slot.emplace_back(i, j);

    while (true) {
        if (edge_sum >= n - 1 && edge_sum <= max_edges && is_ctree(g)) {
            CanonicalForm key = canonical_form(g);
            if (seen.insert(key).second) reps.push_back(g);
        }
        // odometer
        int s = 0;
        for (; s < pairs; ++s) {
            auto [i, j] = slot[s];
            int m = g.get(i, j);
            if (m < max_mult) {
                g.set(i, j, uint8_t(m + 1));
                edge_sum += 1;
                break;
            }
            edge_sum -= m;
            g.set(i, j, 0);
        }
        if (s == pairs) break;
    }
    std::sort(reps.begin(), reps.end(), [](const MultiGraph& a, const MultiGraph& b) {
        return canonical_form(a) < canonical_form(b);
    });
    return reps;
}

}  // namespace detail

// One canonical representative per isomorphism class of C-trees on exactly
// n nodes.  allow_two_cycles=false restricts multiplicities to {0,1}.
// Results are cached; the rooted counts all re-enumerate the same classes.
inline const std::vector<MultiGraph>& enumerate_ctrees(int n, bool allow_two_cycles) {
    detail::check_cap(n, allow_two_cycles);
    static std::mutex mutex;
    static std::map<std::pair<int, bool>, std::vector<MultiGraph>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(n, allow_two_cycles);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, detail::enumerate_ctrees_impl(n, allow_two_cycles)).first;
    return it->second;
}

// r_t(n): classes whose skeleton tree has t nodes, keyed by t.
inline std::map<int, long long> skeleton_profile(int n, bool allow_two_cycles) {
    std::map<int, long long> profile;
    for (const MultiGraph& g : enumerate_ctrees(n, allow_two_cycles))
        ++profile[skeleton(g).n];
    return profile;
}

namespace detail {

// Number of inequivalent markings over all classes on n nodes, where
// marks(g) yields the candidate marks of a representative.
template <class MarkGen>
long long count_marked(int n, bool allow_two_cycles, MarkGen&& marks) {
    long long total = 0;
    for (const MultiGraph& g : enumerate_ctrees(n, allow_two_cycles)) {
        std::set<CanonicalForm> classes;
        for (const Mark& m : marks(g)) classes.insert(canonical_key(g, m));
        total += static_cast<long long>(classes.size());
    }
    return total;
}

}  // namespace detail

// Planted C-trees: root marked on an endnode (degree 0 or 1).
inline long long count_planted(int n, bool allow_two_cycles) {
    detail::check_cap(n, allow_two_cycles);
    return detail::count_marked(n, allow_two_cycles, [](const MultiGraph& g) {
        std::vector<detail::Mark> ms;
        for (int v = 0; v < g.n; ++v)
            if (g.degree(v) <= 1) ms.push_back({detail::MarkKind::node, v});
        return ms;
    });
}

// C-trees with one marked node (decapitated planted C-trees); equals p(n+1).
inline long long count_node_rooted(int n, bool allow_two_cycles) {
    detail::check_cap(n, allow_two_cycles);
    return detail::count_marked(n, allow_two_cycles, [](const MultiGraph& g) {
        std::vector<detail::Mark> ms;
        for (int v = 0; v < g.n; ++v) ms.push_back({detail::MarkKind::node, v});
        return ms;
    });
}

// C-trees with all nodes of one cycle marked.  Nodes in no cycle block count
// as cycles of length 1, so they are markable too.
inline long long count_skeleton_rooted(int n, bool allow_two_cycles) {
    detail::check_cap(n, allow_two_cycles);
    return detail::count_marked(n, allow_two_cycles, [](const MultiGraph& g) {
        std::vector<detail::Mark> ms;
        BlockDecomposition d = decompose_blocks(g);
        uint8_t in_cycle = 0;
        for (const Block& b : d.blocks) {
            if (b.is_cycle()) {
                detail::Mark m;
                m.kind = detail::MarkKind::node_set;
                m.mask = b.node_mask;
                ms.push_back(m);
                in_cycle |= b.node_mask;
            }
        }
        for (int v = 0; v < g.n; ++v) {
            if (!(in_cycle & (1u << v))) {
                detail::Mark m;
                m.kind = detail::MarkKind::node_set;
                m.mask = uint8_t(1u << v);
                ms.push_back(m);
            }
        }
        return ms;
    });
}

// C-trees with a marked bridge; oriented marks distinguish the two directions.
inline long long count_bridge_rooted(int n, bool allow_two_cycles, bool oriented) {
    detail::check_cap(n, allow_two_cycles);
    return detail::count_marked(n, allow_two_cycles, [oriented](const MultiGraph& g) {
        std::vector<detail::Mark> ms;
        BlockDecomposition d = decompose_blocks(g);
        for (const Block& b : d.blocks) {
            if (!b.is_bridge()) continue;
            int u = -1, v = -1;
            for (int w = 0; w < g.n; ++w)
                if (b.node_mask & (1u << w)) (u < 0 ? u : v) = w;
            if (oriented) {
                ms.push_back({detail::MarkKind::directed_edge, u, v});
                ms.push_back({detail::MarkKind::directed_edge, v, u});
            } else {
                ms.push_back({detail::MarkKind::edge, u, v});
            }
        }
        return ms;
    });
}

// DOT export; double edges come out as two parallel edges.
inline std::string to_dot(const MultiGraph& g, const std::string& name = "ctree") {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 0; v < g.n; ++v) os << "  " << v << ";\n";
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            for (int m = 0; m < g.get(i, j); ++m)
                os << "  " << i << " -- " << j << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace ctrees
