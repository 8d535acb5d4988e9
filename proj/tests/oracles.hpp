#pragma once

// Brute-force reference implementations used as independent oracles. They
// stay deliberately naive: correctness over speed, and no shared code with
// the paths they check.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "subgroups/bivalent_tree.hpp"
#include "subgroups/tree_diagram.hpp"

namespace oracle {

// AHU canonical code of an arbitrary tree given by adjacency lists.
inline std::string ahu(const std::vector<std::vector<int>>& adj, int v, int parent) {
    std::vector<std::string> subs;
    for (int w : adj[v])
        if (w != parent) subs.push_back(ahu(adj, w, v));
    std::sort(subs.begin(), subs.end());
    std::string out = "(";
    for (auto& s : subs) out += s;
    return out + ")";
}

inline std::string tree_canonical(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> deg(n), layer;
    for (int v = 0; v < n; ++v) {
        deg[v] = static_cast<int>(adj[v].size());
        if (deg[v] <= 1) layer.push_back(v);
    }
    std::vector<bool> removed(n, false);
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = true;
            --remaining;
            for (int w : adj[v])
                if (!removed[w] && --deg[w] == 1) next.push_back(w);
        }
        layer = std::move(next);
    }
    std::vector<int> centers;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) centers.push_back(v);
    if (centers.size() == 1) return ahu(adj, centers[0], -1);
    std::string a = ahu(adj, centers[0], centers[1]);
    std::string b = ahu(adj, centers[1], centers[0]);
    if (b < a) std::swap(a, b);
    return a + b;
}

// Count isomorphism classes of labeled trees on (n-1)m+2 vertices whose
// degree multiset is {n^m, 1^((n-2)m+2)}, via Pruefer sequences: internals
// are vertices 0..m-1, each appearing exactly n-1 times.
inline long brute_force_tree_class_count(int m, int n) {
    int vertices = (n - 1) * m + 2;
    std::vector<int> seq;
    for (int v = 0; v < m; ++v)
        for (int k = 0; k < n - 1; ++k) seq.push_back(v);
    std::sort(seq.begin(), seq.end());
    std::set<std::string> classes;
    do {
        // decode Pruefer sequence
        std::vector<int> degree(vertices, 1);
        for (int v : seq) ++degree[v];
        std::vector<std::vector<int>> adj(vertices);
        std::set<int> leaves;
        for (int v = 0; v < vertices; ++v)
            if (degree[v] == 1) leaves.insert(v);
        std::vector<int> work = seq;
        for (int v : work) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            adj[leaf].push_back(v);
            adj[v].push_back(leaf);
            if (--degree[v] == 1) leaves.insert(v);
        }
        int u = *leaves.begin();
        int w = *std::next(leaves.begin());
        adj[u].push_back(w);
        adj[w].push_back(u);
        classes.insert(tree_canonical(adj));
    } while (std::next_permutation(seq.begin(), seq.end()));
    return static_cast<long>(classes.size());
}

// Automorphism count by enumerating all degree-respecting vertex bijections.
inline long brute_force_automorphism_count(const subgroups::BivalentTree& t) {
    int m = t.internal_count;
    int n = t.vertex_count();
    std::vector<int> internals(m), externals(n - m);
    std::iota(internals.begin(), internals.end(), 0);
    std::iota(externals.begin(), externals.end(), m);
    auto is_edge = [&](int v, int w) {
        return std::find(t.adj[v].begin(), t.adj[v].end(), w) != t.adj[v].end();
    };
    long count = 0;
    std::vector<int> iperm = internals, eperm = externals;
    do {
        do {
            std::vector<int> map(n);
            for (int i = 0; i < m; ++i) map[i] = iperm[i];
            for (int i = m; i < n; ++i) map[i] = eperm[i - m];
            bool ok = true;
            for (int v = 0; v < n && ok; ++v)
                for (int w : t.adj[v])
                    if (!is_edge(map[v], map[w])) {
                        ok = false;
                        break;
                    }
            if (ok) ++count;
        } while (std::next_permutation(eperm.begin(), eperm.end()));
    } while (std::next_permutation(iperm.begin(), iperm.end()));
    return count;
}

// Automorphisms of the whole tree fixing every internal vertex.
inline long brute_force_kernel_count(const subgroups::BivalentTree& t) {
    int m = t.internal_count;
    int n = t.vertex_count();
    auto is_edge = [&](int v, int w) {
        return std::find(t.adj[v].begin(), t.adj[v].end(), w) != t.adj[v].end();
    };
    std::vector<int> eperm(n - m);
    std::iota(eperm.begin(), eperm.end(), m);
    long count = 0;
    do {
        bool ok = true;
        for (int v = m; v < n && ok; ++v)
            if (!is_edge(eperm[v - m], t.adj[v][0])) ok = false;
        if (ok) ++count;
    } while (std::next_permutation(eperm.begin(), eperm.end()));
    return count;
}

// Oriented-tree isomorphism by brute force over adjacency+orientation
// preserving bijections.
inline bool oriented_isomorphic(const subgroups::OrientedTree& x, const subgroups::OrientedTree& y) {
    const auto& tx = x.tree;
    const auto& ty = y.tree;
    if (tx.vertex_count() != ty.vertex_count() || tx.internal_count != ty.internal_count)
        return false;
    int m = tx.internal_count;
    int n = tx.vertex_count();
    auto is_edge = [&](const subgroups::BivalentTree& t, int v, int w) {
        return std::find(t.adj[v].begin(), t.adj[v].end(), w) != t.adj[v].end();
    };
    std::vector<int> iperm(m), eperm(n - m);
    std::iota(iperm.begin(), iperm.end(), 0);
    std::iota(eperm.begin(), eperm.end(), m);
    do {
        std::vector<int> ep = eperm;
        do {
            std::vector<int> map(n);
            for (int i = 0; i < m; ++i) map[i] = iperm[i];
            for (int i = m; i < n; ++i) map[i] = ep[i - m];
            bool ok = true;
            for (int v = 0; v < n && ok; ++v)
                for (int w : tx.adj[v])
                    if (!is_edge(ty, map[v], map[w])) {
                        ok = false;
                        break;
                    }
            for (int v = 0; v < m && ok; ++v)
                for (int w : tx.adj[v])
                    if (map[x.sigma(v, w)] != y.sigma(map[v], map[w])) {
                        ok = false;
                        break;
                    }
            if (ok) return true;
        } while (std::next_permutation(ep.begin(), ep.end()));
    } while (std::next_permutation(iperm.begin(), iperm.end()));
    return false;
}

} // namespace oracle
