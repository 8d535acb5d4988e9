#include "subgroups/bivalent_tree.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace subgroups {

BivalentTree single_edge() {
    BivalentTree t;
    t.internal_count = 0;
    t.valence = 3;
    t.adj = {{1}, {0}};
    return t;
}

BivalentTree star(int n) {
    if (n <= 1) throw std::invalid_argument("star: valence must exceed 1");
    BivalentTree t;
    t.internal_count = 1;
    t.valence = n;
    t.adj.assign(static_cast<std::size_t>(n) + 1, {});
    for (int v = 1; v <= n; ++v) {
        t.adj[0].push_back(v);
        t.adj[v] = {0};
    }
    return t;
}

BivalentTree extend(const BivalentTree& t, int v) {
    if (t.is_internal(v) || v >= t.vertex_count())
        throw std::invalid_argument("extend: vertex is not external");
    int n = t.valence;
    int old_count = t.vertex_count();
    std::vector<std::vector<int>> adj = t.adj;
    adj.resize(static_cast<std::size_t>(old_count) + n - 1);
    for (int k = 0; k < n - 1; ++k) {
        adj[v].push_back(old_count + k);
        adj[old_count + k] = {v};
    }
    // Relabel: old internals, then v, then externals grouped by parent.
    std::vector<int> order;
    for (int u = 0; u < t.internal_count; ++u) order.push_back(u);
    order.push_back(v);
    std::vector<int> internals = order;
    for (int u : internals)
        for (int w : adj[u])
            if (adj[w].size() == 1) order.push_back(w);
    std::vector<int> pos(adj.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    BivalentTree out;
    out.internal_count = t.internal_count + 1;
    out.valence = n;
    out.adj.resize(adj.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (int w : adj[order[i]]) out.adj[i].push_back(pos[w]);
        std::sort(out.adj[i].begin(), out.adj[i].end());
    }
    return out;
}

std::vector<std::vector<int>> internal_subtree(const BivalentTree& t) {
    if (t.internal_count == 0)
        throw std::invalid_argument("internal_subtree: degenerate tree has no internal vertices");
    std::vector<std::vector<int>> out(t.internal_count);
    for (int v = 0; v < t.internal_count; ++v)
        for (int w : t.adj[v])
            if (t.is_internal(w)) out[v].push_back(w);
    return out;
}

namespace {

std::string ahu_code(const std::vector<std::vector<int>>& adj, int v, int parent) {
    std::vector<std::string> subs;
    for (int w : adj[v])
        if (w != parent) subs.push_back(ahu_code(adj, w, v));
    std::sort(subs.begin(), subs.end());
    std::string out = "(";
    for (const auto& s : subs) out += s;
    out += ')';
    return out;
}

std::vector<int> tree_centers(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    if (n == 1) return {0};
    std::vector<int> deg(n);
    std::vector<int> layer;
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
    return centers;
}

} // namespace

std::string internal_canonical_code(const BivalentTree& t) {
    if (t.internal_count == 0) return "-";
    auto iadj = internal_subtree(t);
    auto centers = tree_centers(iadj);
    if (centers.size() == 1) return ahu_code(iadj, centers[0], -1);
    std::string a = ahu_code(iadj, centers[0], centers[1]);
    std::string b = ahu_code(iadj, centers[1], centers[0]);
    if (b < a) std::swap(a, b);
    return a + b;
}

std::vector<BivalentTree> enumerate_trees(int m, int n) {
    if (m < 1 || n <= 1) throw std::invalid_argument("enumerate_trees: need m >= 1, n > 1");
    if (m == 1) return {star(n)};
    std::vector<BivalentTree> out;
    std::vector<std::string> seen;
    for (const BivalentTree& t : enumerate_trees(m - 1, n)) {
        // one external representative per fiber
        std::vector<int> reps;
        std::vector<bool> parent_seen(static_cast<std::size_t>(t.internal_count), false);
        for (int v = t.internal_count; v < t.vertex_count(); ++v) {
            int p = t.parent_of(v);
            if (!parent_seen[p]) {
                parent_seen[p] = true;
                reps.push_back(v);
            }
        }
        for (int v : reps) {
            BivalentTree t2 = extend(t, v);
            std::string code = internal_canonical_code(t2);
            if (std::find(seen.begin(), seen.end(), code) == seen.end()) {
                seen.push_back(code);
                out.push_back(std::move(t2));
            }
        }
    }
    return out;
}

std::vector<std::vector<int>> external_classes(const BivalentTree& t) {
    std::vector<std::vector<int>> fibers(static_cast<std::size_t>(std::max(t.internal_count, 1)));
    if (t.internal_count == 0) return {{0, 1}};
    for (int v = t.internal_count; v < t.vertex_count(); ++v) fibers[t.parent_of(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& f : fibers)
        if (!f.empty()) out.push_back(std::move(f));
    return out;
}

std::vector<Perm> aut_kernel_generators(const BivalentTree& t) {
    std::vector<Perm> gens;
    if (t.internal_count == 0) {
        gens.push_back(parse_cycles("(1,2)", 2));
        return gens;
    }
    int n = t.vertex_count();
    for (const auto& fiber : external_classes(t)) {
        for (std::size_t k = 0; k + 1 < fiber.size(); ++k) {
            std::vector<int> img(n);
            std::iota(img.begin(), img.end(), 1);
            img[fiber[k]] = fiber[k + 1] + 1;
            img[fiber[k + 1]] = fiber[k] + 1;
            gens.emplace_back(std::move(img));
        }
    }
    return gens;
}

std::vector<std::vector<int>> internal_automorphisms(const BivalentTree& t) {
    int m = t.internal_count;
    if (m == 0) return {{}};
    auto iadj = internal_subtree(t);
    std::vector<std::vector<int>> out;
    std::vector<int> map(m, -1);
    std::vector<bool> used(m, false);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == m) {
            out.push_back(map);
            return;
        }
        for (int w = 0; w < m; ++w) {
            if (used[w] || iadj[v].size() != iadj[w].size()) continue;
            if (t.adj[v].size() - iadj[v].size() != t.adj[w].size() - iadj[w].size()) continue;
            bool ok = true;
            for (int u : iadj[v])
                if (u < v && std::find(iadj[w].begin(), iadj[w].end(), map[u]) == iadj[w].end()) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            map[v] = w;
            used[w] = true;
            self(self, v + 1);
            used[w] = false;
            map[v] = -1;
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<int> lift_internal_automorphism(const BivalentTree& t, const std::vector<int>& phi) {
    int n = t.vertex_count();
    std::vector<int> full(n, -1);
    for (int v = 0; v < t.internal_count; ++v) full[v] = phi[v];
    auto fibers = external_classes(t);
    std::vector<std::vector<int>> fiber_of(static_cast<std::size_t>(t.internal_count));
    for (auto& f : fibers) fiber_of[t.parent_of(f[0])] = f;
    for (int v = 0; v < t.internal_count; ++v) {
        const auto& src = fiber_of[v];
        const auto& dst = fiber_of[phi[v]];
        if (src.size() != dst.size())
            throw std::invalid_argument("lift_internal_automorphism: not an automorphism");
        for (std::size_t k = 0; k < src.size(); ++k) full[src[k]] = dst[k];
    }
    return full;
}

AutGroup aut_group(const BivalentTree& t) {
    AutGroup out;
    if (t.internal_count == 0) {
        out.generators = aut_kernel_generators(t);
        out.order = 2;
        return out;
    }
    out.generators = aut_kernel_generators(t);
    std::uint64_t kernel_order = 1;
    for (const auto& fiber : external_classes(t))
        for (std::uint64_t k = 2; k <= fiber.size(); ++k) kernel_order *= k;
    auto internals = internal_automorphisms(t);
    int n = t.vertex_count();
    for (const auto& phi : internals) {
        bool ident = true;
        for (int v = 0; v < t.internal_count; ++v)
            if (phi[v] != v) { ident = false; break; }
        if (ident) continue;
        auto full = lift_internal_automorphism(t, phi);
        std::vector<int> img(n);
        for (int v = 0; v < n; ++v) img[v] = full[v] + 1;
        out.generators.emplace_back(std::move(img));
    }
    out.order = kernel_order * internals.size();
    return out;
}

} // namespace subgroups
