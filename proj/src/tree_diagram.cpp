#include "subgroups/tree_diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace subgroups {

int OrientedTree::sigma(int v, int w) const {
    const auto& nb = tree.adj[v];  // sorted
    int i = static_cast<int>(std::find(nb.begin(), nb.end(), w) - nb.begin());
    if (!flipped[v]) return nb[(i + 1) % 3];
    return nb[(i + 2) % 3];
}

std::vector<int> OrientedTree::cycle_at(int v) const {
    const auto& nb = tree.adj[v];
    if (!flipped[v]) return {nb[0], nb[1], nb[2]};
    return {nb[0], nb[2], nb[1]};
}

std::vector<OrientedTree> enumerate_orientations(const BivalentTree& t) {
    if (t.valence != 3) throw std::invalid_argument("enumerate_orientations: valence must be 3");
    int m = t.internal_count;
    std::vector<int> flexible;
    for (int v = 0; v < m; ++v) {
        int ext = 0;
        for (int w : t.adj[v])
            if (!t.is_internal(w)) ++ext;
        if (ext < 2) flexible.push_back(v);
    }
    std::vector<OrientedTree> out;
    int combos = 1 << flexible.size();
    for (int mask = 0; mask < combos; ++mask) {
        OrientedTree d{t, std::vector<bool>(static_cast<std::size_t>(m), false)};
        for (std::size_t k = 0; k < flexible.size(); ++k)
            if (mask >> k & 1) d.flipped[flexible[k]] = true;
        out.push_back(std::move(d));
    }
    return out;
}

int right_of(const OrientedTree& d, int v) {
    if (d.tree.is_internal(v)) throw std::invalid_argument("right_of: vertex is not external");
    int a = v;
    int b = d.tree.parent_of(v);
    int c = d.sigma(b, a);
    while (d.tree.is_internal(c)) {
        a = b;
        b = c;
        c = d.sigma(b, a);
    }
    return c;
}

int left_of(const OrientedTree& d, int v) {
    if (d.tree.is_internal(v)) throw std::invalid_argument("left_of: vertex is not external");
    int a = v;
    int b = d.tree.parent_of(v);
    // walk against the orientation: predecessor instead of successor
    auto sigma_inv = [&](int u, int w) {
        const auto& nb = d.tree.adj[u];
        int i = static_cast<int>(std::find(nb.begin(), nb.end(), w) - nb.begin());
        return d.flipped[u] ? nb[(i + 1) % 3] : nb[(i + 2) % 3];
    };
    int c = sigma_inv(b, a);
    while (d.tree.is_internal(c)) {
        a = b;
        b = c;
        c = sigma_inv(b, a);
    }
    return c;
}

std::vector<int> cyclic_order(const OrientedTree& d) {
    const BivalentTree& t = d.tree;
    if (t.internal_count == 0) return {0, 1};
    int start = t.internal_count;
    std::vector<int> out{start};
    for (int v = right_of(d, start); v != start; v = right_of(d, v)) {
        out.push_back(v);
        if (static_cast<int>(out.size()) > t.external_count())
            throw std::runtime_error("cyclic_order: r-orbit shorter than the external set");
    }
    if (static_cast<int>(out.size()) != t.external_count())
        throw std::runtime_error("cyclic_order: r-orbit shorter than the external set");
    return out;
}

std::vector<ParameterTriple> parameter_triples(int d) {
    if (d < 1) throw std::invalid_argument("parameter_triples: d must be positive");
    auto floordiv = [](int x, int y) { return x >= 0 ? x / y : -((-x + y - 1) / y); };
    std::vector<ParameterTriple> out;
    int lo = (d - 2 + 3) / 4;  // ceil((d-2)/4) for d >= 2; d == 1 handled by the clamp below
    if (d - 2 < 0) lo = 0;
    for (int m = std::max(lo, 0); m <= d / 3; ++m) {
        int b = d - 3 * m;
        if (b < 0 || b > m + 2) continue;
        int jmax = floordiv(m - b, 2) + 1;
        for (int j = 0; j <= jmax; ++j) {
            int r = m + 2 - b - 2 * j;
            if (r < 0) continue;
            out.push_back({m, b, r, j});
        }
    }
    return out;
}

std::vector<std::vector<std::pair<int, int>>> two_partitions(const std::vector<int>& s) {
    if (s.size() % 2 != 0) throw std::invalid_argument("two_partitions: odd set size");
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    auto rec = [&](auto&& self, std::vector<int>& rest, std::vector<std::pair<int, int>>& acc) -> void {
        if (rest.empty()) {
            out.push_back(acc);
            return;
        }
        int a = rest[0];
        for (std::size_t i = 1; i < rest.size(); ++i) {
            int b = rest[i];
            std::vector<int> next(rest.begin() + 1, rest.end());
            next.erase(next.begin() + static_cast<long>(i) - 1);
            acc.emplace_back(a, b);
            self(self, next, acc);
            acc.pop_back();
        }
    };
    std::vector<std::pair<int, int>> acc;
    rec(rec, sorted, acc);
    return out;
}

std::vector<Coloring> enumerate_colorings(const OrientedTree& d, const ParameterTriple& t) {
    const BivalentTree& tree = d.tree;
    int k = tree.external_count();
    if (t.blue + t.red + 2 * t.free_pairs != k)
        throw std::invalid_argument("enumerate_colorings: parameters do not sum to |V_e|");
    std::vector<int> ext(static_cast<std::size_t>(k));
    std::iota(ext.begin(), ext.end(), tree.internal_count);
    std::vector<Coloring> out;
    std::vector<int> bidx(static_cast<std::size_t>(t.blue));
    std::iota(bidx.begin(), bidx.end(), 0);
    auto next_comb = [&](std::vector<int>& idx, int n) {
        int r = static_cast<int>(idx.size());
        for (int i = r - 1; i >= 0; --i) {
            if (idx[i] < n - r + i) {
                ++idx[i];
                for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    bool more_b = true;
    while (more_b) {
        std::vector<int> blue, restb;
        for (int i = 0, bi = 0; i < k; ++i) {
            if (bi < t.blue && bidx[bi] == i) {
                blue.push_back(ext[i]);
                ++bi;
            } else {
                restb.push_back(ext[i]);
            }
        }
        std::vector<int> ridx(static_cast<std::size_t>(t.red));
        std::iota(ridx.begin(), ridx.end(), 0);
        bool more_r = true;
        while (more_r) {
            std::vector<int> red, rest;
            int nb = static_cast<int>(restb.size());
            for (int i = 0, ri = 0; i < nb; ++i) {
                if (ri < t.red && ridx[ri] == i) {
                    red.push_back(restb[i]);
                    ++ri;
                } else {
                    rest.push_back(restb[i]);
                }
            }
            for (auto& pairing : two_partitions(rest)) out.push_back({blue, red, pairing});
            more_r = t.red > 0 && next_comb(ridx, nb);
        }
        more_b = t.blue > 0 && next_comb(bidx, k);
    }
    return out;
}

std::vector<std::vector<int>> oriented_automorphisms(const OrientedTree& d) {
    const BivalentTree& t = d.tree;
    int n = t.vertex_count();
    std::vector<std::vector<int>> out;
    if (t.internal_count == 0) return {{0, 1}, {1, 0}};
    auto fibers = external_classes(t);
    std::vector<std::vector<int>> fiber_of(static_cast<std::size_t>(t.internal_count));
    for (auto& f : fibers) fiber_of[t.parent_of(f[0])] = f;
    for (const auto& phi : internal_automorphisms(t)) {
        // extend over fibers in all ways, keep sigma-preserving maps
        std::vector<std::vector<std::vector<int>>> options(static_cast<std::size_t>(t.internal_count));
        bool feasible = true;
        for (int v = 0; v < t.internal_count && feasible; ++v) {
            const auto& src = fiber_of[v];
            auto dst = fiber_of[phi[v]];
            if (src.size() != dst.size()) {
                feasible = false;
                break;
            }
            std::sort(dst.begin(), dst.end());
            do {
                options[v].push_back(dst);
            } while (std::next_permutation(dst.begin(), dst.end()));
        }
        if (!feasible) continue;
        std::vector<int> full(n, -1);
        for (int v = 0; v < t.internal_count; ++v) full[v] = phi[v];
        auto rec = [&](auto&& self, int v) -> void {
            if (v == t.internal_count) {
                for (int u = 0; u < t.internal_count; ++u)
                    for (int w : t.adj[u])
                        if (full[d.sigma(u, w)] != d.sigma(full[u], full[w])) return;
                out.push_back(full);
                return;
            }
            for (const auto& dst : options[v]) {
                const auto& src = fiber_of[v];
                for (std::size_t i = 0; i < src.size(); ++i) full[src[i]] = dst[i];
                // prune early on sigma at v
                bool ok = true;
                for (int w : t.adj[v])
                    if (full[w] >= 0 && full[d.sigma(v, w)] >= 0 &&
                        full[d.sigma(v, w)] != d.sigma(full[v], full[w])) {
                        ok = false;
                        break;
                    }
                if (ok) self(self, v + 1);
                for (int u : src) full[u] = -1;
            }
        };
        rec(rec, 0);
    }
    return out;
}

namespace {

// Rooted code of the plane tree hanging from the external root, leaves in
// r-order; together with the color/pairing words a complete rooted invariant.
void shape_code(const OrientedTree& d, int u, int parent, std::string& out,
                std::vector<int>& leaves) {
    if (!d.tree.is_internal(u)) {
        leaves.push_back(u);
        out += 'e';
        return;
    }
    int c1 = d.sigma(u, parent);
    int c2 = d.sigma(u, c1);
    out += '(';
    shape_code(d, c1, u, out, leaves);
    shape_code(d, c2, u, out, leaves);
    out += ')';
}

std::string rooted_code(const TreeDiagram& td, int root) {
    const OrientedTree& d = td.oriented;
    std::string shape;
    std::vector<int> leaves{root};
    shape_code(d, d.tree.parent_of(root), root, shape, leaves);
    int k = static_cast<int>(leaves.size());
    std::vector<int> pos(static_cast<std::size_t>(d.tree.vertex_count()), -1);
    for (int i = 0; i < k; ++i) pos[leaves[i]] = i;
    std::vector<int> partner(static_cast<std::size_t>(d.tree.vertex_count()), -1);
    for (auto [x, y] : td.coloring.pairs) {
        partner[x] = y;
        partner[y] = x;
    }
    std::string word;
    for (int v : leaves) {
        if (std::find(td.coloring.blue.begin(), td.coloring.blue.end(), v) != td.coloring.blue.end())
            word += "b.";
        else if (partner[v] < 0)
            word += "r.";
        else
            word += std::to_string((pos[partner[v]] - pos[v] + k) % k) + ".";
    }
    return shape + "|" + word;
}

} // namespace

std::string diagram_canonical_code(const TreeDiagram& td) {
    const BivalentTree& t = td.oriented.tree;
    if (t.internal_count == 0) return "edge|b.b.";
    std::string best;
    for (int v = t.internal_count; v < t.vertex_count(); ++v) {
        std::string code = rooted_code(td, v);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

namespace {

int internal_order(const std::vector<int>& full, int m) {
    int o = 1;
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    for (int v = 0; v < m; ++v) {
        if (seen[v]) continue;
        int len = 0;
        for (int u = v; !seen[u]; u = full[u]) {
            seen[u] = true;
            ++len;
        }
        o = std::lcm(o, len);
    }
    return o;
}

std::vector<std::vector<int>> dedup_group(const OrientedTree& d) {
    int n = d.tree.vertex_count();
    int m = d.tree.internal_count;
    std::vector<std::vector<int>> gens;
    for (auto& phi : oriented_automorphisms(d))
        if (internal_order(phi, m) <= 2) gens.push_back(std::move(phi));
    // close under composition
    std::set<std::vector<int>> group(gens.begin(), gens.end());
    std::vector<int> ident(static_cast<std::size_t>(n));
    std::iota(ident.begin(), ident.end(), 0);
    group.insert(ident);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> cur(group.begin(), group.end());
        for (const auto& a : cur)
            for (const auto& g : gens) {
                std::vector<int> c(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) c[i] = g[a[i]];
                if (group.insert(std::move(c)).second) grew = true;
            }
    }
    return {group.begin(), group.end()};
}

struct ColoringKey {
    std::vector<int> blue, red;
    std::vector<std::pair<int, int>> pairs;
    auto operator<=>(const ColoringKey&) const = default;
};

ColoringKey apply_map(const std::vector<int>& phi, const Coloring& c) {
    ColoringKey k;
    for (int v : c.blue) k.blue.push_back(phi[v]);
    for (int v : c.red) k.red.push_back(phi[v]);
    for (auto [x, y] : c.pairs) {
        int a = phi[x], b = phi[y];
        k.pairs.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(k.blue.begin(), k.blue.end());
    std::sort(k.red.begin(), k.red.end());
    std::sort(k.pairs.begin(), k.pairs.end());
    return k;
}

} // namespace

std::vector<TreeDiagram> enumerate_tree_diagrams(int d) {
    if (d < 2) throw std::invalid_argument("enumerate_tree_diagrams: index must be at least 2");
    std::vector<TreeDiagram> out;
    for (const ParameterTriple& triple : parameter_triples(d)) {
        if (triple.internal == 0) {
            if (triple.blue == 2) {
                BivalentTree t = single_edge();
                OrientedTree ot{t, {}};
                out.push_back({ot, {{0, 1}, {}, {}}, {0, 1}});
            }
            continue;
        }
        for (const BivalentTree& t : enumerate_trees(triple.internal, 3)) {
            for (const OrientedTree& ot : enumerate_orientations(t)) {
                auto group = dedup_group(ot);
                auto order = cyclic_order(ot);
                std::set<ColoringKey> seen;
                for (Coloring& col : enumerate_colorings(ot, triple)) {
                    ColoringKey best;
                    bool first = true;
                    for (const auto& phi : group) {
                        ColoringKey k = apply_map(phi, col);
                        if (first || k < best) {
                            best = std::move(k);
                            first = false;
                        }
                    }
                    if (!seen.insert(best).second) continue;
                    out.push_back({ot, std::move(col), order});
                }
            }
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const TreeDiagram& x, const TreeDiagram& y) {
        return diagram_canonical_code(x) < diagram_canonical_code(y);
    });
    return out;
}

} // namespace subgroups
