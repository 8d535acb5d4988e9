#include "subgroups/kulkarni.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace subgroups {

int KulkarniDiagram::index() const {
    int blue = 0;
    for (const Side& s : sides)
        if (s.type == SideType::Odd) ++blue;
    return 3 * (side_count() - 2) + blue;
}

namespace {

int tree_distance(const BivalentTree& t, int v, int w) {
    std::vector<int> dist(static_cast<std::size_t>(t.vertex_count()), -1);
    std::queue<int> q;
    dist[v] = 0;
    q.push(v);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (u == w) return dist[u];
        for (int x : t.adj[u])
            if (dist[x] < 0) {
                dist[x] = dist[u] + 1;
                q.push(x);
            }
    }
    return -1;
}

bool is_blue(const TreeDiagram& d, int v) {
    return std::find(d.coloring.blue.begin(), d.coloring.blue.end(), v) != d.coloring.blue.end();
}

} // namespace

int bipartite_distance(const TreeDiagram& d, int v, int w) {
    if (right_of(d.oriented, v) != w && right_of(d.oriented, w) != v)
        throw std::invalid_argument("bipartite_distance: vertices are not cycle-adjacent");
    int dist = tree_distance(d.oriented.tree, v, w);
    int blue = (is_blue(d, v) ? 1 : 0) + (is_blue(d, w) ? 1 : 0);
    return 2 * dist - 2 + blue;
}

std::vector<Cusp> farey_symbol(const TreeDiagram& d) {
    const std::vector<int>& order = d.external_order;
    int k = static_cast<int>(order.size());
    std::vector<Cusp> gfs{make_cusp(-1, 0), make_cusp(0, 1)};
    if (k > 2) {
        int dist = tree_distance(d.oriented.tree, order[0], order[1]);
        gfs.push_back(make_cusp(1, dist - 1));
        for (int i = 1; i + 2 < k; ++i) {
            int dd = tree_distance(d.oriented.tree, order[i], order[i + 1]);
            // second-to-last cusp alpha/beta, last gamma/delta; the next cusp X/Y
            // solves beta*X - alpha*Y = d-1, delta*X - gamma*Y = 1.
            const Cusp& ab = gfs[gfs.size() - 2];
            const Cusp& gd = gfs.back();
            i64 x = checked_sub(checked_mul(gd.num, dd - 1), ab.num);
            i64 y = checked_sub(checked_mul(gd.den, dd - 1), ab.den);
            Cusp next = make_cusp(x, y);
            if (next.num != x || next.den != y)
                throw std::runtime_error("farey_symbol: non-reduced solution");
            gfs.push_back(next);
        }
    }
    gfs.push_back(make_cusp(1, 0));
    return gfs;
}

KulkarniDiagram attach_farey_symbol(const TreeDiagram& d) {
    KulkarniDiagram k;
    k.gfs = farey_symbol(d);
    const std::vector<int>& order = d.external_order;
    std::vector<int> pos(static_cast<std::size_t>(d.oriented.tree.vertex_count()), -1);
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    k.sides.resize(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        k.sides[i] = is_blue(d, order[i]) ? Side{SideType::Odd} : Side{SideType::Even};
    for (auto [x, y] : d.coloring.pairs) {
        k.sides[pos[x]] = {SideType::Free, pos[y]};
        k.sides[pos[y]] = {SideType::Free, pos[x]};
    }
    return k;
}

ProjMatrix cusp_generator(const KulkarniDiagram& k, int side) {
    if (side < 1 || side > k.side_count())
        throw std::invalid_argument("cusp_generator: side index out of range");
    const Cusp& right = k.gfs[side];
    const Cusp& left = k.gfs[side - 1];
    i64 a = right.num, b = right.den, c = left.num, d = left.den;
    const Side& s = k.sides[side - 1];
    switch (s.type) {
        case SideType::Even:
            return normalize(a * b + c * d, -c * c - a * a, b * b + d * d, -a * b - c * d);
        case SideType::Odd:
            return normalize(a * b + c * b + c * d, -c * c - a * c - a * a,
                             b * b + b * d + d * d, -a * b - a * d - c * d);
        case SideType::Free: {
            if (s.partner < 0) throw std::invalid_argument("cusp_generator: free side without partner");
            const Cusp& pr = k.gfs[s.partner + 1];
            const Cusp& pl = k.gfs[s.partner];
            i64 ap = pr.num, bp = pr.den, cp = pl.num, dp = pl.den;
            return normalize(ap * b + cp * d, -cp * c - ap * a, dp * d + bp * b, -a * bp - c * dp);
        }
    }
    throw std::logic_error("cusp_generator: unreachable");
}

std::vector<ProjMatrix> side_pairing_generators(const KulkarniDiagram& k) {
    std::vector<ProjMatrix> out;
    for (int s = 1; s <= k.side_count(); ++s) {
        const Side& side = k.sides[s - 1];
        if (side.type == SideType::Free && side.partner < s - 1) continue;
        out.push_back(cusp_generator(k, s));
    }
    return out;
}

std::vector<Perm> cusp_orbit_group(const KulkarniDiagram& k) {
    int n = k.side_count();
    auto wrap = [n](int i) { return (i - 1) % n + 1; };
    auto transposition = [n](int x, int y) {
        std::vector<int> img(static_cast<std::size_t>(n));
        std::iota(img.begin(), img.end(), 1);
        std::swap(img[x - 1], img[y - 1]);
        return Perm(std::move(img));
    };
    std::vector<Perm> out;
    for (int s = 1; s <= n; ++s) {
        const Side& side = k.sides[s - 1];
        if (side.type != SideType::Free) {
            out.push_back(transposition(wrap(s), wrap(s + 1)));
        } else {
            int j = side.partner + 1;
            out.push_back(transposition(wrap(s), wrap(j + 1)));
            out.push_back(transposition(wrap(s + 1), wrap(j)));
        }
    }
    return out;
}

std::vector<std::vector<int>> cusp_orbits(const KulkarniDiagram& k) {
    auto gens = cusp_orbit_group(k);
    return orbits(gens, k.side_count());
}

namespace {

// d-value of cusp position i (1-based, cyclic with position 1 the infinity
// cusp): cross-determinant of the two neighbouring cusps.
i64 d_value(const KulkarniDiagram& k, int i) {
    int n = k.side_count();
    auto cusp_at = [&](int pos) -> Cusp {
        pos = (pos - 1 + n) % n + 1;
        if (pos == 1) return make_cusp(1, 0);
        return k.gfs[pos - 1];
    };
    Cusp left = cusp_at(i - 1);
    Cusp right = cusp_at(i + 1);
    i64 cross = checked_sub(checked_mul(left.num, right.den), checked_mul(right.num, left.den));
    return cross < 0 ? -cross : cross;
}

} // namespace

i64 cusp_width(const KulkarniDiagram& k, const std::vector<int>& orbit) {
    int n = k.side_count();
    i64 twice = 0;
    for (int i : orbit) {
        int prev_side = (i - 2 + n) % n + 1;
        int e = (k.sides[prev_side - 1].type == SideType::Odd ? 1 : 0) +
                (k.sides[i - 1].type == SideType::Odd ? 1 : 0);
        twice += 2 * d_value(k, i) + e;
    }
    if (twice % 2 != 0) throw std::runtime_error("cusp_width: half-integral total");
    return twice / 2;
}

GroupInvariants invariants(const KulkarniDiagram& k) {
    GroupInvariants out{};
    out.index = k.index();
    int f2 = 0;
    for (const Side& s : k.sides) {
        if (s.type == SideType::Even) ++out.e2;
        if (s.type == SideType::Odd) ++out.e3;
        if (s.type == SideType::Free) ++f2;
    }
    int f = f2 / 2;
    auto orbs = cusp_orbits(k);
    out.t = static_cast<int>(orbs.size());
    int twice_genus = f - out.t + 1;
    if (twice_genus < 0 || twice_genus % 2 != 0)
        throw std::runtime_error("invariants: inconsistent genus data");
    out.genus = twice_genus / 2;
    out.level = 1;
    for (const auto& orb : orbs) out.level = std::lcm(out.level, cusp_width(k, orb));
    return out;
}

std::vector<std::string> gfs_strings(const KulkarniDiagram& k) {
    std::vector<std::string> out;
    for (const Cusp& c : k.gfs) out.push_back(to_string(c));
    return out;
}

} // namespace subgroups
