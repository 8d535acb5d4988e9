#include "subgroups/reduction.hpp"

#include <algorithm>
#include <stdexcept>

namespace subgroups {

namespace {

constexpr int kDepthGuard = 4096;

SignedMatrix neg(const SignedMatrix& g) { return {-g.a, -g.b, -g.c, -g.d}; }

// Right multiplication by (0,1;-1,0): swaps the column cusps.
SignedMatrix times_S(const SignedMatrix& g) { return {-g.b, g.a, -g.d, g.c}; }

bool in_gfs(const std::vector<Cusp>& gfs, const Cusp& c) {
    return std::find(gfs.begin(), gfs.end(), c) != gfs.end();
}

// 1-based position of cusp b in gfs, or in the sorted union gfs+{b}.
int position_of(const std::vector<Cusp>& gfs, const Cusp& b) {
    int pos = 1;
    for (const Cusp& c : gfs) {
        auto cmp = cusp_cmp(c, b);
        if (c == b) return pos;
        if (cmp == std::strong_ordering::less) ++pos;
    }
    return pos;
}

SignedMatrix reduce_impl(const KulkarniDiagram& k, SignedMatrix g, int depth, int* max_depth) {
    if (max_depth && depth > *max_depth) *max_depth = depth;
    if (depth > kDepthGuard) throw std::runtime_error("reduce: depth guard exceeded");
    const std::vector<Cusp>& G = k.gfs;
    const int N = static_cast<int>(G.size());
    const Cusp largest = G[N - 2];  // biggest finite cusp

    int kase = 0;
    if (g.c == 0)
        kase = 1;
    else if (g.d == 0)
        kase = 2;

    if (kase == 0) {
        // generic: require beta < alpha, else reduce g*S and undo afterwards
        if (cusp_cmp(make_cusp(g.b, g.d), make_cusp(g.a, g.c)) == std::strong_ordering::greater) {
            SignedMatrix x = reduce_impl(k, times_S(g), depth + 1, max_depth);
            return times_S(x);
        }
    } else if (kase == 1) {
        if (g.a > 0) {  // alpha = +infinity
            if (cusp_cmp(make_cusp(g.b, g.d), make_cusp(0, 1)) == std::strong_ordering::less) {
                SignedMatrix x = reduce_impl(k, neg(times_S(g)), depth + 1, max_depth);
                return times_S(x);
            }
        } else {  // alpha = -infinity
            if (cusp_cmp(make_cusp(g.b, g.d), largest) == std::strong_ordering::greater) {
                g = neg(g);
            } else {
                SignedMatrix x = reduce_impl(k, times_S(g), depth + 1, max_depth);
                return times_S(x);
            }
        }
    } else {
        if (g.b > 0) {  // beta = +infinity
            if (cusp_cmp(make_cusp(g.a, g.c), make_cusp(0, 1)) == std::strong_ordering::greater) {
                SignedMatrix x = reduce_impl(k, times_S(g), depth + 1, max_depth);
                return times_S(x);
            }
            g = neg(g);
        } else {  // beta = -infinity
            if (cusp_cmp(make_cusp(g.a, g.c), largest) == std::strong_ordering::greater) {
                SignedMatrix x = reduce_impl(k, neg(times_S(g)), depth + 1, max_depth);
                return times_S(x);
            }
        }
    }

    Cusp a = make_cusp(g.b, g.d);  // second-column cusp (beta)
    Cusp b = make_cusp(g.a, g.c);  // first-column cusp (alpha)
    if (in_gfs(G, a) && in_gfs(G, b)) return g;

    int c;
    if (kase == 1)
        c = N;
    else if (kase == 2)
        c = 2;
    else
        c = position_of(G, b);

    ProjMatrix y;
    if (k.sides[c - 2].type != SideType::Odd) {
        y = cusp_generator(k, c - 1);
    } else {
        Cusp mid = make_cusp(checked_add(G[c - 2].num, G[c - 1].num),
                             checked_add(G[c - 2].den, G[c - 1].den));
        if (g.c == 0 || cusp_cmp(b, mid) == std::strong_ordering::greater)
            y = cusp_generator(k, c - 1);
        else
            y = mat_inverse(cusp_generator(k, c - 1));
    }
    SignedMatrix yg{checked_add(checked_mul(y.a, g.a), checked_mul(y.b, g.c)),
                    checked_add(checked_mul(y.a, g.b), checked_mul(y.b, g.d)),
                    checked_add(checked_mul(y.c, g.a), checked_mul(y.d, g.c)),
                    checked_add(checked_mul(y.c, g.b), checked_mul(y.d, g.d))};
    return reduce_impl(k, yg, depth + 1, max_depth);
}

bool side_joins_zero_and_infinity(const KulkarniDiagram& k, int side) {
    const Cusp& x = k.gfs[side - 1];
    const Cusp& y = k.gfs[side];
    Cusp zero = make_cusp(0, 1);
    return (is_infinite(x) && y == zero) || (x == zero && is_infinite(y));
}

} // namespace

SignedMatrix to_signed(const ProjMatrix& m) { return {m.a, m.b, m.c, m.d}; }

SignedMatrix reduce(const KulkarniDiagram& k, SignedMatrix g, int* depth_out) {
    if (checked_sub(checked_mul(g.a, g.d), checked_mul(g.b, g.c)) != 1)
        throw std::invalid_argument("reduce: determinant must be 1");
    int depth = 0;
    SignedMatrix out = reduce_impl(k, g, 0, &depth);
    if (depth_out) *depth_out = depth;
    return out;
}

bool is_member(const KulkarniDiagram& k, const ProjMatrix& g) {
    SignedMatrix r = reduce(k, to_signed(g));
    if ((r.a == 1 && r.b == 0 && r.c == 0 && r.d == 1) ||
        (r.a == -1 && r.b == 0 && r.c == 0 && r.d == -1))
        return true;
    Cusp beta = make_cusp(r.b, r.d);
    Cusp alpha = make_cusp(r.a, r.c);
    for (int side = 1; side <= k.side_count(); ++side) {
        const Side& s = k.sides[side - 1];
        if (s.type != SideType::Free) continue;
        if (!side_joins_zero_and_infinity(k, s.partner + 1)) continue;
        if (beta == k.gfs[side - 1] && alpha == k.gfs[side]) return true;
    }
    if ((r.a == 0 && r.b == -1 && r.c == 1 && r.d == 0) ||
        (r.a == 0 && r.b == 1 && r.c == -1 && r.d == 0)) {
        for (int side = 1; side <= k.side_count(); ++side)
            if (k.sides[side - 1].type == SideType::Even && side_joins_zero_and_infinity(k, side))
                return true;
    }
    return false;
}

std::vector<ProjMatrix> coset_representatives(const KulkarniDiagram& k) {
    const std::vector<Cusp>& G = k.gfs;
    int N = static_cast<int>(G.size());
    std::vector<ProjMatrix> reps;
    for (int i = 1; i < N; ++i) {
        const Cusp& prev = (i == 1) ? G[N - 2] : G[i - 2];
        const Cusp& next = G[i];
        i64 w = checked_sub(checked_mul(prev.num, next.den), checked_mul(prev.den, next.num));
        if (w < 0) w = -w;
        ProjMatrix A = normalize(-G[i - 1].num, G[i].num, -G[i - 1].den, G[i].den);
        // Emitted matrices are a transversal of the right cosets; their
        // inverses represent the left cosets that theta acts on.
        if (k.sides[i - 1].type == SideType::Odd)
            reps.push_back(mat_inverse(mat_mul(A, mat_inverse(mat_T()))));
        for (i64 j = 0; j < w; ++j)
            reps.push_back(mat_inverse(mat_mul(A, ProjMatrix{1, j, 0, 1})));
    }
    // Exactly one representative lies in Delta; keep it first so that the
    // permutation representation stabilizes point 1 on Delta itself.
    for (std::size_t i = 0; i < reps.size(); ++i)
        if (is_member(k, reps[i])) {
            std::swap(reps[0], reps[i]);
            break;
        }
    return reps;
}

} // namespace subgroups
