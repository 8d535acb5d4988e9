#include "subgroups/classify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace subgroups {

Perm theta(const KulkarniDiagram& k, std::span<const ProjMatrix> reps, const ProjMatrix& g) {
    int d = static_cast<int>(reps.size());
    std::vector<ProjMatrix> inv;
    inv.reserve(reps.size());
    for (const ProjMatrix& r : reps) inv.push_back(mat_inverse(r));
    std::vector<int> img(static_cast<std::size_t>(d), 0);
    for (int i = 0; i < d; ++i) {
        ProjMatrix gi = mat_mul(g, reps[i]);
        int found = -1;
        for (int j = 0; j < d; ++j) {
            if (is_member(k, mat_mul(inv[j], gi))) {
                if (found >= 0) throw std::runtime_error("theta: representatives are not a transversal");
                found = j;
            }
        }
        if (found < 0) throw std::runtime_error("theta: no coset found");
        img[i] = found + 1;
    }
    return Perm(std::move(img));
}

Passport passport(const KulkarniDiagram& k) {
    auto reps = coset_representatives(k);
    return passport(k, reps);
}

Passport passport(const KulkarniDiagram& k, std::span<const ProjMatrix> reps) {
    Passport p;
    p.degree = static_cast<int>(reps.size());
    p.sigma_s = theta(k, reps, mat_S());
    p.sigma_t = theta(k, reps, mat_T());
    p.sigma_r = perm_compose(p.sigma_s, p.sigma_t);
    check_passport(p);
    return p;
}

void check_passport(const Passport& p) {
    if (!perm_compose(p.sigma_s, p.sigma_s).is_identity())
        throw std::runtime_error("passport: sigma_s^2 != id");
    if (!perm_pow(p.sigma_r, 3).is_identity())
        throw std::runtime_error("passport: sigma_r^3 != id");
    if (perm_compose(p.sigma_s, p.sigma_t) != p.sigma_r)
        throw std::runtime_error("passport: sigma_s o sigma_t != sigma_r");
    const Perm gens[] = {p.sigma_s, p.sigma_r};
    if (!is_transitive(gens, p.degree))
        throw std::runtime_error("passport: <sigma_s, sigma_r> is not transitive");
}

namespace {

std::vector<std::uint8_t> canonical_bytes(const Perm& ss, const Perm& st) {
    int d = ss.degree();
    if (d > 255) throw std::invalid_argument("canonical_passport: degree exceeds 255");
    std::vector<std::uint8_t> best;
    std::vector<int> label(static_cast<std::size_t>(d) + 1);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(d));
    for (int base = 1; base <= d; ++base) {
        std::fill(label.begin(), label.end(), 0);
        order.clear();
        order.push_back(base);
        label[base] = 1;
        for (std::size_t head = 0; head < order.size(); ++head) {
            int u = order[head];
            for (int v : {ss.of(u), st.of(u)})
                if (!label[v]) {
                    label[v] = static_cast<int>(order.size()) + 1;
                    order.push_back(v);
                }
        }
        if (static_cast<int>(order.size()) != d)
            throw std::runtime_error("canonical_passport: action is not transitive");
        std::vector<std::uint8_t> key;
        key.reserve(2 * static_cast<std::size_t>(d) + 1);
        key.push_back(static_cast<std::uint8_t>(d));
        for (int i = 0; i < d; ++i) key.push_back(static_cast<std::uint8_t>(label[ss.of(order[i])]));
        for (int i = 0; i < d; ++i) key.push_back(static_cast<std::uint8_t>(label[st.of(order[i])]));
        if (best.empty() || key < best) best = std::move(key);
    }
    return best;
}

} // namespace

std::vector<std::uint8_t> canonical_passport(const Passport& p) {
    return canonical_bytes(p.sigma_s, p.sigma_t);
}

std::vector<std::uint8_t> gl2_key(const Passport& p) {
    auto a = canonical_bytes(p.sigma_s, p.sigma_t);
    auto b = canonical_bytes(p.sigma_s, perm_inverse(p.sigma_t));
    return a < b ? a : b;
}

std::string key_hex(std::span<const std::uint8_t> key) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(2 * key.size());
    for (std::uint8_t b : key) {
        out += digits[b >> 4];
        out += digits[b & 0xf];
    }
    return out;
}

std::vector<std::uint8_t> key_from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) throw std::invalid_argument("key_from_hex: odd length");
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw std::invalid_argument("key_from_hex: bad digit");
    };
    std::vector<std::uint8_t> out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2)
        out.push_back(static_cast<std::uint8_t>(nibble(hex[i]) << 4 | nibble(hex[i + 1])));
    return out;
}

namespace {

Perm commutator(const Perm& x, const Perm& y) {
    return perm_compose(perm_compose(perm_inverse(x), perm_inverse(y)), perm_compose(x, y));
}

long long crt(long long r1, long long m1, long long r2, long long m2) {
    for (long long x = 0; x < m1 * m2; ++x)
        if (x % m1 == r1 && x % m2 == r2) return x;
    throw std::logic_error("crt: no solution");
}

} // namespace

bool is_congruence(const Perm& sigma_l, const Perm& sigma_lower) {
    const Perm& L = sigma_l;
    const Perm& R = sigma_lower;
    long long N = perm_order(L);
    long long e = 1, m = N;
    while (m % 2 == 0) {
        e *= 2;
        m /= 2;
    }
    if (e == 1) {
        // odd level
        Perm rel = perm_compose(perm_compose(R, R), perm_pow(L, -(N + 1) / 2));
        return perm_pow(rel, 3).is_identity();
    }
    if (m == 1) {
        // 2-power level
        long long z = 1;
        while ((1 - 5 * z) % e != 0) ++z;
        Perm tau = perm_compose(perm_compose(perm_pow(L, 20), perm_pow(R, z)),
                                perm_compose(perm_pow(L, -4), perm_inverse(R)));
        Perm lrl = perm_compose(perm_compose(L, perm_inverse(R)), L);
        return commutator(tau, lrl) == perm_pow(tau, -2) &&
               commutator(R, tau) == perm_pow(R, 24) &&
               perm_pow(perm_compose(perm_compose(tau, perm_pow(R, 5)), lrl), 3).is_identity();
    }
    long long z = 1;
    while ((1 - 5 * z) % e != 0) ++z;
    long long c = crt(0, e, 1, m);
    long long dd = crt(1, e, 0, m);
    Perm a = perm_pow(L, c), b = perm_pow(R, c);
    Perm l = perm_pow(L, dd), r = perm_pow(R, dd);
    Perm s = perm_compose(perm_compose(perm_pow(l, 20), perm_pow(r, z)),
                          perm_compose(perm_pow(l, -4), perm_inverse(r)));
    Perm aba = perm_compose(perm_compose(a, perm_inverse(b)), a);
    Perm lrl = perm_compose(perm_compose(l, perm_inverse(r)), l);
    Perm ident = Perm::identity(L.degree());
    return commutator(a, r) == ident && perm_pow(aba, 4) == ident &&
           perm_pow(aba, 2) == perm_pow(perm_compose(perm_inverse(b), a), 3) &&
           perm_pow(aba, 2) ==
               perm_pow(perm_compose(perm_compose(b, b), perm_pow(a, -(m + 1) / 2)), 3) &&
           commutator(s, lrl) == perm_pow(s, -2) && commutator(r, s) == perm_pow(r, 24) &&
           perm_pow(lrl, 2) ==
               perm_pow(perm_compose(perm_compose(s, perm_pow(r, 5)), lrl), 3);
}

bool is_congruence(const KulkarniDiagram& k) {
    auto reps = coset_representatives(k);
    Perm sigma_l = theta(k, reps, mat_T());
    Perm sigma_lower = theta(k, reps, mat_lower());
    return is_congruence(sigma_l, sigma_lower);
}

std::vector<std::vector<std::vector<int>>> block_systems(const Passport& p, int blockcount) {
    int d = p.degree;
    if (blockcount <= 0 || d % blockcount != 0)
        throw std::invalid_argument("block_systems: blockcount must divide the degree");
    int size = d / blockcount;
    std::vector<std::vector<std::vector<int>>> out;
    // Seed with the block containing 1; the system, if any, is its orbit.
    auto try_block = [&](const std::vector<int>& first) {
        std::vector<std::vector<int>> system{first};
        std::vector<int> block_of(static_cast<std::size_t>(d) + 1, -1);
        for (int x : first) block_of[x] = 0;
        for (std::size_t head = 0; head < system.size(); ++head) {
            std::vector<int> current = system[head];
            for (const Perm* g : {&p.sigma_s, &p.sigma_t}) {
                std::vector<int> img;
                img.reserve(current.size());
                for (int x : current) img.push_back(g->of(x));
                std::sort(img.begin(), img.end());
                int target = block_of[img[0]];
                if (target < 0) {
                    for (int x : img)
                        if (block_of[x] >= 0) return;  // blocks would overlap
                    for (int x : img) block_of[x] = static_cast<int>(system.size());
                    system.push_back(std::move(img));
                    if (static_cast<int>(system.size()) > blockcount) return;
                } else {
                    for (int x : img)
                        if (block_of[x] != target) return;
                }
            }
        }
        if (static_cast<int>(system.size()) == blockcount) {
            std::sort(system.begin(), system.end());
            out.push_back(std::move(system));
        }
    };
    if (size == 1) {
        std::vector<std::vector<int>> discrete;
        for (int i = 1; i <= d; ++i) discrete.push_back({i});
        return {discrete};
    }
    // all size-1 subsets of {2..d} joined with {1}
    std::vector<int> idx(static_cast<std::size_t>(size) - 1);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> universe(static_cast<std::size_t>(d) - 1);
    std::iota(universe.begin(), universe.end(), 2);
    auto next_comb = [&](std::vector<int>& v, int n) {
        int r = static_cast<int>(v.size());
        for (int i = r - 1; i >= 0; --i)
            if (v[i] < n - r + i) {
                ++v[i];
                for (int j = i + 1; j < r; ++j) v[j] = v[j - 1] + 1;
                return true;
            }
        return false;
    };
    while (true) {
        std::vector<int> first{1};
        for (int i : idx) first.push_back(universe[i]);
        try_block(first);
        if (!next_comb(idx, d - 1)) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace subgroups
