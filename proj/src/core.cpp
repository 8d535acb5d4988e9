#include "subgroups/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace subgroups {

namespace {

[[noreturn]] void overflow() { throw std::overflow_error("64-bit overflow in matrix arithmetic"); }

} // namespace

i64 checked_add(i64 x, i64 y) {
    i64 r;
    if (__builtin_add_overflow(x, y, &r)) overflow();
    return r;
}

i64 checked_sub(i64 x, i64 y) {
    i64 r;
    if (__builtin_sub_overflow(x, y, &r)) overflow();
    return r;
}

i64 checked_mul(i64 x, i64 y) {
    i64 r;
    if (__builtin_mul_overflow(x, y, &r)) overflow();
    return r;
}

ProjMatrix normalize(i64 a, i64 b, i64 c, i64 d) {
    if (checked_sub(checked_mul(a, d), checked_mul(b, c)) != 1)
        throw std::invalid_argument("normalize: determinant must be 1");
    if (c > 0 || (c == 0 && d > 0)) return {a, b, c, d};
    return {-a, -b, -c, -d};
}

ProjMatrix mat_mul(const ProjMatrix& x, const ProjMatrix& y) {
    return normalize(checked_add(checked_mul(x.a, y.a), checked_mul(x.b, y.c)),
                     checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.d)),
                     checked_add(checked_mul(x.c, y.a), checked_mul(x.d, y.c)),
                     checked_add(checked_mul(x.c, y.b), checked_mul(x.d, y.d)));
}

ProjMatrix mat_inverse(const ProjMatrix& x) { return normalize(x.d, -x.b, -x.c, x.a); }

ProjMatrix mat_identity() { return {1, 0, 0, 1}; }
ProjMatrix mat_S() { return {0, -1, 1, 0}; }
ProjMatrix mat_T() { return {1, 1, 0, 1}; }
ProjMatrix mat_R() { return mat_mul(mat_S(), mat_T()); }
ProjMatrix mat_lower() { return {1, 0, 1, 1}; }

std::string to_string(const ProjMatrix& m) {
    return "[[" + std::to_string(m.a) + "," + std::to_string(m.b) + "],[" + std::to_string(m.c) +
           "," + std::to_string(m.d) + "]]";
}

namespace {

void skip_ws(std::string_view& s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
}

bool eat(std::string_view& s, char c) {
    skip_ws(s);
    if (s.empty() || s.front() != c) return false;
    s.remove_prefix(1);
    return true;
}

bool parse_int(std::string_view& s, i64& out) {
    skip_ws(s);
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{}) return false;
    s.remove_prefix(static_cast<std::size_t>(ptr - first));
    return true;
}

} // namespace

ProjMatrix parse_matrix(std::string_view s) {
    i64 a, b, c, d;
    bool ok = eat(s, '[') && eat(s, '[') && parse_int(s, a) && eat(s, ',') && parse_int(s, b) &&
              eat(s, ']') && eat(s, ',') && eat(s, '[') && parse_int(s, c) && eat(s, ',') &&
              parse_int(s, d) && eat(s, ']') && eat(s, ']');
    skip_ws(s);
    if (!ok || !s.empty()) throw std::invalid_argument("parse_matrix: expected [[a,b],[c,d]]");
    return normalize(a, b, c, d);
}

Cusp make_cusp(i64 p, i64 q) {
    if (p == 0 && q == 0) throw std::invalid_argument("make_cusp: 0/0");
    if (q == 0) return {p > 0 ? 1 : -1, 0};
    if (q < 0) { p = -p; q = -q; }
    i64 g = std::gcd(p < 0 ? -p : p, q);
    return {p / g, q / g};
}

bool is_infinite(const Cusp& c) { return c.den == 0; }

bool proj_equal(const Cusp& x, const Cusp& y) {
    if (is_infinite(x) || is_infinite(y)) return is_infinite(x) && is_infinite(y);
    return x == y;
}

std::strong_ordering cusp_cmp(const Cusp& x, const Cusp& y) {
    i64 lx = is_infinite(x) ? x.num : 0;
    i64 ly = is_infinite(y) ? y.num : 0;
    if (lx != ly) return lx <=> ly;
    if (lx != 0) return std::strong_ordering::equal;  // same infinity marker
    return checked_mul(x.num, y.den) <=> checked_mul(y.num, x.den);
}

std::string to_string(const Cusp& c) { return std::to_string(c.num) + "/" + std::to_string(c.den); }

Cusp parse_cusp(std::string_view s) {
    i64 p, q;
    bool ok = parse_int(s, p) && eat(s, '/') && parse_int(s, q);
    skip_ws(s);
    if (!ok || !s.empty()) throw std::invalid_argument("parse_cusp: expected p/q");
    return make_cusp(p, q);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > degree() || seen[v - 1])
            throw std::invalid_argument("Perm: image table is not a bijection of {1..d}");
        seen[v - 1] = true;
    }
}

Perm Perm::identity(int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 1);
    return Perm(std::move(img));
}

bool Perm::is_identity() const {
    for (int i = 1; i <= degree(); ++i)
        if (of(i) != i) return false;
    return true;
}

Perm perm_compose(const Perm& p, const Perm& q) {
    if (p.degree() != q.degree()) throw std::invalid_argument("perm_compose: degree mismatch");
    std::vector<int> img(p.degree());
    for (int i = 1; i <= p.degree(); ++i) img[i - 1] = p.of(q.of(i));
    return Perm(std::move(img));
}

Perm perm_inverse(const Perm& p) {
    std::vector<int> img(p.degree());
    for (int i = 1; i <= p.degree(); ++i) img[p.of(i) - 1] = i;
    return Perm(std::move(img));
}

Perm perm_pow(const Perm& p, long long e) {
    Perm base = e < 0 ? perm_inverse(p) : p;
    unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    Perm acc = Perm::identity(p.degree());
    while (n) {
        if (n & 1) acc = perm_compose(acc, base);
        base = perm_compose(base, base);
        n >>= 1;
    }
    return acc;
}

int perm_order(const Perm& p) {
    int o = 1;
    for (const auto& c : perm_cycles(p)) o = std::lcm(o, static_cast<int>(c.size()));
    return o;
}

std::vector<int> fixed_points(const Perm& p) {
    std::vector<int> out;
    for (int i = 1; i <= p.degree(); ++i)
        if (p.of(i) == i) out.push_back(i);
    return out;
}

std::vector<std::vector<int>> perm_cycles(const Perm& p) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(p.degree(), false);
    for (int i = 1; i <= p.degree(); ++i) {
        if (seen[i - 1]) continue;
        std::vector<int> cyc;
        int j = i;
        while (!seen[j - 1]) {
            seen[j - 1] = true;
            cyc.push_back(j);
            j = p.of(j);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<int> cycle_type(const Perm& p) {
    std::vector<int> out;
    for (const auto& c : perm_cycles(p)) out.push_back(static_cast<int>(c.size()));
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::string cycle_string(const Perm& p) {
    std::string out;
    for (const auto& c : perm_cycles(p)) {
        if (c.size() < 2) continue;
        out += '(';
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k) out += ',';
            out += std::to_string(c[k]);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Perm parse_cycles(std::string_view s, int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 1);
    skip_ws(s);
    if (s == "()") return Perm(std::move(img));
    while (!s.empty()) {
        skip_ws(s);
        if (s.empty()) break;
        if (!eat(s, '(')) throw std::invalid_argument("parse_cycles: expected '('");
        std::vector<int> cyc;
        while (true) {
            i64 v;
            if (!parse_int(s, v) || v < 1 || v > degree)
                throw std::invalid_argument("parse_cycles: bad point");
            cyc.push_back(static_cast<int>(v));
            if (eat(s, ',')) continue;
            if (eat(s, ')')) break;
            throw std::invalid_argument("parse_cycles: expected ',' or ')'");
        }
        for (std::size_t k = 0; k < cyc.size(); ++k) img[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
    }
    return Perm(std::move(img));
}

std::vector<std::vector<int>> orbits(std::span<const Perm> gens, int degree) {
    for (const Perm& g : gens)
        if (g.degree() != degree) throw std::invalid_argument("orbits: degree mismatch");
    std::vector<int> parent(degree + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Perm& g : gens)
        for (int i = 1; i <= degree; ++i) {
            int a = find(i), b = find(g.of(i));
            if (a != b) parent[a] = b;
        }
    std::vector<std::vector<int>> blocks;
    std::vector<int> slot(degree + 1, -1);
    for (int i = 1; i <= degree; ++i) {
        int r = find(i);
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(blocks.size());
            blocks.emplace_back();
        }
        blocks[slot[r]].push_back(i);
    }
    return blocks;
}

bool is_transitive(std::span<const Perm> gens, int degree) {
    return orbits(gens, degree).size() == 1;
}

} // namespace subgroups
