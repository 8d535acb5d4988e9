#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace subgroups {

using i64 = std::int64_t;

// Checked 64-bit arithmetic. Matrix entries stay tiny at the indices this
// library targets; the guards turn a silent wrap into a hard error.
i64 checked_add(i64 x, i64 y);
i64 checked_sub(i64 x, i64 y);
i64 checked_mul(i64 x, i64 y);

/// Element of PSL2(Z): integer matrix of determinant one, sign-normalized so
/// that c > 0, or c == 0 and d > 0.
struct ProjMatrix {
    i64 a, b, c, d;
    friend bool operator==(const ProjMatrix&, const ProjMatrix&) = default;
};

ProjMatrix normalize(i64 a, i64 b, i64 c, i64 d);
ProjMatrix mat_mul(const ProjMatrix& x, const ProjMatrix& y);
ProjMatrix mat_inverse(const ProjMatrix& x);
ProjMatrix mat_identity();
ProjMatrix mat_S();       // (0,-1;1,0)
ProjMatrix mat_T();       // (1,1;0,1)
ProjMatrix mat_R();       // S*T
ProjMatrix mat_lower();   // (1,0;1,1)

std::string to_string(const ProjMatrix& m);          // "[[a,b],[c,d]]"
ProjMatrix parse_matrix(std::string_view text);

/// Reduced extended rational. den >= 0, gcd(|num|, den) == 1; den == 0 only
/// for num = -1 (the -infinity marker) or num = +1 (the +infinity marker).
/// The two markers are distinct values; use proj_equal to compare them as
/// points of the projective line.
struct Cusp {
    i64 num, den;
    friend bool operator==(const Cusp&, const Cusp&) = default;
};

Cusp make_cusp(i64 p, i64 q);
bool is_infinite(const Cusp& c);
bool proj_equal(const Cusp& x, const Cusp& y);
// Total order with -infinity below and +infinity above every rational.
std::strong_ordering cusp_cmp(const Cusp& x, const Cusp& y);
std::string to_string(const Cusp& c);                // "p/q", infinities as "-1/0", "1/0"
Cusp parse_cusp(std::string_view text);

/// Permutation of {1..d}, stored as the image table of 1..d.
class Perm {
  public:
    Perm() = default;
    explicit Perm(std::vector<int> images);
    static Perm identity(int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    int of(int point) const { return images_[point - 1]; }
    bool is_identity() const;
    const std::vector<int>& images() const { return images_; }

    friend bool operator==(const Perm&, const Perm&) = default;
    friend std::strong_ordering operator<=>(const Perm& x, const Perm& y) {
        return x.images_ <=> y.images_;
    }

  private:
    std::vector<int> images_;
};

/// Composition "apply q first, then p".
Perm perm_compose(const Perm& p, const Perm& q);
Perm perm_inverse(const Perm& p);
Perm perm_pow(const Perm& p, long long e);
int perm_order(const Perm& p);
std::vector<int> fixed_points(const Perm& p);
std::vector<int> cycle_type(const Perm& p);               // lengths, descending
std::vector<std::vector<int>> perm_cycles(const Perm& p); // incl. fixed points
std::string cycle_string(const Perm& p);                  // "(1,2)(3,4)", "()" for id
Perm parse_cycles(std::string_view text, int degree);

std::vector<std::vector<int>> orbits(std::span<const Perm> gens, int degree);
bool is_transitive(std::span<const Perm> gens, int degree);

} // namespace subgroups
