#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "subgroups/core.hpp"
#include "subgroups/kulkarni.hpp"
#include "subgroups/reduction.hpp"

namespace subgroups {

struct Passport {
    int degree = 0;
    Perm sigma_s, sigma_r, sigma_t;
};

/// Coset permutation of g: sigma(i) = j iff reps[j]^-1 * g * reps[i] lies in
/// the subgroup. Throws if the representatives are not a transversal.
Perm theta(const KulkarniDiagram& k, std::span<const ProjMatrix> reps, const ProjMatrix& g);

Passport passport(const KulkarniDiagram& k);
Passport passport(const KulkarniDiagram& k, std::span<const ProjMatrix> reps);

/// Validates sigma_s^2 = sigma_r^3 = id, sigma_s o sigma_t = sigma_r and
/// transitivity; throws on violation.
void check_passport(const Passport& p);

/// Canonical byte string under simultaneous conjugation: BFS relabelling from
/// every base point, lexicographic minimum of [degree | sigma_s | sigma_t].
std::vector<std::uint8_t> canonical_passport(const Passport& p);

/// Canonical form of the GL2-class: minimum over the passport and its
/// T-inverted twin.
std::vector<std::uint8_t> gl2_key(const Passport& p);

std::string key_hex(std::span<const std::uint8_t> key);
std::vector<std::uint8_t> key_from_hex(std::string_view hex);

/// Hsu's congruence test from sigma_L = theta(T) and the image of the lower
/// unipotent matrix.
bool is_congruence(const Perm& sigma_l, const Perm& sigma_lower);
bool is_congruence(const KulkarniDiagram& k);

/// All partitions of {1..degree} into blockcount equal blocks preserved by
/// sigma_s and sigma_t; each corresponds to an overgroup of index blockcount.
std::vector<std::vector<std::vector<int>>> block_systems(const Passport& p, int blockcount);

} // namespace subgroups
