#pragma once

#include <string>
#include <vector>

#include "subgroups/core.hpp"
#include "subgroups/tree_diagram.hpp"

namespace subgroups {

enum class SideType : unsigned char { Even, Odd, Free };

struct Side {
    SideType type;
    int partner = -1;  // 0-based side index of the paired free side
    friend bool operator==(const Side&, const Side&) = default;
};

/// Generalized Farey symbol plus side labels: gfs[0] is the -infinity marker,
/// gfs.back() the +infinity marker; sides[k] joins gfs[k] and gfs[k+1] and
/// carries the colored external vertex sitting between those two cusps.
struct KulkarniDiagram {
    std::vector<Cusp> gfs;
    std::vector<Side> sides;

    int side_count() const { return static_cast<int>(sides.size()); }
    int index() const;
};

/// Tree distance between external vertices of a diagram, in the subdivided
/// graph obtained when building the bipartite model: 2d-2 plus 0/1/2 for
/// red-red / mixed / blue-blue endpoints.
int bipartite_distance(const TreeDiagram& d, int v, int w);

/// Cusp list attached to a tree diagram; starts -1/0, 0/1 and ends 1/0.
std::vector<Cusp> farey_symbol(const TreeDiagram& d);

KulkarniDiagram attach_farey_symbol(const TreeDiagram& d);

/// Side-pairing generator of 1-based side k, sign-normalized.
ProjMatrix cusp_generator(const KulkarniDiagram& k, int side);

/// Independent generating set: one matrix per even/odd side, one per free
/// pair (taken from the pair's lower side).
std::vector<ProjMatrix> side_pairing_generators(const KulkarniDiagram& k);

/// Permutations on cusp positions 1..side_count() whose orbits are the
/// equivalence classes of cusps (position 1 is the infinity cusp).
std::vector<Perm> cusp_orbit_group(const KulkarniDiagram& k);
std::vector<std::vector<int>> cusp_orbits(const KulkarniDiagram& k);

i64 cusp_width(const KulkarniDiagram& k, const std::vector<int>& orbit);

struct GroupInvariants {
    int index, e2, e3, t, genus;
    i64 level;
    friend bool operator==(const GroupInvariants&, const GroupInvariants&) = default;
};

GroupInvariants invariants(const KulkarniDiagram& k);

std::vector<std::string> gfs_strings(const KulkarniDiagram& k);

} // namespace subgroups
