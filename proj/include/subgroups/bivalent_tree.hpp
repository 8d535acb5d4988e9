#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "subgroups/core.hpp"

namespace subgroups {

/// Tree whose vertices have valence 1 (external) or n (internal). Vertices
/// are 0-based; 0..internal_count-1 are internal, the rest external. External
/// vertices are grouped by their internal neighbour, groups ordered by that
/// neighbour's label. The degenerate single-edge tree has internal_count 0.
struct BivalentTree {
    int internal_count = 0;
    int valence = 3;
    std::vector<std::vector<int>> adj;

    int vertex_count() const { return static_cast<int>(adj.size()); }
    int external_count() const { return vertex_count() - internal_count; }
    bool is_internal(int v) const { return v < internal_count; }
    /// Internal neighbour of an external vertex.
    int parent_of(int v) const { return adj[v][0]; }
};

BivalentTree single_edge();
BivalentTree star(int n);
BivalentTree extend(const BivalentTree& t, int v);

/// One representative per isomorphism class of Bi(m,n).
std::vector<BivalentTree> enumerate_trees(int m, int n);

/// Induced subgraph on the internal vertices (plain adjacency lists).
std::vector<std::vector<int>> internal_subtree(const BivalentTree& t);

/// Canonical code of the internal subtree (rooted at its center/bicenter),
/// a complete isomorphism invariant for bi-valent trees.
std::string internal_canonical_code(const BivalentTree& t);

/// Transpositions generating the kernel of Aut(T) -> Aut(T_i); permutations
/// act on vertices 1..|V|.
std::vector<Perm> aut_kernel_generators(const BivalentTree& t);

struct AutGroup {
    std::vector<Perm> generators;
    std::uint64_t order = 1;
};

/// Full automorphism group: kernel generators plus order-preserving lifts of
/// the internal-subtree automorphisms; order = |Aut_e| * |Aut(T_i)|.
AutGroup aut_group(const BivalentTree& t);

/// All automorphisms of the internal subtree, as vertex maps of length m.
std::vector<std::vector<int>> internal_automorphisms(const BivalentTree& t);

/// Unique order-preserving extension of an internal automorphism to the
/// whole tree (vertex map of length |V|).
std::vector<int> lift_internal_automorphism(const BivalentTree& t, const std::vector<int>& phi);

/// Partition of the external vertices into Aut_e-orbits (the fibers of the
/// attachment map).
std::vector<std::vector<int>> external_classes(const BivalentTree& t);

} // namespace subgroups
