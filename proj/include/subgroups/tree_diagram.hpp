#pragma once

#include <string>
#include <utility>
#include <vector>

#include "subgroups/bivalent_tree.hpp"

namespace subgroups {

/// Bi-valent tree (n = 3) with a cyclic order at each internal vertex.
/// The order at v with sorted neighbours (n0,n1,n2) is (n0,n1,n2) when
/// flipped[v] is false and (n0,n2,n1) when true.
struct OrientedTree {
    BivalentTree tree;
    std::vector<bool> flipped;

    /// Successor of neighbour w in the cyclic order at internal vertex v.
    int sigma(int v, int w) const;
    /// The cyclic order at v as a 3-cycle of vertex labels.
    std::vector<int> cycle_at(int v) const;
};

/// Orientation assignments on T, one per choice vector: internal vertices
/// with at least two external neighbours keep the fixed orientation, the
/// others take both. Assignments are enumerated as distinct diagrams even
/// when isomorphic as oriented trees; this is the counting convention the
/// reference tables use.
std::vector<OrientedTree> enumerate_orientations(const BivalentTree& t);

int right_of(const OrientedTree& d, int v);
int left_of(const OrientedTree& d, int v);

/// External vertices in r-orbit order starting at the smallest label.
std::vector<int> cyclic_order(const OrientedTree& d);

struct ParameterTriple {
    int internal;    // m
    int blue;        // b
    int red;         // r
    int free_pairs;  // f
    friend bool operator==(const ParameterTriple&, const ParameterTriple&) = default;
};

/// All (b,r,f) with b+r+2f = m+2 and d = 3m+b, over the admissible m-range.
std::vector<ParameterTriple> parameter_triples(int d);

/// All perfect matchings of s, one per ordered tuple.
std::vector<std::vector<std::pair<int, int>>> two_partitions(const std::vector<int>& s);

struct Coloring {
    std::vector<int> blue;                      // odd external vertices
    std::vector<int> red;                       // even external vertices (fixed by the involution)
    std::vector<std::pair<int, int>> pairs;     // free-side involution
};

std::vector<Coloring> enumerate_colorings(const OrientedTree& d, const ParameterTriple& t);

struct TreeDiagram {
    OrientedTree oriented;
    Coloring coloring;
    std::vector<int> external_order;  // cyclic r-order

    int internal_count() const { return oriented.tree.internal_count; }
    int index() const { return 3 * internal_count() + static_cast<int>(coloring.blue.size()); }
};

/// Complete invariant of the diagram up to isomorphism preserving adjacency,
/// orientation, colors and the unordered pairing.
std::string diagram_canonical_code(const TreeDiagram& d);

/// All tree diagrams of subgroup index d, in the reference tables' counting
/// convention (see enumerate_orientations; colorings are deduplicated per
/// orientation assignment under the orientation-preserving automorphisms
/// generated by elements whose internal action is an involution or trivial).
/// Deterministic order: sorted by canonical code, construction order on ties.
std::vector<TreeDiagram> enumerate_tree_diagrams(int d);

/// Orientation-preserving automorphisms of an oriented tree, as vertex maps.
std::vector<std::vector<int>> oriented_automorphisms(const OrientedTree& d);

} // namespace subgroups
