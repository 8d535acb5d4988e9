#pragma once

#include <vector>

#include "subgroups/core.hpp"
#include "subgroups/kulkarni.hpp"

namespace subgroups {

/// Working matrix of the reduction: determinant one, sign NOT normalized.
struct SignedMatrix {
    i64 a, b, c, d;
    friend bool operator==(const SignedMatrix&, const SignedMatrix&) = default;
};

SignedMatrix to_signed(const ProjMatrix& m);

/// A reduced element of the coset Delta*g. Throws on non-unimodular input;
/// exceeding the depth guard signals an implementation bug.
SignedMatrix reduce(const KulkarniDiagram& k, SignedMatrix g, int* depth_out = nullptr);

bool is_member(const KulkarniDiagram& k, const ProjMatrix& g);

/// Left-coset representatives g_1..g_d of Delta\backslash classes g_i*Delta,
/// with g_1 in Delta; count equals the index.
std::vector<ProjMatrix> coset_representatives(const KulkarniDiagram& k);

} // namespace subgroups
