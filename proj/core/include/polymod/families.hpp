#pragma once

#include "polymod/fvector.hpp"

#include <variant>
#include <vector>

namespace polymod {

enum class TowerKind { Prism, Pyramid, Bipyramid };

// Descriptor of a polytope sequence. Tower members are indexed by the
// number of construction steps (k >= 0); stacked and cyclic members by
// their dimension k >= 2, with v = k + 1 + n vertices.
struct TowerSpec {
    TowerKind kind;
    FVector seed;
};
struct StackedSpec {
    int n = 0;
};
struct CyclicSpec {
    int n = 0;
};
using FamilySpec = std::variant<TowerSpec, StackedSpec, CyclicSpec>;

/// Prism over the base: f'_0 = 2 f_0 and f'_{i+1} = 2 f_{i+1} + f_i.
FVector prism_step(const FVector& f);

/// Pyramid over the base: f'_i = f_i + f_{i-1} for every i.
FVector pyramid_step(const FVector& f);

/// Bipyramid over the base: f'_i = f_i + 2 f_{i-1} below the top, with the
/// top-dimension corrections (the base itself is not a face, the whole
/// polytope is counted once). Throws DegenerateBase for a point base.
FVector bipyramid_step(const FVector& f);

/// The step operation iterated `steps` times; steps = 0 returns the seed.
FVector tower(const FVector& seed, TowerKind kind, int steps);

/// f-vector of a stacked d-polytope on v vertices:
/// f_i = C(d,i) v - C(d+1,i+1) i for 1 <= i <= d-2,
/// f_{d-1} = (d-1) v - (d+1)(d-2), and f_0 = v.
FVector stacked_fvector(long v, int d);

/// Modified stacked vector: l_i = C(d,i) v - C(d+1,i+1) i for all
/// i = -1..d. Equals the f-vector except l_{d-1} = f_{d-1} + n and
/// l_d = f_d + n with n = v - d - 1; satisfies the Pascal recursion
/// l_i(S_k) = l_{i-1}(S_{k-1}) + l_i(S_{k-1}) literally.
ExtendedVector modified_stacked_vector(long v, int d);

/// h-vector of the cyclic polytope C(v,d): h_j = C(v-d-1+j, j) up to the
/// middle, mirrored by Dehn-Sommerville (h_j = h_{d-j}).
std::vector<Int> cyclic_hvector(long v, int d);

/// f-vector of C(v,d): f_{i-1} = sum_{j=0}^{i} C(d-j, d-i) h_j.
FVector cyclic_fvector(long v, int d);

/// Index reversal l_j = f_{d-1-j} for j = -1..d.
ExtendedVector reversed_vector(const FVector& f);

/// Smallest valid member index: 0 for towers, 2 for stacked and cyclic.
int family_min_index(const FamilySpec& spec);

/// Dimension of the k-th member.
int family_dim(const FamilySpec& spec, int k);

/// The k-th member's f-vector. Throws IndexOutOfRange below the family's
/// first index.
FVector family_fvector(const FamilySpec& spec, int k);

} // namespace polymod
