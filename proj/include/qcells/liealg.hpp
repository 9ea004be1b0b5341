#pragma once

#include <vector>

#include "qcells/endos.hpp"
#include "qcells/patterns.hpp"

namespace qcells {

/// Tangent direction with one nonzero entry per block: at vertex b+j it sends
/// e_{1+j} to e_{a+j} (j in [0, N-a]); other basis vectors go to zero.
EndoTuple shift_endo(int N, int a, int b);

/// Average of a shift endo with its involution image:
/// (shift(a,b) + (-1)^a shift(a,a-b)) / 2. Fixed by the tangent involution.
EndoTuple symmetrized_endo(int N, int a, int b);

/// Basis of the tangent space to the automorphism group (symplectic=false:
/// the N^2 shift endos) or of its form-preserving subgroup (an independent
/// set of symmetrized endos of size 2n^2+n for N=2n, rank-checked).
std::vector<EndoTuple> lie_basis(int N, bool symplectic);

/// Dimension of the orbit through the coordinate point of J: rank of the
/// linear map sending each basis direction xi to the blockwise images
/// xi_i . V_i taken modulo V_i. Overload with an explicit basis allows
/// sharing one basis across a sweep.
int orbit_dimension(const JugglingPattern& J, bool symplectic);
int orbit_dimension(const JugglingPattern& J, bool symplectic, const std::vector<EndoTuple>& basis);

}  // namespace qcells
