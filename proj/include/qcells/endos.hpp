#pragma once

#include <random>
#include <vector>

#include "qcells/rational.hpp"

namespace qcells {

/// Gram matrix of the alternating form: antidiagonal +-1, +1 in the top-right
/// corner. Requires an even size.
RationalMatrix omega(int size);

/// Nilpotent shift e_i -> e_{i+1} (e_N -> 0): ones on the subdiagonal.
RationalMatrix tau1(int N);

/// The shift with an extra z in the top-right corner; invertible for z != 0.
RationalMatrix tau1z(int N, const Rational& z);

/// A vertex-indexed tuple of N x N blocks acting on the cyclic representation
/// (one copy of C^N per vertex). Used both for group elements and for tangent
/// directions; commuting with the arrows is checked on demand, not presumed.
struct EndoTuple {
  std::vector<RationalMatrix> blocks;

  int vertices() const { return static_cast<int>(blocks.size()); }
  int ambient() const { return blocks.empty() ? 0 : blocks[0].rows(); }
  /// Block at a cyclic vertex index (negatives allowed).
  const RationalMatrix& at(int vertex) const;
  bool operator==(const EndoTuple& o) const { return blocks == o.blocks; }
  bool operator!=(const EndoTuple& o) const { return !(*this == o); }
};

EndoTuple identity_tuple(int N);

/// True iff tau1 . X_i == X_{i+1} . tau1 for every vertex (cyclically).
bool quiver_equivariant(const EndoTuple& x);

/// Involution on tangent tuples: block i of the result is Omega X_{-i}^t Omega.
EndoTuple sigma_endo(const EndoTuple& x);

/// Involution on automorphism tuples: block i is -Omega A_{-i}^{-t} Omega.
EndoTuple sigma_aut(const EndoTuple& a);

/// First-column data of a lower-triangular automorphism candidate:
/// cols[i][j-1] is the j-th first-column entry at vertex i, i in Z_N, j in [1,N].
using FirstColumns = std::vector<std::vector<Rational>>;

/// Value of the alternating-sum constraint at (i, r), r in [2, N]:
/// sum_{l=0}^{r-1} (-1)^l cols[i][l] * cols[r-i][r-1-l]  (second index cyclic).
Rational aut_equation_value(const FirstColumns& cols, int i, int r);

/// True iff the product constraints a1(i)*a1(1-i) = 1 and all alternating-sum
/// constraints hold. Diagonal entries must be nonzero.
bool check_aut_equations(const FirstColumns& cols);

/// Expands first-column data to the full tuple of lower-triangular blocks,
/// constant along shifted diagonals: A_i[s][t] = cols[i-t+1][s-t] (1-based).
EndoTuple build_aut_from_tuple(const FirstColumns& cols);

/// Random solution of the form-preservation equations, built level by level:
/// one free entry per {i, r-i} orbit, the partner solved from the constraint.
FirstColumns sample_symplectic_tuple(int N, std::mt19937_64& rng);

}  // namespace qcells
