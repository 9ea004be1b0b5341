#pragma once

#include <vector>

#include "qcells/points.hpp"
#include "qcells/rational.hpp"

namespace qcells {

/// Row index of v_p t^d in the truncation window d in [-m, m-1], p in [1, N].
int window_row(int p, int d, int N, int m);

/// Multiplication by t on window coordinates: d -> d+1; the top band falls
/// into the part the quotient forgets.
RationalMatrix t_shift_matrix(int N, int m);

/// A lattice pinched between t^m V[t] and t^-m V[t], stored as a basis of the
/// quotient modulo t^m V[t]. Construction checks full column rank and that
/// the span is carried into itself by t.
struct TruncatedLattice {
  int N = 0;
  int m = 0;
  int index = 0;         // quotient dimension is m*N + index
  RationalMatrix basis;  // 2mN rows, mN + index columns

  TruncatedLattice(int ambient, int depth, int idx, RationalMatrix b);
  int dim() const { return basis.cols(); }
};

bool lattice_span_equal(const TruncatedLattice& a, const TruncatedLattice& b);

/// The distinguished lattice of index c: with c = N d + r (r in [0, N)) it is
/// t^-d (V[t] + span{v_1 t^-1, ..., v_r t^-1}), truncated. Needs |c| <= mN.
TruncatedLattice ring_lattice(int c, int m, int N);

/// Basis assignment C^N -> window: column col maps to v_{j+N-col} t^d for
/// col >= j and to v_{j-col} t^(d-1) for col < j. Injective band embedding.
RationalMatrix eta(int j, int d, int N, int m);

/// Positions c = 0..N-1 of a periodic chain; position c+N is t^-1 times
/// position c, applied on demand through the index bookkeeping.
struct LatticeChain {
  int N = 0;
  int m = 0;
  std::vector<TruncatedLattice> lattices;
};

/// Lattice realization of a quiver point: position c couples the distinguished
/// lattice of index c-n with a band embedding of the vertex-c block. The
/// resulting position index is c - n + k. Needs depth m >= 2.
LatticeChain phi(const QuiverPoint& U, int m);

/// The residue form on basis elements: (v_p t^a, v_q t^b) is nonzero only for
/// a+b = -1 and p+q = N+1, with value (-1)^(p+1).
Rational residue_pair_basis(int p, int a, int q, int b, int N);

/// Bilinear extension to window coordinate columns (2mN x 1 each).
Rational residue_pair(const RationalMatrix& v, const RationalMatrix& w, int N, int m);

/// Inclusions with dimension step one around the circle, including the wrap
/// t . (last position) inside position 0.
bool chain_valid(const LatticeChain& chain);

/// chain_valid, plus: position -c (the t-shift of position N-c) pairs to zero
/// with position c under the residue form for every c, and the position
/// indices are complementary around the center.
bool check_symplectic_chain(const LatticeChain& chain);

}  // namespace qcells
