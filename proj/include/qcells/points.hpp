#pragma once

#include <vector>

#include "qcells/endos.hpp"
#include "qcells/mutations.hpp"
#include "qcells/patterns.hpp"

namespace qcells {

/// A point of the cyclic quiver Grassmannian: one N x k block per vertex whose
/// columns span the subspace there. Construction checks full column rank and
/// that the shift carries each subspace into the next one.
struct QuiverPoint {
  int N = 0;
  int k = 0;
  std::vector<RationalMatrix> blocks;

  QuiverPoint(int ambient, int rank, std::vector<RationalMatrix> blks);
  int vertices() const { return static_cast<int>(blocks.size()); }
  const RationalMatrix& at(int vertex) const;
};

/// p_J: block i consists of the standard basis columns indexed by J_i.
QuiverPoint coordinate_point(const JugglingPattern& J);

/// True iff V_i^t Omega V_{-i} is the zero block for every vertex.
bool isotropy_check(const QuiverPoint& V);

/// Block i of the result spans the orthogonal complement of V_{-i} with
/// respect to the alternating form; rank k goes to rank N-k.
QuiverPoint sigma_point(const QuiverPoint& V);

bool point_spans_equal(const QuiverPoint& a, const QuiverPoint& b);

/// Apply a block endomorphism tuple vertexwise: block i becomes A_i V_i.
QuiverPoint act(const EndoTuple& a, const QuiverPoint& V);

/// The explicit family joining the seeds of two patterns that differ by
/// segment relocation with shift s: common columns stay e_j, relocated ones
/// become e_{j-s} + t e_j. At t=0 the span equals the seed of `top`.
QuiverPoint degeneration_span(const JugglingPattern& top, const JugglingPattern& bottom, int shift,
                              const Rational& t);

/// Same family for a move produced by the paired-move search on `top`;
/// the move must actually belong to symplectic_moves(top).
QuiverPoint degeneration_path(const JugglingPattern& top, const SymplecticMove& move, const Rational& t);

/// Rank-one point through the cell of the maximal pattern with {1} at
/// base_vertex: vertex base+m spans the m-th shift power applied to
/// sum_r coeffs[r-1] e_r. Requires coeffs[0] != 0.
QuiverPoint line_orbit_point(int N, int base_vertex, const std::vector<Rational>& coeffs);

}  // namespace qcells
