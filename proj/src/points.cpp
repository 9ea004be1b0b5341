#include "qcells/points.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "qcells/errors.hpp"

namespace qcells {

namespace {
int cyc(int v, int n) { return ((v % n) + n) % n; }
}  // namespace

QuiverPoint::QuiverPoint(int ambient, int rank, std::vector<RationalMatrix> blks)
    : N(ambient), k(rank), blocks(std::move(blks)) {
  if (N < 1 || k < 0 || k > N || blocks.empty())
    fail(ErrorKind::ShapeMismatch, "point needs ambient >= 1, 0 <= rank <= ambient, and at least one block");
  for (const auto& b : blocks) {
    if (b.rows() != N || b.cols() != k)
      fail(ErrorKind::ShapeMismatch, "block of wrong shape", b.rows(), b.cols());
    if (b.rank() != k) fail(ErrorKind::ShapeMismatch, "block lacks full column rank");
  }
  const RationalMatrix t1 = tau1(N);
  for (int i = 0; i < vertices(); ++i)
    if (!span_contains(at(i + 1), t1 * blocks[i]))
      fail(ErrorKind::ShapeMismatch, "shift image escapes the next subspace at vertex", i);
}

const RationalMatrix& QuiverPoint::at(int vertex) const { return blocks[cyc(vertex, vertices())]; }

QuiverPoint coordinate_point(const JugglingPattern& J) {
  const int N = J.n();
  const int k = J.k();
  std::vector<RationalMatrix> blocks;
  blocks.reserve(N);
  for (int i = 0; i < J.n(); ++i) {
    RationalMatrix b(N, k);
    int c = 0;
    for (int j : J.at(i).elements()) b.at(j - 1, c++) = 1;
    blocks.push_back(std::move(b));
  }
  return QuiverPoint(N, k, std::move(blocks));
}

bool isotropy_check(const QuiverPoint& V) {
  if (V.N % 2 != 0) fail(ErrorKind::OddAmbient, "isotropy needs even ambient", V.N);
  const RationalMatrix om = omega(V.N);
  for (int i = 0; i < V.vertices(); ++i)
    if (!(V.blocks[i].transpose() * om * V.at(-i)).is_zero()) return false;
  return true;
}

QuiverPoint sigma_point(const QuiverPoint& V) {
  if (V.N % 2 != 0) fail(ErrorKind::OddAmbient, "complement involution needs even ambient", V.N);
  const RationalMatrix om = omega(V.N);
  std::vector<RationalMatrix> blocks;
  blocks.reserve(V.vertices());
  for (int i = 0; i < V.vertices(); ++i) blocks.push_back((V.at(-i).transpose() * om).kernel());
  return QuiverPoint(V.N, V.N - V.k, std::move(blocks));
}

bool point_spans_equal(const QuiverPoint& a, const QuiverPoint& b) {
  if (a.N != b.N || a.k != b.k || a.vertices() != b.vertices()) return false;
  for (int i = 0; i < a.vertices(); ++i)
    if (!span_equal(a.blocks[i], b.blocks[i])) return false;
  return true;
}

QuiverPoint act(const EndoTuple& a, const QuiverPoint& V) {
  if (a.ambient() != V.N || a.vertices() != V.vertices())
    fail(ErrorKind::ShapeMismatch, "tuple and point sizes differ", a.ambient(), V.N);
  std::vector<RationalMatrix> blocks;
  blocks.reserve(V.vertices());
  for (int i = 0; i < V.vertices(); ++i) blocks.push_back(a.blocks[i] * V.blocks[i]);
  return QuiverPoint(V.N, V.k, std::move(blocks));
}

QuiverPoint degeneration_span(const JugglingPattern& top, const JugglingPattern& bottom, int shift,
                              const Rational& t) {
  if (top.n() != bottom.n() || top.k() != bottom.k())
    fail(ErrorKind::MoveNotApplicable, "endpoint patterns live in different spaces");
  const int N = top.n();
  const int k = top.k();
  if (shift < 1) fail(ErrorKind::MoveNotApplicable, "shift must be positive", shift);
  std::vector<RationalMatrix> blocks;
  blocks.reserve(N);
  for (int a = 0; a < top.n(); ++a) {
    const BitSubset ta = top.at(a), ba = bottom.at(a);
    RationalMatrix blk(N, k);
    int c = 0;
    for (int j : ba.elements()) {
      if (ta.contains(j)) {
        blk.at(j - 1, c) = 1;
      } else {
        // relocated column: its source j-s must be a column of top only
        if (j - shift < 1 || !ta.contains(j - shift) || ba.contains(j - shift))
          fail(ErrorKind::MoveNotApplicable, "column difference is not a single relocation", a, j);
        blk.at(j - shift - 1, c) = 1;
        blk.at(j - 1, c) = t;
      }
      ++c;
    }
    blocks.push_back(std::move(blk));
  }
  return QuiverPoint(N, k, std::move(blocks));
}

QuiverPoint degeneration_path(const JugglingPattern& top, const SymplecticMove& move, const Rational& t) {
  const auto moves = symplectic_moves(top);
  if (std::find(moves.begin(), moves.end(), move) == moves.end())
    fail(ErrorKind::MoveNotApplicable, "move does not belong to the paired-move list of the top pattern");
  if (!move.is_pair()) return degeneration_span(top, move.target, move.first.shift, t);

  // Paired move: the second segment's parameter must be (-1)^{s+1} t. With the
  // same sign on both halves the cross terms of the form between the two
  // relocated segments add up instead of cancelling whenever the shift s is
  // even, and the family leaves the isotropic locus for t != 0.
  const int N = top.n();
  const int k = top.k();
  const int s = move.first.shift;
  const Rational t2 = (s % 2 == 0) ? Rational(-t) : t;
  const JugglingPattern& bot = move.target;
  std::map<std::pair<int, int>, Rational> landed;  // (vertex, column) -> parameter
  for (int r = 0; r < move.first.length; ++r)
    landed[{top.mod(move.first.vertex + r), move.first.column + r + s}] = t;
  for (int r = 0; r < move.second->length; ++r)
    landed[{top.mod(move.second->vertex + r), move.second->column + r + s}] = t2;
  std::vector<RationalMatrix> blocks;
  blocks.reserve(N);
  for (int a = 0; a < N; ++a) {
    RationalMatrix blk(N, k);
    int c = 0;
    for (int j : bot.at(a).elements()) {
      if (top.at(a).contains(j)) {
        blk.at(j - 1, c) = 1;
      } else {
        auto it = landed.find({a, j});
        if (it == landed.end())
          fail(ErrorKind::MoveNotApplicable, "relocated column does not belong to either segment", a, j);
        blk.at(j - s - 1, c) = 1;
        blk.at(j - 1, c) = it->second;
      }
      ++c;
    }
    blocks.push_back(std::move(blk));
  }
  return QuiverPoint(N, k, std::move(blocks));
}

QuiverPoint line_orbit_point(int N, int base_vertex, const std::vector<Rational>& coeffs) {
  if (static_cast<int>(coeffs.size()) != N)
    fail(ErrorKind::ShapeMismatch, "need one coefficient per coordinate", static_cast<int>(coeffs.size()), N);
  if (coeffs[0] == 0) fail(ErrorKind::SingularDiagonal, "leading coefficient must be nonzero");
  std::vector<RationalMatrix> blocks(N, RationalMatrix(N, 1));
  for (int m = 0; m < N; ++m) {
    RationalMatrix& blk = blocks[cyc(base_vertex + m, N)];
    for (int r = 1; r <= N - m; ++r) blk.at(m + r - 1, 0) = coeffs[r - 1];
  }
  return QuiverPoint(N, 1, std::move(blocks));
}

}  // namespace qcells
