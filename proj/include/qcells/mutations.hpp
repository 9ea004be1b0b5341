#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcells/patterns.hpp"

namespace qcells {

/// One mutation of the grid S_J: the predecessor-closed prefix of a segment
/// starting at (vertex, column), of `length` cells, slides `shift` columns to
/// the right (which moves the pattern strictly down in the order).
struct SegmentMove {
  int vertex;  // vertex of the source segment start, 0-based mod n
  int column;  // column of the source segment start, 1-based
  int length;  // number of moved cells, >= 1
  int shift;   // column increase, >= 1

  bool operator==(const SegmentMove& o) const {
    return vertex == o.vertex && column == o.column && length == o.length && shift == o.shift;
  }
  bool operator!=(const SegmentMove& o) const { return !(*this == o); }
  bool operator<(const SegmentMove& o) const;
  std::string to_string() const;
};

/// Either a single move with symplectic source and target, or an unordered
/// pair (first landing non-symplectic, second the correction with the same
/// shift). `target` is the symplectic endpoint.
struct SymplecticMove {
  SegmentMove first;
  std::optional<SegmentMove> second;
  JugglingPattern target;

  bool is_pair() const { return second.has_value(); }
  bool operator==(const SymplecticMove& o) const {
    return first == o.first && second == o.second && target == o.target;
  }
  bool operator!=(const SymplecticMove& o) const { return !(*this == o); }
};

/// All (vertex, column) with the cell occupied and no predecessor:
/// column 1, or (vertex-1, column-1) empty.
std::vector<std::pair<int, int>> segment_starts(const JugglingPattern& J);

/// Every valid move out of J together with its target pattern, in a fixed
/// deterministic order. Distinct moves land on distinct targets.
std::vector<std::pair<SegmentMove, JugglingPattern>> downward_mutations(const JugglingPattern& J);

/// Applies the move, validating it completely; throws InvalidMove otherwise.
JugglingPattern apply_move(const JugglingPattern& J, const SegmentMove& m);

/// For symplectic J with apply_move(J, m1) non-symplectic: the removal move m2
/// (same shift) taking out the run of partner cells that starts at the leftmost
/// problem, plus the resulting symplectic pattern. Throws NotApplicable if the
/// intermediate is already symplectic, NoProblemFound if the structural
/// assumptions behind the correction break down (never expected — abort loudly).
std::pair<SegmentMove, JugglingPattern> correction_move(const JugglingPattern& J_top,
                                                        const SegmentMove& m1);

/// Singles (moves with symplectic target) plus deduplicated correction pairs.
/// Every downward move of J is covered by the result; otherwise UnpairedMove.
std::vector<SymplecticMove> symplectic_moves(const JugglingPattern& J);

/// Number of moves out of J = dimension of the cell C_J.
int cell_dimension(const JugglingPattern& J);

/// Number of symplectic moves out of J = dimension of the cell C_J^sp.
int symplectic_cell_dimension(const JugglingPattern& J);

}  // namespace qcells
