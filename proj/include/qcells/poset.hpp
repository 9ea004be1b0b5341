#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qcells/mutations.hpp"
#include "qcells/patterns.hpp"

namespace qcells {

enum class OrderKind { Full, Symplectic };

/// Cell order on JP(k,n) (all patterns, single moves) or JP(k,2n)^sp
/// (symplectic patterns, symplectic moves). Immutable after construction.
struct CellPoset {
  OrderKind kind;
  int k = 0, n = 0;
  std::vector<JugglingPattern> patterns;        // canonical (sorted) order
  std::vector<int> dims;                        // cell dimension per pattern
  std::vector<std::pair<int, int>> hasse;       // covering edges (upper, lower)
};

/// Rows of word-packed bits over pattern indices: row u has bit v set iff v is
/// reachable from u by (symplectic) moves; reflexive.
using ReachRows = std::vector<std::vector<std::uint64_t>>;

inline bool reach_get(const ReachRows& r, int u, int v) {
  return (r[u][v >> 6] >> (v & 63)) & 1u;
}

/// `patterns` must be sorted canonically (as produced by all_jp, possibly filtered).
ReachRows order_reachability(const std::vector<JugglingPattern>& patterns, OrderKind kind);

/// Downward-move reachability order with Hasse edges by transitive reduction.
/// For the symplectic kind: even n, k <= n/2, nodes are the symplectic patterns.
CellPoset build_poset(int k, int n, OrderKind kind);

struct ConjectureReport {
  int k = 0, n = 0;
  long n_symplectic = 0;
  /// (upper, lower) pairs comparable in jp_leq but not reachable by symplectic moves.
  std::vector<std::pair<JugglingPattern, JugglingPattern>> counterexamples;
};

/// Tests, for every comparable pair of symplectic patterns, whether the
/// combinatorial order relation is realized by a chain of symplectic moves.
/// Always runs to completion; an empty counterexample list means the orders agree.
ConjectureReport check_conjecture(int k, int n);

}  // namespace qcells
