#include "qcells/poset.hpp"

#include <functional>
#include <stdexcept>

namespace qcells {

namespace {

std::vector<JugglingPattern> nodes_for(int k, int n, OrderKind kind) {
  std::vector<JugglingPattern> ps;
  enumerate_jp(k, n, [&](const JugglingPattern& J) {
    if (kind == OrderKind::Full || is_symplectic(J)) ps.push_back(J);
  });
  return ps;
}

std::vector<JugglingPattern> move_targets(const JugglingPattern& J, OrderKind kind) {
  std::vector<JugglingPattern> out;
  if (kind == OrderKind::Full) {
    for (auto& [m, t] : downward_mutations(J)) out.push_back(t);
  } else {
    for (auto& sm : symplectic_moves(J)) out.push_back(sm.target);
  }
  return out;
}

}  // namespace

ReachRows order_reachability(const std::vector<JugglingPattern>& patterns, OrderKind kind) {
  const long N = static_cast<long>(patterns.size());
  const std::size_t words = static_cast<std::size_t>((N + 63) / 64);
  ReachRows rows(N, std::vector<std::uint64_t>(words, 0));
  std::vector<char> done(N, 0);
  // Moves strictly descend, so the move graph is a DAG and memoized DFS is safe.
  std::function<void(long)> visit = [&](long u) {
    if (done[u]) return;
    done[u] = 1;
    rows[u][u >> 6] |= 1ull << (u & 63);
    for (const JugglingPattern& t : move_targets(patterns[u], kind)) {
      long v = pattern_index(patterns, t);
      if (v < 0) throw std::logic_error("move target missing from the node set");
      visit(v);
      for (std::size_t w = 0; w < words; ++w) rows[u][w] |= rows[v][w];
    }
  };
  for (long u = 0; u < N; ++u) visit(u);
  return rows;
}

CellPoset build_poset(int k, int n, OrderKind kind) {
  if (kind == OrderKind::Symplectic) {
    if (n % 2 != 0) fail(ErrorKind::OddAmbient, "symplectic poset needs even ambient");
    if (2 * k > n) fail(ErrorKind::RankTooLarge, "symplectic poset needs k <= n/2");
  }
  CellPoset P;
  P.kind = kind;
  P.k = k;
  P.n = n;
  P.patterns = nodes_for(k, n, kind);
  const long N = static_cast<long>(P.patterns.size());
  P.dims.resize(N);
  for (long i = 0; i < N; ++i)
    P.dims[i] = kind == OrderKind::Full ? cell_dimension(P.patterns[i])
                                        : symplectic_cell_dimension(P.patterns[i]);

  ReachRows reach = order_reachability(P.patterns, kind);
  // Transitive reduction: (u, v) is a covering edge iff v < u and no w strictly
  // between them.
  for (long u = 0; u < N; ++u) {
    for (long v = 0; v < N; ++v) {
      if (v == u || !reach_get(reach, u, v)) continue;
      bool covered = false;
      for (long w = 0; w < N && !covered; ++w) {
        if (w == u || w == v) continue;
        if (reach_get(reach, u, w) && reach_get(reach, w, v)) covered = true;
      }
      if (!covered) P.hasse.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
  }
  if (kind == OrderKind::Full)
    for (auto [u, v] : P.hasse)
      if (P.dims[u] <= P.dims[v])
        throw std::logic_error("cell dimension fails to drop along a covering edge");
  return P;
}

ConjectureReport check_conjecture(int k, int n) {
  if (n % 2 != 0) fail(ErrorKind::OddAmbient, "conjecture check needs even ambient");
  if (2 * k > n) fail(ErrorKind::RankTooLarge, "conjecture check needs k <= n/2");
  ConjectureReport rep;
  rep.k = k;
  rep.n = n;
  std::vector<JugglingPattern> ps = nodes_for(k, n, OrderKind::Symplectic);
  rep.n_symplectic = static_cast<long>(ps.size());
  ReachRows reach = order_reachability(ps, OrderKind::Symplectic);
  const long N = static_cast<long>(ps.size());
  for (long upper = 0; upper < N; ++upper)
    for (long lower = 0; lower < N; ++lower) {
      if (upper == lower) continue;
      bool leq = jp_leq(ps[lower], ps[upper]);
      bool rch = reach_get(reach, upper, lower);
      if (rch && !leq) throw std::logic_error("symplectic moves escaped the combinatorial order");
      if (leq && !rch) rep.counterexamples.emplace_back(ps[upper], ps[lower]);
    }
  return rep;
}

}  // namespace qcells
