#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "qcells/poset.hpp"

using namespace qcells;

namespace {

JugglingPattern jp(int n, std::vector<std::vector<int>> sets) {
  std::vector<BitSubset> s;
  for (auto& e : sets) s.push_back(BitSubset::from_elements(n, e));
  return JugglingPattern::validate(s);
}

}  // namespace

TEST_CASE("reachability by moves is the pattern order") {
  // Exhaustive: every pattern family small enough to close over completely.
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto ps = all_jp(k, n);
      if (ps.size() > 1000) continue;
      const auto reach = order_reachability(ps, OrderKind::Full);
      const long N = static_cast<long>(ps.size());
      for (long u = 0; u < N; ++u) {
        CHECK(reach_get(reach, u, u));
        for (long v = 0; v < N; ++v)
          CHECK(reach_get(reach, u, v) == jp_leq(ps[v], ps[u]));
      }
    }
}

TEST_CASE("full poset at (2,4)") {
  const CellPoset P = build_poset(2, 4, OrderKind::Full);
  REQUIRE(P.patterns.size() == 33);
  std::vector<int> tiers(5, 0);
  for (int d : P.dims) ++tiers.at(d);
  CHECK(tiers == std::vector<int>{1, 4, 10, 12, 6});
  for (auto [u, v] : P.hasse) CHECK(P.dims[u] == P.dims[v] + 1);

  // transitive closure of the covering edges rebuilds the reachability order
  const long N = 33;
  const auto reach = order_reachability(P.patterns, OrderKind::Full);
  std::vector<std::set<int>> below(N);
  for (long u = 0; u < N; ++u) below[u].insert(static_cast<int>(u));
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto [u, v] : P.hasse)
      for (int w : below[v])
        if (below[u].insert(w).second) grew = true;
  }
  for (long u = 0; u < N; ++u)
    for (long v = 0; v < N; ++v)
      CHECK(below[u].count(static_cast<int>(v)) == static_cast<std::size_t>(reach_get(reach, u, v)));
}

TEST_CASE("symplectic poset at (2,4) matches the known 13-cell diagram") {
  const CellPoset P = build_poset(2, 4, OrderKind::Symplectic);
  REQUIRE(P.patterns.size() == 13);
  std::vector<int> tiers(4, 0);
  for (int d : P.dims) ++tiers.at(d);
  CHECK(tiers == std::vector<int>{1, 3, 5, 4});
  for (auto [u, v] : P.hasse) CHECK(P.dims[u] == P.dims[v] + 1);

  // the diagram, numbered 1..13 from the bottom tier up, left to right
  const std::map<int, JugglingPattern> node = {
      {1, jp(4, {{3, 4}, {3, 4}, {3, 4}, {3, 4}})},
      {2, jp(4, {{2, 4}, {3, 4}, {3, 4}, {3, 4}})},
      {3, jp(4, {{3, 4}, {2, 4}, {3, 4}, {2, 4}})},
      {4, jp(4, {{3, 4}, {3, 4}, {2, 4}, {3, 4}})},
      {5, jp(4, {{2, 4}, {2, 3}, {3, 4}, {1, 4}})},
      {6, jp(4, {{1, 3}, {2, 4}, {3, 4}, {2, 4}})},
      {7, jp(4, {{2, 4}, {3, 4}, {2, 4}, {3, 4}})},
      {8, jp(4, {{3, 4}, {2, 4}, {1, 3}, {2, 4}})},
      {9, jp(4, {{3, 4}, {1, 4}, {2, 4}, {2, 3}})},
      {10, jp(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})},
      {11, jp(4, {{2, 4}, {1, 3}, {2, 4}, {1, 3}})},
      {12, jp(4, {{1, 3}, {2, 4}, {1, 3}, {2, 4}})},
      {13, jp(4, {{3, 4}, {1, 4}, {1, 2}, {2, 3}})},
  };
  const int expected_dim[14] = {-1, 0, 1, 1, 1, 2, 2, 2, 2, 2, 3, 3, 3, 3};
  std::map<int, int> idx;  // diagram number -> poset index
  for (const auto& [num, J] : node) {
    long i = pattern_index(P.patterns, J);
    REQUIRE(i >= 0);
    CHECK(P.dims[i] == expected_dim[num]);
    idx[num] = static_cast<int>(i);
  }

  const std::vector<std::pair<int, int>> diagram_edges = {  // (lower, upper)
      {1, 2},  {1, 3},  {1, 4},  {2, 5},  {2, 6},  {2, 7},  {3, 5},  {3, 6},
      {3, 8},  {3, 9},  {4, 7},  {4, 8},  {4, 9},  {5, 10}, {5, 11}, {6, 10},
      {6, 12}, {7, 12}, {7, 11}, {8, 12}, {8, 13}, {9, 11}, {9, 13}};
  std::set<std::pair<int, int>> expected;
  for (auto [lo, up] : diagram_edges) expected.insert({idx[up], idx[lo]});
  std::set<std::pair<int, int>> got(P.hasse.begin(), P.hasse.end());
  CHECK(got == expected);
}

TEST_CASE("degenerate posets") {
  const CellPoset P0 = build_poset(0, 4, OrderKind::Full);
  CHECK(P0.patterns.size() == 1);
  CHECK(P0.hasse.empty());
  CHECK(P0.dims == std::vector<int>{0});
  const CellPoset P0s = build_poset(0, 4, OrderKind::Symplectic);
  CHECK(P0s.patterns.size() == 1);

  CHECK_THROWS_AS(build_poset(2, 5, OrderKind::Symplectic), Error);
  CHECK_THROWS_AS(build_poset(3, 4, OrderKind::Symplectic), Error);
}

TEST_CASE("order comparison over symplectic moves") {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 4}, {2, 4}, {1, 6}}) {
    const ConjectureReport rep = check_conjecture(k, n);
    CHECK(rep.k == k);
    CHECK(rep.n == n);
    CHECK(rep.counterexamples.empty());
  }
  CHECK(check_conjecture(2, 4).n_symplectic == 13);
  CHECK(check_conjecture(1, 4).n_symplectic == 15);
  CHECK(check_conjecture(1, 6).n_symplectic == 63);
  CHECK_THROWS_AS(check_conjecture(2, 5), Error);
  CHECK_THROWS_AS(check_conjecture(3, 4), Error);

  // deterministic: two runs agree field for field
  const ConjectureReport a = check_conjecture(2, 6), b = check_conjecture(2, 6);
  CHECK(a.n_symplectic == 293);
  CHECK(a.n_symplectic == b.n_symplectic);
  CHECK(a.counterexamples == b.counterexamples);
}
