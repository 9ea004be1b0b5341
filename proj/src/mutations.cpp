#include "qcells/mutations.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace qcells {

bool SegmentMove::operator<(const SegmentMove& o) const {
  return std::tie(vertex, column, length, shift) < std::tie(o.vertex, o.column, o.length, o.shift);
}

std::string SegmentMove::to_string() const {
  return "move(v=" + std::to_string(vertex) + ", col=" + std::to_string(column) +
         ", len=" + std::to_string(length) + ", s=" + std::to_string(shift) + ")";
}

std::vector<std::pair<int, int>> segment_starts(const JugglingPattern& J) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < J.n(); ++i)
    for (int j = 1; j <= J.n(); ++j)
      if (J.cell(i, j) && (j == 1 || !J.cell(i - 1, j - 1))) out.emplace_back(i, j);
  return out;
}

namespace {

// Shared validity test; on success fills the target sets.
bool move_valid(const JugglingPattern& J, const SegmentMove& m, std::vector<BitSubset>* target,
                std::string* why) {
  int n = J.n();
  auto no = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  if (m.length < 1 || m.shift < 1) return no("length and shift must be positive");
  if (m.column < 1 || m.column > n) return no("source column outside the grid");
  if (m.column + m.length - 1 + m.shift > n) return no("moved segment leaves the grid");
  for (int r = 0; r < m.length; ++r)
    if (!J.cell(m.vertex + r, m.column + r)) return no("source segment cell missing");
  if (m.column != 1 && J.cell(m.vertex - 1, m.column - 1)) return no("source is not a segment start");
  for (int r = 0; r < m.length; ++r)
    if (J.cell(m.vertex + r, m.column + r + m.shift)) return no("landing cell occupied");
  int last = m.column + m.length - 1 + m.shift;
  if (last < n && !J.cell(m.vertex + m.length, last + 1))
    return no("landing segment would not be successor-closed");
  if (target) {
    std::vector<BitSubset> sets = J.sets();
    for (int r = 0; r < m.length; ++r) {
      int v = J.mod(m.vertex + r);
      sets[v] = sets[v].without(m.column + r).with(m.column + r + m.shift);
    }
    *target = std::move(sets);
  }
  return true;
}

}  // namespace

JugglingPattern apply_move(const JugglingPattern& J, const SegmentMove& m) {
  std::vector<BitSubset> target;
  std::string why;
  if (!move_valid(J, m, &target, &why)) fail(ErrorKind::InvalidMove, why + " — " + m.to_string());
  return JugglingPattern::validate(target);
}

std::vector<std::pair<SegmentMove, JugglingPattern>> downward_mutations(const JugglingPattern& J) {
  int n = J.n();
  std::vector<std::pair<SegmentMove, JugglingPattern>> out;
  for (auto [v, j] : segment_starts(J)) {
    int max_len = 0;
    while (j + max_len <= n && J.cell(v + max_len, j + max_len)) ++max_len;
    for (int len = 1; len <= max_len; ++len)
      for (int s = 1; j + len - 1 + s <= n; ++s) {
        SegmentMove m{v, j, len, s};
        std::vector<BitSubset> target;
        if (move_valid(J, m, &target, nullptr))
          out.emplace_back(m, JugglingPattern::validate(target));
      }
  }
  return out;
}

std::pair<SegmentMove, JugglingPattern> correction_move(const JugglingPattern& J_top,
                                                        const SegmentMove& m1) {
  int n2 = J_top.n();
  JugglingPattern J_mid = apply_move(J_top, m1);
  if (is_symplectic(J_mid))
    fail(ErrorKind::NotApplicable, "intermediate pattern is already symplectic");

  // The landed segment sits at vertices a..a+l, columns c..c+l. Since the top
  // was symplectic, every violation involves a landed cell and its partner
  // slot (-a-r, 2n+1-c-r); successor-closure makes the set of occupied partner
  // slots a prefix [0, r*], so removing the run that starts at the leftmost
  // problem (largest r) clears them all at once.
  int a = m1.vertex, c = m1.column + m1.shift, l = m1.length - 1;
  int rstar = -1;
  for (int r = 0; r <= l; ++r)
    if (J_mid.cell(-(a + r), n2 + 1 - c - r)) rstar = r;
  for (int r = 0; r < rstar; ++r)
    if (!J_mid.cell(-(a + r), n2 + 1 - c - r))
      fail(ErrorKind::NoProblemFound, "partner slots do not form a prefix run");
  if (rstar < 0)
    fail(ErrorKind::NoProblemFound,
         "non-symplectic intermediate but no partner cell next to the landed segment");

  // The removed run starts where the conflicts start, but may have to extend
  // past them: the two halves of a pair can have different lengths, and only
  // one length keeps the shifted landing successor-closed. That length is
  // unique — the closure cell of a shorter candidate is a landing cell of any
  // longer one — so scan upward from the conflict run and take the first fit.
  const int v2 = J_mid.mod(-(a + rstar));
  const int c2 = n2 + 1 - c - rstar;
  SegmentMove m2{v2, c2, rstar + 1, m1.shift};
  for (int len = rstar + 1; c2 + len - 1 <= n2 && J_mid.cell(v2 + len - 1, c2 + len - 1); ++len) {
    SegmentMove cand{v2, c2, len, m1.shift};
    if (move_valid(J_mid, cand, nullptr, nullptr)) {
      m2 = cand;
      break;
    }
  }
  JugglingPattern J_bot = [&] {
    try {
      return apply_move(J_mid, m2);
    } catch (const Error& e) {
      fail(ErrorKind::NoProblemFound, std::string("correction removal is invalid: ") + e.what());
    }
  }();
  if (!is_symplectic(J_bot))
    fail(ErrorKind::NoProblemFound, "correction endpoint is not symplectic");
  return {m2, J_bot};
}

std::vector<SymplecticMove> symplectic_moves(const JugglingPattern& J) {
  if (!is_symplectic(J)) fail(ErrorKind::NotSymplectic, "symplectic moves need a symplectic source");
  std::vector<SymplecticMove> out;
  std::vector<SegmentMove> bad;
  for (auto& [m, target] : downward_mutations(J)) {
    if (is_symplectic(target))
      out.push_back(SymplecticMove{m, std::nullopt, target});
    else
      bad.push_back(m);
  }

  // Unordered-pair deduplication: same bottom, same two moved segments, same shift.
  using Seg = std::tuple<int, int, int>;
  using Key = std::tuple<std::vector<std::uint64_t>, Seg, Seg, int>;
  std::map<Key, std::pair<SegmentMove, SegmentMove>> pairs;
  std::vector<std::pair<SegmentMove, SegmentMove>> order;
  for (const SegmentMove& m1 : bad) {
    auto [m2, bottom] = correction_move(J, m1);
    std::vector<std::uint64_t> masks;
    for (const BitSubset& s : bottom.sets()) masks.push_back(s.mask());
    Seg s1{m1.vertex, m1.column, m1.length}, s2{m2.vertex, m2.column, m2.length};
    Key key{masks, std::min(s1, s2), std::max(s1, s2), m1.shift};
    if (pairs.emplace(key, std::make_pair(m1, m2)).second)
      out.push_back(SymplecticMove{m1, m2, bottom});
  }

  // Every non-symplectic-landing move must sit inside some surviving pair.
  for (const SegmentMove& m1 : bad) {
    bool covered = false;
    for (const auto& [key, pq] : pairs) {
      if (pq.first == m1 || pq.second == m1) covered = true;
      Seg s{m1.vertex, m1.column, m1.length};
      if ((std::get<1>(key) == s || std::get<2>(key) == s) && std::get<3>(key) == m1.shift)
        covered = true;
    }
    if (!covered)
      fail(ErrorKind::UnpairedMove, "move with non-symplectic target has no partner: " + m1.to_string());
  }
  return out;
}

int cell_dimension(const JugglingPattern& J) {
  return static_cast<int>(downward_mutations(J).size());
}

int symplectic_cell_dimension(const JugglingPattern& J) {
  return static_cast<int>(symplectic_moves(J).size());
}

}  // namespace qcells
