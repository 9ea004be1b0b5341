#include "qcells/patterns.hpp"

#include <algorithm>

namespace qcells {

BitSubset::BitSubset(int ambient, std::uint64_t mask) : n_(ambient), mask_(mask) {
  if (ambient < 0 || ambient > 64) fail(ErrorKind::IndexOutOfRange, "ambient must be in [0, 64]");
  if (mask & ~low_bits(ambient)) fail(ErrorKind::IndexOutOfRange, "mask has bits beyond the ambient");
}

BitSubset BitSubset::from_elements(int ambient, const std::vector<int>& elems) {
  std::uint64_t m = 0;
  for (int e : elems) {
    if (e < 1 || e > ambient) fail(ErrorKind::IndexOutOfRange, "element outside [1, n]");
    m |= 1ull << (e - 1);
  }
  return BitSubset(ambient, m);
}

BitSubset BitSubset::full(int ambient) { return BitSubset(ambient, low_bits(ambient)); }

BitSubset BitSubset::with(int e) const {
  if (e < 1 || e > n_) fail(ErrorKind::IndexOutOfRange, "element outside [1, n]");
  return BitSubset(n_, mask_ | (1ull << (e - 1)));
}

BitSubset BitSubset::without(int e) const {
  if (e < 1 || e > n_) fail(ErrorKind::IndexOutOfRange, "element outside [1, n]");
  return BitSubset(n_, mask_ & ~(1ull << (e - 1)));
}

std::vector<int> BitSubset::elements() const {
  std::vector<int> out;
  out.reserve(card());
  for (std::uint64_t m = mask_; m; m &= m - 1) out.push_back(__builtin_ctzll(m) + 1);
  return out;
}

bool gale_leq(const BitSubset& a, const BitSubset& b) {
  if (a.ambient() != b.ambient() || a.card() != b.card())
    fail(ErrorKind::CardinalityMismatch, "gale_leq needs equal ambient and cardinality");
  // a_i <= b_i elementwise iff every prefix [1, e] of a is at least as full as b's.
  std::uint64_t am = a.mask(), bm = b.mask();
  int ca = 0, cb = 0;
  for (int e = 0; e < a.ambient(); ++e) {
    ca += (am >> e) & 1;
    cb += (bm >> e) & 1;
    if (ca < cb) return false;
  }
  return true;
}

BitSubset rmap_subset(const BitSubset& I) {
  int n2 = I.ambient();
  if (n2 % 2 != 0) fail(ErrorKind::OddAmbient, "R-map needs even ambient");
  // {2n-i+1 : i in I} is the bit-reversal of I; RI is its complement.
  std::uint64_t rev = 0;
  for (int e = 1; e <= n2; ++e)
    if (I.contains(e)) rev |= 1ull << (n2 - e);
  return BitSubset(n2, ~rev & BitSubset::low_bits(n2));
}

bool subset_symplectic(const BitSubset& I) {
  int n2 = I.ambient();
  if (n2 % 2 != 0) fail(ErrorKind::OddAmbient, "symplectic test needs even ambient");
  for (int e = 1; 2 * e <= n2; ++e)
    if (I.contains(e) && I.contains(n2 + 1 - e)) return false;
  return true;
}

BitSubset cyclic_shift(const BitSubset& I) {
  int n = I.ambient();
  std::uint64_t m = I.mask();
  std::uint64_t shifted = (m << 1) & BitSubset::low_bits(n);
  if ((m >> (n - 1)) & 1) shifted |= 1ull;
  return BitSubset(n, shifted);
}

int JugglingPattern::mod(int vertex) const {
  int n = static_cast<int>(sets_.size());
  int r = vertex % n;
  return r < 0 ? r + n : r;
}

JugglingPattern JugglingPattern::validate(const std::vector<BitSubset>& sets) {
  if (sets.empty()) fail(ErrorKind::ShapeMismatch, "pattern needs at least one vertex");
  int n = static_cast<int>(sets.size());
  int k = sets[0].card();
  for (int i = 0; i < n; ++i) {
    if (sets[i].ambient() != n)
      fail(ErrorKind::ShapeMismatch, "subset ambient must equal the number of vertices");
    if (sets[i].card() != k)
      fail(ErrorKind::CardinalityMismatch, "vertex " + std::to_string(i) + " has the wrong cardinality");
  }
  for (int i = 0; i < n; ++i) {
    const BitSubset& next = sets[(i + 1) % n];
    for (int j = 1; j <= n - 1; ++j)
      if (sets[i].contains(j) && !next.contains(j + 1))
        fail(ErrorKind::JugglingViolation,
             "element " + std::to_string(j) + " at vertex " + std::to_string(i) +
                 " has no successor",
             i, j);
  }
  return JugglingPattern(sets, k);
}

bool JugglingPattern::operator<(const JugglingPattern& o) const {
  for (std::size_t i = 0; i < sets_.size() && i < o.sets_.size(); ++i) {
    if (sets_[i].mask() != o.sets_[i].mask()) return sets_[i].mask() < o.sets_[i].mask();
  }
  return sets_.size() < o.sets_.size();
}

std::string JugglingPattern::to_string() const {
  std::string out = "(";
  for (int i = 0; i < n(); ++i) {
    out += "{";
    bool first = true;
    for (int e : sets_[i].elements()) {
      if (!first) out += ",";
      out += std::to_string(e);
      first = false;
    }
    out += "}";
    if (i + 1 < n()) out += ",";
  }
  return out + ")";
}

namespace {

// Elements forced at the next vertex by the chain condition: {j+1 : j in J, j <= n-1}.
std::uint64_t forced_next(std::uint64_t mask, int n) {
  return (mask << 1) & BitSubset::low_bits(n);
}

// Calls fn(mask) for every way to set `extra` bits inside `allowed`, in ascending
// mask order (Gosper's hack on the compressed positions, then expanded).
void each_extension(std::uint64_t allowed, int extra, const std::function<void(std::uint64_t)>& fn) {
  std::vector<int> pos;
  for (std::uint64_t m = allowed; m; m &= m - 1) pos.push_back(__builtin_ctzll(m));
  int w = static_cast<int>(pos.size());
  if (extra < 0 || extra > w) return;
  if (extra == 0) {
    fn(0);
    return;
  }
  std::uint64_t comb = (1ull << extra) - 1;
  std::uint64_t limit = 1ull << w;
  while (comb < limit) {
    std::uint64_t expanded = 0;
    for (std::uint64_t m = comb; m; m &= m - 1) expanded |= 1ull << pos[__builtin_ctzll(m)];
    fn(expanded);
    std::uint64_t c = comb & (~comb + 1), r = comb + c;
    comb = (((r ^ comb) >> 2) / c) | r;
  }
}

struct Enumerator {
  int k, n;
  std::vector<BitSubset> stack;
  const std::function<void(const JugglingPattern&)>& sink;

  void go(int vertex) {
    if (vertex == n) {
      // Close the cycle: successors of J_{n-1} must land in J_0.
      if ((forced_next(stack[n - 1].mask(), n) & ~stack[0].mask()) == 0)
        sink(JugglingPattern::validate(stack));
      return;
    }
    std::uint64_t forced = forced_next(stack[vertex - 1].mask(), n);
    int need = k - __builtin_popcountll(forced);
    if (need < 0) return;
    std::uint64_t free_slots = ~forced & BitSubset::low_bits(n);
    each_extension(free_slots, need, [&](std::uint64_t extra) {
      stack[vertex] = BitSubset(n, forced | extra);
      go(vertex + 1);
    });
  }
};

}  // namespace

void enumerate_jp(int k, int n, const std::function<void(const JugglingPattern&)>& sink) {
  if (n < 1 || n > 64) fail(ErrorKind::IndexOutOfRange, "ambient must be in [1, 64]");
  if (k < 0 || k > n) fail(ErrorKind::RankTooLarge, "rank must be in [0, n]");
  Enumerator en{k, n, std::vector<BitSubset>(n), sink};
  each_extension(BitSubset::low_bits(n), k, [&](std::uint64_t first) {
    en.stack[0] = BitSubset(n, first);
    if (n == 1) {
      en.sink(JugglingPattern::validate(en.stack));
    } else {
      en.go(1);
    }
  });
}

std::vector<JugglingPattern> all_jp(int k, int n) {
  std::vector<JugglingPattern> out;
  enumerate_jp(k, n, [&](const JugglingPattern& J) { out.push_back(J); });
  return out;
}

long pattern_index(const std::vector<JugglingPattern>& ps, const JugglingPattern& J) {
  auto it = std::lower_bound(ps.begin(), ps.end(), J);
  if (it == ps.end() || !(*it == J)) return -1;
  return static_cast<long>(it - ps.begin());
}

bool jp_leq(const JugglingPattern& J, const JugglingPattern& J2) {
  if (J.n() != J2.n() || J.k() != J2.k())
    fail(ErrorKind::ShapeMismatch, "jp_leq needs equal (k, n)");
  for (int i = 0; i < J.n(); ++i)
    if (!gale_leq(J2.at(i), J.at(i))) return false;
  return true;
}

JugglingPattern rmap_pattern(const JugglingPattern& J) {
  if (J.n() % 2 != 0) fail(ErrorKind::OddAmbient, "R-map needs even ambient");
  std::vector<BitSubset> sets(J.n());
  for (int i = 0; i < J.n(); ++i) sets[i] = rmap_subset(J.at(-i));
  return JugglingPattern::validate(sets);
}

bool is_symplectic(const JugglingPattern& J) {
  int n2 = J.n();
  if (n2 % 2 != 0) fail(ErrorKind::OddAmbient, "symplectic test needs even ambient");
  for (int i = 0; i < n2; ++i)
    for (int a = 1; a <= n2; ++a)
      if (J.at(i).contains(a) && J.at(-i).contains(n2 + 1 - a)) return false;
  return true;
}

bool is_maximal(const JugglingPattern& J) {
  int n = J.n();
  for (int i = 0; i < n; ++i)
    if (J.at(i).contains(n) && !J.at(i + 1).contains(1)) return false;
  return true;
}

std::vector<JugglingPattern> top_symplectic_patterns(int k, int n) {
  if (n % 2 != 0) fail(ErrorKind::OddAmbient, "need even ambient");
  if (k < 0 || 2 * k > n) fail(ErrorKind::RankTooLarge, "need k <= n/2");
  std::vector<JugglingPattern> out;
  // A maximal pattern is the shift-orbit of its vertex-0 set, and it is
  // symplectic exactly when that seed set is.
  each_extension(BitSubset::low_bits(n), k, [&](std::uint64_t seed) {
    BitSubset J0(n, seed);
    if (!subset_symplectic(J0)) return;
    std::vector<BitSubset> sets(n);
    sets[0] = J0;
    for (int i = 1; i < n; ++i) sets[i] = cyclic_shift(sets[i - 1]);
    out.push_back(JugglingPattern::validate(sets));
  });
  return out;
}

JugglingPattern minimal_pattern(int k, int n) {
  std::vector<int> elems;
  for (int e = n - k + 1; e <= n; ++e) elems.push_back(e);
  std::vector<BitSubset> sets(n, BitSubset::from_elements(n, elems));
  return JugglingPattern::validate(sets);
}

}  // namespace qcells
