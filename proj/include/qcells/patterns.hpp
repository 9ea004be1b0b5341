#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qcells/errors.hpp"

namespace qcells {

/// Subset of [n] stored as a 64-bit mask. Elements are 1-based; bit e-1 set
/// means e is in the subset. Ambients above 64 are rejected.
class BitSubset {
 public:
  BitSubset() : n_(0), mask_(0) {}
  BitSubset(int ambient, std::uint64_t mask);
  static BitSubset from_elements(int ambient, const std::vector<int>& elems);
  static BitSubset full(int ambient);

  int ambient() const { return n_; }
  std::uint64_t mask() const { return mask_; }
  int card() const { return __builtin_popcountll(mask_); }
  bool empty() const { return mask_ == 0; }
  bool contains(int e) const { return e >= 1 && e <= n_ && (mask_ >> (e - 1)) & 1u; }
  BitSubset with(int e) const;
  BitSubset without(int e) const;
  BitSubset complement() const { return BitSubset(n_, ~mask_ & low_bits(n_)); }
  std::vector<int> elements() const;  // ascending

  bool operator==(const BitSubset& o) const { return n_ == o.n_ && mask_ == o.mask_; }
  bool operator!=(const BitSubset& o) const { return !(*this == o); }

  static std::uint64_t low_bits(int n) { return n >= 64 ? ~0ull : ((1ull << n) - 1); }

 private:
  int n_;
  std::uint64_t mask_;
};

/// Componentwise comparison of the sorted elements: a_i <= b_i for all i.
bool gale_leq(const BitSubset& a, const BitSubset& b);

/// RI = [2n] \ {2n-i+1 : i in I}. Involutive; |RI| = 2n - |I|. Even ambient only.
BitSubset rmap_subset(const BitSubset& I);

/// True iff I contains no pair {a, 2n-a+1}. Even ambient only.
bool subset_symplectic(const BitSubset& I);

/// j -> j+1 cyclically (n wraps to 1).
BitSubset cyclic_shift(const BitSubset& I);

/// Cyclic n-tuple (J_i) of k-element subsets of [n] with the condition
/// j in J_i, j <= n-1  =>  j+1 in J_{i+1} (vertex indices mod n). Doubles as
/// the successor-closed subquiver S_J on the n x n vertex grid: cell (i, j)
/// occupied iff j in J_i (vertices 0-based, columns 1-based).
class JugglingPattern {
 public:
  /// Checks cardinalities and the chain condition; throws CardinalityMismatch
  /// or JugglingViolation(vertex, element) otherwise.
  static JugglingPattern validate(const std::vector<BitSubset>& sets);

  int n() const { return static_cast<int>(sets_.size()); }
  int k() const { return k_; }
  /// Vertex access mod n; negative indices allowed.
  const BitSubset& at(int vertex) const { return sets_[mod(vertex)]; }
  int mod(int vertex) const;
  const std::vector<BitSubset>& sets() const { return sets_; }
  bool cell(int vertex, int column) const { return at(vertex).contains(column); }

  bool operator==(const JugglingPattern& o) const { return sets_ == o.sets_; }
  bool operator!=(const JugglingPattern& o) const { return !(*this == o); }
  /// Lexicographic on (mask of J_0, mask of J_1, ...): the canonical order.
  bool operator<(const JugglingPattern& o) const;

  std::string to_string() const;  // e.g. ({1,2},{2,3},{3,4},{1,4})

 private:
  explicit JugglingPattern(std::vector<BitSubset> sets, int k) : sets_(std::move(sets)), k_(k) {}
  std::vector<BitSubset> sets_;
  int k_;
};

/// Streams every (k,n)-pattern exactly once in canonical (lexicographic) order.
void enumerate_jp(int k, int n, const std::function<void(const JugglingPattern&)>& sink);

/// All (k,n)-patterns in canonical order (sorted, so index lookup can bisect).
std::vector<JugglingPattern> all_jp(int k, int n);

/// Index of J in the canonical enumeration `ps` (which must be sorted); -1 if absent.
long pattern_index(const std::vector<JugglingPattern>& ps, const JugglingPattern& J);

/// Pattern order: J <= J2 iff J_i >= (J2)_i in the Gale order for every i
/// (note the reversal — smaller patterns have larger sets).
bool jp_leq(const JugglingPattern& J, const JugglingPattern& J2);

/// (RJ)_i = R(J_{-i}); sends JP(k,2n) to JP(2n-k,2n), involutive, order preserving.
JugglingPattern rmap_pattern(const JugglingPattern& J);

/// J is symplectic iff J_i is contained in (RJ)_i for all i — equivalently no
/// a in J_i with 2n+1-a in J_{-i}.
bool is_symplectic(const JugglingPattern& J);

/// Wrap condition: 2n in J_i implies 1 in J_{i+1}, for all i.
bool is_maximal(const JugglingPattern& J);

/// The maximal symplectic patterns of JP(k,2n), one per k-subset of [2n] free of
/// pairs {a, 2n-a+1}; there are (2n)!!/(k!(2n-2k)!!) of them. Requires k <= n.
std::vector<JugglingPattern> top_symplectic_patterns(int k, int n);

/// The constant pattern with every set {n-k+1, ..., n} — the unique minimum.
JugglingPattern minimal_pattern(int k, int n);

}  // namespace qcells
