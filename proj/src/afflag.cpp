#include "qcells/afflag.hpp"

#include "qcells/errors.hpp"

namespace qcells {

int window_row(int p, int d, int N, int m) {
  if (p < 1 || p > N) fail(ErrorKind::IndexOutOfRange, "coordinate out of range", p, N);
  if (d < -m || d > m - 1) fail(ErrorKind::TruncationTooShallow, "degree outside the window", d, m);
  return (d + m) * N + (p - 1);
}

RationalMatrix t_shift_matrix(int N, int m) {
  RationalMatrix s(2 * m * N, 2 * m * N);
  for (int d = -m; d < m - 1; ++d)
    for (int p = 1; p <= N; ++p) s.at(window_row(p, d + 1, N, m), window_row(p, d, N, m)) = 1;
  return s;
}

TruncatedLattice::TruncatedLattice(int ambient, int depth, int idx, RationalMatrix b)
    : N(ambient), m(depth), index(idx), basis(std::move(b)) {
  if (N < 1 || m < 1) fail(ErrorKind::ShapeMismatch, "lattice needs positive ambient and depth", N, m);
  if (index < -m * N || index > m * N)
    fail(ErrorKind::TruncationTooShallow, "index outside the window", index, m * N);
  if (basis.rows() != 2 * m * N || basis.cols() != m * N + index)
    fail(ErrorKind::ShapeMismatch, "basis of wrong shape", basis.rows(), basis.cols());
  if (basis.rank() != basis.cols()) fail(ErrorKind::ShapeMismatch, "basis columns are dependent");
  if (!span_contains(basis, t_shift_matrix(N, m) * basis))
    fail(ErrorKind::ShapeMismatch, "span is not carried into itself by t");
}

bool lattice_span_equal(const TruncatedLattice& a, const TruncatedLattice& b) {
  return a.N == b.N && a.m == b.m && a.index == b.index && span_equal(a.basis, b.basis);
}

TruncatedLattice ring_lattice(int c, int m, int N) {
  if (N < 1 || m < 1) fail(ErrorKind::ShapeMismatch, "positive ambient and depth required", N, m);
  if (c < -m * N || c > m * N) fail(ErrorKind::TruncationTooShallow, "index outside the window", c, m * N);
  const int r = ((c % N) + N) % N;
  const int d = (c - r) / N;
  RationalMatrix basis(2 * m * N, m * N + c);
  int col = 0;
  for (int e = -d; e <= m - 1; ++e)
    for (int p = 1; p <= N; ++p) basis.at(window_row(p, e, N, m), col++) = 1;
  for (int p = 1; p <= r; ++p) basis.at(window_row(p, -d - 1, N, m), col++) = 1;
  return TruncatedLattice(N, m, c, std::move(basis));
}

RationalMatrix eta(int j, int d, int N, int m) {
  if (j < 1 || j > N) fail(ErrorKind::IndexOutOfRange, "band start out of range", j, N);
  if (d < -m || d > m - 1 || (j > 1 && d - 1 < -m))
    fail(ErrorKind::TruncationTooShallow, "band embedding leaves the window", d, m);
  RationalMatrix e(2 * m * N, N);
  for (int col = 1; col <= N; ++col) {
    if (col >= j)
      e.at(window_row(j + N - col, d, N, m), col - 1) = 1;
    else
      e.at(window_row(j - col, d - 1, N, m), col - 1) = 1;
  }
  return e;
}

LatticeChain phi(const QuiverPoint& U, int m) {
  const int N = U.N;
  if (N % 2 != 0) fail(ErrorKind::OddAmbient, "lattice realization needs even ambient", N);
  if (U.vertices() != N) fail(ErrorKind::ShapeMismatch, "one block per vertex required", U.vertices(), N);
  if (m < 2) fail(ErrorKind::TruncationTooShallow, "depth must be at least 2", m);
  const int n = N / 2;
  LatticeChain chain;
  chain.N = N;
  chain.m = m;
  chain.lattices.reserve(N);
  for (int c = 0; c < N; ++c) {
    const RationalMatrix ring = ring_lattice(c - n, m, N).basis;
    const RationalMatrix emb = (c < n) ? eta(n + 1 + c, 0, N, m) : eta(c - n + 1, -1, N, m);
    chain.lattices.emplace_back(N, m, c - n + U.k, ring.hstack(emb * U.at(c)));
  }
  return chain;
}

Rational residue_pair_basis(int p, int a, int q, int b, int N) {
  if (p < 1 || p > N || q < 1 || q > N) fail(ErrorKind::IndexOutOfRange, "coordinate out of range");
  if (a + b != -1 || p + q != N + 1) return 0;
  return (p % 2 == 1) ? 1 : -1;
}

Rational residue_pair(const RationalMatrix& v, const RationalMatrix& w, int N, int m) {
  if (v.rows() != 2 * m * N || v.cols() != 1 || w.rows() != 2 * m * N || w.cols() != 1)
    fail(ErrorKind::ShapeMismatch, "window columns required", v.rows(), w.rows());
  Rational sum = 0;
  for (int a = -m; a <= m - 1; ++a) {
    const int b = -1 - a;  // stays inside [-m, m-1]: the window is self-dual
    for (int p = 1; p <= N; ++p) {
      const Rational& x = v.at(window_row(p, a, N, m), 0);
      if (x == 0) continue;
      const Rational& y = w.at(window_row(N + 1 - p, b, N, m), 0);
      if (y == 0) continue;
      if (p % 2 == 1)
        sum += x * y;
      else
        sum -= x * y;
    }
  }
  return sum;
}

namespace {

/// Gram matrix of the residue form on window coordinates.
RationalMatrix residue_gram(int N, int m) {
  RationalMatrix g(2 * m * N, 2 * m * N);
  for (int a = -m; a <= m - 1; ++a)
    for (int p = 1; p <= N; ++p)
      g.at(window_row(p, a, N, m), window_row(N + 1 - p, -1 - a, N, m)) = (p % 2 == 1) ? 1 : -1;
  return g;
}

void check_chain_shape(const LatticeChain& chain) {
  if (chain.N < 2 || chain.N % 2 != 0) fail(ErrorKind::OddAmbient, "chain needs even ambient", chain.N);
  if (static_cast<int>(chain.lattices.size()) != chain.N)
    fail(ErrorKind::ShapeMismatch, "one lattice per position required",
         static_cast<int>(chain.lattices.size()), chain.N);
  for (const auto& lat : chain.lattices)
    if (lat.N != chain.N || lat.m != chain.m)
      fail(ErrorKind::ShapeMismatch, "lattice window disagrees with the chain");
}

}  // namespace

bool chain_valid(const LatticeChain& chain) {
  check_chain_shape(chain);
  const int N = chain.N;
  for (int c = 0; c + 1 < N; ++c) {
    if (chain.lattices[c + 1].index != chain.lattices[c].index + 1) return false;
    if (!span_contains(chain.lattices[c + 1].basis, chain.lattices[c].basis)) return false;
  }
  if (chain.lattices[N - 1].index - N != chain.lattices[0].index - 1) return false;
  const RationalMatrix shifted = t_shift_matrix(N, chain.m) * chain.lattices[N - 1].basis;
  return span_contains(chain.lattices[0].basis, shifted);
}

bool check_symplectic_chain(const LatticeChain& chain) {
  if (!chain_valid(chain)) return false;
  const int N = chain.N;
  const int m = chain.m;
  const RationalMatrix gram = residue_gram(N, m);
  const RationalMatrix shift = t_shift_matrix(N, m);
  const int center = chain.lattices[0].index;
  for (int c = 0; c < N; ++c) {
    const TruncatedLattice& pos = chain.lattices[c];
    const RationalMatrix partner =
        (c == 0) ? chain.lattices[0].basis : shift * chain.lattices[N - c].basis;
    const int partner_index = (c == 0) ? center : chain.lattices[N - c].index - N;
    if (pos.index + partner_index != 2 * center) return false;
    if (!(partner.transpose() * gram * pos.basis).is_zero()) return false;
  }
  return true;
}

}  // namespace qcells
