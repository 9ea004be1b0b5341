#include "qcells/liealg.hpp"

#include "qcells/errors.hpp"

namespace qcells {

namespace {
int cyc(int v, int n) { return ((v % n) + n) % n; }
}  // namespace

EndoTuple shift_endo(int N, int a, int b) {
  if (N < 1) fail(ErrorKind::IndexOutOfRange, "positive ambient required", N);
  if (a < 1 || a > N) fail(ErrorKind::IndexOutOfRange, "shift amount out of range", a, N);
  EndoTuple x;
  x.blocks.assign(N, RationalMatrix(N, N));
  for (int j = 0; j <= N - a; ++j) x.blocks[cyc(b + j, N)].at(a + j - 1, j) = 1;
  return x;
}

EndoTuple symmetrized_endo(int N, int a, int b) {
  const EndoTuple x1 = shift_endo(N, a, b);
  const EndoTuple x2 = shift_endo(N, a, cyc(a - b, N));
  const Rational sign = (a % 2 == 0) ? 1 : -1;
  EndoTuple y;
  y.blocks.reserve(N);
  for (int i = 0; i < N; ++i)
    y.blocks.push_back((x1.blocks[i] + x2.blocks[i].scaled(sign)).scaled(rat(1, 2)));
  return y;
}

namespace {

/// One row per tuple, columns enumerate all block entries; used to certify
/// linear independence of the symmetrized family.
int flattened_rank(const std::vector<EndoTuple>& xs, int N) {
  RationalMatrix m(static_cast<int>(xs.size()), N * N * N);
  for (int r = 0; r < static_cast<int>(xs.size()); ++r) {
    int c = 0;
    for (int v = 0; v < N; ++v)
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) m.at(r, c++) = xs[r].blocks[v].at(i, j);
  }
  return m.rank();
}

}  // namespace

std::vector<EndoTuple> lie_basis(int N, bool symplectic) {
  std::vector<EndoTuple> basis;
  if (!symplectic) {
    basis.reserve(N * N);
    for (int a = 1; a <= N; ++a)
      for (int b = 0; b < N; ++b) basis.push_back(shift_endo(N, a, b));
    return basis;
  }
  if (N % 2 != 0) fail(ErrorKind::OddSize, "form-preserving tangent space needs even ambient", N);
  const int n = N / 2;
  for (int a = 1; a <= N; ++a) {
    for (int b = 0; b < N; ++b) {
      const int partner = cyc(a - b, N);
      if (b > partner) continue;
      if (b == partner && a % 2 != 0) continue;  // antisymmetric fixed point averages to zero
      basis.push_back(symmetrized_endo(N, a, b));
    }
  }
  const int expected = 2 * n * n + n;
  if (static_cast<int>(basis.size()) != expected || flattened_rank(basis, N) != expected)
    throw std::logic_error("symmetrized basis selection lost independence");
  return basis;
}

int orbit_dimension(const JugglingPattern& J, bool symplectic) {
  return orbit_dimension(J, symplectic, lie_basis(J.n(), symplectic));
}

int orbit_dimension(const JugglingPattern& J, bool symplectic, const std::vector<EndoTuple>& basis) {
  if (symplectic && !is_symplectic(J)) fail(ErrorKind::NotSymplectic, "orbit oracle with the form needs a symplectic pattern");
  const int N = J.n();
  const int k = J.k();
  if (k == 0) return 0;
  // Tangent vectors at p_J live in the direct sum over vertices of
  // Hom(V_i, C^N / V_i); for a coordinate point the quotient keeps the
  // rows outside J_i.
  std::vector<std::vector<int>> in(N), out(N);
  for (int i = 0; i < N; ++i) {
    in[i] = J.at(i).elements();
    for (int q = 1; q <= N; ++q)
      if (!J.at(i).contains(q)) out[i].push_back(q);
  }
  const int cols_per_vertex = k * (N - k);
  RationalMatrix m(static_cast<int>(basis.size()), N * cols_per_vertex);
  for (int r = 0; r < static_cast<int>(basis.size()); ++r) {
    const EndoTuple& xi = basis[r];
    for (int i = 0; i < N; ++i) {
      const RationalMatrix& blk = xi.blocks[i];
      int c = i * cols_per_vertex;
      for (int j : in[i])
        for (int q : out[i]) m.at(r, c++) = blk.at(q - 1, j - 1);
    }
  }
  return m.rank();
}

}  // namespace qcells
