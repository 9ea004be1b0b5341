#include "qcells/endos.hpp"

#include "qcells/errors.hpp"

namespace qcells {

namespace {
int cyc(int v, int n) { return ((v % n) + n) % n; }
}  // namespace

RationalMatrix omega(int size) {
  if (size <= 0 || size % 2 != 0) fail(ErrorKind::OddSize, "alternating form needs a positive even size", size);
  RationalMatrix m(size, size);
  for (int s = 1; s <= size; ++s) m.at(s - 1, size - s) = (s % 2 == 1) ? 1 : -1;
  return m;
}

RationalMatrix tau1(int N) {
  if (N < 1) fail(ErrorKind::IndexOutOfRange, "shift needs a positive size", N);
  RationalMatrix m(N, N);
  for (int i = 1; i < N; ++i) m.at(i, i - 1) = 1;
  return m;
}

RationalMatrix tau1z(int N, const Rational& z) {
  RationalMatrix m = tau1(N);
  m.at(0, N - 1) = z;
  return m;
}

const RationalMatrix& EndoTuple::at(int vertex) const {
  return blocks[cyc(vertex, vertices())];
}

EndoTuple identity_tuple(int N) {
  EndoTuple t;
  t.blocks.assign(N, RationalMatrix::identity(N));
  return t;
}

bool quiver_equivariant(const EndoTuple& x) {
  const int N = x.ambient();
  const RationalMatrix t1 = tau1(N);
  for (int i = 0; i < x.vertices(); ++i)
    if (t1 * x.blocks[i] != x.at(i + 1) * t1) return false;
  return true;
}

EndoTuple sigma_endo(const EndoTuple& x) {
  const RationalMatrix om = omega(x.ambient());
  EndoTuple r;
  r.blocks.reserve(x.vertices());
  for (int i = 0; i < x.vertices(); ++i) r.blocks.push_back(om * x.at(-i).transpose() * om);
  return r;
}

EndoTuple sigma_aut(const EndoTuple& a) {
  const RationalMatrix om = omega(a.ambient());
  EndoTuple r;
  r.blocks.reserve(a.vertices());
  for (int i = 0; i < a.vertices(); ++i)
    r.blocks.push_back((om * a.at(-i).inverse().transpose() * om).scaled(-1));
  return r;
}

namespace {
void check_column_shape(const FirstColumns& cols) {
  const int N = static_cast<int>(cols.size());
  if (N == 0) fail(ErrorKind::ShapeMismatch, "empty column data");
  for (const auto& c : cols)
    if (static_cast<int>(c.size()) != N)
      fail(ErrorKind::ShapeMismatch, "each vertex needs one entry per row", static_cast<int>(c.size()), N);
}
}  // namespace

Rational aut_equation_value(const FirstColumns& cols, int i, int r) {
  check_column_shape(cols);
  const int N = static_cast<int>(cols.size());
  if (r < 2 || r > N) fail(ErrorKind::IndexOutOfRange, "constraint level out of range", r, N);
  const int p = cyc(r - i, N);
  Rational sum = 0;
  for (int l = 0; l < r; ++l) {
    Rational term = cols[cyc(i, N)][l] * cols[p][r - 1 - l];
    sum += (l % 2 == 0) ? term : -term;
  }
  return sum;
}

bool check_aut_equations(const FirstColumns& cols) {
  check_column_shape(cols);
  const int N = static_cast<int>(cols.size());
  for (int i = 0; i < N; ++i)
    if (cols[i][0] == 0) fail(ErrorKind::SingularDiagonal, "diagonal entry is zero at vertex", i);
  for (int i = 0; i < N; ++i)
    if (cols[i][0] * cols[cyc(1 - i, N)][0] != 1) return false;
  for (int i = 0; i < N; ++i)
    for (int r = 2; r <= N; ++r)
      if (aut_equation_value(cols, i, r) != 0) return false;
  return true;
}

EndoTuple build_aut_from_tuple(const FirstColumns& cols) {
  check_column_shape(cols);
  const int N = static_cast<int>(cols.size());
  for (int i = 0; i < N; ++i)
    if (cols[i][0] == 0) fail(ErrorKind::SingularDiagonal, "diagonal entry is zero at vertex", i);
  EndoTuple a;
  a.blocks.reserve(N);
  for (int i = 0; i < N; ++i) {
    RationalMatrix b(N, N);
    for (int t = 1; t <= N; ++t)
      for (int s = t; s <= N; ++s) b.at(s - 1, t - 1) = cols[cyc(i - t + 1, N)][s - t];
    a.blocks.push_back(std::move(b));
  }
  return a;
}

FirstColumns sample_symplectic_tuple(int N, std::mt19937_64& rng) {
  if (N <= 0 || N % 2 != 0) fail(ErrorKind::OddSize, "even ambient required", N);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> pos(1, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  auto free_nonzero = [&] { return rat(coin(rng) ? pos(rng) : -pos(rng), den(rng)); };
  auto free_any = [&] { return rat(num(rng), den(rng)); };

  FirstColumns cols(N, std::vector<Rational>(N, Rational(0)));
  for (int i = 0; i < N; ++i) {
    const int p = cyc(1 - i, N);
    if (i > p) continue;
    cols[i][0] = free_nonzero();
    cols[p][0] = 1 / cols[i][0];
  }
  for (int r = 2; r <= N; ++r) {
    for (int i = 0; i < N; ++i) {
      const int p = cyc(r - i, N);
      if (i > p) continue;
      cols[i][r - 1] = free_any();
      if (i == p) continue;  // constraint identically satisfied; entry stays free
      Rational tail = 0;
      for (int l = 1; l < r; ++l) {
        Rational term = cols[i][l] * cols[p][r - 1 - l];
        tail += (l % 2 == 0) ? term : -term;
      }
      cols[p][r - 1] = -tail / cols[i][0];
    }
  }
  return cols;
}

}  // namespace qcells
