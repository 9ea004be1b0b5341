#include "qcells/rational.hpp"

namespace qcells {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) fail(ErrorKind::ShapeMismatch, "matrix product shape");
  RationalMatrix p(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int l = 0; l < cols_; ++l) {
      const Rational& x = at(i, l);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (o.at(l, j) != 0) p.at(i, j) += x * o.at(l, j);
    }
  return p;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::ShapeMismatch, "matrix sum shape");
  RationalMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + o.a_[i];
  return s;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::ShapeMismatch, "matrix difference shape");
  RationalMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] - o.a_[i];
  return s;
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
  RationalMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] * c;
  return s;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

RationalMatrix RationalMatrix::hstack(const RationalMatrix& o) const {
  if (rows_ != o.rows_) fail(ErrorKind::ShapeMismatch, "hstack needs equal row counts");
  RationalMatrix h(rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) h.at(i, j) = at(i, j);
    for (int j = 0; j < o.cols_; ++j) h.at(i, cols_ + j) = o.at(i, j);
  }
  return h;
}

RationalMatrix RationalMatrix::column(int j) const {
  RationalMatrix c(rows_, 1);
  for (int i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
  return c;
}

RationalMatrix RationalMatrix::select_columns(const std::vector<int>& idx) const {
  RationalMatrix s(rows_, static_cast<int>(idx.size()));
  for (int i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) s.at(i, static_cast<int>(j)) = at(i, idx[j]);
  return s;
}

namespace {

// Row echelon in place; returns the pivot columns. Lowest-index pivot row per
// column, columns scanned left to right.
std::vector<int> echelon(RationalMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) swap(m.at(p, j), m.at(r, j));
    Rational inv = 1 / m.at(r, c);
    for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rational f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int RationalMatrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  RationalMatrix m = *this;
  return static_cast<int>(echelon(m).size());
}

RationalMatrix RationalMatrix::kernel() const {
  RationalMatrix m = *this;
  std::vector<int> pivots = rows_ == 0 || cols_ == 0 ? std::vector<int>{} : echelon(m);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  RationalMatrix K(cols_, cols_ - static_cast<int>(pivots.size()));
  int out = 0;
  for (int c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    K.at(c, out) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (pivots[r] < c) K.at(pivots[r], out) = -m.at(static_cast<int>(r), c);
    ++out;
  }
  return K;
}

RationalMatrix RationalMatrix::inverse() const {
  if (rows_ != cols_) fail(ErrorKind::ShapeMismatch, "inverse needs a square matrix");
  RationalMatrix aug = hstack(identity(rows_));
  std::vector<int> pivots = echelon(aug);
  // A pivot in the identity half means the left block is rank-deficient.
  if (static_cast<int>(pivots.size()) != rows_ || (rows_ > 0 && pivots.back() >= cols_))
    fail(ErrorKind::SingularDiagonal, "matrix not invertible");
  RationalMatrix inv(rows_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < rows_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

std::string RationalMatrix::to_string() const {
  std::string out;
  for (int i = 0; i < rows_; ++i) {
    out += i == 0 ? "[" : " ";
    for (int j = 0; j < cols_; ++j) {
      out += at(i, j).get_str();
      if (j + 1 < cols_) out += " ";
    }
    out += i + 1 < rows_ ? "\n" : "]";
  }
  return out;
}

bool span_contains(const RationalMatrix& A, const RationalMatrix& B) {
  if (A.rows() != B.rows()) fail(ErrorKind::ShapeMismatch, "span test needs equal row counts");
  if (B.cols() == 0) return true;
  return A.hstack(B).rank() == A.rank();
}

bool span_equal(const RationalMatrix& A, const RationalMatrix& B) {
  if (A.rows() != B.rows()) fail(ErrorKind::ShapeMismatch, "span test needs equal row counts");
  int ra = A.rank(), rb = B.rank();
  return ra == rb && A.hstack(B).rank() == ra;
}

}  // namespace qcells
