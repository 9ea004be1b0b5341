#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qcells/errors.hpp"

namespace qcells {

/// Exact arbitrary-precision rational; GMP keeps it canonical (reduced,
/// positive denominator). No rounding anywhere.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Dense exact-rational matrix with the elimination routines the project needs:
/// rank, kernel, inverse, span tests. Pivots are always chosen lowest-index
/// first, so intermediate matrices are deterministic.
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Rational(0)) {}
  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix operator+(const RationalMatrix& o) const;
  RationalMatrix operator-(const RationalMatrix& o) const;
  RationalMatrix scaled(const Rational& c) const;
  bool operator==(const RationalMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const RationalMatrix& o) const { return !(*this == o); }
  bool is_zero() const;

  /// Columns of `o` appended on the right.
  RationalMatrix hstack(const RationalMatrix& o) const;
  RationalMatrix column(int j) const;
  /// Keep the listed columns, in order.
  RationalMatrix select_columns(const std::vector<int>& idx) const;

  int rank() const;
  /// Basis of the right null space, one column per free variable.
  RationalMatrix kernel() const;
  RationalMatrix inverse() const;  // SingularDiagonal if not invertible

  std::string to_string() const;

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

/// rank([A | B]) == rank(A): every column of B lies in the span of A's columns.
bool span_contains(const RationalMatrix& A, const RationalMatrix& B);

/// Equal column spans.
bool span_equal(const RationalMatrix& A, const RationalMatrix& B);

}  // namespace qcells
