#pragma once

#include <optional>
#include <vector>

#include "fpm/ring.hpp"

namespace fpm {

/// Dense matrix over a base Euclidean domain, row-major.
class Matrix {
public:
  Matrix(BaseRing ring, int rows, int cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * cols, ring_.zero()) {}

  static Matrix identity(const BaseRing& ring, int n);

  const BaseRing& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Element& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Element& at(int r, int c) const {
    return a_[static_cast<size_t>(r) * cols_ + c];
  }

  Vec row(int r) const;
  Vec col(int c) const;
  void set_row(int r, const Vec& v);

  Matrix transpose() const;
  Matrix mul(const Matrix& other) const;
  Vec apply(const Vec& x) const;  // A * x
  bool is_zero() const;

  /// Stacks rows of `below` under this matrix (column counts must agree).
  Matrix stacked(const Matrix& below) const;

  bool operator==(const Matrix&) const = default;

  std::string to_string() const;

private:
  BaseRing ring_;
  int rows_, cols_;
  std::vector<Element> a_;
};

/// U*A*V = D with U, V unimodular (unit determinant over the domain) and D
/// diagonal with canonical entries d_1 | d_2 | ... followed by zeros.
struct SmithDecomposition {
  Matrix U, D, V;
};

SmithDecomposition smith_normal_form(const Matrix& A);

/// T*A = H with T unimodular and H the canonical row Hermite form: echelon
/// pivots as canonical associates, entries above each pivot reduced.
/// K's columns generate the right kernel {x : A x = 0}.
struct HermiteResult {
  Matrix H, T, K;
};

HermiteResult hermite_form_and_kernel(const Matrix& A);

/// Row Hermite form alone (no transform, no kernel).
Matrix row_hermite(const Matrix& A);

/// Pivot positions (row, col) of a row-echelon matrix.
std::vector<std::pair<int, int>> echelon_pivots(const Matrix& H);

/// Some x with A x = b over the domain, if one exists.
std::optional<Vec> solve_membership(const Matrix& A, const Vec& b);

/// Exact determinant of a square matrix (Bareiss fraction-free elimination).
Element determinant(const Matrix& A);

/// Reduces v to the unique canonical representative of v + rowspan(H),
/// where H is a canonical row Hermite form.
Vec reduce_mod_rows(const Matrix& H, Vec v);

/// All canonical representatives of R^cols / rowspan(H), when finite and of
/// cardinality <= bound. H must be a canonical row Hermite form. Throws
/// InfiniteModule / SizeBoundExceeded otherwise.
std::vector<Vec> enumerate_residues(const Matrix& H, const Int& bound);

}  // namespace fpm
