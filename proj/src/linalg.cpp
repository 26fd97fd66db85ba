#include "fpm/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace fpm {

Matrix Matrix::identity(const BaseRing& ring, int n) {
  Matrix m(ring, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = ring.one();
  return m;
}

Vec Matrix::row(int r) const {
  Vec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(r, j);
  return v;
}

Vec Matrix::col(int c) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, c);
  return v;
}

void Matrix::set_row(int r, const Vec& v) {
  for (int j = 0; j < cols_; ++j) at(r, j) = v[j];
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::mul(const Matrix& other) const {
  if (cols_ != other.rows_) fail(Errc::DimensionMismatch, "matrix product");
  Matrix out(ring_, rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (ring_.is_zero(at(i, k))) continue;
      for (int j = 0; j < other.cols_; ++j)
        out.at(i, j) = ring_.add(out.at(i, j), ring_.mul(at(i, k), other.at(k, j)));
    }
  return out;
}

Vec Matrix::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != cols_)
    fail(Errc::DimensionMismatch, "matrix-vector product");
  Vec out(rows_, ring_.zero());
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      out[i] = ring_.add(out[i], ring_.mul(at(i, j), x[j]));
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(),
                     [&](const Element& e) { return ring_.is_zero(e); });
}

Matrix Matrix::stacked(const Matrix& below) const {
  if (below.cols_ != cols_) fail(Errc::DimensionMismatch, "row stack");
  Matrix out(ring_, rows_ + below.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
  for (int i = 0; i < below.rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(rows_ + i, j) = below.at(i, j);
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j)
      os << (j ? "," : "") << ring_.to_string(at(i, j));
  }
  os << "]";
  return os.str();
}

namespace {

void add_row_multiple(Matrix& m, int dst, int src, const Element& f) {
  const BaseRing& R = m.ring();
  for (int j = 0; j < m.cols(); ++j)
    m.at(dst, j) = R.add(m.at(dst, j), R.mul(f, m.at(src, j)));
}

void swap_rows(Matrix& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(Matrix& m, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

void scale_row(Matrix& m, int r, const Element& u) {
  const BaseRing& R = m.ring();
  for (int j = 0; j < m.cols(); ++j) m.at(r, j) = R.mul(u, m.at(r, j));
}

void add_col_multiple(Matrix& m, int dst, int src, const Element& f) {
  const BaseRing& R = m.ring();
  for (int i = 0; i < m.rows(); ++i)
    m.at(i, dst) = R.add(m.at(i, dst), R.mul(f, m.at(i, src)));
}

}  // namespace

HermiteResult hermite_form_and_kernel(const Matrix& A) {
  const BaseRing& R = A.ring();
  const int m = A.rows(), n = A.cols();
  Matrix H = A;
  Matrix T = Matrix::identity(R, m);

  int r = 0;
  for (int j = 0; j < n && r < m; ++j) {
    // Clear column j below row r by gcd-driven elimination; the pivot with
    // the smallest norm is moved up each pass (ties: lowest row).
    while (true) {
      int best = -1;
      Int best_norm = 0;
      for (int i = r; i < m; ++i) {
        if (R.is_zero(H.at(i, j))) continue;
        Int nn = R.pivot_norm(H.at(i, j));
        if (best < 0 || nn < best_norm) { best = i; best_norm = nn; }
      }
      if (best < 0) break;  // column already clear
      swap_rows(H, r, best);
      swap_rows(T, r, best);
      bool clean = true;
      for (int i = r + 1; i < m; ++i) {
        if (R.is_zero(H.at(i, j))) continue;
        Element q = R.divmod(H.at(i, j), H.at(r, j)).quot;
        Element f = R.neg(q);
        add_row_multiple(H, i, r, f);
        add_row_multiple(T, i, r, f);
        if (!R.is_zero(H.at(i, j))) clean = false;
      }
      if (clean) {
        Element u = R.canonicalizing_unit(H.at(r, j));
        scale_row(H, r, u);
        scale_row(T, r, u);
        for (int i = 0; i < r; ++i) {
          if (R.is_zero(H.at(i, j))) continue;
          Element q = R.divmod(H.at(i, j), H.at(r, j)).quot;
          Element f = R.neg(q);
          add_row_multiple(H, i, r, f);
          add_row_multiple(T, i, r, f);
        }
        ++r;
        break;
      }
    }
  }

  // Right kernel via the column echelon form of A: with A*Q = E, the columns
  // of Q over the zero columns of E generate {x : A x = 0}.
  Matrix E = A;
  Matrix Q = Matrix::identity(R, n);
  int pr = 0;  // pivot row frontier
  for (int i = 0; i < m && pr < n; ++i) {
    while (true) {
      int best = -1;
      Int best_norm = 0;
      for (int c = pr; c < n; ++c) {
        if (R.is_zero(E.at(i, c))) continue;
        Int nn = R.pivot_norm(E.at(i, c));
        if (best < 0 || nn < best_norm) { best = c; best_norm = nn; }
      }
      if (best < 0) break;
      swap_cols(E, pr, best);
      swap_cols(Q, pr, best);
      bool clean = true;
      for (int c = pr + 1; c < n; ++c) {
        if (R.is_zero(E.at(i, c))) continue;
        Element q = R.divmod(E.at(i, c), E.at(i, pr)).quot;
        Element f = R.neg(q);
        add_col_multiple(E, c, pr, f);
        add_col_multiple(Q, c, pr, f);
        if (!R.is_zero(E.at(i, c))) clean = false;
      }
      if (clean) { ++pr; break; }
    }
  }
  int kernel_dim = n - pr;
  Matrix K(R, n, kernel_dim);
  for (int k = 0; k < kernel_dim; ++k)
    for (int i = 0; i < n; ++i) K.at(i, k) = Q.at(i, pr + k);

  return {H, T, K};
}

Matrix row_hermite(const Matrix& A) { return hermite_form_and_kernel(A).H; }

std::vector<std::pair<int, int>> echelon_pivots(const Matrix& H) {
  std::vector<std::pair<int, int>> out;
  const BaseRing& R = H.ring();
  for (int i = 0; i < H.rows(); ++i)
    for (int j = 0; j < H.cols(); ++j)
      if (!R.is_zero(H.at(i, j))) {
        out.emplace_back(i, j);
        break;
      }
  return out;
}

SmithDecomposition smith_normal_form(const Matrix& A) {
  const BaseRing& R = A.ring();
  const int m = A.rows(), n = A.cols();
  Matrix D = A;
  Matrix U = Matrix::identity(R, m);
  Matrix V = Matrix::identity(R, n);

  int t = 0;
  const int bound = std::min(m, n);
  while (t < bound) {
    // Smallest-norm pivot in the trailing submatrix, ties by (row, col).
    int pi = -1, pj = -1;
    Int best_norm = 0;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        if (R.is_zero(D.at(i, j))) continue;
        Int nn = R.pivot_norm(D.at(i, j));
        if (pi < 0 || nn < best_norm) { pi = i; pj = j; best_norm = nn; }
      }
    if (pi < 0) break;  // trailing submatrix is zero
    swap_rows(D, t, pi); swap_rows(U, t, pi);
    swap_cols(D, t, pj); swap_cols(V, t, pj);

    bool dirty = false;
    for (int i = t + 1; i < m; ++i) {
      if (R.is_zero(D.at(i, t))) continue;
      Element f = R.neg(R.divmod(D.at(i, t), D.at(t, t)).quot);
      add_row_multiple(D, i, t, f);
      add_row_multiple(U, i, t, f);
      if (!R.is_zero(D.at(i, t))) dirty = true;
    }
    for (int j = t + 1; j < n; ++j) {
      if (R.is_zero(D.at(t, j))) continue;
      Element f = R.neg(R.divmod(D.at(t, j), D.at(t, t)).quot);
      add_col_multiple(D, j, t, f);
      add_col_multiple(V, j, t, f);
      if (!R.is_zero(D.at(t, j))) dirty = true;
    }
    if (dirty) continue;  // smaller pivot appeared; re-run selection

    // Pivot must divide everything below-right for the chain d_t | d_{t+1}.
    bool fixed = false;
    for (int i = t + 1; i < m && !fixed; ++i)
      for (int j = t + 1; j < n && !fixed; ++j)
        if (!R.divides(D.at(t, t), D.at(i, j))) {
          add_row_multiple(D, t, i, R.one());
          add_row_multiple(U, t, i, R.one());
          fixed = true;
        }
    if (fixed) continue;

    Element u = R.canonicalizing_unit(D.at(t, t));
    scale_row(D, t, u);
    scale_row(U, t, u);
    ++t;
  }
  return {U, D, V};
}

std::optional<Vec> solve_membership(const Matrix& A, const Vec& b) {
  const BaseRing& R = A.ring();
  if (static_cast<int>(b.size()) != A.rows())
    fail(Errc::DimensionMismatch, "solve: right-hand side length");
  // Column echelon E = A*Q; greedy forward substitution against the pivot
  // columns of E gives the unique candidate representation of b.
  auto her = hermite_form_and_kernel(A.transpose());
  Matrix E = her.H.transpose();      // A * Q = E with Q = her.T^T
  Matrix Q = her.T.transpose();
  const int n = A.cols();
  Vec residual = b;
  Vec y(n, R.zero());
  auto col_pivot_row = [&](int c) {
    for (int i = 0; i < E.rows(); ++i)
      if (!R.is_zero(E.at(i, c))) return i;
    return -1;
  };
  for (int c = 0; c < n; ++c) {
    int pr = col_pivot_row(c);
    if (pr < 0) continue;
    auto [q, rem] = R.divmod(residual[pr], E.at(pr, c));
    if (!R.is_zero(rem)) return std::nullopt;
    y[c] = q;
    if (!R.is_zero(q))
      for (int i = 0; i < E.rows(); ++i)
        residual[i] = R.sub(residual[i], R.mul(q, E.at(i, c)));
  }
  for (const Element& e : residual)
    if (!R.is_zero(e)) return std::nullopt;
  return Q.apply(y);
}

Element determinant(const Matrix& A) {
  if (A.rows() != A.cols()) fail(Errc::DimensionMismatch, "determinant");
  const BaseRing& R = A.ring();
  const int n = A.rows();
  if (n == 0) return R.one();
  // Bareiss fraction-free elimination; divisions are exact over the domain.
  Matrix M = A;
  Element denom = R.one();
  Element sign = R.one();
  for (int k = 0; k < n - 1; ++k) {
    if (R.is_zero(M.at(k, k))) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (!R.is_zero(M.at(i, k))) { swap = i; break; }
      if (swap < 0) return R.zero();
      swap_rows(M, k, swap);
      sign = R.neg(sign);
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Element num = R.sub(R.mul(M.at(i, j), M.at(k, k)),
                            R.mul(M.at(i, k), M.at(k, j)));
        M.at(i, j) = R.exact_div(num, denom);
      }
    for (int i = k + 1; i < n; ++i) M.at(i, k) = R.zero();
    denom = M.at(k, k);
  }
  return R.mul(sign, M.at(n - 1, n - 1));
}

Vec reduce_mod_rows(const Matrix& H, Vec v) {
  const BaseRing& R = H.ring();
  if (static_cast<int>(v.size()) != H.cols())
    fail(Errc::DimensionMismatch, "coset reduction");
  for (auto [r, c] : echelon_pivots(H)) {
    if (R.is_zero(v[c])) continue;
    Element q = R.divmod(v[c], H.at(r, c)).quot;
    if (R.is_zero(q)) continue;
    for (int j = 0; j < H.cols(); ++j)
      v[j] = R.sub(v[j], R.mul(q, H.at(r, j)));
  }
  return v;
}

std::vector<Vec> enumerate_residues(const Matrix& H, const Int& bound) {
  const BaseRing& R = H.ring();
  const int n = H.cols();
  auto pivots = echelon_pivots(H);
  if (static_cast<int>(pivots.size()) != n)
    fail(Errc::InfiniteModule, "free coordinates present");
  Int total = 1;
  for (auto [r, c] : pivots) {
    total *= R.residue_count(H.at(r, c));
    if (total > bound)
      fail(Errc::SizeBoundExceeded,
           "more than " + bound.str() + " residues");
  }
  // Residues of each pivot in deterministic ascending order.
  std::vector<std::vector<Element>> residues(n);
  for (auto [r, c] : pivots) {
    const Element& d = H.at(r, c);
    std::vector<Element> rs;
    if (R.kind() == RingKind::Integers) {
      for (Int v = 0; v < d.int_value(); ++v) rs.push_back(Element::integer(v));
    } else {
      int deg = static_cast<int>(d.poly_value().coeffs.size()) - 1;
      std::int64_t p = R.characteristic();
      std::vector<std::int64_t> cs(std::max(deg, 0), 0);
      while (true) {
        rs.push_back(R.poly_from_coeffs(cs));
        int i = 0;
        while (i < deg && cs[i] == p - 1) { cs[i] = 0; ++i; }
        if (i >= deg) break;
        ++cs[i];
      }
    }
    residues[c] = std::move(rs);
  }
  std::vector<Vec> out;
  Vec cur(n, R.zero());
  std::vector<size_t> idx(n, 0);
  while (true) {
    for (int c = 0; c < n; ++c) cur[c] = residues[c][idx[c]];
    out.push_back(cur);
    int c = n - 1;
    while (c >= 0 && idx[c] + 1 == residues[c].size()) { idx[c] = 0; --c; }
    if (c < 0) break;
    ++idx[c];
  }
  return out;
}

}  // namespace fpm
