#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fpm/linalg.hpp"
#include "fpm/module.hpp"

using namespace fpm;

namespace {

Element zi(long long n) { return Element::integer(n); }

Matrix int_matrix(std::initializer_list<std::initializer_list<long long>> rows) {
  BaseRing R = BaseRing::integers();
  std::vector<Vec> vr;
  size_t cols = rows.size() ? rows.begin()->size() : 0;
  for (auto& r : rows) {
    Vec v;
    for (long long x : r) v.push_back(zi(x));
    vr.push_back(v);
  }
  return matrix_from_rows(R, static_cast<int>(cols), vr);
}

bool divisibility_chain_ok(const Matrix& D) {
  const BaseRing& R = D.ring();
  int n = std::min(D.rows(), D.cols());
  for (int i = 0; i + 1 < n; ++i) {
    const Element& a = D.at(i, i);
    const Element& b = D.at(i + 1, i + 1);
    if (R.is_zero(a) && !R.is_zero(b)) return false;
    if (!R.is_zero(a) && !R.divides(a, b)) return false;
  }
  for (int i = 0; i < D.rows(); ++i)
    for (int j = 0; j < D.cols(); ++j)
      if (i != j && !R.is_zero(D.at(i, j))) return false;
  return true;
}

void check_smith(const Matrix& A) {
  auto snf = smith_normal_form(A);
  CHECK(snf.U.mul(A).mul(snf.V) == snf.D);
  CHECK(divisibility_chain_ok(snf.D));
  CHECK(A.ring().is_unit(determinant(snf.U)));
  CHECK(A.ring().is_unit(determinant(snf.V)));
  for (int i = 0; i < std::min(snf.D.rows(), snf.D.cols()); ++i) {
    const Element& d = snf.D.at(i, i);
    if (!A.ring().is_zero(d)) CHECK(A.ring().canonical(d) == d);
  }
}

Matrix random_int_matrix(std::mt19937_64& rng, int max_dim, long long max_abs) {
  int m = static_cast<int>(rng() % (max_dim + 1));
  int n = static_cast<int>(rng() % (max_dim + 1));
  Matrix A(BaseRing::integers(), m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      long long v = static_cast<long long>(rng() % (2 * max_abs + 1)) - max_abs;
      A.at(i, j) = zi(v);
    }
  return A;
}

Matrix random_poly_matrix(std::mt19937_64& rng, int max_dim, int max_deg,
                          std::int64_t p) {
  BaseRing R = BaseRing::polynomials(p);
  int m = static_cast<int>(rng() % (max_dim + 1));
  int n = static_cast<int>(rng() % (max_dim + 1));
  Matrix A(R, m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      int deg = static_cast<int>(rng() % (max_deg + 1));
      std::vector<std::int64_t> c(deg + 1);
      for (auto& x : c) x = static_cast<std::int64_t>(rng() % p);
      A.at(i, j) = R.poly_from_coeffs(c);
    }
  return A;
}

}  // namespace

TEST_CASE("smith normal form pinned examples") {
  // diag(2,3) ~ diag(1,6): d1 = gcd of entries, d1*d2 = |det|
  auto s1 = smith_normal_form(int_matrix({{2, 0}, {0, 3}}));
  CHECK(s1.D.at(0, 0) == zi(1));
  CHECK(s1.D.at(1, 1) == zi(6));
  check_smith(int_matrix({{2, 0}, {0, 3}}));

  // zero matrix: D = 0, U = V = I
  Matrix Z2(BaseRing::integers(), 2, 2);
  auto s2 = smith_normal_form(Z2);
  CHECK(s2.D.is_zero());
  CHECK(s2.U == Matrix::identity(BaseRing::integers(), 2));
  CHECK(s2.V == Matrix::identity(BaseRing::integers(), 2));

  // gcd of entries 2, |det| = 8-12 = -4 -> diag(2,2)
  auto s3 = smith_normal_form(int_matrix({{4, 6}, {2, 2}}));
  CHECK(s3.D.at(0, 0) == zi(2));
  CHECK(s3.D.at(1, 1) == zi(2));

  // already in smith form stays fixed
  auto D = int_matrix({{2, 0}, {0, 6}});
  CHECK(smith_normal_form(D).D == D);

  // empty matrices are fine
  auto s4 = smith_normal_form(Matrix(BaseRing::integers(), 0, 3));
  CHECK(s4.D.rows() == 0);
  CHECK(s4.D.cols() == 3);
}

TEST_CASE("hermite form and kernel pinned examples") {
  // kernel of [2 4] is spanned by (2,-1)
  auto h1 = hermite_form_and_kernel(int_matrix({{2, 4}}));
  CHECK(h1.T.mul(int_matrix({{2, 4}})) == h1.H);
  REQUIRE(h1.K.cols() == 1);
  CHECK(int_matrix({{2, 4}}).mul(h1.K).is_zero());
  // (2,-1) must lie in the span of K
  Vec target = {zi(2), zi(-1)};
  CHECK(solve_membership(h1.K, target).has_value());

  // identity has trivial kernel
  auto h2 = hermite_form_and_kernel(Matrix::identity(BaseRing::integers(), 3));
  CHECK(h2.K.cols() == 0);

  // [[0]] has kernel (1)
  auto h3 = hermite_form_and_kernel(int_matrix({{0}}));
  REQUIRE(h3.K.cols() == 1);
  CHECK(BaseRing::integers().is_unit(h3.K.at(0, 0)));
}

TEST_CASE("solve_membership pinned examples") {
  auto A1 = int_matrix({{2}});
  auto x = solve_membership(A1, {zi(6)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == zi(3));
  CHECK(!solve_membership(A1, {zi(3)}).has_value());

  // Bezout: 2x + 3y = 1 solvable over Z
  auto A2 = int_matrix({{2, 3}});
  auto x2 = solve_membership(A2, {zi(1)});
  REQUIRE(x2.has_value());
  CHECK(A2.apply(*x2) == Vec{zi(1)});

  CHECK_THROWS_AS(solve_membership(A2, {zi(1), zi(2)}), Error);
}

TEST_CASE("random smith decompositions over Z and F_p[x]") {
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 150; ++iter) check_smith(random_int_matrix(rng, 8, 50));
  for (int iter = 0; iter < 60; ++iter) check_smith(random_poly_matrix(rng, 5, 4, 2));
  for (int iter = 0; iter < 60; ++iter) check_smith(random_poly_matrix(rng, 4, 3, 5));
}

TEST_CASE("random kernels: A*K = 0 and brute-force vectors lie in span(K)") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 100; ++iter) {
    Matrix A = random_int_matrix(rng, 3, 4);
    auto hk = hermite_form_and_kernel(A);
    CHECK(hk.T.mul(A) == hk.H);
    CHECK(BaseRing::integers().is_unit(determinant(hk.T)));
    if (A.cols() == 0) continue;
    CHECK((A.mul(hk.K).is_zero()));
    // brute-force small kernel vectors
    std::vector<int> v(A.cols(), -3);
    while (true) {
      Vec x;
      for (int c : v) x.push_back(zi(c));
      bool in_kernel = true;
      Vec img = A.apply(x);
      for (const auto& e : img)
        if (!(e == zi(0))) { in_kernel = false; break; }
      if (in_kernel) CHECK(solve_membership(hk.K, x).has_value());
      int i = 0;
      while (i < static_cast<int>(v.size()) && v[i] == 3) { v[i] = -3; ++i; }
      if (i == static_cast<int>(v.size())) break;
      ++v[i];
    }
  }
}

TEST_CASE("random solves agree with brute force") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 120; ++iter) {
    Matrix A = random_int_matrix(rng, 3, 5);
    if (A.rows() == 0) continue;
    Vec b;
    for (int i = 0; i < A.rows(); ++i)
      b.push_back(zi(static_cast<long long>(rng() % 21) - 10));
    auto sol = solve_membership(A, b);
    if (sol.has_value()) {
      CHECK(A.apply(*sol) == b);
    } else if (A.cols() > 0 && A.cols() <= 3) {
      // confirm no small solution exists
      std::vector<int> v(A.cols(), -12);
      bool found = false;
      while (!found) {
        Vec x;
        for (int c : v) x.push_back(zi(c));
        if (A.apply(x) == b) found = true;
        int i = 0;
        while (i < static_cast<int>(v.size()) && v[i] == 12) { v[i] = -12; ++i; }
        if (i == static_cast<int>(v.size())) break;
        ++v[i];
      }
      CHECK(!found);
    }
  }
}

TEST_CASE("hermite reduction gives unique coset representatives") {
  // lattice rows: (2, 1), (0, 3)
  auto H = row_hermite(int_matrix({{2, 1}, {0, 3}}));
  auto r1 = reduce_mod_rows(H, {zi(17), zi(5)});
  auto r2 = reduce_mod_rows(H, {zi(17 + 2 * 7), zi(5 + 7 + 3 * 4)});
  CHECK(r1 == r2);
  auto residues = enumerate_residues(H, 100);
  CHECK(residues.size() == 6);  // index = |det| = 6
  for (const auto& r : residues) CHECK(reduce_mod_rows(H, r) == r);
}
