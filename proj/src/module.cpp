#include "fpm/module.hpp"

#include <algorithm>
#include <sstream>

namespace fpm {

std::string InvariantFactors::to_string(const BaseRing& ring) const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < torsion.size(); ++i)
    os << (i ? ", " : "") << ring.to_string(torsion[i]);
  os << "]";
  if (free_rank > 0) os << " + free^" << free_rank;
  return os.str();
}

std::string vec_to_string(const BaseRing& ring, const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i)
    os << (i ? ", " : "") << ring.to_string(v[i]);
  os << ")";
  return os.str();
}

Matrix matrix_from_rows(const BaseRing& ring, int cols,
                        const std::vector<Vec>& rows) {
  Matrix m(ring, static_cast<int>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols)
      fail(Errc::DimensionMismatch,
           "relation row " + std::to_string(i) + " has length " +
               std::to_string(rows[i].size()) + ", expected " +
               std::to_string(cols));
    for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = ring.normalize(rows[i][j]);
  }
  return m;
}

PresentedModule present(const RingContext& ctx, int generators,
                        const Matrix& relations) {
  if (generators < 0) fail(Errc::InvalidArgument, "negative generator count");
  if (relations.cols() != generators)
    fail(Errc::DimensionMismatch,
         "relations have " + std::to_string(relations.cols()) +
             " columns, module has " + std::to_string(generators) +
             " generators");
  PresentedModule M;
  M.ctx_ = ctx;
  M.gens_ = generators;

  Matrix full(ctx.base, 0, generators);
  {
    Matrix normalized(ctx.base, relations.rows(), generators);
    for (int i = 0; i < relations.rows(); ++i)
      for (int j = 0; j < generators; ++j)
        normalized.at(i, j) = ctx.base.normalize(relations.at(i, j));
    full = normalized;
  }
  if (ctx.is_quotient()) {
    Matrix mod_rows(ctx.base, generators, generators);
    for (int j = 0; j < generators; ++j) mod_rows.at(j, j) = *ctx.modulus;
    full = full.stacked(mod_rows);
  }
  M.relations_ = full;
  M.hermite_ = row_hermite(full);

  SmithDecomposition snf = smith_normal_form(full);
  InvariantFactors inv;
  int r = std::min(full.rows(), generators);
  for (int j = 0; j < generators; ++j) {
    Element d = j < r ? snf.D.at(j, j) : ctx.base.zero();
    if (ctx.base.is_zero(d)) ++inv.free_rank;
    else if (!ctx.base.is_unit(d)) inv.torsion.push_back(d);
  }
  M.inv_ = std::move(inv);
  return M;
}

PresentedModule present_rows(const RingContext& ctx, int generators,
                             const std::vector<Vec>& rows) {
  return present(ctx, generators, matrix_from_rows(ctx.base, generators, rows));
}

PresentedModule cyclic_module(const RingContext& ctx, const Element& d) {
  return present_rows(ctx, 1, {{ctx.base.normalize(d)}});
}

Vec PresentedModule::canonicalize(const Vec& v) const {
  if (static_cast<int>(v.size()) != gens_)
    fail(Errc::DimensionMismatch, "element has wrong coordinate count");
  Vec w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = ctx_.base.normalize(v[i]);
  return reduce_mod_rows(hermite_, std::move(w));
}

bool PresentedModule::is_zero_element(const Vec& v) const {
  Vec c = canonicalize(v);
  return std::all_of(c.begin(), c.end(),
                     [&](const Element& e) { return ctx_.base.is_zero(e); });
}

std::optional<Int> PresentedModule::cardinality() const {
  if (inv_.free_rank > 0) return std::nullopt;
  Int n = 1;
  for (const Element& d : inv_.torsion) n *= ctx_.base.residue_count(d);
  return n;
}

bool is_isomorphic(const PresentedModule& M, const PresentedModule& N) {
  if (!(M.context() == N.context()))
    fail(Errc::ContextMismatch, "isomorphism across different contexts");
  return M.invariants() == N.invariants();
}

Submodule::Submodule(PresentedModule ambient, std::vector<Vec> gens)
    : ambient_(std::move(ambient)),
      span_(ambient_.context().base, 0, 0) {
  const BaseRing& R = ambient_.context().base;
  const int g = ambient_.generators();
  // Preimage lattice in R^g: the given generators together with the
  // relations. Its Hermite form is the canonical basis; reducing the
  // nonzero basis rows to coset representatives yields a generator list
  // that depends only on the submodule, not on how it was handed in.
  const Matrix& rel = ambient_.relations();
  std::vector<Vec> rows;
  for (const Vec& v : gens) {
    Vec w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = R.normalize(v[i]);
    rows.push_back(std::move(w));
  }
  for (int r = 0; r < rel.rows(); ++r) rows.push_back(rel.row(r));
  Matrix lattice = row_hermite(matrix_from_rows(R, g, rows));

  std::vector<Vec> canon;
  std::vector<Vec> basis;
  for (int r = 0; r < lattice.rows(); ++r) {
    Vec row = lattice.row(r);
    if (std::all_of(row.begin(), row.end(),
                    [&](const Element& e) { return R.is_zero(e); }))
      continue;
    basis.push_back(row);
    Vec c = ambient_.canonicalize(row);
    if (!std::all_of(c.begin(), c.end(),
                     [&](const Element& e) { return R.is_zero(e); }))
      canon.push_back(std::move(c));
  }
  std::sort(canon.begin(), canon.end(), VecLess{});
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  gens_ = std::move(canon);

  Matrix span(R, g, static_cast<int>(basis.size()));
  for (size_t k = 0; k < basis.size(); ++k)
    for (int i = 0; i < g; ++i) span.at(i, static_cast<int>(k)) = basis[k][i];
  span_ = std::move(span);
}

Submodule submodule(const PresentedModule& M, const std::vector<Vec>& gens) {
  for (const Vec& v : gens)
    if (static_cast<int>(v.size()) != M.generators())
      fail(Errc::DimensionMismatch, "submodule generator length");
  return Submodule(M, gens);
}

Submodule zero_submodule(const PresentedModule& M) { return Submodule(M, {}); }

bool Submodule::member(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_.generators())
    fail(Errc::DimensionMismatch, "membership query length");
  Vec w(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    w[i] = ambient_.context().base.normalize(v[i]);
  return solve_membership(span_, w).has_value();
}

bool Submodule::is_full() const {
  const BaseRing& R = ambient_.context().base;
  for (int j = 0; j < ambient_.generators(); ++j) {
    Vec e(ambient_.generators(), R.zero());
    e[j] = R.one();
    if (!member(e)) return false;
  }
  return true;
}

SubRelation submodule_relate(const Submodule& A, const Submodule& B) {
  if (!(A.ambient() == B.ambient()))
    fail(Errc::AmbientMismatch, "submodules of different modules");
  bool a_in_b = std::all_of(A.gens().begin(), A.gens().end(),
                            [&](const Vec& v) { return B.member(v); });
  bool b_in_a = std::all_of(B.gens().begin(), B.gens().end(),
                            [&](const Vec& v) { return A.member(v); });
  if (a_in_b && b_in_a) return SubRelation::Equal;
  if (a_in_b) return SubRelation::FirstInSecond;
  if (b_in_a) return SubRelation::SecondInFirst;
  return SubRelation::Incomparable;
}

PresentedModule quotient(const PresentedModule& M, const Submodule& S) {
  if (!(S.ambient() == M))
    fail(Errc::AmbientMismatch, "quotient by a submodule of another module");
  Matrix rows = M.relations().stacked(
      matrix_from_rows(M.context().base, M.generators(), S.gens()));
  return present(M.context(), M.generators(), rows);
}

Submodule scalar_submodule(const PresentedModule& M, const Ideal& I) {
  if (!(I.ctx == M.context()))
    fail(Errc::ContextMismatch, "ideal from another context");
  const BaseRing& R = M.context().base;
  std::vector<Vec> gens;
  for (int j = 0; j < M.generators(); ++j) {
    Vec v(M.generators(), R.zero());
    v[j] = I.gen;
    gens.push_back(std::move(v));
  }
  return Submodule(M, gens);
}

Submodule colon_submodule(const PresentedModule& M, const Submodule& S,
                          const Ideal& I) {
  if (!(S.ambient() == M))
    fail(Errc::AmbientMismatch, "colon against a submodule of another module");
  if (!(I.ctx == M.context()))
    fail(Errc::ContextMismatch, "ideal from another context");
  const BaseRing& R = M.context().base;
  const int g = M.generators();
  const Matrix& rel = M.relations();
  const auto& sgens = S.gens();
  // Solutions x of gen(I)*x in S are the first block of the kernel of
  // [gen(I)*Id | S gens | relation rows].
  Matrix B(R, g, g + static_cast<int>(sgens.size()) + rel.rows());
  for (int j = 0; j < g; ++j) B.at(j, j) = I.gen;
  for (size_t k = 0; k < sgens.size(); ++k)
    for (int i = 0; i < g; ++i)
      B.at(i, g + static_cast<int>(k)) = sgens[k][i];
  for (int r = 0; r < rel.rows(); ++r)
    for (int i = 0; i < g; ++i)
      B.at(i, g + static_cast<int>(sgens.size()) + r) = rel.at(r, i);
  Matrix K = hermite_form_and_kernel(B).K;
  std::vector<Vec> gens;
  for (int k = 0; k < K.cols(); ++k) {
    Vec x(g);
    for (int i = 0; i < g; ++i) x[i] = K.at(i, k);
    gens.push_back(std::move(x));
  }
  return Submodule(M, gens);
}

Ideal annihilator_ideal(const PresentedModule& M) {
  const auto& inv = M.invariants();
  const RingContext& ctx = M.context();
  if (inv.free_rank > 0) return Ideal{ctx, ctx.base.zero()};
  if (inv.torsion.empty())
    return ideal_from_generators(ctx, {ctx.base.one()});
  return ideal_from_generators(ctx, {inv.torsion.back()});
}

PresentedModule direct_sum(const PresentedModule& M, const PresentedModule& N) {
  if (!(M.context() == N.context()))
    fail(Errc::ContextMismatch, "direct sum across contexts");
  const BaseRing& R = M.context().base;
  const int g = M.generators() + N.generators();
  Matrix rows(R, M.relations().rows() + N.relations().rows(), g);
  for (int i = 0; i < M.relations().rows(); ++i)
    for (int j = 0; j < M.generators(); ++j)
      rows.at(i, j) = M.relations().at(i, j);
  for (int i = 0; i < N.relations().rows(); ++i)
    for (int j = 0; j < N.generators(); ++j)
      rows.at(M.relations().rows() + i, M.generators() + j) =
          N.relations().at(i, j);
  return present(M.context(), g, rows);
}

std::vector<Vec> enumerate_elements(const PresentedModule& M,
                                    const Int& max_size) {
  if (M.invariants().free_rank > 0)
    fail(Errc::InfiniteModule,
         "module has free rank " + std::to_string(M.invariants().free_rank));
  return enumerate_residues(M.relation_hermite(), max_size);
}

PresentedModule submodule_as_module(const Submodule& S) {
  const PresentedModule& M = S.ambient();
  const BaseRing& R = M.context().base;
  const int g = M.generators();
  const int k = static_cast<int>(S.gens().size());
  if (k == 0) return present(M.context(), 0, Matrix(R, 0, 0));
  // Relations of the free cover R^k -> M: kernel of [gens | relations],
  // projected to the generator coefficients.
  const Matrix& rel = M.relations();
  Matrix B(R, g, k + rel.rows());
  for (int c = 0; c < k; ++c)
    for (int i = 0; i < g; ++i) B.at(i, c) = S.gens()[c][i];
  for (int r = 0; r < rel.rows(); ++r)
    for (int i = 0; i < g; ++i) B.at(i, k + r) = rel.at(r, i);
  Matrix K = hermite_form_and_kernel(B).K;
  std::vector<Vec> rows;
  for (int c = 0; c < K.cols(); ++c) {
    Vec row(k);
    for (int i = 0; i < k; ++i) row[i] = K.at(i, c);
    rows.push_back(std::move(row));
  }
  return present_rows(M.context(), k, rows);
}

}  // namespace fpm
