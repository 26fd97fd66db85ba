#include "fpm/functors.hpp"

#include <algorithm>

namespace fpm {

Submodule gamma(const PresentedModule& M, const Ideal& I) {
  if (!(I.ctx == M.context()))
    fail(Errc::ContextMismatch, "gamma: ideal from another context");
  Submodule prev = colon_submodule(M, zero_submodule(M), I);
  for (int k = 2;; ++k) {
    Submodule next = colon_submodule(M, zero_submodule(M), ideal_power(I, k));
    if (submodule_relate(prev, next) == SubRelation::Equal) return prev;
    prev = std::move(next);
  }
}

LambdaResult lambda(const PresentedModule& M, const Ideal& I) {
  if (!(I.ctx == M.context()))
    fail(Errc::ContextMismatch, "lambda: ideal from another context");
  const RingContext& ctx = M.context();
  if (!ctx.is_quotient() && M.invariants().free_rank > 0 &&
      !ctx.base.is_zero(I.gen) && !ctx.base.is_unit(I.gen)) {
    return NotRepresentable{
        "free rank " + std::to_string(M.invariants().free_rank) +
            " against the proper nonzero ideal " + I.to_string() +
            ": the chain I^k M never stabilizes",
        0};
  }
  Submodule prev = scalar_submodule(M, I);
  for (int k = 2;; ++k) {
    Submodule next = scalar_submodule(M, ideal_power(I, k));
    if (submodule_relate(prev, next) == SubRelation::Equal)
      return quotient(M, prev);
    prev = std::move(next);
  }
}

namespace {

/// Cyclic pieces of a module: the invariant factors plus free_rank zeros,
/// each standing for R/(d) (d = 0 meaning R).
std::vector<Element> cyclic_pieces(const PresentedModule& M) {
  std::vector<Element> out = M.invariants().torsion;
  for (int i = 0; i < M.invariants().free_rank; ++i)
    out.push_back(M.context().base.zero());
  return out;
}

PresentedModule from_pieces(const RingContext& ctx,
                            const std::vector<Element>& pieces) {
  const int g = static_cast<int>(pieces.size());
  Matrix rows(ctx.base, g, g);
  for (int i = 0; i < g; ++i) rows.at(i, i) = pieces[i];
  // zero diagonal entries contribute free summands; drop those rows for a
  // clean presentation (a zero row changes nothing)
  return present(ctx, g, rows);
}

}  // namespace

PresentedModule hom_module(const PresentedModule& M, const PresentedModule& N) {
  if (!(M.context() == N.context()))
    fail(Errc::ContextMismatch, "hom across contexts");
  const RingContext& ctx = M.context();
  const BaseRing& R = ctx.base;
  std::vector<Element> out;
  // Hom(R/(a), R/(b)) = R/(gcd(a,b)); Hom(R, X) = X; Hom(R/(a), R) = 0.
  for (const Element& a : cyclic_pieces(M))
    for (const Element& b : cyclic_pieces(N)) {
      if (R.is_zero(a)) {
        out.push_back(b);  // Hom(R, R/(b)) = R/(b), b = 0 gives R
      } else if (R.is_zero(b)) {
        continue;  // Hom(R/(a), R) = 0 for a != 0
      } else {
        out.push_back(R.gcd(a, b));
      }
    }
  return from_pieces(ctx, out);
}

PresentedModule tensor_module(const PresentedModule& M,
                              const PresentedModule& N) {
  if (!(M.context() == N.context()))
    fail(Errc::ContextMismatch, "tensor across contexts");
  const RingContext& ctx = M.context();
  const BaseRing& R = ctx.base;
  std::vector<Element> out;
  // R/(a) (x) R/(b) = R/(gcd(a,b)); R (x) X = X.
  for (const Element& a : cyclic_pieces(M))
    for (const Element& b : cyclic_pieces(N)) {
      if (R.is_zero(a)) out.push_back(b);
      else if (R.is_zero(b)) out.push_back(a);
      else out.push_back(R.gcd(a, b));
    }
  return from_pieces(ctx, out);
}

LocalizedModule localize(const PresentedModule& M, const Element& p) {
  const RingContext& ctx = M.context();
  if (ctx.is_quotient())
    fail(Errc::QuotientContextUnsupported, "localize needs a base context");
  if (!is_prime_element(ctx, p))
    fail(Errc::NotPrimeElement, "localize at " + ctx.base.to_string(p));
  Element pc = ctx.base.canonical(ctx.base.normalize(p));
  LocalizedModule out;
  out.prime = pc;
  out.free_rank = M.invariants().free_rank;
  for (const Element& d : M.invariants().torsion) {
    int v = ctx.base.valuation(d, pc);
    if (v >= 1) out.exponents.push_back(v);
  }
  std::sort(out.exponents.begin(), out.exponents.end());
  return out;
}

LocalizedIdeal localize_ideal(const Ideal& I, const Element& p) {
  const RingContext& ctx = I.ctx;
  if (ctx.is_quotient())
    fail(Errc::QuotientContextUnsupported, "localize needs a base context");
  if (!is_prime_element(ctx, p))
    fail(Errc::NotPrimeElement, "localize at " + ctx.base.to_string(p));
  Element pc = ctx.base.canonical(ctx.base.normalize(p));
  if (ctx.base.is_zero(I.gen)) return LocalizedIdeal{true, 0};
  return LocalizedIdeal{false, ctx.base.valuation(I.gen, pc)};
}

}  // namespace fpm
