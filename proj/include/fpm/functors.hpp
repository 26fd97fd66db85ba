#pragma once

#include <string>
#include <variant>
#include <vector>

#include "fpm/module.hpp"

namespace fpm {

/// Isomorphism invariant of a localized module M_(p): the prime, the free
/// rank, and the prime-power exponents of its torsion part.
struct LocalizedModule {
  Element prime;
  int free_rank = 0;
  std::vector<int> exponents;  // each >= 1, non-decreasing

  bool is_zero() const { return free_rank == 0 && exponents.empty(); }
  bool operator==(const LocalizedModule&) const = default;
};

/// Typed outcome when the completion is not finitely presentable over the
/// base ring (positive free rank against a proper nonzero ideal).
struct NotRepresentable {
  std::string reason;
  int stabilization_bound_tried = 0;
};

using LambdaResult = std::variant<PresentedModule, NotRepresentable>;

/// Torsion functor: the stable member of the ascending chain (0 :_M I^k).
Submodule gamma(const PresentedModule& M, const Ideal& I);

/// I-adic completion, when the descending chain I^k M stabilizes:
/// quotient(M, I^{k0} M). Stabilization is structural for torsion modules
/// and for zero/unit ideals; otherwise NotRepresentable is returned.
LambdaResult lambda(const PresentedModule& M, const Ideal& I);

/// Hom_R(M, N) up to isomorphism, via the cyclic decompositions.
PresentedModule hom_module(const PresentedModule& M, const PresentedModule& N);

/// M (x)_R N up to isomorphism, via the cyclic decompositions.
PresentedModule tensor_module(const PresentedModule& M, const PresentedModule& N);

LocalizedModule localize(const PresentedModule& M, const Element& p);

/// Image of a principal ideal in the local ring at (p): zero, or (p^k)
/// with exponent k >= 0 (k = 0 is the unit ideal).
struct LocalizedIdeal {
  bool zero = false;
  int exponent = 0;

  bool is_unit() const { return !zero && exponent == 0; }
  bool operator==(const LocalizedIdeal&) const = default;
};

LocalizedIdeal localize_ideal(const Ideal& I, const Element& p);

}  // namespace fpm
