#pragma once

#include <functional>
#include <optional>
#include <set>
#include <variant>

#include "fpm/predicates.hpp"

namespace fpm {

using VecSet = std::set<Vec, VecLess>;

/// Brute-force reference implementations over finite modules. Everything in
/// here quantifies over explicit element lists and recovers structure from
/// annihilator counting statistics; none of it calls smith_normal_form or
/// reads cached invariant factors.
namespace oracle {

struct Limits {
  Int max_module = 64;
  Int max_hom_tensor = 36;
};

/// A finite module given by its element list and operations.
struct ExplicitModule {
  BaseRing ring;
  std::vector<Vec> elements;
  Vec zero;
  std::function<Vec(const Vec&, const Vec&)> add;
  std::function<Vec(const Element&, const Vec&)> smul;
};

struct ExplicitStructure {
  Int cardinality;
  InvariantFactors invariants;
  bool operator==(const ExplicitStructure&) const = default;
};

/// Invariant factors of an explicit finite module, recovered purely from
/// the counts |{x : s x = 0}| over prime powers s of the module exponent.
InvariantFactors structure_of(const ExplicitModule& em);

ExplicitModule explicit_of(const PresentedModule& M, const Int& bound);
ExplicitStructure structure_of_module(const PresentedModule& M, const Int& bound);

VecSet elements_set(const PresentedModule& M, const Int& bound);
VecSet colon_set(const PresentedModule& M, const VecSet& S, const Ideal& I,
                 const Int& bound);
VecSet annihilator_set(const PresentedModule& M, const Ideal& I, const Int& bound);
VecSet scalar_set(const PresentedModule& M, const Ideal& I, const Int& bound);
VecSet gamma_set(const PresentedModule& M, const Ideal& I, const Int& bound);

/// The inverse limit of M/I^k M, constructed literally: the chain I^k M is
/// computed elementwise until it stabilizes, the stage quotients and their
/// transition maps are built, and the threads are read off.
struct LimitResult {
  ExplicitStructure structure;
  int stabilized_at = 0;
};
LimitResult lambda_limit(const PresentedModule& M, const Ideal& I, const Int& bound);

/// All homomorphisms M -> N by generator-image enumeration filtered through
/// the relations; returns the map count and the structure of the hom group.
struct HomResult {
  Int map_count;
  ExplicitStructure structure;
};
HomResult hom_maps(const PresentedModule& M, const PresentedModule& N,
                   const Int& bound);

/// M (x) N as the quotient of the free module on e_i (x) f_j by the
/// bilinearity relations.
ExplicitStructure tensor_structure(const PresentedModule& M,
                                   const PresentedModule& N, const Int& bound);

/// Definitional evaluation of a local predicate by quantifying over all
/// elements of a finite module.
Verdict local_predicate(const PresentedModule& M, PredicateKind kind,
                        const Ideal& I,
                        const std::optional<Ideal>& J = std::nullopt,
                        const Int& bound = 64);

/// Definitional global predicate over all ideals of a finite quotient ring.
Verdict global_predicate(const PresentedModule& M, PredicateKind kind,
                         const Int& bound = 64);

/// Elementwise coprimeness: for every ring element r, rM = 0 or rM = M.
Verdict elementwise_coprime(const PresentedModule& M, const Int& bound = 64);

enum class Target {
  Annihilator,
  ScalarSubmodule,
  Gamma,
  Lambda,
  Hom,
  Tensor,
  LocalPredicate,
  GlobalPredicate,
};

struct Query {
  Target target;
  PresentedModule M;
  std::optional<PresentedModule> N;
  std::optional<Ideal> I;
  std::optional<Ideal> J;
  std::optional<PredicateKind> kind;
  Limits limits;
};

using Result = std::variant<VecSet, ExplicitStructure, Verdict>;

Result evaluate(const Query& q);

}  // namespace oracle
}  // namespace fpm
