#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fpm/functors.hpp"
#include "fpm/module.hpp"

namespace fpm {

/// Local kinds fix one ideal (two for the IJ kinds); global kinds quantify
/// over all ideals of the ring.
enum class PredicateKind {
  IPrime,
  IJPrime,
  IReduced,
  ICoprime,
  IJCoprime,
  ICoreduced,
  ITorsion,
  IComplete,
  Prime,
  WeaklyPrime,
  Reduced,
  Coprime,
  WeaklyCoprime,
  Coreduced,
};

bool predicate_is_local(PredicateKind k);
bool predicate_needs_pair(PredicateKind k);
const char* predicate_name(PredicateKind k);
std::optional<PredicateKind> predicate_from_name(const std::string& name);

/// Concrete demonstration of a failing verdict: elements of the module,
/// the quantified ideal(s) at fault, and a short description.
struct Witness {
  std::vector<Vec> elements;
  std::vector<Ideal> ideals;
  std::string note;
};

struct Verdict {
  bool holds = false;
  std::optional<Witness> witness;  // present iff !holds, when expressible
  std::string evidence;            // which branch of the characterization held

  explicit operator bool() const { return holds; }
};

/// Fast-path evaluation of a local predicate through the paper's
/// characterizations ((0:M I) trivial, colon/scalar chain equalities,
/// gamma/lambda comparisons). Failing verdicts carry a deterministic
/// witness found by bounded element search on finite modules or
/// structurally on infinite ones.
Verdict local_predicate(const PresentedModule& M, PredicateKind kind,
                        const Ideal& I,
                        const std::optional<Ideal>& J = std::nullopt);

/// Quantifies the matching local predicate over every ideal of a quotient
/// context, or over the finite reduction set for a base context. Evidence
/// records the quantifier range; a failing verdict names the first failing
/// ideal (pair).
Verdict global_predicate(const PresentedModule& M, PredicateKind kind);

/// The quantifier set global_predicate uses for M (exposed for reports).
std::vector<Ideal> global_quantifier_set(const PresentedModule& M);

/// Evaluates a local predicate on the localization M_(p) with the ideal
/// images I_(p) (and J_(p)), entirely on the localized invariants.
Verdict predicate_on_localization(const PresentedModule& M, PredicateKind kind,
                                  const Ideal& I, const std::optional<Ideal>& J,
                                  const Element& p);

/// Local predicate on already-localized data.
Verdict localized_predicate(const LocalizedModule& M, PredicateKind kind,
                            const LocalizedIdeal& I,
                            const std::optional<LocalizedIdeal>& J = std::nullopt);

}  // namespace fpm
