#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fpm/linalg.hpp"
#include "fpm/ring.hpp"

namespace fpm {

/// Torsion invariant factors in divisibility order (units dropped) plus the
/// free rank; the full isomorphism invariant of a finitely presented module
/// over the realized rings.
struct InvariantFactors {
  std::vector<Element> torsion;
  int free_rank = 0;

  bool operator==(const InvariantFactors&) const = default;
  std::string to_string(const BaseRing& ring) const;
};

/// A finitely presented module R^g / rowspan(relations). In a quotient
/// context the rows modulus*e_i are appended at construction, so every
/// module is genuinely a module over base/(modulus).
class PresentedModule {
public:
  const RingContext& context() const { return ctx_; }
  int generators() const { return gens_; }
  /// Full relation matrix, including the implicit modulus rows.
  const Matrix& relations() const { return relations_; }
  const Matrix& relation_hermite() const { return hermite_; }
  const InvariantFactors& invariants() const { return inv_; }

  /// Unique canonical representative of the coset of v.
  Vec canonicalize(const Vec& v) const;
  bool is_zero_element(const Vec& v) const;
  Vec zero_vec() const { return Vec(gens_, ctx_.base.zero()); }

  std::optional<Int> cardinality() const;

  bool operator==(const PresentedModule&) const = default;

private:
  friend PresentedModule present(const RingContext&, int, const Matrix&);
  RingContext ctx_{BaseRing::integers(), std::nullopt};
  int gens_ = 0;
  Matrix relations_{BaseRing::integers(), 0, 0};
  Matrix hermite_{BaseRing::integers(), 0, 0};
  InvariantFactors inv_;
};

PresentedModule present(const RingContext& ctx, int generators,
                        const Matrix& relations);

/// Convenience: module presented by explicit relation rows.
PresentedModule present_rows(const RingContext& ctx, int generators,
                             const std::vector<Vec>& rows);

/// Cyclic module R/(d) in its context.
PresentedModule cyclic_module(const RingContext& ctx, const Element& d);

Matrix matrix_from_rows(const BaseRing& ring, int cols,
                        const std::vector<Vec>& rows);

/// True iff the modules are isomorphic (same invariant factors and free
/// rank; structure theorem over the realized principal ideal rings).
bool is_isomorphic(const PresentedModule& M, const PresentedModule& N);

/// A submodule of a presented module, stored by generator coordinates.
/// Equality is extensional; membership is decided by exact linear solving
/// against [generators | relations].
class Submodule {
public:
  Submodule(PresentedModule ambient, std::vector<Vec> gens);

  const PresentedModule& ambient() const { return ambient_; }
  const std::vector<Vec>& gens() const { return gens_; }

  bool member(const Vec& v) const;
  bool is_zero() const { return gens_.empty(); }
  /// True iff the submodule is all of the ambient module.
  bool is_full() const;

private:
  PresentedModule ambient_;
  std::vector<Vec> gens_;       // canonical, nonzero, sorted, deduplicated
  Matrix span_;                 // columns: generators then relation rows
};

Submodule submodule(const PresentedModule& M, const std::vector<Vec>& gens);

enum class SubRelation { Equal, FirstInSecond, SecondInFirst, Incomparable };

SubRelation submodule_relate(const Submodule& A, const Submodule& B);

PresentedModule quotient(const PresentedModule& M, const Submodule& S);

/// IM, the submodule generated by gen(I) * e_j.
Submodule scalar_submodule(const PresentedModule& M, const Ideal& I);

/// (S :_M I) = { m : gen(I) * m in S }; with S = 0 this is the annihilator
/// submodule (0 :_M I). A zero ideal yields all of M.
Submodule colon_submodule(const PresentedModule& M, const Submodule& S,
                          const Ideal& I);

Submodule zero_submodule(const PresentedModule& M);

Ideal annihilator_ideal(const PresentedModule& M);

PresentedModule direct_sum(const PresentedModule& M, const PresentedModule& N);

/// Every element of a finite module, in canonical enumeration order.
std::vector<Vec> enumerate_elements(const PresentedModule& M,
                                    const Int& max_size = 64);

/// Re-presents a submodule as a module in its own right, via the kernel of
/// the free cover R^k -> M picking out the generators.
PresentedModule submodule_as_module(const Submodule& S);

std::string vec_to_string(const BaseRing& ring, const Vec& v);

}  // namespace fpm
