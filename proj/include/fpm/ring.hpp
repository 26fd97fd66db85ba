#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fpm/error.hpp"

namespace fpm {

using Int = boost::multiprecision::cpp_int;

enum class RingKind { Integers, PolynomialsOverPrimeField };

/// Coefficient sequence in ascending degree, entries in [0, p).
/// Canonical form: no trailing zeros; the zero polynomial is empty.
struct Poly {
  std::vector<std::int64_t> coeffs;
  bool operator==(const Poly&) const = default;
};

/// An element of a base Euclidean domain: an integer, or a polynomial over
/// a prime field. The ring it belongs to is carried by BaseRing, not here.
class Element {
public:
  Element() : v_(Int(0)) {}
  static Element integer(Int n) { return Element(std::move(n)); }
  static Element polynomial(Poly p) { return Element(std::move(p)); }

  bool is_integer() const { return std::holds_alternative<Int>(v_); }
  bool is_polynomial() const { return std::holds_alternative<Poly>(v_); }
  const Int& int_value() const { return std::get<Int>(v_); }
  const Poly& poly_value() const { return std::get<Poly>(v_); }

  bool operator==(const Element&) const = default;

private:
  explicit Element(Int n) : v_(std::move(n)) {}
  explicit Element(Poly p) : v_(std::move(p)) {}
  std::variant<Int, Poly> v_;
};

/// Deterministic total order on elements of one ring; used for sorting
/// generator lists and element sets. Integers by value; polynomials by
/// degree, then coefficients from the constant term up.
bool element_less(const Element& a, const Element& b);

struct ElementLess {
  bool operator()(const Element& a, const Element& b) const {
    return element_less(a, b);
  }
};

using Vec = std::vector<Element>;

bool vec_less(const Vec& a, const Vec& b);

struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const { return vec_less(a, b); }
};

/// The base Euclidean domain: Z, or F_p[x] for a prime p < 2^31.
/// All element arithmetic goes through this class so that polynomial
/// coefficients are always reduced modulo the characteristic.
class BaseRing {
public:
  static BaseRing integers();
  static BaseRing polynomials(std::int64_t characteristic);

  RingKind kind() const { return kind_; }
  std::int64_t characteristic() const { return char_; }

  Element zero() const;
  Element one() const;
  /// Embeds a small integer (for polynomial rings, as a constant).
  Element from_int(long long n) const;
  Element from_bigint(const Int& n) const;
  Element poly_from_coeffs(std::vector<std::int64_t> coeffs) const;

  /// True when e is an element of this ring's carrier (right alternative,
  /// coefficients reduced).
  bool contains(const Element& e) const;
  /// Re-reads an element into this ring, reducing polynomial coefficients
  /// modulo the characteristic. Throws ElementOutsideContext on a kind
  /// mismatch.
  Element normalize(const Element& e) const;

  bool is_zero(const Element& e) const;
  bool is_unit(const Element& e) const;

  Element neg(const Element& a) const;
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element pow(const Element& a, int k) const;

  /// Euclidean division a = q*b + r with r in the canonical residue range:
  /// 0 <= r < |b| over the integers, deg r < deg b over polynomials.
  struct DivMod {
    Element quot, rem;
  };
  DivMod divmod(const Element& a, const Element& b) const;

  /// True iff b is a multiple of a (with divides(0, b) iff b = 0).
  bool divides(const Element& a, const Element& b) const;
  /// Exact quotient b / a; precondition divides(a, b).
  Element exact_div(const Element& b, const Element& a) const;

  /// gcd as a canonical associate (non-negative / monic); gcd(0,0) = 0.
  Element gcd(const Element& a, const Element& b) const;
  Element lcm(const Element& a, const Element& b) const;

  struct ExtGcd {
    Element g, x, y;  // g = a*x + b*y, g canonical
  };
  ExtGcd ext_gcd(const Element& a, const Element& b) const;

  /// Canonical associate: |n| for integers, monic multiple for polynomials.
  Element canonical(const Element& a) const;
  /// The unit u with u*a = canonical(a); a must be nonzero.
  Element canonicalizing_unit(const Element& a) const;

  /// Size measure driving pivot choice in elimination: |n| for integers,
  /// degree + 1 for nonzero polynomials. Zero has norm 0.
  Int pivot_norm(const Element& a) const;
  /// Number of residues modulo a (cardinality of R/(a)); a nonzero.
  Int residue_count(const Element& a) const;

  /// Multiplicity of prime p in a; a nonzero, p a non-unit.
  int valuation(const Element& a, const Element& p) const;

  std::string to_string(const Element& e) const;

  bool operator==(const BaseRing&) const = default;

private:
  BaseRing(RingKind k, std::int64_t c) : kind_(k), char_(c) {}
  RingKind kind_;
  std::int64_t char_;  // 0 for the integers
};

/// Fixes the coefficient ring for all module and ideal computations: a base
/// domain plus an optional modulus. With a modulus n, all data is
/// interpreted over base/(n): modules are annihilated by n and ideal
/// generators are normalized to divisors of n.
struct RingContext {
  BaseRing base = BaseRing::integers();
  std::optional<Element> modulus;

  bool is_quotient() const { return modulus.has_value(); }
  bool operator==(const RingContext&) const = default;
  std::string to_string() const;
};

RingContext make_context(RingKind kind,
                         std::optional<std::int64_t> characteristic,
                         std::optional<Element> modulus);

/// A principal ideal in canonical form. In a quotient context the generator
/// divides the modulus; the zero ideal of the quotient is represented by
/// the modulus itself, the unit ideal by 1.
struct Ideal {
  RingContext ctx;
  Element gen;

  bool is_zero() const;   // zero ideal of the (possibly quotient) ring
  bool is_unit() const;
  bool operator==(const Ideal&) const = default;
  std::string to_string() const;
};

Ideal ideal_from_generators(const RingContext& ctx,
                            const std::vector<Element>& gens);

enum class IdealOp { Product, Power, Sum, Intersection };

Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_power(const Ideal& I, int k);
Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_intersection(const Ideal& I, const Ideal& J);
Ideal ideal_combine(IdealOp op, const Ideal& I, const Ideal& J);
Ideal ideal_combine(IdealOp op, const Ideal& I, int exponent);

enum class Containment { Equal, FirstContainsSecond, SecondContainsFirst, Incomparable };

Containment ideal_compare(const Ideal& I, const Ideal& J);

/// All ideals of a quotient context, one per canonical divisor of the
/// modulus, in a divisibility-compatible deterministic order (ascending
/// value / ascending degree). Throws InfiniteIdealLattice on base contexts.
std::vector<Ideal> enumerate_ideals(const RingContext& ctx);

/// Finite quantifier set for global predicates over a base context:
/// {(0)} then the divisors of `exponent` ascending, then (q) for the
/// smallest prime (lowest-degree irreducible) q coprime to `exponent`.
std::vector<Ideal> reduction_ideals(const RingContext& ctx,
                                    const Element& exponent);

bool is_prime_element(const RingContext& ctx, const Element& e);

/// Divisors of a nonzero element as canonical associates, ascending; for
/// polynomials, monic divisors found by trial division.
std::vector<Element> divisors_of(const BaseRing& ring, const Element& e);

}  // namespace fpm
