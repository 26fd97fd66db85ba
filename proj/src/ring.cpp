#include "fpm/ring.hpp"

#include <algorithm>
#include <sstream>

namespace fpm {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case Errc::UnitOrZeroModulus: return "UnitOrZeroModulus";
    case Errc::ElementOutsideContext: return "ElementOutsideContext";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::InfiniteIdealLattice: return "InfiniteIdealLattice";
    case Errc::UnitOrZeroElement: return "UnitOrZeroElement";
    case Errc::QuotientContextUnsupported: return "QuotientContextUnsupported";
    case Errc::NotPrimeElement: return "NotPrimeElement";
    case Errc::MissingSecondIdeal: return "MissingSecondIdeal";
    case Errc::InfiniteModule: return "InfiniteModule";
    case Errc::SizeBoundExceeded: return "SizeBoundExceeded";
    case Errc::UnknownLaw: return "UnknownLaw";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

namespace {

bool is_prime_i64(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(
      static_cast<__int128>(a) * static_cast<__int128>(b) % p);
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  // p prime, a != 0 mod p
  std::int64_t result = 1, base = mod_pos(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return result;
}

void trim(Poly& p) {
  while (!p.coeffs.empty() && p.coeffs.back() == 0) p.coeffs.pop_back();
}

int degree(const Poly& p) {
  return static_cast<int>(p.coeffs.size()) - 1;  // -1 for zero
}

}  // namespace

bool element_less(const Element& a, const Element& b) {
  if (a.is_integer()) return a.int_value() < b.int_value();
  const auto& pa = a.poly_value().coeffs;
  const auto& pb = b.poly_value().coeffs;
  if (pa.size() != pb.size()) return pa.size() < pb.size();
  return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
}

bool vec_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      element_less);
}

BaseRing BaseRing::integers() { return BaseRing(RingKind::Integers, 0); }

BaseRing BaseRing::polynomials(std::int64_t characteristic) {
  if (characteristic >= (std::int64_t{1} << 31) || !is_prime_i64(characteristic))
    fail(Errc::NonPrimeCharacteristic,
         "characteristic must be a prime < 2^31, got " + std::to_string(characteristic));
  return BaseRing(RingKind::PolynomialsOverPrimeField, characteristic);
}

Element BaseRing::zero() const {
  return kind_ == RingKind::Integers ? Element::integer(0)
                                     : Element::polynomial({});
}

Element BaseRing::one() const { return from_int(1); }

Element BaseRing::from_int(long long n) const {
  if (kind_ == RingKind::Integers) return Element::integer(Int(n));
  Poly p{{mod_pos(n, char_)}};
  trim(p);
  return Element::polynomial(std::move(p));
}

Element BaseRing::from_bigint(const Int& n) const {
  if (kind_ == RingKind::Integers) return Element::integer(n);
  Int r = n % char_;
  return from_int(static_cast<long long>(r));
}

Element BaseRing::poly_from_coeffs(std::vector<std::int64_t> coeffs) const {
  if (kind_ != RingKind::PolynomialsOverPrimeField)
    fail(Errc::ElementOutsideContext, "polynomial element in an integer ring");
  for (auto& c : coeffs) c = mod_pos(c, char_);
  Poly p{std::move(coeffs)};
  trim(p);
  return Element::polynomial(std::move(p));
}

bool BaseRing::contains(const Element& e) const {
  if (kind_ == RingKind::Integers) return e.is_integer();
  if (!e.is_polynomial()) return false;
  const auto& c = e.poly_value().coeffs;
  if (!c.empty() && c.back() == 0) return false;
  return std::all_of(c.begin(), c.end(),
                     [&](std::int64_t x) { return 0 <= x && x < char_; });
}

Element BaseRing::normalize(const Element& e) const {
  if (kind_ == RingKind::Integers) {
    if (!e.is_integer())
      fail(Errc::ElementOutsideContext, "expected an integer element");
    return e;
  }
  if (!e.is_polynomial())
    fail(Errc::ElementOutsideContext, "expected a polynomial element");
  return poly_from_coeffs(e.poly_value().coeffs);
}

bool BaseRing::is_zero(const Element& e) const {
  return kind_ == RingKind::Integers ? e.int_value() == 0
                                     : e.poly_value().coeffs.empty();
}

bool BaseRing::is_unit(const Element& e) const {
  if (kind_ == RingKind::Integers)
    return e.int_value() == 1 || e.int_value() == -1;
  return degree(e.poly_value()) == 0;
}

Element BaseRing::neg(const Element& a) const {
  if (kind_ == RingKind::Integers) return Element::integer(-a.int_value());
  Poly p = a.poly_value();
  for (auto& c : p.coeffs) c = c == 0 ? 0 : char_ - c;
  return Element::polynomial(std::move(p));
}

Element BaseRing::add(const Element& a, const Element& b) const {
  if (kind_ == RingKind::Integers)
    return Element::integer(a.int_value() + b.int_value());
  const auto& pa = a.poly_value().coeffs;
  const auto& pb = b.poly_value().coeffs;
  Poly out;
  out.coeffs.resize(std::max(pa.size(), pb.size()), 0);
  for (size_t i = 0; i < out.coeffs.size(); ++i) {
    std::int64_t s = (i < pa.size() ? pa[i] : 0) + (i < pb.size() ? pb[i] : 0);
    out.coeffs[i] = s >= char_ ? s - char_ : s;
  }
  trim(out);
  return Element::polynomial(std::move(out));
}

Element BaseRing::sub(const Element& a, const Element& b) const {
  return add(a, neg(b));
}

Element BaseRing::mul(const Element& a, const Element& b) const {
  if (kind_ == RingKind::Integers)
    return Element::integer(a.int_value() * b.int_value());
  const auto& pa = a.poly_value().coeffs;
  const auto& pb = b.poly_value().coeffs;
  if (pa.empty() || pb.empty()) return zero();
  Poly out;
  out.coeffs.assign(pa.size() + pb.size() - 1, 0);
  for (size_t i = 0; i < pa.size(); ++i)
    for (size_t j = 0; j < pb.size(); ++j)
      out.coeffs[i + j] = (out.coeffs[i + j] + mul_mod(pa[i], pb[j], char_)) % char_;
  trim(out);
  return Element::polynomial(std::move(out));
}

Element BaseRing::pow(const Element& a, int k) const {
  Element r = one();
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

BaseRing::DivMod BaseRing::divmod(const Element& a, const Element& b) const {
  if (is_zero(b)) fail(Errc::InvalidArgument, "division by zero");
  if (kind_ == RingKind::Integers) {
    Int q = a.int_value() / b.int_value();
    Int r = a.int_value() - q * b.int_value();
    if (r < 0) {
      // shift into [0, |b|)
      if (b.int_value() > 0) { r += b.int_value(); q -= 1; }
      else { r -= b.int_value(); q += 1; }
    }
    return {Element::integer(q), Element::integer(r)};
  }
  Poly rem = a.poly_value();
  const Poly& den = b.poly_value();
  Poly quot;
  int dd = degree(den);
  std::int64_t lead_inv = inv_mod(den.coeffs.back(), char_);
  if (degree(rem) >= dd) quot.coeffs.assign(degree(rem) - dd + 1, 0);
  while (degree(rem) >= dd) {
    int shift = degree(rem) - dd;
    std::int64_t f = mul_mod(rem.coeffs.back(), lead_inv, char_);
    quot.coeffs[shift] = f;
    for (int i = 0; i <= dd; ++i) {
      std::int64_t& c = rem.coeffs[i + shift];
      c = mod_pos(c - mul_mod(f, den.coeffs[i], char_), char_);
    }
    trim(rem);
  }
  trim(quot);
  return {Element::polynomial(std::move(quot)), Element::polynomial(std::move(rem))};
}

bool BaseRing::divides(const Element& a, const Element& b) const {
  if (is_zero(a)) return is_zero(b);
  return is_zero(divmod(b, a).rem);
}

Element BaseRing::exact_div(const Element& b, const Element& a) const {
  auto [q, r] = divmod(b, a);
  if (!is_zero(r)) fail(Errc::InvalidArgument, "division is not exact");
  return q;
}

Element BaseRing::gcd(const Element& a, const Element& b) const {
  Element x = a, y = b;
  while (!is_zero(y)) {
    Element r = divmod(x, y).rem;
    x = y;
    y = r;
  }
  return is_zero(x) ? x : canonical(x);
}

Element BaseRing::lcm(const Element& a, const Element& b) const {
  if (is_zero(a) || is_zero(b)) return zero();
  return canonical(mul(exact_div(a, gcd(a, b)), b));
}

BaseRing::ExtGcd BaseRing::ext_gcd(const Element& a, const Element& b) const {
  // Iterative extended Euclid; then adjust by the canonicalizing unit.
  Element r0 = a, r1 = b;
  Element s0 = one(), s1 = zero();
  Element t0 = zero(), t1 = one();
  while (!is_zero(r1)) {
    Element q = divmod(r0, r1).quot;
    Element r2 = sub(r0, mul(q, r1));
    Element s2 = sub(s0, mul(q, s1));
    Element t2 = sub(t0, mul(q, t1));
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
    t0 = t1; t1 = t2;
  }
  if (is_zero(r0)) return {r0, zero(), zero()};
  Element u = canonicalizing_unit(r0);
  return {mul(u, r0), mul(u, s0), mul(u, t0)};
}

Element BaseRing::canonical(const Element& a) const {
  if (is_zero(a)) return a;
  return mul(canonicalizing_unit(a), a);
}

Element BaseRing::canonicalizing_unit(const Element& a) const {
  if (kind_ == RingKind::Integers)
    return Element::integer(a.int_value() < 0 ? -1 : 1);
  return from_int(inv_mod(a.poly_value().coeffs.back(), char_));
}

Int BaseRing::pivot_norm(const Element& a) const {
  if (is_zero(a)) return 0;
  if (kind_ == RingKind::Integers) return abs(a.int_value());
  return degree(a.poly_value()) + 1;
}

Int BaseRing::residue_count(const Element& a) const {
  if (is_zero(a)) fail(Errc::InvalidArgument, "residue count of zero");
  if (kind_ == RingKind::Integers) return abs(a.int_value());
  Int n = 1;
  for (int i = 0; i < degree(a.poly_value()); ++i) n *= char_;
  return n;
}

int BaseRing::valuation(const Element& a, const Element& p) const {
  if (is_zero(a) || is_unit(p) || is_zero(p))
    fail(Errc::InvalidArgument, "valuation needs a nonzero element and a non-unit prime");
  int v = 0;
  Element x = a;
  while (true) {
    auto [q, r] = divmod(x, p);
    if (!is_zero(r)) return v;
    x = q;
    ++v;
  }
}

std::string BaseRing::to_string(const Element& e) const {
  if (kind_ == RingKind::Integers) return e.int_value().str();
  const auto& c = e.poly_value().coeffs;
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(e.poly_value()); i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c[i] != 1) os << c[i];
    if (i >= 1) {
      if (c[i] != 1) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::string RingContext::to_string() const {
  std::ostringstream os;
  if (base.kind() == RingKind::Integers) os << "Z";
  else os << "F" << base.characteristic() << "[x]";
  if (modulus) os << "/(" << base.to_string(*modulus) << ")";
  return os.str();
}

RingContext make_context(RingKind kind,
                         std::optional<std::int64_t> characteristic,
                         std::optional<Element> modulus) {
  BaseRing base = kind == RingKind::Integers
                      ? BaseRing::integers()
                      : BaseRing::polynomials(characteristic.value_or(0));
  std::optional<Element> mod;
  if (modulus) {
    Element m = base.canonical(base.normalize(*modulus));
    if (base.is_zero(m) || base.is_unit(m))
      fail(Errc::UnitOrZeroModulus, "modulus must be a nonzero non-unit");
    mod = m;
  }
  return RingContext{base, mod};
}

bool Ideal::is_zero() const {
  if (ctx.is_quotient()) return gen == *ctx.modulus;
  return ctx.base.is_zero(gen);
}

bool Ideal::is_unit() const { return ctx.base.is_unit(gen); }

std::string Ideal::to_string() const {
  return "(" + ctx.base.to_string(gen) + ")";
}

namespace {

Element normalize_ideal_gen(const RingContext& ctx, Element g) {
  g = ctx.base.canonical(g);
  if (ctx.is_quotient()) g = ctx.base.gcd(g, *ctx.modulus);
  return g;
}

void require_same_ctx(const RingContext& a, const RingContext& b) {
  if (!(a == b))
    fail(Errc::ContextMismatch,
         a.to_string() + " vs " + b.to_string());
}

}  // namespace

Ideal ideal_from_generators(const RingContext& ctx,
                            const std::vector<Element>& gens) {
  if (gens.empty())
    fail(Errc::InvalidArgument, "ideal needs at least one generator");
  Element g = ctx.base.zero();
  for (const Element& e : gens) g = ctx.base.gcd(g, ctx.base.normalize(e));
  return Ideal{ctx, normalize_ideal_gen(ctx, g)};
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  require_same_ctx(I.ctx, J.ctx);
  return Ideal{I.ctx, normalize_ideal_gen(I.ctx, I.ctx.base.mul(I.gen, J.gen))};
}

Ideal ideal_power(const Ideal& I, int k) {
  if (k < 1) fail(Errc::InvalidArgument, "ideal power exponent must be >= 1");
  return Ideal{I.ctx, normalize_ideal_gen(I.ctx, I.ctx.base.pow(I.gen, k))};
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  require_same_ctx(I.ctx, J.ctx);
  return Ideal{I.ctx, normalize_ideal_gen(I.ctx, I.ctx.base.gcd(I.gen, J.gen))};
}

Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
  require_same_ctx(I.ctx, J.ctx);
  return Ideal{I.ctx, normalize_ideal_gen(I.ctx, I.ctx.base.lcm(I.gen, J.gen))};
}

Ideal ideal_combine(IdealOp op, const Ideal& I, const Ideal& J) {
  switch (op) {
    case IdealOp::Product: return ideal_product(I, J);
    case IdealOp::Sum: return ideal_sum(I, J);
    case IdealOp::Intersection: return ideal_intersection(I, J);
    case IdealOp::Power:
      fail(Errc::InvalidArgument, "power takes an integer exponent");
  }
  fail(Errc::InvalidArgument, "unknown ideal operation");
}

Ideal ideal_combine(IdealOp op, const Ideal& I, int exponent) {
  if (op != IdealOp::Power)
    fail(Errc::InvalidArgument, "integer argument only valid for power");
  return ideal_power(I, exponent);
}

Containment ideal_compare(const Ideal& I, const Ideal& J) {
  require_same_ctx(I.ctx, J.ctx);
  bool i_contains_j = I.ctx.base.divides(I.gen, J.gen);
  bool j_contains_i = I.ctx.base.divides(J.gen, I.gen);
  if (i_contains_j && j_contains_i) return Containment::Equal;
  if (i_contains_j) return Containment::FirstContainsSecond;
  if (j_contains_i) return Containment::SecondContainsFirst;
  return Containment::Incomparable;
}

std::vector<Element> divisors_of(const BaseRing& ring, const Element& e) {
  if (ring.is_zero(e)) fail(Errc::InvalidArgument, "divisors of zero");
  std::vector<Element> out;
  if (ring.kind() == RingKind::Integers) {
    Int n = abs(e.int_value());
    for (Int d = 1; d <= n; ++d)
      if (n % d == 0) out.push_back(Element::integer(d));
    return out;
  }
  // Monic divisors by trial division over all monic polynomials of smaller
  // degree, plus the element itself.
  Element f = ring.canonical(e);
  int deg = static_cast<int>(f.poly_value().coeffs.size()) - 1;
  std::int64_t p = ring.characteristic();
  out.push_back(ring.one());
  for (int d = 1; d < deg; ++d) {
    // all monic polynomials of degree d: low-order coefficient odometer
    std::vector<std::int64_t> c(d + 1, 0);
    c[d] = 1;
    while (true) {
      Element cand = ring.poly_from_coeffs(c);
      if (ring.divides(cand, f)) out.push_back(cand);
      int i = 0;
      while (i < d && c[i] == p - 1) { c[i] = 0; ++i; }
      if (i == d) break;
      ++c[i];
    }
  }
  if (deg >= 1) out.push_back(f);
  return out;
}

std::vector<Ideal> enumerate_ideals(const RingContext& ctx) {
  if (!ctx.is_quotient())
    fail(Errc::InfiniteIdealLattice,
         "base context " + ctx.to_string() +
             " has infinitely many ideals; use reduction_ideals");
  std::vector<Ideal> out;
  for (const Element& d : divisors_of(ctx.base, *ctx.modulus))
    out.push_back(Ideal{ctx, d});
  return out;
}

namespace {

Element smallest_coprime_prime(const BaseRing& ring, const Element& e) {
  if (ring.kind() == RingKind::Integers) {
    for (Int q = 2;; ++q) {
      Element cand = Element::integer(q);
      bool prime = true;
      for (Int d = 2; d * d <= q; ++d)
        if (q % d == 0) { prime = false; break; }
      if (prime && ring.is_unit(ring.gcd(cand, e))) return cand;
    }
  }
  std::int64_t p = ring.characteristic();
  for (int deg = 1;; ++deg) {
    std::vector<std::int64_t> c(deg + 1, 0);
    c[deg] = 1;
    while (true) {
      Element cand = ring.poly_from_coeffs(c);
      // irreducible iff no monic divisor of degree 1..deg/2
      bool irred = true;
      for (int d = 1; irred && 2 * d <= deg; ++d) {
        std::vector<std::int64_t> cc(d + 1, 0);
        cc[d] = 1;
        while (true) {
          if (ring.divides(ring.poly_from_coeffs(cc), cand)) { irred = false; break; }
          int i = 0;
          while (i < d && cc[i] == p - 1) { cc[i] = 0; ++i; }
          if (i == d) break;
          ++cc[i];
        }
      }
      if (irred && ring.is_unit(ring.gcd(cand, e))) return cand;
      int i = 0;
      while (i < deg && c[i] == p - 1) { c[i] = 0; ++i; }
      if (i == deg) break;
      ++c[i];
    }
  }
}

}  // namespace

std::vector<Ideal> reduction_ideals(const RingContext& ctx,
                                    const Element& exponent) {
  if (ctx.is_quotient())
    fail(Errc::InvalidArgument, "reduction set applies to base contexts only");
  Element e = ctx.base.canonical(ctx.base.normalize(exponent));
  if (ctx.base.is_zero(e)) e = ctx.base.one();
  std::vector<Ideal> out;
  out.push_back(Ideal{ctx, ctx.base.zero()});
  for (const Element& d : divisors_of(ctx.base, e)) out.push_back(Ideal{ctx, d});
  out.push_back(Ideal{ctx, smallest_coprime_prime(ctx.base, e)});
  return out;
}

bool is_prime_element(const RingContext& ctx, const Element& e_in) {
  if (ctx.is_quotient())
    fail(Errc::QuotientContextUnsupported,
         "irreducibility is tested in the base domain");
  Element e = ctx.base.canonical(ctx.base.normalize(e_in));
  if (ctx.base.is_zero(e) || ctx.base.is_unit(e))
    fail(Errc::UnitOrZeroElement, "primality of a zero or unit element");
  if (ctx.base.kind() == RingKind::Integers) {
    Int n = e.int_value();
    for (Int d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }
  int deg = static_cast<int>(e.poly_value().coeffs.size()) - 1;
  std::int64_t p = ctx.base.characteristic();
  for (int d = 1; 2 * d <= deg; ++d) {
    std::vector<std::int64_t> c(d + 1, 0);
    c[d] = 1;
    while (true) {
      if (ctx.base.divides(ctx.base.poly_from_coeffs(c), e)) return false;
      int i = 0;
      while (i < d && c[i] == p - 1) { c[i] = 0; ++i; }
      if (i == d) break;
      ++c[i];
    }
  }
  return true;
}

}  // namespace fpm
