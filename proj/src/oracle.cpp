#include "fpm/oracle.hpp"

#include <algorithm>
#include <map>

namespace fpm::oracle {

namespace {

Vec smul_in(const PresentedModule& M, const Element& r, const Vec& v) {
  const BaseRing& R = M.context().base;
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = R.mul(r, v[i]);
  return M.canonicalize(out);
}

Vec add_in(const PresentedModule& M, const Vec& a, const Vec& b) {
  const BaseRing& R = M.context().base;
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = R.add(a[i], b[i]);
  return M.canonicalize(out);
}

bool is_zero_vec(const BaseRing& R, const Vec& v) {
  return std::all_of(v.begin(), v.end(),
                     [&](const Element& e) { return R.is_zero(e); });
}

/// Smallest non-unit monic/positive divisor of e; it is necessarily prime.
Element smallest_prime_factor(const BaseRing& R, const Element& e) {
  if (R.kind() == RingKind::Integers) {
    Int n = abs(e.int_value());
    for (Int d = 2; d * d <= n; ++d)
      if (n % d == 0) return Element::integer(d);
    return Element::integer(n);
  }
  int deg = static_cast<int>(e.poly_value().coeffs.size()) - 1;
  std::int64_t p = R.characteristic();
  for (int d = 1; d < deg; ++d) {
    std::vector<std::int64_t> c(d + 1, 0);
    c[d] = 1;
    while (true) {
      Element cand = R.poly_from_coeffs(c);
      if (R.divides(cand, e)) return cand;
      int i = 0;
      while (i < d && c[i] == p - 1) { c[i] = 0; ++i; }
      if (i == d) break;
      ++c[i];
    }
  }
  return R.canonical(e);
}

}  // namespace

ExplicitModule explicit_of(const PresentedModule& M, const Int& bound) {
  ExplicitModule em{M.context().base, enumerate_elements(M, bound),
                    M.zero_vec(), nullptr, nullptr};
  em.add = [M](const Vec& a, const Vec& b) { return add_in(M, a, b); };
  em.smul = [M](const Element& r, const Vec& v) { return smul_in(M, r, v); };
  return em;
}

InvariantFactors structure_of(const ExplicitModule& em) {
  const BaseRing& R = em.ring;
  const size_t n = em.elements.size();
  if (n <= 1) return {};

  auto kills_all = [&](const Element& s) {
    return std::all_of(em.elements.begin(), em.elements.end(), [&](const Vec& x) {
      return is_zero_vec(R, em.smul(s, x));
    });
  };
  auto count_killed = [&](const Element& s) -> Int {
    Int c = 0;
    for (const Vec& x : em.elements)
      if (is_zero_vec(R, em.smul(s, x))) ++c;
    return c;
  };

  // Module exponent: the smallest canonical non-unit killing everything.
  Element exponent = R.zero();
  if (R.kind() == RingKind::Integers) {
    for (const Element& d : divisors_of(R, Element::integer(Int(n))))
      if (kills_all(d)) { exponent = d; break; }
  } else {
    // |G| = p^dim; the exponent is monic of degree <= dim
    std::int64_t p = R.characteristic();
    int dim = 0;
    for (Int t = n; t > 1; t /= p) ++dim;
    for (int deg = 1; deg <= dim && R.is_zero(exponent); ++deg) {
      std::vector<std::int64_t> c(deg + 1, 0);
      c[deg] = 1;
      while (true) {
        Element cand = R.poly_from_coeffs(c);
        if (kills_all(cand)) { exponent = cand; break; }
        int i = 0;
        while (i < deg && c[i] == p - 1) { c[i] = 0; ++i; }
        if (i == deg) break;
        ++c[i];
      }
    }
  }
  if (R.is_zero(exponent))
    fail(Errc::InvalidArgument, "explicit module has no finite exponent");

  // Factor the exponent and, per prime q with multiplicity K, read off the
  // conjugate partition from the counts |G[q^j]|.
  struct PrimePart {
    Element prime;
    std::vector<int> parts;  // descending exponents
  };
  std::vector<PrimePart> parts;
  Element rest = exponent;
  while (!R.is_unit(rest)) {
    Element q = smallest_prime_factor(R, rest);
    int mult = 0;
    while (R.divides(q, rest)) { rest = R.exact_div(rest, q); ++mult; }
    Int base = R.residue_count(q);
    std::vector<int> conj;  // conj[j-1] = log_base(|G[q^j]| / |G[q^{j-1}]|)
    Int prev = 1;
    for (int j = 1; j <= mult; ++j) {
      Int cj = count_killed(R.pow(q, j));
      Int ratio = cj / prev;
      if (ratio * prev != cj)
        fail(Errc::InvalidArgument, "annihilator counts are not group-like");
      int lg = 0;
      while (ratio > 1) {
        if (ratio % base != 0)
          fail(Errc::InvalidArgument, "annihilator count not a power of |R/q|");
        ratio /= base;
        ++lg;
      }
      conj.push_back(lg);
      prev = cj;
    }
    // conjugate partition -> exponent partition, descending
    std::vector<int> mu;
    for (int i = 1; i <= (conj.empty() ? 0 : conj[0]); ++i) {
      int cnt = 0;
      for (int v : conj)
        if (v >= i) ++cnt;
      mu.push_back(cnt);
    }
    parts.push_back({q, mu});
  }

  size_t k = 0;
  for (const auto& pp : parts) k = std::max(k, pp.parts.size());
  std::vector<Element> factors;  // slot 0 = largest invariant factor
  for (size_t s = 0; s < k; ++s) {
    Element d = R.one();
    for (const auto& pp : parts)
      if (s < pp.parts.size()) d = R.mul(d, R.pow(pp.prime, pp.parts[s]));
    factors.push_back(R.canonical(d));
  }
  std::reverse(factors.begin(), factors.end());
  InvariantFactors out;
  out.torsion = std::move(factors);
  out.free_rank = 0;

  // sanity: the recovered structure must explain the cardinality
  Int total = 1;
  for (const Element& d : out.torsion) total *= R.residue_count(d);
  if (total != Int(n))
    fail(Errc::InvalidArgument, "annihilator statistics do not match |G|");
  return out;
}

ExplicitStructure structure_of_module(const PresentedModule& M, const Int& bound) {
  ExplicitModule em = explicit_of(M, bound);
  return {Int(em.elements.size()), structure_of(em)};
}

VecSet elements_set(const PresentedModule& M, const Int& bound) {
  auto v = enumerate_elements(M, bound);
  return VecSet(v.begin(), v.end());
}

VecSet colon_set(const PresentedModule& M, const VecSet& S, const Ideal& I,
                 const Int& bound) {
  VecSet out;
  for (const Vec& m : enumerate_elements(M, bound))
    if (S.count(smul_in(M, I.gen, m))) out.insert(m);
  return out;
}

VecSet annihilator_set(const PresentedModule& M, const Ideal& I,
                       const Int& bound) {
  VecSet zero{M.zero_vec()};
  return colon_set(M, zero, I, bound);
}

VecSet scalar_set(const PresentedModule& M, const Ideal& I, const Int& bound) {
  VecSet out;
  for (const Vec& m : enumerate_elements(M, bound))
    out.insert(smul_in(M, I.gen, m));
  return out;
}

VecSet gamma_set(const PresentedModule& M, const Ideal& I, const Int& bound) {
  const BaseRing& R = M.context().base;
  VecSet prev;
  Element power = R.one();
  for (int k = 1;; ++k) {
    power = R.mul(power, I.gen);
    VecSet next;
    for (const Vec& m : enumerate_elements(M, bound))
      if (is_zero_vec(R, smul_in(M, power, m))) next.insert(m);
    if (k > 1 && next == prev) return prev;
    prev = std::move(next);
  }
}

LimitResult lambda_limit(const PresentedModule& M, const Ideal& I,
                         const Int& bound) {
  const BaseRing& R = M.context().base;
  auto elems = enumerate_elements(M, bound);

  // descending chain of element sets I^k M
  auto stage_set = [&](int k) {
    VecSet s;
    Element power = R.pow(I.gen, k);
    for (const Vec& m : elems) s.insert(smul_in(M, power, m));
    return s;
  };
  int k0 = 1;
  VecSet Sk = stage_set(1);
  while (true) {
    VecSet Snext = stage_set(k0 + 1);
    if (Snext == Sk) break;
    Sk = std::move(Snext);
    ++k0;
  }

  // coset representative modulo a set: minimum of m + S
  auto rep_mod = [M](const VecSet& S, const Vec& m) {
    Vec best = m;
    bool first = true;
    for (const Vec& s : S) {
      Vec cand = add_in(M, m, s);
      if (first || vec_less(cand, best)) { best = cand; first = false; }
    }
    return best;
  };

  // the stage quotients stabilize: the transition from stage k0+1 to k0
  // must be a bijection of coset spaces
  VecSet Sk1 = stage_set(k0 + 1);
  VecSet reps_k, reps_k1;
  for (const Vec& m : elems) reps_k.insert(rep_mod(Sk, m));
  for (const Vec& m : elems) reps_k1.insert(rep_mod(Sk1, m));
  if (reps_k.size() != reps_k1.size())
    fail(Errc::InvalidArgument, "inverse system failed to stabilize");
  for (const Vec& r : reps_k1)
    if (!reps_k.count(rep_mod(Sk, r)))
      fail(Errc::InvalidArgument, "stage transition is not onto");

  // threads: each stage-k0 coset induces the compatible sequence of its
  // images in the earlier stages; compatibility is checked explicitly
  std::vector<VecSet> lower_sets;
  for (int k = 1; k < k0; ++k) lower_sets.push_back(stage_set(k));
  for (const Vec& r : reps_k) {
    Vec down = r;
    for (auto it = lower_sets.rbegin(); it != lower_sets.rend(); ++it) {
      Vec next = rep_mod(*it, down);
      // image of the coset of `down` must be the coset of `next`
      if (rep_mod(*it, next) != next)
        fail(Errc::InvalidArgument, "incompatible thread");
      down = next;
    }
  }

  ExplicitModule em{R, std::vector<Vec>(reps_k.begin(), reps_k.end()),
                    rep_mod(Sk, M.zero_vec()), nullptr, nullptr};
  VecSet S_closed = Sk;
  em.add = [M, S_closed, rep_mod](const Vec& a, const Vec& b) {
    return rep_mod(S_closed, add_in(M, a, b));
  };
  em.smul = [M, S_closed, rep_mod](const Element& r, const Vec& v) {
    return rep_mod(S_closed, smul_in(M, r, v));
  };
  return {{Int(em.elements.size()), structure_of(em)}, k0};
}

HomResult hom_maps(const PresentedModule& M, const PresentedModule& N,
                   const Int& bound) {
  const BaseRing& R = M.context().base;
  if (!(M.context() == N.context()))
    fail(Errc::ContextMismatch, "hom across contexts");
  auto elemsN = enumerate_elements(N, bound);
  const int g = M.generators();
  Int work = 1;
  for (int i = 0; i < g; ++i) {
    work *= Int(elemsN.size());
    if (work > 4'000'000)
      fail(Errc::SizeBoundExceeded, "hom enumeration too large");
  }

  const Matrix& rel = M.relations();
  // relations grouped by their last involved generator
  std::vector<std::vector<int>> by_last(g);
  for (int r = 0; r < rel.rows(); ++r) {
    int last = -1;
    for (int j = 0; j < g; ++j)
      if (!R.is_zero(rel.at(r, j))) last = j;
    if (last >= 0) by_last[last].push_back(r);
  }
  // single-variable rows prefilter the candidate images per generator
  std::vector<std::vector<Vec>> candidates(g, elemsN);
  for (int r = 0; r < rel.rows(); ++r) {
    int support = 0, where = -1;
    for (int j = 0; j < g; ++j)
      if (!R.is_zero(rel.at(r, j))) { ++support; where = j; }
    if (support != 1) continue;
    const Element& c = rel.at(r, where);
    std::vector<Vec> filtered;
    for (const Vec& img : candidates[where])
      if (N.is_zero_element(smul_in(N, c, img))) filtered.push_back(img);
    candidates[where] = std::move(filtered);
  }

  std::vector<std::vector<Vec>> maps;
  std::vector<Vec> current(g, N.zero_vec());
  auto relation_ok = [&](int r, int depth) {
    Vec sum = N.zero_vec();
    for (int j = 0; j <= depth; ++j) {
      if (R.is_zero(rel.at(r, j))) continue;
      sum = add_in(N, sum, smul_in(N, rel.at(r, j), current[j]));
    }
    return is_zero_vec(R, sum);
  };
  std::function<void(int)> dfs = [&](int depth) {
    if (depth == g) {
      maps.push_back(current);
      return;
    }
    for (const Vec& img : candidates[depth]) {
      current[depth] = img;
      bool ok = true;
      for (int r : by_last[depth])
        if (!relation_ok(r, depth)) { ok = false; break; }
      if (ok) dfs(depth + 1);
    }
  };
  dfs(0);

  // the maps form a module under pointwise operations
  const int gn = N.generators();
  auto flatten = [&](const std::vector<Vec>& images) {
    Vec out;
    out.reserve(static_cast<size_t>(g) * gn);
    for (const Vec& img : images) out.insert(out.end(), img.begin(), img.end());
    return out;
  };
  ExplicitModule em{R, {}, flatten(std::vector<Vec>(g, N.zero_vec())), nullptr,
                    nullptr};
  for (const auto& m : maps) em.elements.push_back(flatten(m));
  em.add = [N, g, gn](const Vec& a, const Vec& b) {
    Vec out;
    out.reserve(a.size());
    for (int i = 0; i < g; ++i) {
      Vec ai(a.begin() + i * gn, a.begin() + (i + 1) * gn);
      Vec bi(b.begin() + i * gn, b.begin() + (i + 1) * gn);
      Vec s = add_in(N, ai, bi);
      out.insert(out.end(), s.begin(), s.end());
    }
    return out;
  };
  em.smul = [N, g, gn](const Element& r, const Vec& v) {
    Vec out;
    out.reserve(v.size());
    for (int i = 0; i < g; ++i) {
      Vec vi(v.begin() + i * gn, v.begin() + (i + 1) * gn);
      Vec s = smul_in(N, r, vi);
      out.insert(out.end(), s.begin(), s.end());
    }
    return out;
  };
  return {Int(maps.size()), {Int(maps.size()), structure_of(em)}};
}

ExplicitStructure tensor_structure(const PresentedModule& M,
                                   const PresentedModule& N, const Int& bound) {
  if (!(M.context() == N.context()))
    fail(Errc::ContextMismatch, "tensor across contexts");
  const BaseRing& R = M.context().base;
  const int gm = M.generators(), gn = N.generators();
  const Matrix& rm = M.relations();
  const Matrix& rn = N.relations();
  // generators e_i (x) f_j at index i*gn + j; bilinearity relations are the
  // relations of each side tensored with the other side's generators
  std::vector<Vec> rows;
  for (int r = 0; r < rm.rows(); ++r)
    for (int j = 0; j < gn; ++j) {
      Vec row(static_cast<size_t>(gm) * gn, R.zero());
      for (int i = 0; i < gm; ++i) row[static_cast<size_t>(i) * gn + j] = rm.at(r, i);
      rows.push_back(std::move(row));
    }
  for (int s = 0; s < rn.rows(); ++s)
    for (int i = 0; i < gm; ++i) {
      Vec row(static_cast<size_t>(gm) * gn, R.zero());
      for (int j = 0; j < gn; ++j) row[static_cast<size_t>(i) * gn + j] = rn.at(s, j);
      rows.push_back(std::move(row));
    }
  Matrix rel = matrix_from_rows(R, gm * gn, rows);
  Matrix H = row_hermite(rel);
  auto elems = enumerate_residues(H, bound * bound);
  ExplicitModule em{R, elems, Vec(static_cast<size_t>(gm) * gn, R.zero()),
                    nullptr, nullptr};
  em.add = [H, R](const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = R.add(a[i], b[i]);
    return reduce_mod_rows(H, out);
  };
  em.smul = [H, R](const Element& r, const Vec& v) {
    Vec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = R.mul(r, v[i]);
    return reduce_mod_rows(H, out);
  };
  return {Int(em.elements.size()), structure_of(em)};
}

Verdict local_predicate(const PresentedModule& M, PredicateKind kind,
                        const Ideal& I, const std::optional<Ideal>& J,
                        const Int& bound) {
  const BaseRing& R = M.context().base;
  if (predicate_needs_pair(kind) && !J)
    fail(Errc::MissingSecondIdeal, predicate_name(kind));
  auto elems = enumerate_elements(M, bound);
  const Element& a = I.gen;

  auto make_fail = [&](Vec m, const std::string& note) {
    Verdict v;
    v.holds = false;
    v.witness = Witness{{std::move(m)}, {}, note};
    v.evidence = "definitional quantification over " +
                 std::to_string(elems.size()) + " elements";
    return v;
  };
  auto make_pass = [&](const std::string& ev) {
    return Verdict{true, std::nullopt, ev};
  };

  switch (kind) {
    case PredicateKind::IPrime: {
      bool im_zero = true;
      for (const Vec& m : elems)
        if (!is_zero_vec(R, smul_in(M, a, m))) { im_zero = false; break; }
      for (const Vec& m : elems)
        if (is_zero_vec(R, smul_in(M, a, m)) && !is_zero_vec(R, m) && !im_zero)
          return make_fail(m, "Im = 0, m != 0, IM != 0");
      return make_pass("forall m: Im = 0 implies m = 0 or IM = 0");
    }
    case PredicateKind::IJPrime: {
      Element ab = R.mul(a, J->gen);
      for (const Vec& m : elems)
        if (is_zero_vec(R, smul_in(M, ab, m)) &&
            !is_zero_vec(R, smul_in(M, a, m)) &&
            !is_zero_vec(R, smul_in(M, J->gen, m)))
          return make_fail(m, "IJm = 0 but Im != 0 and Jm != 0");
      return make_pass("forall m: IJm = 0 implies Im = 0 or Jm = 0");
    }
    case PredicateKind::IReduced: {
      Element a2 = R.mul(a, a);
      for (const Vec& m : elems)
        if (is_zero_vec(R, smul_in(M, a2, m)) &&
            !is_zero_vec(R, smul_in(M, a, m)))
          return make_fail(m, "I^2 m = 0 but Im != 0");
      return make_pass("forall m: I^2 m = 0 implies Im = 0");
    }
    case PredicateKind::ICoprime: {
      VecSet im = scalar_set(M, I, bound);
      VecSet all(elems.begin(), elems.end());
      if (im == VecSet{M.zero_vec()}) return make_pass("IM = 0");
      if (im == all) return make_pass("IM = M");
      Verdict v;
      v.holds = false;
      v.witness = Witness{{}, {}, "IM is a proper nonzero subset"};
      v.evidence = "elementwise image comparison";
      return v;
    }
    case PredicateKind::IJCoprime: {
      VecSet ijm = scalar_set(M, ideal_product(I, *J), bound);
      VecSet im = scalar_set(M, I, bound);
      VecSet jm = scalar_set(M, *J, bound);
      if (ijm == im) return make_pass("IJM = IM");
      if (ijm == jm) return make_pass("IJM = JM");
      Verdict v;
      v.holds = false;
      v.witness = Witness{{}, {}, "IJM differs from IM and JM"};
      v.evidence = "elementwise image comparison";
      return v;
    }
    case PredicateKind::ICoreduced: {
      VecSet im = scalar_set(M, I, bound);
      VecSet i2m = scalar_set(M, ideal_power(I, 2), bound);
      if (im == i2m) return make_pass("IM = I^2 M");
      Verdict v;
      v.holds = false;
      v.witness = Witness{{}, {}, "IM != I^2 M"};
      v.evidence = "elementwise image comparison";
      return v;
    }
    case PredicateKind::ITorsion: {
      VecSet g = gamma_set(M, I, bound);
      VecSet all(elems.begin(), elems.end());
      if (g == all) return make_pass("every element killed by a power of I");
      for (const Vec& m : elems)
        if (!g.count(m)) return make_fail(m, "no power of I kills m");
      return make_pass("unreachable");
    }
    case PredicateKind::IComplete: {
      LimitResult lim = lambda_limit(M, I, bound);
      ExplicitStructure self = structure_of_module(M, bound);
      if (lim.structure == self)
        return make_pass("inverse limit isomorphic to M (by structure counts)");
      Verdict v;
      v.holds = false;
      v.witness = Witness{{}, {}, "inverse limit differs from M"};
      v.evidence = "explicit inverse system comparison";
      return v;
    }
    default:
      fail(Errc::InvalidArgument, "oracle: not a local predicate");
  }
}

Verdict global_predicate(const PresentedModule& M, PredicateKind kind,
                         const Int& bound) {
  const RingContext& ctx = M.context();
  if (!ctx.is_quotient())
    fail(Errc::InfiniteIdealLattice,
         "oracle global predicates need a finite quotient ring");
  PredicateKind local;
  switch (kind) {
    case PredicateKind::Prime: local = PredicateKind::IPrime; break;
    case PredicateKind::WeaklyPrime: local = PredicateKind::IJPrime; break;
    case PredicateKind::Reduced: local = PredicateKind::IReduced; break;
    case PredicateKind::Coprime: local = PredicateKind::ICoprime; break;
    case PredicateKind::WeaklyCoprime: local = PredicateKind::IJCoprime; break;
    case PredicateKind::Coreduced: local = PredicateKind::ICoreduced; break;
    default:
      fail(Errc::InvalidArgument, "oracle: not a global predicate");
  }
  std::vector<Ideal> ideals;
  for (const Element& d : divisors_of(ctx.base, *ctx.modulus))
    ideals.push_back(Ideal{ctx, d});
  if (!predicate_needs_pair(local)) {
    for (const Ideal& I : ideals) {
      Verdict v = local_predicate(M, local, I, std::nullopt, bound);
      if (!v.holds) {
        Witness w = v.witness ? *v.witness : Witness{};
        w.ideals.insert(w.ideals.begin(), I);
        return {false, std::move(w), "oracle: fails at " + I.to_string()};
      }
    }
    return {true, std::nullopt, "oracle: all ideals of the quotient ring"};
  }
  for (const Ideal& I : ideals)
    for (const Ideal& J : ideals) {
      Verdict v = local_predicate(M, local, I, J, bound);
      if (!v.holds) {
        Witness w = v.witness ? *v.witness : Witness{};
        w.ideals.insert(w.ideals.begin(), J);
        w.ideals.insert(w.ideals.begin(), I);
        return {false, std::move(w),
                "oracle: fails at (" + I.to_string() + ", " + J.to_string() + ")"};
      }
    }
  return {true, std::nullopt, "oracle: all ideal pairs of the quotient ring"};
}

Verdict elementwise_coprime(const PresentedModule& M, const Int& bound) {
  const RingContext& ctx = M.context();
  if (!ctx.is_quotient())
    fail(Errc::InfiniteIdealLattice,
         "elementwise quantification needs a finite ring");
  const BaseRing& R = ctx.base;
  auto elems = enumerate_elements(M, bound);
  VecSet all(elems.begin(), elems.end());

  std::vector<Element> ring_elems;
  if (R.kind() == RingKind::Integers) {
    for (Int r = 0; r < ctx.modulus->int_value(); ++r)
      ring_elems.push_back(Element::integer(r));
  } else {
    int deg = static_cast<int>(ctx.modulus->poly_value().coeffs.size()) - 1;
    std::int64_t p = R.characteristic();
    std::vector<std::int64_t> c(deg, 0);
    while (true) {
      ring_elems.push_back(R.poly_from_coeffs(c));
      int i = 0;
      while (i < deg && c[i] == p - 1) { c[i] = 0; ++i; }
      if (i >= deg) break;
      ++c[i];
    }
  }
  for (const Element& r : ring_elems) {
    VecSet rm;
    for (const Vec& m : elems) rm.insert(smul_in(M, r, m));
    if (!(rm == VecSet{M.zero_vec()}) && !(rm == all)) {
      Verdict v;
      v.holds = false;
      v.witness = Witness{{}, {ideal_from_generators(ctx, {r})},
                          "rM proper nonzero for r = " + R.to_string(r)};
      v.evidence = "elementwise scan of the quotient ring";
      return v;
    }
  }
  return {true, std::nullopt,
          "rM trivial for every ring element (" +
              std::to_string(ring_elems.size()) + " scanned)"};
}

Result evaluate(const Query& q) {
  switch (q.target) {
    case Target::Annihilator:
      return annihilator_set(q.M, *q.I, q.limits.max_module);
    case Target::ScalarSubmodule:
      return scalar_set(q.M, *q.I, q.limits.max_module);
    case Target::Gamma:
      return gamma_set(q.M, *q.I, q.limits.max_module);
    case Target::Lambda:
      return lambda_limit(q.M, *q.I, q.limits.max_module).structure;
    case Target::Hom:
      return hom_maps(q.M, *q.N, q.limits.max_hom_tensor).structure;
    case Target::Tensor:
      return tensor_structure(q.M, *q.N, q.limits.max_hom_tensor);
    case Target::LocalPredicate:
      return local_predicate(q.M, *q.kind, *q.I, q.J, q.limits.max_module);
    case Target::GlobalPredicate:
      return global_predicate(q.M, *q.kind, q.limits.max_module);
  }
  fail(Errc::InvalidArgument, "unknown oracle target");
}

}  // namespace fpm::oracle
