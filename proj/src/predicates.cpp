#include "fpm/predicates.hpp"

#include <algorithm>
#include <sstream>

namespace fpm {

namespace {

constexpr long long kWitnessSearchBound = 4096;

}  // namespace

bool predicate_is_local(PredicateKind k) {
  switch (k) {
    case PredicateKind::IPrime:
    case PredicateKind::IJPrime:
    case PredicateKind::IReduced:
    case PredicateKind::ICoprime:
    case PredicateKind::IJCoprime:
    case PredicateKind::ICoreduced:
    case PredicateKind::ITorsion:
    case PredicateKind::IComplete:
      return true;
    default:
      return false;
  }
}

bool predicate_needs_pair(PredicateKind k) {
  return k == PredicateKind::IJPrime || k == PredicateKind::IJCoprime;
}

const char* predicate_name(PredicateKind k) {
  switch (k) {
    case PredicateKind::IPrime: return "I-prime";
    case PredicateKind::IJPrime: return "(I,J)-prime";
    case PredicateKind::IReduced: return "I-reduced";
    case PredicateKind::ICoprime: return "I-coprime";
    case PredicateKind::IJCoprime: return "(I,J)-coprime";
    case PredicateKind::ICoreduced: return "I-coreduced";
    case PredicateKind::ITorsion: return "I-torsion";
    case PredicateKind::IComplete: return "I-complete";
    case PredicateKind::Prime: return "prime";
    case PredicateKind::WeaklyPrime: return "weakly-prime";
    case PredicateKind::Reduced: return "reduced";
    case PredicateKind::Coprime: return "coprime";
    case PredicateKind::WeaklyCoprime: return "weakly-coprime";
    case PredicateKind::Coreduced: return "coreduced";
  }
  return "?";
}

std::optional<PredicateKind> predicate_from_name(const std::string& name) {
  static const std::pair<const char*, PredicateKind> table[] = {
      {"I-prime", PredicateKind::IPrime},
      {"(I,J)-prime", PredicateKind::IJPrime},
      {"I-reduced", PredicateKind::IReduced},
      {"I-coprime", PredicateKind::ICoprime},
      {"(I,J)-coprime", PredicateKind::IJCoprime},
      {"I-coreduced", PredicateKind::ICoreduced},
      {"I-torsion", PredicateKind::ITorsion},
      {"I-complete", PredicateKind::IComplete},
      {"prime", PredicateKind::Prime},
      {"weakly-prime", PredicateKind::WeaklyPrime},
      {"reduced", PredicateKind::Reduced},
      {"coprime", PredicateKind::Coprime},
      {"weakly-coprime", PredicateKind::WeaklyCoprime},
      {"coreduced", PredicateKind::Coreduced},
  };
  for (auto& [n, k] : table)
    if (name == n) return k;
  return std::nullopt;
}

namespace {

bool small_enough_to_enumerate(const PresentedModule& M) {
  auto card = M.cardinality();
  return card.has_value() && *card <= kWitnessSearchBound;
}

/// First nonzero element of S, in canonical enumeration order of the
/// ambient module when finite, else the first stored generator.
Vec first_nonzero_element(const Submodule& S) {
  const PresentedModule& M = S.ambient();
  if (small_enough_to_enumerate(M)) {
    for (const Vec& v : enumerate_elements(M, kWitnessSearchBound))
      if (!M.is_zero_element(v) && S.member(v)) return v;
  }
  return S.gens().front();
}

/// First element of A not in B (A not contained in B assumed).
Vec element_in_difference(const Submodule& A, const Submodule& B) {
  const PresentedModule& M = A.ambient();
  if (small_enough_to_enumerate(M)) {
    for (const Vec& v : enumerate_elements(M, kWitnessSearchBound))
      if (A.member(v) && !B.member(v)) return v;
  }
  for (const Vec& g : A.gens())
    if (!B.member(g)) return g;
  fail(Errc::InvalidArgument, "difference witness requested for A within B");
}

/// First element of M outside S (S proper assumed).
Vec element_outside(const Submodule& S) {
  const PresentedModule& M = S.ambient();
  const BaseRing& R = M.context().base;
  if (small_enough_to_enumerate(M)) {
    for (const Vec& v : enumerate_elements(M, kWitnessSearchBound))
      if (!S.member(v)) return v;
  }
  for (int j = 0; j < M.generators(); ++j) {
    Vec e(M.generators(), R.zero());
    e[j] = R.one();
    if (!S.member(e)) return M.canonicalize(e);
  }
  fail(Errc::InvalidArgument, "outside witness requested for the full submodule");
}

std::string fmt_elem(const PresentedModule& M, const Vec& v) {
  return vec_to_string(M.context().base, v);
}

Verdict trivial_submodule_verdict(const PresentedModule& M, const Submodule& S,
                                  const std::string& what,
                                  const std::string& fail_note_zero_side) {
  if (S.is_zero()) return {true, std::nullopt, what + " = 0"};
  if (S.is_full()) return {true, std::nullopt, what + " = M"};
  Verdict v;
  v.holds = false;
  Witness w;
  w.elements.push_back(first_nonzero_element(S));
  w.elements.push_back(element_outside(S));
  w.note = fail_note_zero_side + ": " + what + " contains nonzero " +
           fmt_elem(M, w.elements[0]) + " and misses " +
           fmt_elem(M, w.elements[1]);
  v.witness = std::move(w);
  v.evidence = what + " is a proper nonzero submodule";
  return v;
}

}  // namespace

Verdict local_predicate(const PresentedModule& M, PredicateKind kind,
                        const Ideal& I, const std::optional<Ideal>& J) {
  if (!predicate_is_local(kind))
    fail(Errc::InvalidArgument,
         std::string(predicate_name(kind)) + " is a global predicate");
  if (!(I.ctx == M.context()))
    fail(Errc::ContextMismatch, "ideal from another context");
  if (predicate_needs_pair(kind)) {
    if (!J) fail(Errc::MissingSecondIdeal, predicate_name(kind));
    if (!(J->ctx == M.context()))
      fail(Errc::ContextMismatch, "second ideal from another context");
  } else if (J) {
    fail(Errc::InvalidArgument,
         std::string(predicate_name(kind)) + " takes a single ideal");
  }

  const Submodule zero = zero_submodule(M);

  switch (kind) {
    case PredicateKind::IPrime: {
      // Either (0:M I) = 0 or (0:M I) = M.
      Submodule ann = colon_submodule(M, zero, I);
      if (ann.is_zero()) return {true, std::nullopt, "(0:M I) = 0"};
      if (ann.is_full()) return {true, std::nullopt, "(0:M I) = M (IM = 0)"};
      Verdict v;
      v.holds = false;
      Witness w;
      w.elements.push_back(first_nonzero_element(ann));
      w.note = "m = " + fmt_elem(M, w.elements[0]) +
               " has Im = 0, m != 0, yet IM != 0";
      v.witness = std::move(w);
      v.evidence = "(0:M I) is a proper nonzero submodule";
      return v;
    }
    case PredicateKind::IJPrime: {
      // Either (0:M IJ) = (0:M I) or (0:M IJ) = (0:M J).
      Ideal IJ = ideal_product(I, *J);
      Submodule annIJ = colon_submodule(M, zero, IJ);
      Submodule annI = colon_submodule(M, zero, I);
      Submodule annJ = colon_submodule(M, zero, *J);
      bool eq_i = submodule_relate(annIJ, annI) == SubRelation::Equal;
      bool eq_j = submodule_relate(annIJ, annJ) == SubRelation::Equal;
      if (eq_i) return {true, std::nullopt, "(0:M IJ) = (0:M I)"};
      if (eq_j) return {true, std::nullopt, "(0:M IJ) = (0:M J)"};
      Verdict v;
      v.holds = false;
      Witness w;
      if (small_enough_to_enumerate(M)) {
        for (const Vec& c : enumerate_elements(M, kWitnessSearchBound))
          if (annIJ.member(c) && !annI.member(c) && !annJ.member(c)) {
            w.elements.push_back(c);
            break;
          }
      }
      if (w.elements.empty()) {
        // u in (0:IJ)\(0:I), v in (0:IJ)\(0:J); one of u, v, u+v works
        Vec u = element_in_difference(annIJ, annI);
        Vec vv = element_in_difference(annIJ, annJ);
        if (!annJ.member(u)) w.elements.push_back(u);
        else if (!annI.member(vv)) w.elements.push_back(vv);
        else {
          Vec sum(u.size());
          for (size_t i = 0; i < u.size(); ++i)
            sum[i] = M.context().base.add(u[i], vv[i]);
          w.elements.push_back(M.canonicalize(sum));
        }
      }
      w.note = "m = " + fmt_elem(M, w.elements[0]) +
               " has IJm = 0 but Im != 0 and Jm != 0";
      v.witness = std::move(w);
      v.evidence = "(0:M IJ) differs from both (0:M I) and (0:M J)";
      return v;
    }
    case PredicateKind::IReduced: {
      // (0:M I) = (0:M I^2).
      Submodule annI = colon_submodule(M, zero, I);
      Submodule annI2 = colon_submodule(M, zero, ideal_power(I, 2));
      if (submodule_relate(annI, annI2) == SubRelation::Equal)
        return {true, std::nullopt, "(0:M I) = (0:M I^2)"};
      Verdict v;
      v.holds = false;
      Witness w;
      w.elements.push_back(element_in_difference(annI2, annI));
      w.note = "m = " + fmt_elem(M, w.elements[0]) +
               " has I^2 m = 0 but Im != 0";
      v.witness = std::move(w);
      v.evidence = "(0:M I) != (0:M I^2)";
      return v;
    }
    case PredicateKind::ICoprime: {
      // Either IM = 0 or IM = M.
      Submodule IM = scalar_submodule(M, I);
      return trivial_submodule_verdict(M, IM, "IM", "IM is neither 0 nor M");
    }
    case PredicateKind::IJCoprime: {
      // Either IJM = IM or IJM = JM.
      Submodule IJM = scalar_submodule(M, ideal_product(I, *J));
      Submodule IM = scalar_submodule(M, I);
      Submodule JM = scalar_submodule(M, *J);
      if (submodule_relate(IJM, IM) == SubRelation::Equal)
        return {true, std::nullopt, "IJM = IM"};
      if (submodule_relate(IJM, JM) == SubRelation::Equal)
        return {true, std::nullopt, "IJM = JM"};
      Verdict v;
      v.holds = false;
      Witness w;
      w.elements.push_back(element_in_difference(IM, IJM));
      w.elements.push_back(element_in_difference(JM, IJM));
      w.note = fmt_elem(M, w.elements[0]) + " lies in IM but not IJM; " +
               fmt_elem(M, w.elements[1]) + " lies in JM but not IJM";
      v.witness = std::move(w);
      v.evidence = "IJM differs from both IM and JM";
      return v;
    }
    case PredicateKind::ICoreduced: {
      // IM = I^2 M.
      Submodule IM = scalar_submodule(M, I);
      Submodule I2M = scalar_submodule(M, ideal_power(I, 2));
      if (submodule_relate(IM, I2M) == SubRelation::Equal)
        return {true, std::nullopt, "IM = I^2 M"};
      Verdict v;
      v.holds = false;
      Witness w;
      w.elements.push_back(element_in_difference(IM, I2M));
      w.note = fmt_elem(M, w.elements[0]) + " lies in IM but not I^2 M";
      v.witness = std::move(w);
      v.evidence = "IM != I^2 M";
      return v;
    }
    case PredicateKind::ITorsion: {
      Submodule G = gamma(M, I);
      if (G.is_full()) return {true, std::nullopt, "Gamma_I(M) = M"};
      Verdict v;
      v.holds = false;
      Witness w;
      w.elements.push_back(element_outside(G));
      w.note = "no power of I kills " + fmt_elem(M, w.elements[0]);
      v.witness = std::move(w);
      v.evidence = "Gamma_I(M) is a proper submodule";
      return v;
    }
    case PredicateKind::IComplete: {
      LambdaResult L = lambda(M, I);
      if (std::holds_alternative<NotRepresentable>(L)) {
        Verdict v;
        v.holds = false;
        Witness w;
        w.note = "Lambda_I(M) is not finitely presentable: " +
                 std::get<NotRepresentable>(L).reason;
        v.witness = std::move(w);
        v.evidence = "completion not representable, so not isomorphic to M";
        return v;
      }
      const PresentedModule& LM = std::get<PresentedModule>(L);
      if (is_isomorphic(LM, M))
        return {true, std::nullopt, "Lambda_I(M) isomorphic to M"};
      Verdict v;
      v.holds = false;
      Witness w;
      w.note = "Lambda_I(M) has invariants " +
               LM.invariants().to_string(M.context().base) + " vs M's " +
               M.invariants().to_string(M.context().base);
      v.witness = std::move(w);
      v.evidence = "Lambda_I(M) not isomorphic to M";
      return v;
    }
    default:
      fail(Errc::InvalidArgument, "unreachable");
  }
}

std::vector<Ideal> global_quantifier_set(const PresentedModule& M) {
  const RingContext& ctx = M.context();
  if (ctx.is_quotient()) return enumerate_ideals(ctx);
  Element exponent = M.invariants().torsion.empty()
                         ? ctx.base.one()
                         : M.invariants().torsion.back();
  return reduction_ideals(ctx, exponent);
}

namespace {

PredicateKind local_kind_of_global(PredicateKind k) {
  switch (k) {
    case PredicateKind::Prime: return PredicateKind::IPrime;
    case PredicateKind::WeaklyPrime: return PredicateKind::IJPrime;
    case PredicateKind::Reduced: return PredicateKind::IReduced;
    case PredicateKind::Coprime: return PredicateKind::ICoprime;
    case PredicateKind::WeaklyCoprime: return PredicateKind::IJCoprime;
    case PredicateKind::Coreduced: return PredicateKind::ICoreduced;
    default:
      fail(Errc::InvalidArgument,
           std::string(predicate_name(k)) + " is not a global predicate");
  }
}

std::string quantifier_desc(const PresentedModule& M,
                            const std::vector<Ideal>& set) {
  std::ostringstream os;
  os << (M.context().is_quotient() ? "all ideals of " : "reduction set over ")
     << M.context().to_string() << ": {";
  for (size_t i = 0; i < set.size(); ++i)
    os << (i ? ", " : "") << set[i].to_string();
  os << "}";
  return os.str();
}

}  // namespace

Verdict global_predicate(const PresentedModule& M, PredicateKind kind) {
  PredicateKind local = local_kind_of_global(kind);
  std::vector<Ideal> set = global_quantifier_set(M);
  std::string range = quantifier_desc(M, set);
  if (!predicate_needs_pair(local)) {
    for (const Ideal& I : set) {
      Verdict v = local_predicate(M, local, I);
      if (!v.holds) {
        Witness w = v.witness ? *v.witness : Witness{};
        w.ideals.insert(w.ideals.begin(), I);
        w.note = "fails at I = " + I.to_string() +
                 (w.note.empty() ? "" : "; " + w.note);
        return {false, std::move(w), "quantified over " + range};
      }
    }
    return {true, std::nullopt, "holds over " + range};
  }
  for (const Ideal& I : set)
    for (const Ideal& J : set) {
      Verdict v = local_predicate(M, local, I, J);
      if (!v.holds) {
        Witness w = v.witness ? *v.witness : Witness{};
        w.ideals.insert(w.ideals.begin(), J);
        w.ideals.insert(w.ideals.begin(), I);
        w.note = "fails at (I, J) = (" + I.to_string() + ", " + J.to_string() +
                 ")" + (w.note.empty() ? "" : "; " + w.note);
        return {false, std::move(w), "quantified over " + range};
      }
    }
  return {true, std::nullopt, "holds over pairs from " + range};
}

namespace {

/// Annihilator exponents of (0 :_{M_p} p^k): min(k, e_i) per torsion factor;
/// the free part never contributes.
struct LocColon {
  bool full = false;  // zero ideal case
  std::vector<int> exps;
  bool operator==(const LocColon&) const = default;
};

LocColon loc_colon(const LocalizedModule& M, const LocalizedIdeal& I) {
  if (I.zero) return {true, {}};
  LocColon c;
  for (int e : M.exponents) c.exps.push_back(std::min(I.exponent, e));
  return c;
}

bool loc_colon_is_zero(const LocColon& c, const LocalizedModule& M) {
  if (c.full) return M.free_rank == 0 && M.exponents.empty();
  return std::all_of(c.exps.begin(), c.exps.end(), [](int e) { return e == 0; });
}

bool loc_colon_is_full(const LocColon& c, const LocalizedModule& M) {
  if (c.full) return true;
  if (M.free_rank > 0) return false;  // the free part is never annihilated
  for (size_t i = 0; i < c.exps.size(); ++i)
    if (c.exps[i] != M.exponents[i]) return false;
  return true;
}

/// The submodule p^k M_p: co-exponents max(e_i - k, 0) on torsion, scale k
/// on the free part.
struct LocScalar {
  bool zero = false;  // zero ideal case
  int k = 0;
  std::vector<int> coexps;
  bool operator==(const LocScalar&) const = default;
};

LocScalar loc_scalar(const LocalizedModule& M, const LocalizedIdeal& I) {
  if (I.zero) return {true, 0, {}};
  LocScalar s;
  s.k = I.exponent;
  for (int e : M.exponents) s.coexps.push_back(std::max(e - I.exponent, 0));
  return s;
}

bool loc_scalar_is_zero(const LocScalar& s, const LocalizedModule& M) {
  if (s.zero) return true;
  if (M.free_rank > 0) return false;
  return std::all_of(s.coexps.begin(), s.coexps.end(),
                     [](int e) { return e == 0; });
}

bool loc_scalar_is_full(const LocScalar& s, const LocalizedModule& M) {
  if (s.zero) return M.free_rank == 0 && M.exponents.empty();
  if (s.k == 0) return true;  // unit ideal
  // p^k M = M only for the zero module
  return M.free_rank == 0 && M.exponents.empty();
}

bool loc_scalar_equal(const LocScalar& a, const LocScalar& b,
                      const LocalizedModule& M) {
  bool az = loc_scalar_is_zero(a, M), bz = loc_scalar_is_zero(b, M);
  if (az || bz) return az == bz;
  if (M.free_rank > 0 && a.k != b.k) return false;
  return a.coexps == b.coexps;
}

LocalizedIdeal loc_mul(const LocalizedIdeal& a, const LocalizedIdeal& b) {
  if (a.zero || b.zero) return {true, 0};
  return {false, a.exponent + b.exponent};
}

}  // namespace

Verdict localized_predicate(const LocalizedModule& M, PredicateKind kind,
                            const LocalizedIdeal& I,
                            const std::optional<LocalizedIdeal>& J) {
  if (!predicate_is_local(kind))
    fail(Errc::InvalidArgument, "localized evaluation needs a local kind");
  if (predicate_needs_pair(kind) && !J)
    fail(Errc::MissingSecondIdeal, predicate_name(kind));
  bool module_zero = M.free_rank == 0 && M.exponents.empty();

  auto verdict = [](bool ok, const std::string& ev) {
    Verdict v;
    v.holds = ok;
    v.evidence = ev;
    if (!ok) v.witness = Witness{{}, {}, ev};
    return v;
  };

  switch (kind) {
    case PredicateKind::IPrime: {
      LocColon c = loc_colon(M, I);
      if (loc_colon_is_zero(c, M)) return verdict(true, "(0 : I_p) = 0");
      if (loc_colon_is_full(c, M)) return verdict(true, "(0 : I_p) = M_p");
      return verdict(false, "(0 : I_p) is proper nonzero in M_p");
    }
    case PredicateKind::IJPrime: {
      LocColon cij = loc_colon(M, loc_mul(I, *J));
      LocColon ci = loc_colon(M, I);
      LocColon cj = loc_colon(M, *J);
      // compare extensionally: full colons equal the whole module
      auto eq = [&](const LocColon& a, const LocColon& b) {
        bool fa = loc_colon_is_full(a, M), fb = loc_colon_is_full(b, M);
        if (fa || fb) return fa == fb;
        return a.exps == b.exps;
      };
      if (eq(cij, ci)) return verdict(true, "(0 : I_p J_p) = (0 : I_p)");
      if (eq(cij, cj)) return verdict(true, "(0 : I_p J_p) = (0 : J_p)");
      return verdict(false, "(0 : I_p J_p) differs from both factors");
    }
    case PredicateKind::IReduced: {
      LocColon ci = loc_colon(M, I);
      LocColon ci2 = loc_colon(M, loc_mul(I, I));
      auto eq = [&](const LocColon& a, const LocColon& b) {
        bool fa = loc_colon_is_full(a, M), fb = loc_colon_is_full(b, M);
        if (fa || fb) return fa == fb;
        return a.exps == b.exps;
      };
      if (eq(ci, ci2)) return verdict(true, "(0 : I_p) = (0 : I_p^2)");
      return verdict(false, "(0 : I_p) != (0 : I_p^2)");
    }
    case PredicateKind::ICoprime: {
      LocScalar s = loc_scalar(M, I);
      if (loc_scalar_is_zero(s, M)) return verdict(true, "I_p M_p = 0");
      if (loc_scalar_is_full(s, M)) return verdict(true, "I_p M_p = M_p");
      return verdict(false, "I_p M_p is proper nonzero");
    }
    case PredicateKind::IJCoprime: {
      LocScalar sij = loc_scalar(M, loc_mul(I, *J));
      LocScalar si = loc_scalar(M, I);
      LocScalar sj = loc_scalar(M, *J);
      if (loc_scalar_equal(sij, si, M))
        return verdict(true, "I_p J_p M_p = I_p M_p");
      if (loc_scalar_equal(sij, sj, M))
        return verdict(true, "I_p J_p M_p = J_p M_p");
      return verdict(false, "I_p J_p M_p differs from both factors");
    }
    case PredicateKind::ICoreduced: {
      LocScalar si = loc_scalar(M, I);
      LocScalar si2 = loc_scalar(M, loc_mul(I, I));
      if (loc_scalar_equal(si, si2, M))
        return verdict(true, "I_p M_p = I_p^2 M_p");
      return verdict(false, "I_p M_p != I_p^2 M_p");
    }
    case PredicateKind::ITorsion: {
      if (I.zero) return verdict(true, "Gamma_0 = M_p");
      if (I.is_unit())
        return verdict(module_zero, "Gamma over the unit ideal is 0");
      return verdict(M.free_rank == 0,
                     M.free_rank == 0 ? "M_p is p-power torsion"
                                      : "free part is torsion-free");
    }
    case PredicateKind::IComplete: {
      if (I.zero) return verdict(true, "Lambda_0 = M_p");
      if (I.is_unit())
        return verdict(module_zero, "Lambda over the unit ideal is 0");
      return verdict(M.free_rank == 0,
                     M.free_rank == 0
                         ? "finite torsion is complete"
                         : "free part completes to the p-adics, not itself");
    }
    default:
      fail(Errc::InvalidArgument, "unreachable");
  }
}

Verdict predicate_on_localization(const PresentedModule& M, PredicateKind kind,
                                  const Ideal& I, const std::optional<Ideal>& J,
                                  const Element& p) {
  LocalizedModule LM = localize(M, p);
  LocalizedIdeal LI = localize_ideal(I, p);
  std::optional<LocalizedIdeal> LJ;
  if (J) LJ = localize_ideal(*J, p);
  return localized_predicate(LM, kind, LI, LJ);
}

}  // namespace fpm
