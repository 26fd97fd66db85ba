// Acceptance suite: end-to-end checks with one pass/fail line per criterion.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "fpm/harness.hpp"

using namespace fpm;

namespace {

Element zi(long long n) { return Element::integer(n); }

RingContext z_ctx() { return make_context(RingKind::Integers, {}, {}); }
RingContext zn_ctx(long long n) {
  return make_context(RingKind::Integers, {}, zi(n));
}

PresentedModule diag_module(const RingContext& ctx,
                            const std::vector<Element>& factors,
                            int free_rank = 0) {
  int g = static_cast<int>(factors.size()) + free_rank;
  std::vector<Vec> rows;
  for (size_t i = 0; i < factors.size(); ++i) {
    Vec row(g, ctx.base.zero());
    row[i] = factors[i];
    rows.push_back(row);
  }
  return present_rows(ctx, g, rows);
}

/// All divisibility chains d_1 | d_2 | ... of non-units with bounded
/// cardinality product; includes the empty chain (the zero module).
void chains_upto(const BaseRing& R, const Int& bound,
                 const std::vector<Element>& atoms, std::vector<Element>& cur,
                 Int size, std::vector<std::vector<Element>>& out) {
  out.push_back(cur);
  const Element last = cur.empty() ? R.one() : cur.back();
  for (const Element& a : atoms) {
    Element next = cur.empty() ? a : R.canonical(R.mul(last, a));
    Int ns = size * R.residue_count(next);
    if (ns > bound) continue;
    cur.push_back(next);
    chains_upto(R, bound, atoms, cur, ns, out);
    cur.pop_back();
  }
}

std::vector<PresentedModule> sweep_modules(const RingContext& ctx, const Int& bound) {
  const BaseRing& R = ctx.base;
  std::vector<Element> atoms;
  if (R.kind() == RingKind::Integers) {
    for (long long v = 2; v <= 16; ++v) atoms.push_back(zi(v));
  } else {
    // monic non-units of degree 1..2
    std::int64_t p = R.characteristic();
    for (int deg = 1; deg <= 2; ++deg) {
      std::vector<std::int64_t> c(deg + 1, 0);
      c[deg] = 1;
      while (true) {
        atoms.push_back(R.poly_from_coeffs(c));
        int i = 0;
        while (i < deg && c[i] == p - 1) { c[i] = 0; ++i; }
        if (i == deg) break;
        ++c[i];
      }
    }
  }
  std::vector<std::vector<Element>> chains;
  std::vector<Element> cur;
  chains_upto(R, bound, atoms, cur, 1, chains);
  std::vector<PresentedModule> out;
  for (const auto& chain : chains) out.push_back(diag_module(ctx, chain));
  return out;
}

std::vector<Ideal> sweep_ideals(const RingContext& ctx, const PresentedModule& M) {
  if (ctx.is_quotient()) return enumerate_ideals(ctx);
  Element exponent = M.invariants().torsion.empty()
                         ? ctx.base.one()
                         : M.invariants().torsion.back();
  auto set = reduction_ideals(ctx, exponent);
  set.push_back(ideal_from_generators(ctx, {ctx.base.from_int(2)}));
  set.push_back(ideal_from_generators(ctx, {ctx.base.from_int(3)}));
  return set;
}

VecSet submodule_to_set(const Submodule& S, const Int& bound) {
  VecSet out;
  for (const Vec& v : enumerate_elements(S.ambient(), bound))
    if (S.member(v)) out.insert(v);
  return out;
}

struct Check {
  int failures = 0;
  std::string first_failure;
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      if (first_failure.empty()) first_failure = what;
    }
  }
};

// --------------------------------------------------------------------------
// criterion bodies

bool crit_pinned_examples(std::string& detail) {
  CampaignConfig cfg;
  cfg.law = "pinned_examples";
  cfg.case_count = 1;
  Report rep = run_campaign(cfg);
  std::ostringstream os;
  os << rep.cases_run << " pinned assertions, " << rep.violations.size()
     << " mismatches";
  if (!rep.pass()) os << "; first: " << rep.violations[0].case_desc;
  detail = os.str();
  return rep.pass();
}

bool crit_chart_campaigns(std::string& detail) {
  const std::vector<std::vector<std::string>> families = {
      {"Z"}, {"Z/4", "Z/6", "Z/12"}, {"F2"}, {"F2/0.0.1", "F2/0.1.0.1", "F3/0.0.1"}};
  auto family_ctx = [](const std::string& token) {
    if (token == "Z") return make_context(RingKind::Integers, {}, {});
    if (token == "Z/4") return zn_ctx(4);
    if (token == "Z/6") return zn_ctx(6);
    if (token == "Z/12") return zn_ctx(12);
    if (token == "F2")
      return make_context(RingKind::PolynomialsOverPrimeField, 2, {});
    BaseRing F2 = BaseRing::polynomials(2);
    BaseRing F3 = BaseRing::polynomials(3);
    if (token == "F2/0.0.1")
      return make_context(RingKind::PolynomialsOverPrimeField, 2,
                          F2.poly_from_coeffs({0, 0, 1}));
    if (token == "F2/0.1.0.1")
      return make_context(RingKind::PolynomialsOverPrimeField, 2,
                          F2.poly_from_coeffs({0, 1, 0, 1}));
    return make_context(RingKind::PolynomialsOverPrimeField, 3,
                        F3.poly_from_coeffs({0, 0, 1}));
  };
  int total_cases = 0, total_violations = 0;
  for (const char* law : {"chart_prime", "chart_coprime"}) {
    for (size_t f = 0; f < families.size(); ++f) {
      CampaignConfig cfg;
      cfg.law = law;
      cfg.seed = 10 + f;
      cfg.case_count = 501;  // case 0 is the exhaustive Z/n sweep
      for (const auto& token : families[f]) cfg.contexts.push_back(family_ctx(token));
      Report rep = run_campaign(cfg);
      total_cases += rep.cases_run;
      total_violations += static_cast<int>(rep.violations.size());
      if (!rep.pass() && detail.empty())
        detail = std::string(law) + ": " + rep.violations[0].case_desc;
    }
  }
  std::ostringstream os;
  os << total_cases << " cases across 4 context families per chart, "
     << total_violations << " violations";
  if (detail.empty()) detail = os.str();
  return total_violations == 0;
}

bool crit_gm_adjunction(std::string& detail) {
  CampaignConfig cfg;
  cfg.law = "gm_adjunction";
  cfg.seed = 3;
  cfg.case_count = 200;  // every case is hypothesis-satisfying by construction
  Report rep = run_campaign(cfg);
  std::ostringstream os;
  os << rep.cases_run << " hypothesis-satisfying cases, "
     << rep.violations.size() << " violations";
  if (!rep.pass()) os << "; first: " << rep.violations[0].case_desc;
  detail = os.str();
  return rep.pass();
}

bool crit_mgm_equivalence(std::string& detail) {
  CampaignConfig cfg;
  cfg.law = "mgm_equivalence";
  cfg.seed = 4;
  cfg.case_count = 500;
  Report rep = run_campaign(cfg);
  std::ostringstream os;
  os << rep.cases_run << " cases, " << rep.violations.size() << " violations";
  if (!rep.pass()) os << "; first: " << rep.violations[0].case_desc;
  detail = os.str();
  return rep.pass();
}

bool crit_oracle_equivalence(std::string& detail) {
  Check chk;
  const Int bound = 64, ht_bound = 36;
  int comparisons = 0;

  std::vector<RingContext> ctxs = {
      z_ctx(), zn_ctx(4), zn_ctx(6), zn_ctx(12),
      make_context(RingKind::PolynomialsOverPrimeField, 2, {}),
      make_context(RingKind::PolynomialsOverPrimeField, 2,
                   BaseRing::polynomials(2).poly_from_coeffs({0, 0, 1}))};

  auto compare_case = [&](const PresentedModule& M, const Ideal& I,
                          const Ideal& J) {
    const RingContext& ctx = M.context();
    chk.expect(submodule_to_set(colon_submodule(M, zero_submodule(M), I), bound) ==
                   oracle::annihilator_set(M, I, bound),
               "annihilator mismatch on " + ctx.to_string());
    chk.expect(submodule_to_set(scalar_submodule(M, I), bound) ==
                   oracle::scalar_set(M, I, bound),
               "scalar submodule mismatch on " + ctx.to_string());
    chk.expect(submodule_to_set(gamma(M, I), bound) ==
                   oracle::gamma_set(M, I, bound),
               "gamma mismatch on " + ctx.to_string());
    auto L = lambda(M, I);
    chk.expect(std::holds_alternative<PresentedModule>(L),
               "lambda not representable on a finite module");
    if (std::holds_alternative<PresentedModule>(L))
      chk.expect(std::get<PresentedModule>(L).invariants() ==
                     oracle::lambda_limit(M, I, bound).structure.invariants,
                 "lambda mismatch on " + ctx.to_string());
    comparisons += 4;
    for (auto kind : {PredicateKind::IPrime, PredicateKind::IReduced,
                      PredicateKind::ICoprime, PredicateKind::ICoreduced,
                      PredicateKind::ITorsion, PredicateKind::IComplete}) {
      chk.expect(local_predicate(M, kind, I).holds ==
                     oracle::local_predicate(M, kind, I, {}, bound).holds,
                 std::string("predicate mismatch: ") + predicate_name(kind));
      ++comparisons;
    }
    for (auto kind : {PredicateKind::IJPrime, PredicateKind::IJCoprime}) {
      chk.expect(local_predicate(M, kind, I, J).holds ==
                     oracle::local_predicate(M, kind, I, J, bound).holds,
                 std::string("predicate mismatch: ") + predicate_name(kind));
      ++comparisons;
    }
  };

  // (a) exhaustive small sweep
  for (const RingContext& ctx : ctxs) {
    auto modules = sweep_modules(ctx, 16);
    for (const auto& M : modules) {
      auto ideals = sweep_ideals(ctx, M);
      for (size_t i = 0; i < ideals.size(); ++i)
        compare_case(M, ideals[i], ideals[(i + 1) % ideals.size()]);
      if (ctx.is_quotient()) {
        for (auto kind : {PredicateKind::Prime, PredicateKind::WeaklyPrime,
                          PredicateKind::Reduced, PredicateKind::Coprime,
                          PredicateKind::WeaklyCoprime, PredicateKind::Coreduced}) {
          chk.expect(global_predicate(M, kind).holds ==
                         oracle::global_predicate(M, kind, bound).holds,
                     std::string("global mismatch: ") + predicate_name(kind));
          ++comparisons;
        }
        chk.expect(oracle::elementwise_coprime(M, bound).holds ==
                       global_predicate(M, PredicateKind::Coprime).holds,
                   "elementwise vs idealwise coprime mismatch");
        ++comparisons;
      }
    }
    // hom/tensor pairs from the sweep (<= 36 elements each)
    for (size_t a = 0; a < modules.size(); ++a)
      for (size_t b = 0; b < modules.size(); ++b) {
        const auto& M = modules[a];
        const auto& N = modules[b];
        if (!M.cardinality() || !N.cardinality()) continue;
        if (*M.cardinality() > ht_bound || *N.cardinality() > ht_bound) continue;
        auto hr = oracle::hom_maps(M, N, ht_bound);
        chk.expect(hom_module(M, N).invariants() == hr.structure.invariants,
                   "hom mismatch on " + ctx.to_string());
        chk.expect(*hom_module(M, N).cardinality() == hr.map_count,
                   "hom count mismatch on " + ctx.to_string());
        chk.expect(tensor_module(M, N).invariants() ==
                       oracle::tensor_structure(M, N, ht_bound).invariants,
                   "tensor mismatch on " + ctx.to_string());
        comparisons += 3;
      }
  }

  // (b) 1000 random cases
  Rng rng(2025);
  SizeProfile profile;
  profile.max_generators = 3;
  profile.max_entry = 10;
  profile.max_degree = 2;
  for (int iter = 0; iter < 1000; ++iter) {
    const RingContext& ctx = ctxs[iter % ctxs.size()];
    PresentedModule M = generate_finite_module(rng, profile, ctx);
    int guard = 0;
    while ((!M.cardinality() || *M.cardinality() > bound) && guard++ < 30)
      M = generate_finite_module(rng, profile, ctx);
    if (!M.cardinality() || *M.cardinality() > bound)
      M = diag_module(ctx, {ctx.base.from_int(2)});
    Ideal I = generate_ideal(rng, profile, ctx, &M);
    Ideal J = generate_ideal(rng, profile, ctx, &M);
    compare_case(M, I, J);
    if (*M.cardinality() <= ht_bound && M.generators() <= 3) {
      PresentedModule N = generate_finite_module(rng, profile, ctx);
      if (N.cardinality() && *N.cardinality() <= ht_bound) {
        auto hr = oracle::hom_maps(M, N, ht_bound);
        chk.expect(hom_module(M, N).invariants() == hr.structure.invariants,
                   "random hom mismatch");
        chk.expect(tensor_module(M, N).invariants() ==
                       oracle::tensor_structure(M, N, ht_bound).invariants,
                   "random tensor mismatch");
        comparisons += 2;
      }
    }
  }

  std::ostringstream os;
  os << comparisons << " oracle comparisons, " << chk.failures << " mismatches";
  if (chk.failures > 0) os << "; first: " << chk.first_failure;
  detail = os.str();
  return chk.failures == 0;
}

bool crit_closure_campaigns(std::string& detail) {
  int total_violations = 0, total_cases = 0;
  for (const char* law :
       {"closure_sub", "closure_img", "closure_loc", "functor_images",
        "ann_prime", "torsion_criterion", "elementwise_coprime"}) {
    CampaignConfig cfg;
    cfg.law = law;
    cfg.seed = 6;
    cfg.case_count = 300;
    Report rep = run_campaign(cfg);
    total_cases += rep.cases_run;
    total_violations += static_cast<int>(rep.violations.size());
    if (!rep.pass() && detail.empty())
      detail = std::string(law) + ": " + rep.violations[0].case_desc;
  }
  std::ostringstream os;
  os << total_cases << " cases over 7 closure laws, " << total_violations
     << " violations";
  if (detail.empty()) detail = os.str();
  return total_violations == 0;
}

bool crit_linear_algebra(std::string& detail) {
  Check chk;
  Rng rng(8);
  auto random_matrix = [&](const BaseRing& R) {
    int m = static_cast<int>(rng.range(0, 8));
    int n = static_cast<int>(rng.range(0, 8));
    Matrix A(R, m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) {
        if (R.kind() == RingKind::Integers) {
          A.at(i, j) = zi(rng.range(-50, 50));
        } else {
          int deg = static_cast<int>(rng.range(0, 4));
          std::vector<std::int64_t> c(deg + 1);
          for (auto& x : c) x = rng.range(0, R.characteristic() - 1);
          A.at(i, j) = R.poly_from_coeffs(c);
        }
      }
    return A;
  };
  int checked = 0;
  for (const BaseRing& R : {BaseRing::integers(), BaseRing::polynomials(2),
                            BaseRing::polynomials(5)}) {
    for (int iter = 0; iter < 1000; ++iter) {
      Matrix A = random_matrix(R);
      auto snf = smith_normal_form(A);
      chk.expect(snf.U.mul(A).mul(snf.V) == snf.D, "U*A*V != D");
      chk.expect(R.is_unit(determinant(snf.U)), "det U not a unit");
      chk.expect(R.is_unit(determinant(snf.V)), "det V not a unit");
      bool chain = true;
      int nmin = std::min(snf.D.rows(), snf.D.cols());
      for (int i = 0; i + 1 < nmin; ++i) {
        const Element& a = snf.D.at(i, i);
        const Element& b = snf.D.at(i + 1, i + 1);
        if (R.is_zero(a) && !R.is_zero(b)) chain = false;
        else if (!R.is_zero(a) && !R.divides(a, b)) chain = false;
      }
      for (int i = 0; i < snf.D.rows(); ++i)
        for (int j = 0; j < snf.D.cols(); ++j)
          if (i != j && !R.is_zero(snf.D.at(i, j))) chain = false;
      chk.expect(chain, "divisibility chain violated");
      ++checked;
    }
  }
  std::ostringstream os;
  os << checked << " random matrices over 3 base rings, " << chk.failures
     << " failures";
  if (chk.failures > 0) os << "; first: " << chk.first_failure;
  detail = os.str();
  return chk.failures == 0;
}

bool crit_lambda_contract(std::string& detail) {
  Check chk;
  // Lambda_(2)(Z) is not representable
  auto Z = present_rows(z_ctx(), 1, {});
  auto L = lambda(Z, ideal_from_generators(z_ctx(), {zi(2)}));
  chk.expect(std::holds_alternative<NotRepresentable>(L),
             "Lambda_(2)(Z) should be NotRepresentable");

  // Lambda on every finite sweep module succeeds and equals the oracle limit
  int count = 0;
  for (const RingContext& ctx :
       {z_ctx(), zn_ctx(6), zn_ctx(12),
        make_context(RingKind::PolynomialsOverPrimeField, 2,
                     BaseRing::polynomials(2).poly_from_coeffs({0, 0, 1}))}) {
    for (const auto& M : sweep_modules(ctx, 16)) {
      for (const Ideal& I : sweep_ideals(ctx, M)) {
        auto LM = lambda(M, I);
        chk.expect(std::holds_alternative<PresentedModule>(LM),
                   "finite module completion must be representable");
        if (std::holds_alternative<PresentedModule>(LM)) {
          auto lim = oracle::lambda_limit(M, I, 64);
          chk.expect(std::get<PresentedModule>(LM).invariants() ==
                         lim.structure.invariants,
                     "completion differs from the oracle inverse limit");
        }
        ++count;
      }
    }
  }
  std::ostringstream os;
  os << count << " finite completions checked against the inverse limit, "
     << chk.failures << " failures";
  if (chk.failures > 0) os << "; first: " << chk.first_failure;
  detail = os.str();
  return chk.failures == 0;
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "pinned paper examples", 1.0, crit_pinned_examples},
      {2, "chart campaigns (exhaustive sweep + 500 random per family)", 60.0,
       crit_chart_campaigns},
      {3, "GM adjunction on >= 200 hypothesis-satisfying cases", 30.0,
       crit_gm_adjunction},
      {4, "MGM five-way equivalence on >= 500 cases", 60.0,
       crit_mgm_equivalence},
      {5, "oracle equivalence (exhaustive sweep + 1000 random)", 120.0,
       crit_oracle_equivalence},
      {6, "closure campaigns (7 laws x 300 cases)", 60.0,
       crit_closure_campaigns},
      {7, "smith decomposition invariants (1000 matrices per ring)", 30.0,
       crit_linear_algebra},
      {8, "lambda representability contract", 120.0, crit_lambda_contract},
  };

  int failed = 0;
  for (auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (secs > c.budget_seconds) {
      ok = false;
      detail += " [over budget " + std::to_string(c.budget_seconds) + " s]";
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << ": "
              << c.name << " — " << detail << " (" << std::fixed
              << std::setprecision(2) << secs << " s)\n";
    if (!ok) ++failed;
  }
  if (failed) {
    std::cout << failed << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
