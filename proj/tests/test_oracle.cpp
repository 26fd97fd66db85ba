#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fpm/oracle.hpp"

using namespace fpm;

namespace {

RingContext z_ctx() { return make_context(RingKind::Integers, {}, {}); }
RingContext zn_ctx(long long n) {
  return make_context(RingKind::Integers, {}, Element::integer(n));
}
Element zi(long long n) { return Element::integer(n); }

Ideal zideal(const RingContext& ctx, long long n) {
  return ideal_from_generators(ctx, {zi(n)});
}

PresentedModule z_mod(std::vector<long long> factors) {
  auto ctx = z_ctx();
  int g = static_cast<int>(factors.size());
  std::vector<Vec> rows;
  for (size_t i = 0; i < factors.size(); ++i) {
    Vec row(g, zi(0));
    row[i] = zi(factors[i]);
    rows.push_back(row);
  }
  return present_rows(ctx, g, rows);
}

VecSet submodule_to_set(const Submodule& S, const Int& bound = 64) {
  VecSet out;
  for (const Vec& v : enumerate_elements(S.ambient(), bound))
    if (S.member(v)) out.insert(v);
  return out;
}

}  // namespace

TEST_CASE("structure recovery from annihilator counts") {
  // the recovered invariant factors match the presentation-level ones
  for (auto shape : std::vector<std::vector<long long>>{
           {6}, {2, 4}, {2, 2, 2}, {12}, {3, 9}, {}, {2, 6, 12}}) {
    auto M = z_mod(shape);
    auto st = oracle::structure_of_module(M, 4096);
    CHECK(st.invariants == M.invariants());
    CHECK(st.cardinality == *M.cardinality());
  }
  // polynomial side
  auto F2q = make_context(RingKind::PolynomialsOverPrimeField, 2,
                          BaseRing::polynomials(2).poly_from_coeffs({0, 0, 0, 1}));
  auto P = present_rows(F2q, 2, {{F2q.base.poly_from_coeffs({0, 1}),
                                  F2q.base.zero()}});
  auto stp = oracle::structure_of_module(P, 4096);
  CHECK(stp.invariants == P.invariants());
}

TEST_CASE("oracle annihilator pinned example") {
  auto ctx = zn_ctx(6);
  auto M = present_rows(ctx, 1, {});
  auto ann = oracle::annihilator_set(M, zideal(ctx, 3), 64);
  VecSet expected{{zi(0)}, {zi(2)}, {zi(4)}};
  CHECK(ann == expected);
}

TEST_CASE("oracle hom pinned example: Hom(Z/4, Z/6) has 2 maps") {
  auto hr = oracle::hom_maps(z_mod({4}), z_mod({6}), 36);
  CHECK(hr.map_count == Int(2));
  CHECK(hr.structure.invariants.torsion == std::vector<Element>{zi(2)});
}

TEST_CASE("oracle local predicate pinned example: 0-prime") {
  auto M = z_mod({6});
  auto v = oracle::local_predicate(M, PredicateKind::IPrime, zideal(z_ctx(), 0));
  CHECK(v.holds);
}

TEST_CASE("fast paths agree with the oracle on a structured sweep") {
  std::vector<RingContext> ctxs = {zn_ctx(4), zn_ctx(6), zn_ctx(12), z_ctx()};
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int iter = 0; iter < 120; ++iter) {
    const RingContext& ctx = ctxs[iter % ctxs.size()];
    // random small module, guaranteed finite
    int g = 1 + static_cast<int>(rng() % 2);
    std::vector<Vec> rows;
    for (int i = 0; i < g; ++i) {
      Vec row(g, zi(0));
      long long d = 1 + static_cast<long long>(rng() % 8);
      row[i] = zi(d);
      rows.push_back(row);
    }
    auto M = present_rows(ctx, g, rows);
    if (!M.cardinality() || *M.cardinality() > 64) continue;
    long long a = static_cast<long long>(rng() % 13);
    long long b = static_cast<long long>(rng() % 13);
    auto I = zideal(ctx, a);
    auto J = zideal(ctx, b);

    // submodule-valued operations
    CHECK(submodule_to_set(colon_submodule(M, zero_submodule(M), I)) ==
          oracle::annihilator_set(M, I, 64));
    CHECK(submodule_to_set(scalar_submodule(M, I)) == oracle::scalar_set(M, I, 64));
    CHECK(submodule_to_set(gamma(M, I)) == oracle::gamma_set(M, I, 64));

    // lambda
    auto L = lambda(M, I);
    REQUIRE(std::holds_alternative<PresentedModule>(L));
    auto lim = oracle::lambda_limit(M, I, 64);
    CHECK(std::get<PresentedModule>(L).invariants() == lim.structure.invariants);

    // predicates, all local kinds
    for (auto kind : {PredicateKind::IPrime, PredicateKind::IReduced,
                      PredicateKind::ICoprime, PredicateKind::ICoreduced,
                      PredicateKind::ITorsion, PredicateKind::IComplete}) {
      CHECK(local_predicate(M, kind, I).holds ==
            oracle::local_predicate(M, kind, I, {}, 64).holds);
    }
    for (auto kind : {PredicateKind::IJPrime, PredicateKind::IJCoprime}) {
      CHECK(local_predicate(M, kind, I, J).holds ==
            oracle::local_predicate(M, kind, I, J, 64).holds);
    }
    ++checked;
  }
  CHECK(checked > 60);
}

TEST_CASE("hom and tensor match the oracle under the 36-element bound") {
  std::mt19937_64 rng(77);
  int checked = 0;
  for (int iter = 0; iter < 60; ++iter) {
    std::vector<long long> fm, fn;
    int km = 1 + static_cast<int>(rng() % 2);
    int kn = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < km; ++i) fm.push_back(1 + static_cast<long long>(rng() % 6));
    for (int i = 0; i < kn; ++i) fn.push_back(1 + static_cast<long long>(rng() % 6));
    auto M = z_mod(fm);
    auto N = z_mod(fn);
    if (*M.cardinality() > 36 || *N.cardinality() > 36) continue;
    auto hr = oracle::hom_maps(M, N, 36);
    CHECK(hom_module(M, N).invariants() == hr.structure.invariants);
    CHECK(*hom_module(M, N).cardinality() == hr.map_count);
    auto tr = oracle::tensor_structure(M, N, 36);
    CHECK(tensor_module(M, N).invariants() == tr.invariants);
    ++checked;
  }
  CHECK(checked > 30);
}

TEST_CASE("hom/tensor oracle in quotient contexts") {
  auto ctx = zn_ctx(12);
  auto M = present_rows(ctx, 1, {{zi(4)}});   // Z/4 over Z/12
  auto N = present_rows(ctx, 1, {{zi(6)}});   // Z/6 over Z/12
  auto hr = oracle::hom_maps(M, N, 36);
  CHECK(hr.structure.invariants == hom_module(M, N).invariants());
  CHECK(hr.map_count == Int(2));  // gcd(4,6) = 2
  auto tr = oracle::tensor_structure(M, N, 36);
  CHECK(tr.invariants == tensor_module(M, N).invariants());
}

TEST_CASE("oracle global predicates over Z/6 and the elementwise variant") {
  auto ctx = zn_ctx(6);
  auto M = present_rows(ctx, 1, {});
  for (auto kind : {PredicateKind::Prime, PredicateKind::WeaklyPrime,
                    PredicateKind::Reduced, PredicateKind::Coprime,
                    PredicateKind::WeaklyCoprime, PredicateKind::Coreduced}) {
    CHECK(global_predicate(M, kind).holds ==
          oracle::global_predicate(M, kind, 64).holds);
  }
  // Prop global-cpm: elementwise and idealwise coprimeness agree
  CHECK(oracle::elementwise_coprime(M, 64).holds ==
        global_predicate(M, PredicateKind::Coprime).holds);
  auto M5 = present_rows(zn_ctx(5), 1, {});
  CHECK(oracle::elementwise_coprime(M5, 64).holds);
  CHECK(global_predicate(M5, PredicateKind::Coprime).holds);
}

TEST_CASE("lambda oracle stabilization bookkeeping") {
  auto M = z_mod({12});
  auto lim = oracle::lambda_limit(M, zideal(z_ctx(), 2), 64);
  CHECK(lim.stabilized_at == 2);  // 2M > 4M = 8M
  CHECK(lim.structure.invariants.torsion == std::vector<Element>{zi(4)});
  CHECK(lim.structure.cardinality == Int(4));
}

TEST_CASE("oracle error paths") {
  CHECK_THROWS_AS(oracle::elements_set(present_rows(z_ctx(), 1, {}), 64), Error);
  CHECK_THROWS_AS(oracle::structure_of_module(z_mod({100}), 64), Error);
  CHECK_THROWS_AS(oracle::global_predicate(z_mod({6}), PredicateKind::Prime, 64),
                  Error);
}

TEST_CASE("oracle_evaluate dispatch") {
  auto ctx = zn_ctx(6);
  auto M = present_rows(ctx, 1, {});
  oracle::Query q;
  q.target = oracle::Target::Annihilator;
  q.M = M;
  q.I = zideal(ctx, 3);
  auto res = oracle::evaluate(q);
  REQUIRE(std::holds_alternative<VecSet>(res));
  CHECK(std::get<VecSet>(res).size() == 3);

  q.target = oracle::Target::LocalPredicate;
  q.kind = PredicateKind::IPrime;
  auto res2 = oracle::evaluate(q);
  REQUIRE(std::holds_alternative<Verdict>(res2));
  CHECK(!std::get<Verdict>(res2).holds);
}
