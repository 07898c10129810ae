#include "adlv/newton.hpp"

#include "doctest.h"

using namespace adlv;

namespace {

Coweight cw(std::initializer_list<Int> xs) { return to_rational(int_coweight(xs)); }

}  // namespace

TEST_CASE("Newton points of simple elements") {
  RootSystem a2 = RootSystem::build(CartanType::A, 2);
  AffineWeylGroup g(a2, TranslationLattice::Coweight);
  const GroupTable& G = g.finite();
  CHECK(newton_point(g, g.translation(int_coweight({-2, 5}))).value == cw({2, 3}));
  for (Index x = 0; x < G.size(); ++x) CHECK(newton_point(g, g.finite_elt(x)).value == Coweight::zero(2));
  // A Coxeter element averages every translation to zero.
  const Index c = G.from_word({0, 1});
  CHECK(newton_point(g, g.make(int_coweight({3, 1}), c)).value == Coweight::zero(2));
  // t^lambda s1 with lambda on the s1-fixed line keeps its translation.
  CHECK(newton_point(g, g.make(int_coweight({0, 2}), G.from_word({0}))).value == cw({0, 2}));
}

TEST_CASE("Newton points are conjugation invariant") {
  RootSystem b2 = RootSystem::build(CartanType::B, 2);
  AffineWeylGroup g(b2, TranslationLattice::Coweight);
  const AffineElt w = g.make(int_coweight({3, -1}), g.finite().from_word({0, 1}));
  const NewtonPoint nu = newton_point(g, w);
  for (int i = 0; i <= 2; ++i) {
    AffineElt s = g.simple(i);
    CHECK(newton_point(g, g.multiply(g.multiply(s, w), s)) == nu);
  }
}

TEST_CASE("nu of t[8,8] w0 in A2") {
  RootSystem a2 = RootSystem::build(CartanType::A, 2);
  AffineWeylGroup g(a2, TranslationLattice::Coweight);
  QuantumBruhatGraph q(g.finite());
  const AffineElt w{int_coweight({8, 8}), g.finite().longest()};
  FormulaResult f = max_newton_formula(g, q, w);
  REQUIRE(f.status == FormulaStatus::Ok);
  CHECK(f.value.value == cw({7, 7}));
  CHECK(max_newton_brute(g, w) == f.value);
}

TEST_CASE("formula against brute force just above the threshold") {
  for (auto [t, n] : {std::pair{CartanType::A, 2}, std::pair{CartanType::B, 2}}) {
    RootSystem rs = RootSystem::build(t, n);
    AffineWeylGroup g(rs, TranslationLattice::Coweight);
    QuantumBruhatGraph q(g.finite());
    NewtonAverager avg(g);
    const int xi = xi_bound(t, n);
    const IntCoweight lam = int_coweight({xi + 1, xi + 2});
    for (Index x = 0; x < g.finite().size(); ++x) {
      const AffineElt w{lam, x};
      BruhatInterval I = lower_interval(g, w, 200);
      FormulaResult f = max_newton_formula(g, q, w);
      REQUIRE(f.status == FormulaStatus::Ok);
      CHECK(max_newton_over(avg, I) == f.value);
    }
  }
}

TEST_CASE("refusals") {
  RootSystem a2 = RootSystem::build(CartanType::A, 2);
  AffineWeylGroup g(a2, TranslationLattice::Coweight);
  QuantumBruhatGraph q(g.finite());
  const AffineElt low{int_coweight({7, 9}), 0};
  CHECK(max_newton_formula(g, q, low).status == FormulaStatus::BelowThreshold);  // depth 7 = Xi
  FormulaResult forced = max_newton_formula(g, q, low, true);
  CHECK(forced.status == FormulaStatus::BelowThreshold);
  CHECK(forced.value.value == cw({7, 9}));
  CHECK(max_newton_formula(g, q, {int_coweight({-1, 9}), 0}).status == FormulaStatus::NotDominant);
  CHECK(std::string(to_string(FormulaStatus::BelowThreshold)) != to_string(FormulaStatus::Ok));
}

TEST_CASE("u t^lambda v reduces to t^lambda (v <| u)") {
  RootSystem a2 = RootSystem::build(CartanType::A, 2);
  AffineWeylGroup g(a2, TranslationLattice::Coweight);
  const GroupTable& G = g.finite();
  QuantumBruhatGraph q(G);
  const IntCoweight lam = int_coweight({8, 9});
  for (Index u = 0; u < G.size(); ++u)
    for (Index v = 0; v < G.size(); ++v) {
      AffineElt w = g.multiply(g.multiply(g.finite_elt(u), g.translation(lam)), g.finite_elt(v));
      AffineElt r = reduce_to_dominant(g, u, lam, v);
      CHECK(max_newton_brute(g, w, 60) == max_newton_brute(g, r, 60));
      CHECK(max_newton_formula(g, q, u, lam, v).value == max_newton_formula(g, q, r).value);
    }
  CHECK_THROWS_AS(reduce_to_dominant(g, 0, int_coweight({0, 3}), 0), std::invalid_argument);
}

TEST_CASE("translation maximum equals the Newton maximum at large depth") {
  RootSystem a2 = RootSystem::build(CartanType::A, 2);
  AffineWeylGroup g(a2, TranslationLattice::Coweight);
  const AffineElt w{int_coweight({4, 5}), g.finite().longest()};
  CHECK(max_translation_below(g, w) == max_newton_brute(g, w));
}

TEST_CASE("bound tables") {
  CHECK(xi_bound(CartanType::A, 2) == 7);
  CHECK(xi_bound(CartanType::B, 2) == 10);
  CHECK(xi_bound(CartanType::D, 4) == 18);
  CHECK(xi_bound(CartanType::E, 7) == 33);
  CHECK(xi_bound(CartanType::G, 2) == 9);
  CHECK(s_bound(CartanType::C, 3) == 10);
  CHECK(s_bound(CartanType::E, 8) == 29);
}

TEST_CASE("averager scale") {
  RootSystem g2 = RootSystem::build(CartanType::G, 2);
  AffineWeylGroup g(g2, TranslationLattice::Coroot);
  NewtonAverager avg(g);
  CHECK(avg.scale() % 6 == 0);
  const AffineElt w{int_coweight({2, 3}), 0};
  CHECK(avg.unscale(avg.scaled(w)) == newton_point(g, w));
}
