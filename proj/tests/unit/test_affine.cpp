#include "adlv/affine.hpp"
#include "oracle.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

using namespace adlv;

namespace {

struct Fixture {
  RootSystem rs;
  AffineWeylGroup g;
  oracle::Finite f;
  oracle::Affine a;
  Fixture(CartanType t, int n, TranslationLattice lat = TranslationLattice::Coweight)
      : rs(RootSystem::build(t, n)), g(rs, lat), f(rs.cartan()), a(f) {}

  AffineElt random(std::mt19937_64& rng, int letters) const {
    std::uniform_int_distribution<int> pick(0, rs.rank());
    AffineElt w = g.identity();
    for (int k = 0; k < letters; ++k) w = g.multiply(w, g.simple(pick(rng)));
    if (g.lattice() == TranslationLattice::Coweight) {
      std::uniform_int_distribution<int> c(-1, 1);
      IntCoweight l = IntCoweight::zero(rs.rank());
      for (int i = 0; i < rs.rank(); ++i) l[i] = c(rng);
      w = g.multiply(w, g.translation(l));
    }
    return w;
  }
};

}  // namespace

TEST_CASE("simple reflections") {
  Fixture fx(CartanType::B, 2);
  AffineElt s0 = fx.g.simple(0);
  CHECK(s0.lambda == fx.g.theta_check());
  CHECK(fx.g.length(s0) == 1);
  for (int i = 0; i <= 2; ++i) {
    CHECK(fx.g.multiply(fx.g.simple(i), fx.g.simple(i)) == fx.g.identity());
    CHECK(fx.g.length(fx.g.simple(i)) == 1);
  }
}

TEST_CASE("translation lattice is enforced") {
  RootSystem a1 = RootSystem::build(CartanType::A, 1);
  AffineWeylGroup q(a1, TranslationLattice::Coroot);
  CHECK_THROWS_AS(q.translation(int_coweight({1})), std::invalid_argument);
  CHECK(q.length(q.translation(int_coweight({2}))) == 2);
  AffineWeylGroup p(a1, TranslationLattice::Coweight);
  AffineElt t1 = p.translation(int_coweight({1}));
  CHECK(p.length(t1) == 1);
  CHECK(p.length(p.make(int_coweight({1}), 1)) == 0);
}

TEST_CASE("length agrees with separating hyperplanes and the oracle") {
  std::mt19937_64 rng(7);
  for (auto [t, n] : {std::pair{CartanType::A, 2}, std::pair{CartanType::B, 2}, std::pair{CartanType::G, 2},
                      std::pair{CartanType::A, 3}, std::pair{CartanType::C, 3}}) {
    Fixture fx(t, n);
    CAPTURE(fx.rs.name());
    for (int k = 0; k < 150; ++k) {
      AffineElt w = fx.random(rng, 1 + k % 12);
      const int l = fx.g.length(w);
      CHECK(l == geometric_length(fx.g, w));
      CHECK(l == fx.a.length(fx.a.from_library(fx.g, w)));
      CHECK(l == fx.g.length(fx.g.inverse(w)));
      AffineWord word = reduced_word(fx.g, w);
      CHECK(static_cast<int>(word.letters.size()) == l);
      CHECK(fx.g.length(word.omega) == 0);
      CHECK(fx.g.multiply(from_word(fx.g, word.letters), word.omega) == w);
      for (int i = 0; i <= n; ++i) {
        CHECK(fx.g.is_left_descent(i, w) == (fx.g.length(fx.g.left_mul(i, w)) < l));
        CHECK(fx.g.is_right_descent(w, i) == (fx.g.length(fx.g.right_mul(w, i)) < l));
      }
    }
  }
}

TEST_CASE("translation lengths") {
  Fixture fx(CartanType::A, 2);
  // l(t^lambda) = <2rho, lambda> for dominant lambda.
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      IntCoweight l = int_coweight({a, b});
      CHECK(fx.g.length(fx.g.translation(l)) == fx.rs.two_rho_pairing(l));
    }
}

TEST_CASE("multiplication is associative and inverses cancel") {
  std::mt19937_64 rng(11);
  Fixture fx(CartanType::G, 2);
  for (int k = 0; k < 100; ++k) {
    AffineElt x = fx.random(rng, 5), y = fx.random(rng, 5), z = fx.random(rng, 5);
    CHECK(fx.g.multiply(fx.g.multiply(x, y), z) == fx.g.multiply(x, fx.g.multiply(y, z)));
    CHECK(fx.g.multiply(x, fx.g.inverse(x)) == fx.g.identity());
    CHECK(fx.g.unpack(fx.g.pack(x)) == x);
  }
}

TEST_CASE("Omega in the extended group of A2") {
  Fixture fx(CartanType::A, 2);
  std::set<std::vector<Int>> classes;
  int zero_length = 0;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (Index x = 0; x < fx.g.finite().size(); ++x) {
        AffineElt w{int_coweight({a, b}), x};
        IntVec o = fx.g.omega(w);
        classes.insert({o.data(), o.data() + o.size()});
        if (fx.g.length(w) == 0) ++zero_length;
      }
  CHECK(classes.size() == 3);
  CHECK(zero_length == 3);
}

TEST_CASE("lower intervals and cocovers agree with subword enumeration") {
  std::mt19937_64 rng(3);
  for (auto [t, n] : {std::pair{CartanType::A, 2}, std::pair{CartanType::B, 2}, std::pair{CartanType::G, 2}}) {
    Fixture fx(t, n);
    for (int k = 0; k < 25; ++k) {
      AffineElt w = fx.random(rng, 1 + k % 7);
      BruhatInterval I = lower_interval(fx.g, w);
      std::vector<oracle::AElt> ref = fx.a.lower_set(fx.a.from_library(fx.g, w));
      REQUIRE(I.members.size() == ref.size());
      std::vector<AffineElt> cov;
      for (const oracle::AElt& u : ref) {
        AffineElt lu = fx.a.to_library(fx.g, u);
        CHECK(I.contains(fx.g, lu));
        CHECK(bruhat_leq(fx.g, lu, w));
        if (fx.a.length(u) == fx.g.length(w) - 1) cov.push_back(lu);
      }
      std::sort(cov.begin(), cov.end());
      CHECK(cocovers(fx.g, w) == cov);
    }
  }
}

TEST_CASE("Bruhat order separates components of Omega") {
  Fixture fx(CartanType::A, 1);
  AffineElt t1 = fx.g.translation(int_coweight({1}));
  CHECK_FALSE(bruhat_leq(fx.g, fx.g.identity(), t1));
  CHECK(bruhat_leq(fx.g, fx.g.make(int_coweight({1}), 1), t1));
}

TEST_CASE("interval budget") {
  Fixture fx(CartanType::A, 2);
  CHECK_THROWS_AS(lower_interval(fx.g, fx.g.translation(int_coweight({9, 9})), 10), BudgetExceeded);
}

TEST_CASE("affine Demazure products against brute extremes") {
  std::mt19937_64 rng(5);
  Fixture fx(CartanType::A, 2);
  for (int k = 0; k < 40; ++k) {
    AffineElt x = fx.random(rng, 1 + k % 4), y = fx.random(rng, 1 + (k / 4) % 4);
    oracle::AElt ox = fx.a.from_library(fx.g, x), oy = fx.a.from_library(fx.g, y);
    CHECK(demazure_star(fx.g, x, y) == fx.a.to_library(fx.g, fx.a.star(ox, oy)));
    CHECK(demazure_rtri(fx.g, x, y) == fx.a.to_library(fx.g, fx.a.rtri(ox, oy)));
    CHECK(demazure_ltri(fx.g, x, y) == fx.a.to_library(fx.g, fx.a.ltri(ox, oy)));
  }
}

TEST_CASE("formatting") {
  Fixture fx(CartanType::A, 2);
  CHECK(format_affine(fx.g, fx.g.identity()) == "e");
  CHECK(format_affine(fx.g, fx.g.translation(int_coweight({2, 2}))) == "t[2,2]");
  CHECK(format_affine(fx.g, fx.g.simple(1)) == "s1");
  CHECK(format_affine_word({0, 1}) == "s0s1");
}
