#include "adlv/qbg.hpp"
#include "oracle.hpp"

#include "doctest.h"

using namespace adlv;

namespace {

struct Fixture {
  RootSystem rs;
  GroupTable G;
  QuantumBruhatGraph q;
  oracle::Finite f;
  Fixture(CartanType t, int n)
      : rs(RootSystem::build(t, n)), G(GroupTable::enumerate(rs)), q(G), f(rs.cartan()) {}
  Index from_oracle(const oracle::Elt& e) const { return G.index_of(WeylElt(f.coweight_action(e), e.R)); }
};

std::vector<Int> as_key(const CorootVec& c) { return {c.coeffs.data(), c.coeffs.data() + c.size()}; }

}  // namespace

TEST_CASE("wt(w0) closed forms match the graph") {
  for (auto [t, n] : {std::pair{CartanType::A, 1}, std::pair{CartanType::A, 4}, std::pair{CartanType::B, 2},
                      std::pair{CartanType::B, 3}, std::pair{CartanType::B, 4}, std::pair{CartanType::C, 3},
                      std::pair{CartanType::C, 4}, std::pair{CartanType::D, 4}, std::pair{CartanType::G, 2},
                      std::pair{CartanType::F, 4}}) {
    Fixture fx(t, n);
    CAPTURE(fx.rs.name());
    CHECK(fx.q.wt1(fx.G.longest()) == wt_w0_closed_form(t, n));
  }
  CHECK(wt_w0_closed_form(CartanType::G, 2) == coroot_vec({2, 2}));
  CHECK(wt_w0_closed_form(CartanType::C, 3) == coroot_vec({1, 2, 3}));
  CHECK(wt_w0_closed_form(CartanType::F, 4) == coroot_vec({2, 6, 4, 2}));
}

TEST_CASE("distances and unique shortest-path weights against the oracle") {
  for (auto [t, n] : {std::pair{CartanType::A, 2}, std::pair{CartanType::B, 2}, std::pair{CartanType::G, 2},
                      std::pair{CartanType::A, 3}}) {
    Fixture fx(t, n);
    CAPTURE(fx.rs.name());
    oracle::Qbg oq(fx.f);
    for (std::size_t i = 0; i < oq.size(); ++i) {
      const Index x = fx.from_oracle(oq.element(static_cast<int>(i)));
      oracle::Qbg::Paths ref = oq.from(static_cast<int>(i));
      PathData p = fx.q.from(x);
      for (std::size_t j = 0; j < oq.size(); ++j) {
        const Index y = fx.from_oracle(oq.element(static_cast<int>(j)));
        CHECK(p.dist[y] == ref.dist[j]);
        REQUIRE(ref.weights[j].size() == 1);
        CHECK(as_key(p.weight[y]) == *ref.weights[j].begin());
      }
    }
  }
}

TEST_CASE("<rho, wt(x)> = (l(x) + l_down(x)) / 2 and RQRD witnesses") {
  for (auto [t, n] : {std::pair{CartanType::A, 3}, std::pair{CartanType::B, 3}, std::pair{CartanType::G, 2}}) {
    Fixture fx(t, n);
    for (Index x = 0; x < fx.G.size(); ++x) {
      // <rho, alpha_i^vee> = 1
      CHECK(2 * fx.q.wt1(x).coeffs.sum() == fx.G.length(x) + fx.q.ell_down(x));
      std::vector<RootVec> factors;
      for (int k : fx.q.rqrd(x)) factors.push_back(fx.rs.root(k));
      CHECK(static_cast<int>(factors.size()) == fx.q.ell_down(x));
      RqrdReport r = verify_rqrd(fx.rs, fx.G.element(x), factors, &fx.q);
      CHECK(r.valid);
    }
  }
}

TEST_CASE("wt(x, y) = wt(x^-1 <| y)") {
  Fixture fx(CartanType::B, 2);
  for (Index x = 0; x < fx.G.size(); ++x)
    for (Index y = 0; y < fx.G.size(); ++y)
      CHECK(fx.q.wt(x, y) == fx.q.wt1(demazure_ltri(fx.G, fx.G.inverse(x), y)));
}

TEST_CASE("monotonicity along Bruhat order") {
  Fixture fx(CartanType::A, 3);
  for (Index x = 0; x < fx.G.size(); ++x)
    for (Index y = 0; y < fx.G.size(); ++y)
      if (bruhat_leq(fx.G, x, y)) CHECK(dominance_leq(fx.rs, fx.q.wt1(x), fx.q.wt1(y)));
}

TEST_CASE("M is bounded by the tabulated value") {
  for (auto [t, n] : {std::pair{CartanType::A, 3}, std::pair{CartanType::C, 3}, std::pair{CartanType::G, 2}}) {
    Fixture fx(t, n);
    CHECK(compute_M(fx.q) <= m_tilde(t, n));
  }
  CHECK(m_tilde(CartanType::A, 4) == 5);
  CHECK(m_tilde(CartanType::E, 8) == 28);
  CHECK(ell_R_w0_table(CartanType::D, 5) == 4);
  CHECK(ell_R_w0_table(CartanType::A, 5) == 3);
}

TEST_CASE("tabulated w0 exhibits") {
  for (auto [t, n] : {std::pair{CartanType::A, 3}, std::pair{CartanType::C, 3}, std::pair{CartanType::G, 2},
                      std::pair{CartanType::F, 4}}) {
    Fixture fx(t, n);
    CAPTURE(fx.rs.name());
    std::vector<RootVec> ex = w0_exhibit(t, n);
    REQUIRE_FALSE(ex.empty());
    CHECK(verify_rqrd(fx.rs, longest_element(fx.rs), ex, &fx.q).valid);
  }
  CHECK(w0_exhibit(CartanType::B, 3).empty());
}

TEST_CASE("invalid decompositions are rejected") {
  Fixture fx(CartanType::G, 2);
  const WeylElt w0 = longest_element(fx.rs);
  // a1+a2 is short and not quantum
  RqrdReport r = verify_rqrd(fx.rs, reflection(fx.rs, root_vec({1, 1})), {root_vec({1, 1})});
  CHECK_FALSE(r.valid);
  CHECK_FALSE(r.reason.empty());
  CHECK_FALSE(verify_rqrd(fx.rs, w0, {root_vec({0, 1})}).valid);
}
