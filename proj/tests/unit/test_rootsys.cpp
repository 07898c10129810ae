#include "adlv/root_system.hpp"
#include "oracle.hpp"

#include "doctest.h"

#include <set>
#include <utility>

using namespace adlv;

namespace {

std::vector<std::pair<CartanType, int>> all_types() {
  std::vector<std::pair<CartanType, int>> out;
  for (CartanType t : {CartanType::A, CartanType::B, CartanType::C, CartanType::D, CartanType::E, CartanType::F,
                       CartanType::G})
    for (int n = 1; n <= kMaxRank; ++n)
      if (is_valid_type(t, n)) out.push_back({t, n});
  return out;
}

std::set<std::vector<Int>> as_set(const std::vector<IntVec>& vs) {
  std::set<std::vector<Int>> s;
  for (const IntVec& v : vs) s.insert({v.data(), v.data() + v.size()});
  return s;
}

}  // namespace

TEST_CASE("Cartan matrices in Bourbaki labelling") {
  IntMat b2 = cartan_matrix(CartanType::B, 2);
  CHECK(b2(0, 1) == -1);
  CHECK(b2(1, 0) == -2);
  IntMat c2 = cartan_matrix(CartanType::C, 2);
  CHECK(c2(0, 1) == -2);
  CHECK(c2(1, 0) == -1);
  IntMat g2 = cartan_matrix(CartanType::G, 2);
  CHECK(g2(0, 1) == -3);
  CHECK(g2(1, 0) == -1);
  IntMat e6 = cartan_matrix(CartanType::E, 6);
  CHECK(e6(1, 3) == -1);  // alpha_2 attaches to alpha_4
  CHECK(e6(0, 2) == -1);
  CHECK(e6(1, 2) == 0);
}

TEST_CASE("type validation") {
  CHECK(parse_cartan_type("b") == CartanType::B);
  CHECK_THROWS_AS(parse_cartan_type("H"), std::invalid_argument);
  CHECK_FALSE(is_valid_type(CartanType::D, 3));
  CHECK_FALSE(is_valid_type(CartanType::E, 9));
  CHECK_FALSE(is_valid_type(CartanType::G, 3));
  std::string why;
  CHECK_FALSE(is_valid_type(CartanType::B, 1, &why));
  CHECK_FALSE(why.empty());
  CHECK(type_name(CartanType::F, 4) == "F4");
}

TEST_CASE("positive roots agree with the orbit oracle for every type up to rank 8") {
  for (auto [t, n] : all_types()) {
    CAPTURE(type_name(t, n));
    RootSystem rs = RootSystem::build(t, n);
    oracle::Finite f(rs.cartan());
    std::vector<IntVec> lib;
    for (const RootVec& r : rs.positive_roots()) lib.push_back(r.coeffs);
    CHECK(as_set(lib) == as_set(f.positive_roots()));
    CHECK(rs.num_positive() == classical_positive_count(t, n));
    CHECK(rs.theta().coeffs == f.theta());
    CHECK(rs.coxeter_number() == f.coxeter_number());
    for (int k = 0; k < rs.num_positive(); ++k) {
      CHECK(rs.coroot(k).coeffs == f.coroot_coords(rs.root(k).coeffs));
      CHECK(rs.coroot_pairing(k).coeffs == f.coroot_pairing(rs.root(k).coeffs));
      CHECK(rs.two_rho_on_coroot(k) == f.two_rho_on(rs.root(k).coeffs));
      CHECK(rs.root_index(rs.root(k)) == k);
    }
  }
}

TEST_CASE("Coxeter numbers") {
  CHECK(RootSystem::build(CartanType::A, 4).coxeter_number() == 5);
  CHECK(RootSystem::build(CartanType::B, 3).coxeter_number() == 6);
  CHECK(RootSystem::build(CartanType::D, 5).coxeter_number() == 8);
  CHECK(RootSystem::build(CartanType::E, 8).coxeter_number() == 30);
  CHECK(RootSystem::build(CartanType::F, 4).coxeter_number() == 12);
  CHECK(RootSystem::build(CartanType::G, 2).coxeter_number() == 6);
}

TEST_CASE("quantum roots: length criterion equals classification") {
  for (auto [t, n] : all_types()) {
    CAPTURE(type_name(t, n));
    RootSystem rs = RootSystem::build(t, n);
    CHECK(rs.quantum_flags() == quantum_by_classification(rs));
    for (int k = 0; k < rs.num_positive(); ++k)
      CHECK(rs.is_quantum(k) == (rs.reflection_length_of_root(k) == rs.two_rho_on_coroot(k) - 1));
  }
  // G2: the short simple root a1 is quantum, the other short roots are not.
  RootSystem g2 = RootSystem::build(CartanType::G, 2);
  CHECK(g2.is_quantum(g2.root_index(root_vec({1, 0}))));
  CHECK_FALSE(g2.is_quantum(g2.root_index(root_vec({1, 1}))));
  CHECK_FALSE(g2.is_quantum(g2.root_index(root_vec({2, 1}))));
  CHECK(quantum_roots(g2).size() == 4);
}

TEST_CASE("<theta, 2rho^v> for exceptional types") {
  auto th = [](CartanType t, int n) {
    RootSystem rs = RootSystem::build(t, n);
    return rs.pairing(rs.theta(), rs.two_rho_check());
  };
  CHECK(th(CartanType::E, 6) == 22);
  CHECK(th(CartanType::E, 7) == 34);
  CHECK(th(CartanType::E, 8) == 58);
  CHECK(th(CartanType::F, 4) == 22);
  CHECK(th(CartanType::G, 2) == 10);
  CHECK(th(CartanType::A, 5) == 10);
  CHECK(th(CartanType::D, 6) == 18);
}

TEST_CASE("coordinates and lattices") {
  RootSystem a1 = RootSystem::build(CartanType::A, 1);
  CHECK(lattice_of(a1, to_rational(int_coweight({2}))) == Lattice::Coroot);
  CHECK(lattice_of(a1, to_rational(int_coweight({1}))) == Lattice::Coweight);
  CHECK(lattice_of(a1, Coweight(make_vec<Rational>({Rational(1, 2)}))) == Lattice::Rational);
  RootSystem b2 = RootSystem::build(CartanType::B, 2);
  IntCoweight l = int_coweight({3, 5});
  CHECK(b2.to_pairing(b2.to_coroot_coords(to_rational(l))) == to_rational(l));
  CHECK_THROWS_AS(b2.to_coroot_lattice(int_coweight({1, 0})), std::invalid_argument);
  CHECK(b2.to_coroot_lattice(int_coweight({0, 2})) == coroot_vec({2, 2}));
  CHECK(b2.two_rho_pairing(int_coweight({1, 1})) == 7);
}

TEST_CASE("dominance, depth, regularity") {
  RootSystem a2 = RootSystem::build(CartanType::A, 2);
  CHECK(depth(int_coweight({3, 5})) == 3);
  CHECK(is_dominant(int_coweight({0, 2})));
  CHECK_FALSE(is_regular_dominant(int_coweight({0, 2})));
  CHECK_FALSE(is_dominant(int_coweight({-1, 2})));
  CHECK(dominance_leq(a2, to_rational(int_coweight({1, 1})), to_rational(int_coweight({2, 2}))));
  CHECK_FALSE(dominance_leq(a2, to_rational(int_coweight({4, 0})), to_rational(int_coweight({2, 2}))));
  CHECK(root_leq(root_vec({1, 0}), root_vec({1, 1})));
  CHECK(is_positive(root_vec({1, 1})));
  CHECK_FALSE(is_positive(root_vec({-1, -1})));
}

TEST_CASE("formatting") {
  CHECK(format_coroot(coroot_vec({2, 2})) == "2a1v+2a2v");
  CHECK(format_coroot(coroot_vec({0, 0})) == "0");
  CHECK(format_coroot(coroot_vec({1, -1})) == "a1v-a2v");
}
