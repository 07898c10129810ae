#pragma once

#include "adlv/lattice.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace adlv {

enum class CartanType { A, B, C, D, E, F, G };

char type_letter(CartanType t);
CartanType parse_cartan_type(const std::string& s);  // "A".."G", case-insensitive
bool is_valid_type(CartanType t, int rank, std::string* reason = nullptr);
bool is_simply_laced(CartanType t);
std::string type_name(CartanType t, int rank);  // e.g. "B4"

// Which lattice a coweight lies in: coroot lattice, coweight lattice, or only rational.
enum class Lattice { Coroot, Coweight, Rational };

// An irreducible root system in Bourbaki labelling.
// Cartan convention: cartan()(i, j) = <alpha_j, alpha_i^vee>.
class RootSystem {
 public:
  static RootSystem build(CartanType type, int rank);

  CartanType type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const { return type_name(type_, rank_); }
  const IntMat& cartan() const { return cartan_; }
  const RatMat& cartan_inverse_transpose() const { return cartan_inv_t_; }

  int num_positive() const { return static_cast<int>(roots_.size()); }
  const std::vector<RootVec>& positive_roots() const { return roots_; }
  const std::vector<CorootVec>& positive_coroots() const { return coroots_; }
  const RootVec& root(int k) const { return roots_[k]; }
  const CorootVec& coroot(int k) const { return coroots_[k]; }
  // Pairing coordinates of the coroot of root k.
  const IntCoweight& coroot_pairing(int k) const { return coroot_pairing_[k]; }
  // Index of a positive root, or -1.
  int root_index(const RootVec& beta) const;
  int simple_index(int i) const { return simple_index_[i]; }
  int height(int k) const { return heights_[k]; }
  bool is_long(int k) const { return long_[k]; }
  bool is_quantum(int k) const { return quantum_[k]; }
  const std::vector<bool>& quantum_flags() const { return quantum_; }
  // |Inv(s_beta)| for root k.
  int reflection_length_of_root(int k) const { return refl_len_[k]; }
  // <2 rho, beta^vee> for root k.
  Int two_rho_on_coroot(int k) const { return two_rho_coroot_[k]; }

  const std::vector<Int>& symmetrizer() const { return sym_; }

  int theta_index() const { return theta_index_; }
  const RootVec& theta() const { return roots_[theta_index_]; }
  RootVec two_rho() const { return two_rho_; }
  CorootVec two_rho_check() const { return two_rho_check_; }
  int coxeter_number() const { return heights_[theta_index_] + 1; }

  // Coordinate changes.
  IntCoweight to_pairing(const CorootVec& c) const;
  Coweight to_pairing(const RatCorootVec& c) const;
  RatCorootVec to_coroot_coords(const Coweight& lambda) const;
  // Integral coroot coordinates; throws std::invalid_argument if lambda is not in Q^vee.
  CorootVec to_coroot_lattice(const IntCoweight& lambda) const;
  bool in_coroot_lattice(const IntCoweight& lambda) const;

  // Canonical pairings.
  Int pairing(const RootVec& beta, const IntCoweight& lambda) const;
  Rational pairing(const RootVec& beta, const Coweight& lambda) const;
  Int pairing(const RootVec& beta, const CorootVec& gamma) const;
  // <rho, lambda> and <2 rho, lambda>.
  Rational rho_pairing(const Coweight& lambda) const;
  Int two_rho_pairing(const IntCoweight& lambda) const;

 private:
  CartanType type_ = CartanType::A;
  int rank_ = 0;
  IntMat cartan_;
  RatMat cartan_inv_t_;
  std::vector<Int> sym_;
  std::vector<RootVec> roots_;
  std::vector<CorootVec> coroots_;
  std::vector<IntCoweight> coroot_pairing_;
  std::vector<int> heights_;
  std::vector<int> simple_index_;
  std::vector<bool> long_;
  std::vector<bool> quantum_;
  std::vector<int> refl_len_;
  std::vector<Int> two_rho_coroot_;
  std::unordered_map<RootVec, int, CoordsHash<RootBasis, Int>> index_;
  int theta_index_ = 0;
  RootVec two_rho_;
  CorootVec two_rho_check_;
};

IntMat cartan_matrix(CartanType type, int rank);
// Classical number of positive roots.
int classical_positive_count(CartanType type, int rank);

Rational depth(const Coweight& lambda);
Int depth(const IntCoweight& lambda);
bool is_dominant(const Coweight& lambda);
bool is_dominant(const IntCoweight& lambda);
bool is_regular_dominant(const IntCoweight& lambda);
bool dominance_leq(const RootSystem& rs, const Coweight& lambda, const Coweight& mu);
bool dominance_leq(const RootSystem& rs, const CorootVec& a, const CorootVec& b);
// Root dominance: beta <= gamma iff gamma - beta has non-negative simple-root coefficients.
bool root_leq(const RootVec& beta, const RootVec& gamma);
bool is_positive(const RootVec& beta);
Lattice lattice_of(const RootSystem& rs, const Coweight& lambda);

std::vector<RootVec> quantum_roots(const RootSystem& rs);
// The classification: long roots, plus short roots supported only on short simple roots.
std::vector<bool> quantum_by_classification(const RootSystem& rs);

// Formatting as "a1 + 2a2" style strings in root or coroot coordinates.
std::string format_root(const RootVec& beta);
std::string format_coroot(const CorootVec& c);

}  // namespace adlv
