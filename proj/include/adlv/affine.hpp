#pragma once

#include "adlv/key_set.hpp"
#include "adlv/weyl.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace adlv {

inline constexpr int kDefaultLengthBudget = 30;

// Translation lattice of the ambient group: Q^vee gives the affine Weyl group,
// P^vee the extended one with a non-trivial length-zero part Omega.
enum class TranslationLattice { Coroot, Coweight };

// t^lambda x: acts on points by p -> x(p) + lambda. lambda in pairing coordinates,
// x an index into the finite group table of the owning AffineWeylGroup.
struct AffineElt {
  IntCoweight lambda;
  Index finite = 0;

  friend bool operator==(const AffineElt& a, const AffineElt& b) {
    return a.finite == b.finite && a.lambda == b.lambda;
  }
  friend bool operator<(const AffineElt& a, const AffineElt& b) {
    if (!(a.lambda == b.lambda)) return a.lambda < b.lambda;
    return a.finite < b.finite;
  }
};

class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(const RootSystem& rs, TranslationLattice lattice = TranslationLattice::Coroot,
                           std::size_t cap = kDefaultGroupCap);

  const RootSystem& root_system() const { return group_.root_system(); }
  const GroupTable& finite() const { return group_; }
  int rank() const { return group_.rank(); }
  TranslationLattice lattice() const { return lattice_; }

  AffineElt identity() const { return {IntCoweight::zero(rank()), 0}; }
  // Throws std::invalid_argument if lambda is outside the translation lattice.
  AffineElt make(const IntCoweight& lambda, Index x) const;
  AffineElt translation(const IntCoweight& lambda) const { return make(lambda, 0); }
  AffineElt finite_elt(Index x) const { return {IntCoweight::zero(rank()), x}; }
  // Affine simple reflection s_i, i = 0..n with s_0 = t^{theta^vee} s_theta.
  AffineElt simple(int i) const;
  // t^{m beta^vee} s_beta for positive root index k: the reflection in <beta, .> = m.
  AffineElt reflection(int k, Int m) const;

  AffineElt multiply(const AffineElt& a, const AffineElt& b) const;
  AffineElt inverse(const AffineElt& a) const;
  AffineElt left_mul(int i, const AffineElt& w) const;
  AffineElt right_mul(const AffineElt& w, int i) const;

  // Closed-form length; agrees with geometric_length (tested).
  int length(const AffineElt& w) const;
  bool is_left_descent(int i, const AffineElt& w) const;
  bool is_right_descent(const AffineElt& w, int i) const;

  // P^vee / Q^vee class of the translation part.
  IntVec omega(const AffineElt& w) const;
  bool same_omega(const AffineElt& a, const AffineElt& b) const { return omega(a) == omega(b); }

  // Injective 64-bit encoding; throws BudgetExceeded when coordinates leave the packable range.
  std::uint64_t pack(const AffineElt& w) const;
  AffineElt unpack(std::uint64_t key) const;

  const IntCoweight& theta_check() const { return theta_check_; }
  // x(theta^vee) for finite index x.
  const IntCoweight& x_theta_check(Index x) const { return x_theta_check_[x]; }

 private:
  GroupTable group_;
  TranslationLattice lattice_;
  IntCoweight theta_check_;
  std::vector<IntCoweight> x_theta_check_;
  IntMat adj_;  // det * C^{-T}
  Int det_ = 1;
  int xbits_ = 1;
  int cbits_ = 1;
  Int cmax_ = 0;
};

// Number of affine hyperplanes separating a generic base-alcove point from its image.
int geometric_length(const AffineWeylGroup& g, const AffineElt& w);

// Reduced word (letters 0..n, 0 = s_0) and the residual length-zero part:
// w = s_{letters[0]} ... s_{letters[k-1]} * omega.
struct AffineWord {
  std::vector<int> letters;
  AffineElt omega;
};
AffineWord reduced_word(const AffineWeylGroup& g, const AffineElt& w);
AffineElt from_word(const AffineWeylGroup& g, const std::vector<int>& letters);

bool bruhat_leq(const AffineWeylGroup& g, const AffineElt& a, const AffineElt& b);

struct BruhatInterval {
  AffineElt top;
  std::vector<AffineElt> members;
  KeySet keys;
  bool contains(const AffineWeylGroup& g, const AffineElt& u) const { return keys.contains(g.pack(u)); }
};
// All u <= w. Throws BudgetExceeded if l(w) > budget.
BruhatInterval lower_interval(const AffineWeylGroup& g, const AffineElt& w, int budget = kDefaultLengthBudget);

// All w' <= w with l(w') = l(w) - 1, sorted.
std::vector<AffineElt> cocovers(const AffineWeylGroup& g, const AffineElt& w);

AffineElt demazure_star(const AffineWeylGroup& g, const AffineElt& x, const AffineElt& y);
AffineElt demazure_rtri(const AffineWeylGroup& g, const AffineElt& x, const AffineElt& y);  // x |> y
AffineElt demazure_ltri(const AffineWeylGroup& g, const AffineElt& x, const AffineElt& y);  // x <| y

// "t[2,2]s1s2", "s1", "t[1,0]", "e".
std::string format_affine(const AffineWeylGroup& g, const AffineElt& w);
std::string format_affine_word(const std::vector<int>& letters);

}  // namespace adlv
