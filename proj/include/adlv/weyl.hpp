#pragma once

#include "adlv/root_system.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace adlv {

inline constexpr std::size_t kDefaultGroupCap = 1'000'000;

// Raised when a configured cap or budget would be exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A finite Weyl group element, stored by its action on pairing coordinates of
// coweights together with its action on simple-root coordinates.
class WeylElt {
 public:
  WeylElt() = default;
  WeylElt(IntMat coweight_action, IntMat root_action)
      : coweight_(std::move(coweight_action)), root_(std::move(root_action)) {}
  static WeylElt identity(int n) { return WeylElt(IntMat::Identity(n, n), IntMat::Identity(n, n)); }

  int rank() const { return static_cast<int>(coweight_.rows()); }
  const IntMat& coweight_action() const { return coweight_; }
  const IntMat& root_action() const { return root_; }

  IntCoweight operator()(const IntCoweight& lambda) const { return IntCoweight(IntVec(coweight_ * lambda.coeffs)); }
  Coweight operator()(const Coweight& lambda) const {
    return Coweight(RatVec(coweight_.cast<Rational>() * lambda.coeffs));
  }
  RootVec operator()(const RootVec& beta) const { return RootVec(IntVec(root_ * beta.coeffs)); }

  WeylElt inverse() const { return WeylElt(root_.transpose(), coweight_.transpose()); }
  friend WeylElt operator*(const WeylElt& a, const WeylElt& b) {
    return WeylElt(a.coweight_ * b.coweight_, a.root_ * b.root_);
  }
  friend bool operator==(const WeylElt& a, const WeylElt& b) { return a.coweight_ == b.coweight_; }

 private:
  IntMat coweight_;
  IntMat root_;
};

// 0-based simple index i.
WeylElt simple_reflection(const RootSystem& rs, int i);
// Throws std::invalid_argument if beta is not a root.
WeylElt reflection(const RootSystem& rs, const RootVec& beta);
WeylElt from_word(const RootSystem& rs, const std::vector<int>& word);

int length(const RootSystem& rs, const WeylElt& x);
std::vector<RootVec> inv_set(const RootSystem& rs, const WeylElt& x);
// Leftmost-letter-first reduced word (0-based letters).
std::vector<int> reduced_word(const RootSystem& rs, const WeylElt& x);
WeylElt longest_element(const RootSystem& rs);
// n - dim of the fixed space of the action.
int reflection_length(const RootSystem& rs, const WeylElt& x);
// Dominant representative of lambda and an element carrying lambda to it.
std::pair<Coweight, WeylElt> dominant_rep(const RootSystem& rs, const Coweight& lambda);
std::pair<IntCoweight, WeylElt> dominant_rep(const RootSystem& rs, const IntCoweight& lambda);
CorootVec apply(const RootSystem& rs, const WeylElt& x, const CorootVec& c);

std::uint64_t classical_group_order(CartanType type, int rank);

using Index = std::uint32_t;

// The full finite Weyl group, enumerated in length-then-lexicographic order
// (index 0 is the identity), with multiplication tables by generators and reflections.
class GroupTable {
 public:
  static GroupTable enumerate(const RootSystem& rs, std::size_t cap = kDefaultGroupCap);

  const RootSystem& root_system() const { return rs_; }
  int rank() const { return rs_.rank(); }
  std::size_t size() const { return actions_.size(); }
  Index identity() const { return 0; }
  Index longest() const { return static_cast<Index>(size() - 1); }

  WeylElt element(Index x) const { return WeylElt(actions_[x], actions_[inverse_[x]].transpose()); }
  const IntMat& coweight_action(Index x) const { return actions_[x]; }
  std::optional<Index> find(const WeylElt& x) const;
  Index index_of(const WeylElt& x) const;

  int length(Index x) const { return length_[x]; }
  Index inverse(Index x) const { return inverse_[x]; }
  Index right_simple(Index x, int i) const { return right_[static_cast<std::size_t>(x) * rank() + i]; }
  Index left_simple(int i, Index x) const { return left_(i, x); }
  // x * s_beta for positive root index k.
  Index right_reflection(Index x, int k) const {
    return refl_[static_cast<std::size_t>(x) * rs_.num_positive() + k];
  }
  Index reflection_index(int k) const { return right_reflection(0, k); }
  Index multiply(Index a, Index b) const;
  const std::vector<int>& word(Index x) const { return words_[x]; }
  Index from_word(const std::vector<int>& word) const;

  bool is_right_descent(Index x, int i) const { return length(right_simple(x, i)) < length(x); }
  bool is_left_descent(int i, Index x) const { return length(left_(i, x)) < length(x); }

  // x(lambda) with x given by index.
  IntCoweight act(Index x, const IntCoweight& lambda) const {
    return IntCoweight(IntVec(actions_[x] * lambda.coeffs));
  }
  // Whether x^{-1}(beta) is negative, for positive root index k.
  bool inverse_sends_negative(Index x, int k) const { return inv_neg_[static_cast<std::size_t>(x) * rs_.num_positive() + k]; }

 private:
  Index left_(int i, Index x) const { return inverse_[right_simple(inverse_[x], i)]; }

  RootSystem rs_;
  std::vector<IntMat> actions_;
  std::vector<int> length_;
  std::vector<Index> inverse_;
  std::vector<Index> right_;
  std::vector<Index> refl_;
  std::vector<std::uint8_t> inv_neg_;
  std::vector<std::vector<int>> words_;
  std::unordered_map<IntCoweight, Index, CoordsHash<PairingBasis, Int>> index_;
};

// Finite-group Bruhat order and Demazure products on table indices.
bool bruhat_leq(const GroupTable& g, Index x, Index y);
Index demazure_star(const GroupTable& g, Index x, Index y);
Index demazure_rtri(const GroupTable& g, Index x, Index y);  // x |> y
Index demazure_ltri(const GroupTable& g, Index x, Index y);  // x <| y

std::string format_word(const std::vector<int>& word);  // "s1s2s1", "e" for empty

}  // namespace adlv
