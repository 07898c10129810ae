#pragma once

#include "adlv/affine.hpp"
#include "adlv/newton.hpp"
#include "adlv/qbg.hpp"

#include <string>
#include <vector>

namespace adlv {

struct AdmSet {
  IntCoweight mu;
  std::vector<AffineElt> members;  // sorted
  KeySet keys;
  bool contains(const AffineWeylGroup& g, const AffineElt& w) const { return keys.contains(g.pack(w)); }
  std::size_t size() const { return members.size(); }
};

// Union of the lower intervals of t^{x(mu)}; mu must be dominant.
AdmSet adm_set(const AffineWeylGroup& g, const IntCoweight& mu, int budget = kDefaultLengthBudget);

// {a b} or {a * b} over a in A, b in B, sorted and deduplicated.
std::vector<AffineElt> adm_product(const AffineWeylGroup& g, const AdmSet& a, const AdmSet& b, bool demazure);

enum class MembershipStatus { Ok, BelowThreshold, OutsideRange, NotDominant };
const char* to_string(MembershipStatus s);

struct MembershipResult {
  MembershipStatus status = MembershipStatus::Ok;
  bool member = false;  // meaningful only when Ok, or when forced
};

// Upper bound (exclusive) on <rho, mu - lambda> for the weight criterion.
Int membership_ceiling(CartanType type, const IntCoweight& mu);
// x t^lambda y in Adm(mu) via wt(x, y^{-1}) <= mu - lambda.
MembershipResult adm_membership_char(const QuantumBruhatGraph& q, Index x, const IntCoweight& lambda, Index y,
                                     const IntCoweight& mu, bool force = false);

// w = u t^lambda v with lambda dominant and t^lambda v minimal in W t^lambda v.
struct Decomposition {
  Index u = 0;
  IntCoweight lambda;
  Index v = 0;
};
Decomposition decompose(const AffineWeylGroup& g, const AffineElt& w);
Index eta(const AffineWeylGroup& g, const AffineElt& w);

struct BInvariants {
  NewtonPoint nu;
  int defect = 0;
};

Rational virtual_dim(const AffineWeylGroup& g, const AffineElt& w, const BInvariants& b);

int min_dgamma(const QuantumBruhatGraph& q);

struct DimResult {
  bool ok = false;
  Rational value;
  std::string reason;  // set when refused
};

// Requires mu regular dominant unless forced.
DimResult d_adm(const QuantumBruhatGraph& q, const IntCoweight& mu, const BInvariants& b, bool force = false);
// max of virtual_dim over the admissible set.
Rational d_adm_brute(const AffineWeylGroup& g, const AdmSet& adm, const BInvariants& b);

// Requires mu regular dominant and mu >= nu + 2 rho^vee.
DimResult dim_X_formula(const RootSystem& rs, const IntCoweight& mu, const BInvariants& b);

}  // namespace adlv
