#pragma once

#include "adlv/affine.hpp"
#include "adlv/qbg.hpp"

#include <vector>

namespace adlv {

// A dominant rational coweight.
struct NewtonPoint {
  Coweight value;
  friend bool operator==(const NewtonPoint& a, const NewtonPoint& b) { return a.value == b.value; }
};

// Per finite element z: its order m and S_z = z + z^2 + ... + z^m acting on
// pairing coordinates; Newton points are then computed in integers scaled by
// the lcm L of all orders.
class NewtonAverager {
 public:
  explicit NewtonAverager(const AffineWeylGroup& g);
  Int scale() const { return scale_; }
  // L * nu(w) as an integer dominant vector.
  IntVec scaled(const AffineElt& w) const;
  NewtonPoint unscale(const IntVec& v) const;
  // Dominance between scaled vectors.
  bool leq(const IntVec& a, const IntVec& b) const;

 private:
  const AffineWeylGroup* g_;
  std::vector<IntMat> sums_;  // (L / m_z) * S_z
  Int scale_ = 1;
  IntMat adj_;
};

NewtonPoint newton_point(const AffineWeylGroup& g, const AffineElt& w);
// Dominance-maximum of Newton points over {u <= w}; throws std::logic_error if it is not unique.
NewtonPoint max_newton_brute(const AffineWeylGroup& g, const AffineElt& w, int budget = kDefaultLengthBudget);
NewtonPoint max_newton_over(const NewtonAverager& avg, const BruhatInterval& interval);
// Dominance-maximum of gamma^+ over translations t^gamma in the interval.
NewtonPoint max_translation_below(const AffineWeylGroup& g, const BruhatInterval& interval);
NewtonPoint max_translation_below(const AffineWeylGroup& g, const AffineElt& w, int budget = kDefaultLengthBudget);

int xi_bound(CartanType type, int rank);
int s_bound(CartanType type, int rank);

enum class FormulaStatus { Ok, BelowThreshold, NotDominant };
const char* to_string(FormulaStatus s);

struct FormulaResult {
  FormulaStatus status = FormulaStatus::Ok;
  NewtonPoint value;  // filled when Ok, or when forced
  Int depth = 0;
  int threshold = 0;
};

// lambda - wt(x) for w = t^lambda x, refused below the depth threshold unless forced.
// The graph must be built on g.finite().
FormulaResult max_newton_formula(const AffineWeylGroup& g, const QuantumBruhatGraph& q, const AffineElt& w,
                                 bool force = false);
// Same for u t^lambda v via lambda - wt(v <| u).
FormulaResult max_newton_formula(const AffineWeylGroup& g, const QuantumBruhatGraph& q, Index u,
                                 const IntCoweight& lambda, Index v, bool force = false);
// t^lambda (v <| u); lambda must be dominant regular.
AffineElt reduce_to_dominant(const AffineWeylGroup& g, Index u, const IntCoweight& lambda, Index v);

}  // namespace adlv
