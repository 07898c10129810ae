#pragma once

#include "adlv/affine.hpp"

#include <vector>

namespace adlv {

int cover_depth_threshold(CartanType type);

// A predicted cocover of w = u t^lambda v: one of the four length conditions on
// root alpha holds, and result = u t^{m alpha^vee} s_alpha u^{-1} w.
struct CocoverRecord {
  int root;                // positive root index of alpha
  Int m;
  std::vector<int> cases;  // all of 1..4 that produce this element
  AffineElt result;
};

enum class CoverStatus { Ok, BelowThreshold, NotDominant };
const char* to_string(CoverStatus s);

struct CocoverPrediction {
  CoverStatus status = CoverStatus::Ok;
  std::vector<CocoverRecord> records;  // sorted by result
};

// w = u t^lambda v as an element.
AffineElt make_utv(const AffineWeylGroup& g, Index u, const IntCoweight& lambda, Index v);

// Predictions are produced below the threshold only when forced.
CocoverPrediction predicted_cocovers(const AffineWeylGroup& g, Index u, const IntCoweight& lambda, Index v,
                                     bool force = false);

struct CoverReport {
  CoverStatus status = CoverStatus::Ok;
  AffineElt w;
  std::vector<AffineElt> predicted;
  std::vector<AffineElt> enumerated;
  std::vector<AffineElt> missing;  // enumerated but not predicted
  std::vector<AffineElt> extra;    // predicted but not enumerated
  bool match() const { return missing.empty() && extra.empty(); }
};

// Compares the prediction with exhaustive cocover enumeration. Below the threshold
// the comparison is still carried out and reported, with the status flag set.
CoverReport verify_cover_theorem(const AffineWeylGroup& g, Index u, const IntCoweight& lambda, Index v);

}  // namespace adlv
