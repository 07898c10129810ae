#include "adlv/cover.hpp"

#include <algorithm>
#include <map>

namespace adlv {

int cover_depth_threshold(CartanType type) {
  if (type == CartanType::G) return 6;
  return is_simply_laced(type) ? 3 : 4;
}

const char* to_string(CoverStatus s) {
  switch (s) {
    case CoverStatus::Ok: return "ok";
    case CoverStatus::BelowThreshold: return "below_threshold";
    case CoverStatus::NotDominant: return "not_dominant";
  }
  return "?";
}

AffineElt make_utv(const AffineWeylGroup& g, Index u, const IntCoweight& lambda, Index v) {
  return {g.finite().act(u, lambda), g.finite().multiply(u, v)};
}

CocoverPrediction predicted_cocovers(const AffineWeylGroup& g, Index u, const IntCoweight& lambda, Index v,
                                     bool force) {
  const RootSystem& rs = g.root_system();
  const GroupTable& G = g.finite();
  CocoverPrediction out;
  if (!is_dominant(lambda)) {
    out.status = CoverStatus::NotDominant;
    return out;
  }
  if (depth(lambda) < cover_depth_threshold(rs.type())) {
    out.status = CoverStatus::BelowThreshold;
    if (!force) return out;
  }
  std::map<AffineElt, CocoverRecord> found;
  auto emit = [&](int k, Int m, int which, AffineElt w) {
    auto it = found.find(w);
    if (it == found.end()) {
      found.emplace(w, CocoverRecord{k, m, {which}, w});
    } else {
      it->second.cases.push_back(which);
    }
  };
  const int lu = G.length(u), lv = G.length(v);
  for (int k = 0; k < rs.num_positive(); ++k) {
    const Index sa = G.reflection_index(k);
    const Index us = G.right_reflection(u, k);
    const Index sv = G.multiply(sa, v);
    const Int pair = rs.pairing(rs.root(k), lambda);
    const Int tworho = rs.two_rho_on_coroot(k);
    const IntCoweight shifted = lambda - rs.coroot_pairing(k);
    if (G.length(us) == lu - 1) emit(k, 0, 1, make_utv(g, us, lambda, v));
    if (G.length(us) == lu + tworho - 1) emit(k, 1, 2, make_utv(g, us, shifted, v));
    if (G.length(sv) == lv + 1) emit(k, pair, 3, make_utv(g, u, lambda, sv));
    if (G.length(sv) == lv - tworho + 1) emit(k, pair - 1, 4, make_utv(g, u, shifted, sv));
  }
  for (auto& [w, rec] : found) out.records.push_back(std::move(rec));
  return out;
}

CoverReport verify_cover_theorem(const AffineWeylGroup& g, Index u, const IntCoweight& lambda, Index v) {
  CoverReport r;
  r.w = make_utv(g, u, lambda, v);
  CocoverPrediction p = predicted_cocovers(g, u, lambda, v, true);
  r.status = p.status;
  for (const auto& rec : p.records) r.predicted.push_back(rec.result);
  r.enumerated = cocovers(g, r.w);
  std::set_difference(r.enumerated.begin(), r.enumerated.end(), r.predicted.begin(), r.predicted.end(),
                      std::back_inserter(r.missing));
  std::set_difference(r.predicted.begin(), r.predicted.end(), r.enumerated.begin(), r.enumerated.end(),
                      std::back_inserter(r.extra));
  return r;
}

}  // namespace adlv
