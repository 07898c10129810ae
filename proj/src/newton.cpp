#include "adlv/newton.hpp"

#include <numeric>
#include <unordered_set>

namespace adlv {

namespace {
struct IntVecHash {
  std::size_t operator()(const IntVec& v) const noexcept {
    std::size_t h = 0;
    for (int i = 0; i < v.size(); ++i) h = h * 0x9E3779B97F4A7C15ull + static_cast<std::size_t>(v[i]);
    return h;
  }
};
struct IntVecEq {
  bool operator()(const IntVec& a, const IntVec& b) const { return a.size() == b.size() && a == b; }
};

IntVec dominant_int(const RootSystem& rs, IntVec v) {
  const IntMat& C = rs.cartan();
  while (true) {
    int neg = -1;
    for (int i = 0; i < v.size() && neg < 0; ++i)
      if (v[i] < 0) neg = i;
    if (neg < 0) return v;
    const Int li = v[neg];
    for (int j = 0; j < v.size(); ++j) v[j] -= li * C(neg, j);
  }
}
}  // namespace

NewtonAverager::NewtonAverager(const AffineWeylGroup& g) : g_(&g) {
  const GroupTable& G = g.finite();
  const int n = g.rank();
  std::vector<int> orders(G.size());
  std::vector<IntMat> sums(G.size());
  for (Index z = 0; z < G.size(); ++z) {
    IntMat s = IntMat::Zero(n, n);
    Index p = z;
    int m = 0;
    while (true) {
      s += G.coweight_action(p);
      ++m;
      if (p == 0) break;
      p = G.multiply(p, z);
    }
    orders[z] = m;
    sums[z] = s;
    scale_ = std::lcm(scale_, static_cast<Int>(m));
  }
  sums_.resize(G.size());
  for (Index z = 0; z < G.size(); ++z) sums_[z] = (scale_ / orders[z]) * sums[z];
  const RatMat& inv = g.root_system().cartan_inverse_transpose();
  Int det = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) det = std::lcm(det, inv(i, j).den());
  adj_ = IntMat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) adj_(i, j) = (inv(i, j) * Rational(det)).num();
}

IntVec NewtonAverager::scaled(const AffineElt& w) const {
  return dominant_int(g_->root_system(), IntVec(sums_[w.finite] * w.lambda.coeffs));
}

NewtonPoint NewtonAverager::unscale(const IntVec& v) const {
  Coweight c = Coweight::zero(static_cast<int>(v.size()));
  for (int i = 0; i < v.size(); ++i) c[i] = Rational(v[i], scale_);
  return {c};
}

bool NewtonAverager::leq(const IntVec& a, const IntVec& b) const {
  return ((adj_ * (b - a)).array() >= 0).all();
}

NewtonPoint newton_point(const AffineWeylGroup& g, const AffineElt& w) {
  const GroupTable& G = g.finite();
  const int n = g.rank();
  RatVec sum = RatVec::Zero(n);
  Index p = w.finite;
  int m = 0;
  while (true) {
    sum += G.coweight_action(p).cast<Rational>() * to_rational(w.lambda).coeffs;
    ++m;
    if (p == 0) break;
    p = G.multiply(p, w.finite);
  }
  Coweight avg(RatVec(sum / Rational(m)));
  return {dominant_rep(g.root_system(), avg).first};
}

namespace {
IntVec unique_max(const NewtonAverager& avg, const std::vector<IntVec>& values) {
  IntVec best = values.front();
  for (const IntVec& v : values)
    if (avg.leq(best, v)) best = v;
  for (const IntVec& v : values)
    if (!avg.leq(v, best)) throw std::logic_error("Newton points below the element have no unique maximum");
  return best;
}
}  // namespace

NewtonPoint max_newton_over(const NewtonAverager& avg, const BruhatInterval& interval) {
  std::unordered_set<IntVec, IntVecHash, IntVecEq> seen;
  std::vector<IntVec> values;
  for (const AffineElt& u : interval.members) {
    IntVec v = avg.scaled(u);
    if (seen.insert(v).second) values.push_back(v);
  }
  return avg.unscale(unique_max(avg, values));
}

NewtonPoint max_newton_brute(const AffineWeylGroup& g, const AffineElt& w, int budget) {
  NewtonAverager avg(g);
  return max_newton_over(avg, lower_interval(g, w, budget));
}

NewtonPoint max_translation_below(const AffineWeylGroup& g, const BruhatInterval& interval) {
  NewtonAverager avg(g);
  std::vector<IntVec> values;
  std::unordered_set<IntVec, IntVecHash, IntVecEq> seen;
  for (const AffineElt& u : interval.members) {
    if (u.finite != 0) continue;
    IntVec v = dominant_int(g.root_system(), u.lambda.coeffs) * avg.scale();
    if (seen.insert(v).second) values.push_back(v);
  }
  if (values.empty()) throw std::logic_error("no translation element in the interval");
  return avg.unscale(unique_max(avg, values));
}

NewtonPoint max_translation_below(const AffineWeylGroup& g, const AffineElt& w, int budget) {
  return max_translation_below(g, lower_interval(g, w, budget));
}

int xi_bound(CartanType type, int n) {
  switch (type) {
    case CartanType::A: return 3 * n + 1;
    case CartanType::B:
    case CartanType::C: return 6 * n - 2;
    case CartanType::D: return 6 * n - 6;
    case CartanType::E: return n == 6 ? 23 : n == 7 ? 33 : 57;
    case CartanType::F: return 23;
    case CartanType::G: return 9;
  }
  return 0;
}

int s_bound(CartanType type, int n) {
  switch (type) {
    case CartanType::A: return 2 * n;
    case CartanType::B:
    case CartanType::C: return 4 * n - 2;
    case CartanType::D: return 4 * n - 6;
    case CartanType::E: return n == 6 ? 11 : n == 7 ? 17 : 29;
    case CartanType::F: return 11;
    case CartanType::G: return 5;
  }
  return 0;
}

const char* to_string(FormulaStatus s) {
  switch (s) {
    case FormulaStatus::Ok: return "ok";
    case FormulaStatus::BelowThreshold: return "below_threshold";
    case FormulaStatus::NotDominant: return "not_dominant";
  }
  return "?";
}

FormulaResult max_newton_formula(const AffineWeylGroup& g, const QuantumBruhatGraph& q, const AffineElt& w,
                                 bool force) {
  const RootSystem& rs = g.root_system();
  FormulaResult r;
  r.threshold = xi_bound(rs.type(), rs.rank());
  r.depth = depth(w.lambda);
  if (!is_dominant(w.lambda)) {
    r.status = FormulaStatus::NotDominant;
    return r;
  }
  if (r.depth <= r.threshold) r.status = FormulaStatus::BelowThreshold;
  if (r.status == FormulaStatus::Ok || force)
    r.value = {to_rational(w.lambda - rs.to_pairing(q.wt1(w.finite)))};
  return r;
}

FormulaResult max_newton_formula(const AffineWeylGroup& g, const QuantumBruhatGraph& q, Index u,
                                 const IntCoweight& lambda, Index v, bool force) {
  AffineElt w{lambda, demazure_ltri(g.finite(), v, u)};
  return max_newton_formula(g, q, w, force);
}

AffineElt reduce_to_dominant(const AffineWeylGroup& g, Index u, const IntCoweight& lambda, Index v) {
  if (!is_regular_dominant(lambda))
    throw std::invalid_argument("translation [" + join(lambda.coeffs) + "] is not dominant regular");
  return g.make(lambda, demazure_ltri(g.finite(), v, u));
}

}  // namespace adlv
