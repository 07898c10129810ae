#include "adlv/adm.hpp"

#include "adlv/cover.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace adlv {

AdmSet adm_set(const AffineWeylGroup& g, const IntCoweight& mu, int budget) {
  if (!is_dominant(mu)) throw std::invalid_argument("mu = [" + join(mu.coeffs) + "] is not dominant");
  const GroupTable& G = g.finite();
  const int top = static_cast<int>(g.root_system().two_rho_pairing(mu));
  if (top > budget)
    throw BudgetExceeded("length " + std::to_string(top) + " of t^mu exceeds length budget " +
                         std::to_string(budget));
  std::set<IntCoweight> orbit;
  for (Index x = 0; x < G.size(); ++x) orbit.insert(G.act(x, mu));
  AdmSet a;
  a.mu = mu;
  for (const IntCoweight& lam : orbit) {
    BruhatInterval I = lower_interval(g, g.translation(lam), budget);
    for (const AffineElt& u : I.members)
      if (a.keys.insert(g.pack(u))) a.members.push_back(u);
  }
  std::sort(a.members.begin(), a.members.end());
  return a;
}

std::vector<AffineElt> adm_product(const AffineWeylGroup& g, const AdmSet& a, const AdmSet& b, bool demazure) {
  std::vector<AffineElt> out;
  KeySet seen;
  for (const AffineElt& x : a.members)
    for (const AffineElt& y : b.members) {
      AffineElt p = demazure ? demazure_star(g, x, y) : g.multiply(x, y);
      if (seen.insert(g.pack(p))) out.push_back(p);
    }
  std::sort(out.begin(), out.end());
  return out;
}

const char* to_string(MembershipStatus s) {
  switch (s) {
    case MembershipStatus::Ok: return "ok";
    case MembershipStatus::BelowThreshold: return "below_threshold";
    case MembershipStatus::OutsideRange: return "outside_range";
    case MembershipStatus::NotDominant: return "not_dominant";
  }
  return "?";
}

Int membership_ceiling(CartanType type, const IntCoweight& mu) {
  const Int d = depth(mu) - cover_depth_threshold(type);
  return d <= 0 ? 0 : (d + 1) / 2;
}

MembershipResult adm_membership_char(const QuantumBruhatGraph& q, Index x, const IntCoweight& lambda, Index y,
                                     const IntCoweight& mu, bool force) {
  const RootSystem& rs = q.root_system();
  const GroupTable& G = q.group();
  MembershipResult r;
  if (!is_dominant(mu) || !is_dominant(lambda)) {
    r.status = MembershipStatus::NotDominant;
  } else if (depth(mu) < cover_depth_threshold(rs.type())) {
    r.status = MembershipStatus::BelowThreshold;
  } else if (rs.rho_pairing(to_rational(mu - lambda)) >= Rational(membership_ceiling(rs.type(), mu))) {
    r.status = MembershipStatus::OutsideRange;
  }
  if (r.status != MembershipStatus::Ok && !force) return r;
  const IntCoweight diff = mu - lambda;
  if (!rs.in_coroot_lattice(diff)) return r;
  r.member = dominance_leq(rs, q.wt(x, G.inverse(y)), rs.to_coroot_lattice(diff));
  return r;
}

Decomposition decompose(const AffineWeylGroup& g, const AffineElt& w) {
  const GroupTable& G = g.finite();
  Decomposition d;
  AffineElt m = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i <= g.rank(); ++i) {
      if (!g.is_left_descent(i, m)) continue;
      m = g.left_mul(i, m);
      d.u = G.right_simple(d.u, i - 1);
      moved = true;
    }
  }
  if (!is_dominant(m.lambda)) throw std::logic_error("minimal coset representative has non-dominant translation");
  d.lambda = m.lambda;
  d.v = m.finite;
  return d;
}

Index eta(const AffineWeylGroup& g, const AffineElt& w) {
  Decomposition d = decompose(g, w);
  return g.finite().multiply(d.v, d.u);
}

Rational virtual_dim(const AffineWeylGroup& g, const AffineElt& w, const BInvariants& b) {
  const int le = g.finite().length(eta(g, w));
  return Rational(g.length(w) + le - b.defect, 2) - g.root_system().rho_pairing(b.nu.value);
}

int min_dgamma(const QuantumBruhatGraph& q) {
  const GroupTable& G = q.group();
  const Index w0 = G.longest();
  int best = std::numeric_limits<int>::max();
  for (Index x = 0; x < G.size(); ++x) best = std::min(best, q.from(x, false).dist[G.multiply(x, w0)]);
  return best;
}

namespace {
std::string regularity_reason(const IntCoweight& mu) {
  if (!is_dominant(mu)) return "μ not dominant";
  if (!is_regular_dominant(mu)) return "μ not regular";
  return {};
}
}  // namespace

DimResult d_adm(const QuantumBruhatGraph& q, const IntCoweight& mu, const BInvariants& b, bool force) {
  const RootSystem& rs = q.root_system();
  DimResult r;
  r.reason = regularity_reason(mu);
  if (!r.reason.empty() && !force) return r;
  r.ok = true;
  r.value = rs.rho_pairing(to_rational(mu) - b.nu.value) - Rational(b.defect, 2) +
            Rational(rs.num_positive() - min_dgamma(q), 2);
  return r;
}

Rational d_adm_brute(const AffineWeylGroup& g, const AdmSet& adm, const BInvariants& b) {
  if (adm.members.empty()) throw std::invalid_argument("empty admissible set");
  Rational best = virtual_dim(g, adm.members.front(), b);
  for (const AffineElt& w : adm.members) best = std::max(best, virtual_dim(g, w, b));
  return best;
}

DimResult dim_X_formula(const RootSystem& rs, const IntCoweight& mu, const BInvariants& b) {
  DimResult r;
  r.reason = regularity_reason(mu);
  if (!r.reason.empty()) return r;
  const Coweight bound = b.nu.value + to_rational(rs.to_pairing(rs.two_rho_check()));
  if (!dominance_leq(rs, bound, to_rational(mu))) {
    r.reason = "μ not ≥ ν + 2ρ∨";
    return r;
  }
  const int lr = reflection_length(rs, longest_element(rs));
  r.ok = true;
  r.value = rs.rho_pairing(to_rational(mu) - b.nu.value) - Rational(b.defect, 2) +
            Rational(rs.num_positive() - lr, 2);
  return r;
}

}  // namespace adlv
