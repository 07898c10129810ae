#include "oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace adlv::oracle {

namespace {
std::vector<Int> flatten(const IntMat& m) { return {m.data(), m.data() + m.size()}; }
bool nonneg(const IntVec& v) { return (v.array() >= 0).all(); }
}  // namespace

std::vector<Int> Elt::key() const { return flatten(R); }

std::vector<Int> akey(const AElt& w) {
  std::vector<Int> k = flatten(w.x.R);
  k.insert(k.end(), w.lam.data(), w.lam.data() + w.lam.size());
  return k;
}

Finite::Finite(const IntMat& cartan) : n_(static_cast<int>(cartan.rows())), C_(cartan) {
  std::vector<Rational> d(n_, Rational(0));
  d[0] = Rational(1);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < n_; ++j) {
      if (j == i || C_(i, j) == 0 || d[j] != Rational(0)) continue;
      d[j] = d[i] * Rational(C_(i, j), C_(j, i));
      queue.push_back(j);
    }
  }
  Int den = 1;
  for (const Rational& r : d) den = std::lcm(den, r.den());
  for (const Rational& r : d) d_.push_back((r * Rational(den)).num());

  std::set<std::vector<Int>> seen;
  std::deque<IntVec> todo;
  for (int i = 0; i < n_; ++i) todo.push_back(IntVec::Unit(n_, i));
  while (!todo.empty()) {
    IntVec g = todo.front();
    todo.pop_front();
    if (!seen.insert({g.data(), g.data() + n_}).second) continue;
    if (nonneg(g)) roots_.push_back(g);
    for (int i = 0; i < n_; ++i) {
      IntVec a = IntVec::Unit(n_, i);
      todo.push_back(g - pair(g, a) * a);
    }
  }
  std::sort(roots_.begin(), roots_.end(), [](const IntVec& a, const IntVec& b) {
    if (a.sum() != b.sum()) return a.sum() < b.sum();
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
  });
  theta_ = roots_.back();
  h_ = static_cast<int>(theta_.sum()) + 1;
}

Int Finite::form(const IntVec& a, const IntVec& b) const {
  Int s = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) s += a[i] * b[j] * d_[i] * C_(i, j);
  return s;
}

Int Finite::pair(const IntVec& gamma, const IntVec& beta) const {
  return 2 * form(gamma, beta) / form(beta, beta);
}

Int Finite::two_rho_on(const IntVec& beta) const {
  Int s = 0;
  for (const IntVec& g : roots_) s += pair(g, beta);
  return s;
}

IntVec Finite::coroot_pairing(const IntVec& beta) const {
  IntVec v(n_);
  for (int i = 0; i < n_; ++i) v[i] = pair(IntVec::Unit(n_, i), beta);
  return v;
}

IntVec Finite::coroot_coords(const IntVec& beta) const {
  IntVec v(n_);
  const Int bb = form(beta, beta);
  for (int i = 0; i < n_; ++i) {
    IntVec a = IntVec::Unit(n_, i);
    v[i] = beta[i] * form(a, a) / bb;
  }
  return v;
}

Elt Finite::identity() const { return {IntMat::Identity(n_, n_), IntMat::Identity(n_, n_)}; }

Elt Finite::simple(int i) const { return reflection(IntVec::Unit(n_, i)); }

Elt Finite::reflection(const IntVec& beta) const {
  IntMat R = IntMat::Identity(n_, n_);
  for (int j = 0; j < n_; ++j) R.col(j) -= pair(IntVec::Unit(n_, j), beta) * beta;
  return {R, R};
}

Elt Finite::from_word(const std::vector<int>& word) const {
  Elt x = identity();
  for (int i : word) x = mul(x, simple(i));
  return x;
}

int Finite::length(const Elt& x) const {
  int l = 0;
  for (const IntVec& b : roots_)
    if (!nonneg(x.R * b)) ++l;
  return l;
}

std::vector<int> Finite::reduced_word(const Elt& x) const {
  std::vector<int> word;
  Elt y = x;
  int l = length(y);
  while (l > 0) {
    for (int i = 0; i < n_; ++i) {
      Elt z = mul(simple(i), y);
      if (length(z) < l) {
        word.push_back(i);
        y = z;
        --l;
        break;
      }
    }
  }
  return word;
}

std::vector<Elt> Finite::elements() const {
  std::vector<Elt> out{identity()};
  std::set<std::vector<Int>> seen{identity().key()};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int i = 0; i < n_; ++i) {
      Elt y = mul(out[k], simple(i));
      if (seen.insert(y.key()).second) out.push_back(y);
    }
  return out;
}

std::vector<Elt> Finite::lower_set(const Elt& y) const {
  std::vector<Elt> set{identity()};
  std::set<std::vector<Int>> seen{identity().key()};
  for (int i : reduced_word(y)) {
    const std::size_t m = set.size();
    for (std::size_t k = 0; k < m; ++k) {
      Elt z = mul(set[k], simple(i));
      if (seen.insert(z.key()).second) set.push_back(z);
    }
  }
  return set;
}

const Finite::KeySet& Finite::lower_keys(const Elt& y) const {
  auto it = lower_cache_.find(y.key());
  if (it != lower_cache_.end()) return it->second;
  KeySet ks;
  for (const Elt& u : lower_set(y)) ks.insert(u.key());
  return lower_cache_.emplace(y.key(), std::move(ks)).first->second;
}

bool Finite::bruhat_leq(const Elt& x, const Elt& y) const { return lower_keys(y).count(x.key()) > 0; }

int Finite::reflection_length_bfs(const Elt& x) const {
  std::map<std::vector<Int>, int> dist{{identity().key(), 0}};
  std::deque<Elt> queue{identity()};
  while (!queue.empty()) {
    Elt y = queue.front();
    queue.pop_front();
    const int dy = dist[y.key()];
    if (y == x) return dy;
    for (const IntVec& b : roots_) {
      Elt z = mul(y, reflection(b));
      if (dist.emplace(z.key(), dy + 1).second) queue.push_back(z);
    }
  }
  throw std::logic_error("oracle: element not reached by reflections");
}

namespace {
// Longest (or shortest) candidate, checked to be above (or below) every other one.
template <class E, class Len, class Lower, class Key>
E extreme(const std::vector<E>& all, Len len, Lower lower, Key key, bool want_max) {
  std::vector<E> cands;
  std::set<std::vector<Int>> seen;
  for (const E& c : all)
    if (seen.insert(key(c)).second) cands.push_back(c);
  E best = cands.front();
  for (const E& c : cands)
    if (want_max ? len(c) > len(best) : len(c) < len(best)) best = c;
  if (want_max) {
    const auto& below = lower(best);
    for (const E& c : cands)
      if (!below.count(key(c))) throw std::logic_error("oracle: no unique maximum");
  } else {
    for (const E& c : cands)
      if (!lower(c).count(key(best))) throw std::logic_error("oracle: no unique minimum");
  }
  return best;
}
}  // namespace

Elt Finite::star(const Elt& x, const Elt& y) const {
  std::vector<Elt> prods;
  const std::vector<Elt> ly = lower_set(y);
  for (const Elt& u : lower_set(x))
    for (const Elt& v : ly) prods.push_back(mul(u, v));
  return extreme(prods, [&](const Elt& e) { return length(e); }, [&](const Elt& e) -> const KeySet& { return lower_keys(e); },
                 [](const Elt& e) { return e.key(); }, true);
}

Elt Finite::rtri(const Elt& x, const Elt& y) const {
  std::vector<Elt> prods;
  for (const Elt& u : lower_set(x)) prods.push_back(mul(u, y));
  return extreme(prods, [&](const Elt& e) { return length(e); }, [&](const Elt& e) -> const KeySet& { return lower_keys(e); },
                 [](const Elt& e) { return e.key(); }, false);
}

Elt Finite::ltri(const Elt& x, const Elt& y) const {
  std::vector<Elt> prods;
  for (const Elt& v : lower_set(y)) prods.push_back(mul(x, v));
  return extreme(prods, [&](const Elt& e) { return length(e); }, [&](const Elt& e) -> const KeySet& { return lower_keys(e); },
                 [](const Elt& e) { return e.key(); }, false);
}

AElt Affine::identity() const { return {IntVec::Zero(f_->rank()), f_->identity()}; }

AElt Affine::simple(int i) const {
  if (i == 0) return {f_->coroot_pairing(f_->theta()), f_->reflection(f_->theta())};
  return {IntVec::Zero(f_->rank()), f_->simple(i - 1)};
}

AElt Affine::mul(const AElt& a, const AElt& b) const {
  return {IntVec(a.lam + f_->coweight_action(a.x) * b.lam), f_->mul(a.x, b.x)};
}

int Affine::length(const AElt& w) const {
  const int n = f_->rank();
  RatVec p(n);
  for (int i = 0; i < n; ++i) p[i] = Rational(1, f_->coxeter_number());
  RatVec img = RatVec(f_->coweight_action(w.x).cast<Rational>() * p) + w.lam.cast<Rational>();
  Int total = 0;
  for (const IntVec& b : f_->positive_roots()) {
    Rational s(0);
    for (int i = 0; i < n; ++i) s += Rational(b[i]) * img[i];
    total += std::abs(s.floor());
  }
  return static_cast<int>(total);
}

std::pair<std::vector<int>, AElt> Affine::reduced_word(const AElt& w) const {
  std::vector<int> letters;
  AElt y = w;
  int l = length(y);
  while (l > 0) {
    for (int i = 0; i <= f_->rank(); ++i) {
      AElt z = mul(simple(i), y);
      if (length(z) < l) {
        letters.push_back(i);
        y = z;
        --l;
        break;
      }
    }
  }
  return {letters, y};
}

std::vector<AElt> Affine::lower_set(const AElt& w) const {
  auto [letters, omega] = reduced_word(w);
  std::vector<AElt> set{identity()};
  std::set<std::vector<Int>> seen{akey(identity())};
  for (int i : letters) {
    const std::size_t m = set.size();
    for (std::size_t k = 0; k < m; ++k) {
      AElt z = mul(set[k], simple(i));
      if (seen.insert(akey(z)).second) set.push_back(z);
    }
  }
  for (AElt& u : set) u = mul(u, omega);
  return set;
}

const Affine::KeySet& Affine::lower_keys(const AElt& w) const {
  auto it = lower_cache_.find(akey(w));
  if (it != lower_cache_.end()) return it->second;
  KeySet ks;
  for (const AElt& u : lower_set(w)) ks.insert(akey(u));
  return lower_cache_.emplace(akey(w), std::move(ks)).first->second;
}

bool Affine::bruhat_leq(const AElt& a, const AElt& b) const { return lower_keys(b).count(akey(a)) > 0; }

AElt Affine::star(const AElt& x, const AElt& y) const {
  std::vector<AElt> prods;
  const std::vector<AElt> ly = lower_set(y);
  for (const AElt& u : lower_set(x))
    for (const AElt& v : ly) prods.push_back(mul(u, v));
  return extreme(prods, [&](const AElt& e) { return length(e); }, [&](const AElt& e) -> const KeySet& { return lower_keys(e); },
                 akey, true);
}

AElt Affine::rtri(const AElt& x, const AElt& y) const {
  std::vector<AElt> prods;
  for (const AElt& u : lower_set(x)) prods.push_back(mul(u, y));
  return extreme(prods, [&](const AElt& e) { return length(e); }, [&](const AElt& e) -> const KeySet& { return lower_keys(e); },
                 akey, false);
}

AElt Affine::ltri(const AElt& x, const AElt& y) const {
  std::vector<AElt> prods;
  for (const AElt& v : lower_set(y)) prods.push_back(mul(x, v));
  return extreme(prods, [&](const AElt& e) { return length(e); }, [&](const AElt& e) -> const KeySet& { return lower_keys(e); },
                 akey, false);
}

AElt Affine::from_library(const AffineWeylGroup& g, const AffineElt& w) const {
  const GroupTable& G = g.finite();
  return {w.lambda.coeffs, {G.element(w.finite).root_action(), G.element(G.inverse(w.finite)).root_action()}};
}

AffineElt Affine::to_library(const AffineWeylGroup& g, const AElt& w) const {
  return {IntCoweight(w.lam), g.finite().index_of(WeylElt(f_->coweight_action(w.x), w.x.R))};
}

Qbg::Qbg(const Finite& f) : f_(&f), elems_(f.elements()) {
  for (std::size_t i = 0; i < elems_.size(); ++i) index_[elems_[i].key()] = static_cast<int>(i);
  out_.resize(elems_.size());
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    const int lx = f.length(elems_[i]);
    for (const IntVec& b : f.positive_roots()) {
      Elt y = f.mul(elems_[i], f.reflection(b));
      const int ly = f.length(y);
      if (ly == lx + 1)
        out_[i].push_back({index(y), IntVec::Zero(f.rank())});
      else if (ly == lx - f.two_rho_on(b) + 1)
        out_[i].push_back({index(y), f.coroot_coords(b)});
    }
  }
}

Qbg::Paths Qbg::from(int x) const {
  Paths p;
  p.dist.assign(size(), -1);
  p.weights.assign(size(), {});
  p.dist[x] = 0;
  p.weights[x].insert(std::vector<Int>(f_->rank(), 0));
  std::vector<int> order{x};
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int u = order[k];
    for (const auto& [y, w] : out_[u]) {
      if (p.dist[y] < 0) {
        p.dist[y] = p.dist[u] + 1;
        order.push_back(y);
      }
      if (p.dist[y] != p.dist[u] + 1) continue;
      for (std::vector<Int> s : p.weights[u]) {
        for (int i = 0; i < f_->rank(); ++i) s[i] += w[i];
        p.weights[y].insert(s);
      }
    }
  }
  return p;
}

std::vector<std::vector<IntVec>> orthogonal_decompositions(const Finite& f, const Elt& x) {
  std::vector<IntVec> neg;
  for (const IntVec& b : f.positive_roots())
    if (x.R * b == -b) neg.push_back(b);
  std::vector<std::vector<IntVec>> out;
  std::vector<IntVec> chosen;
  auto rec = [&](auto&& self, std::size_t start, const Elt& prod) -> void {
    if (prod == x) out.push_back(chosen);
    for (std::size_t k = start; k < neg.size(); ++k) {
      bool orth = true;
      for (const IntVec& c : chosen)
        if (f.pair(neg[k], c) != 0) orth = false;
      if (!orth) continue;
      chosen.push_back(neg[k]);
      self(self, k + 1, f.mul(prod, f.reflection(neg[k])));
      chosen.pop_back();
    }
  };
  rec(rec, 0, f.identity());
  return out;
}

}  // namespace adlv::oracle
