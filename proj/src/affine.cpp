#include "adlv/affine.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace adlv {

AffineWeylGroup::AffineWeylGroup(const RootSystem& rs, TranslationLattice lattice, std::size_t cap)
    : group_(GroupTable::enumerate(rs, cap)), lattice_(lattice) {
  const int n = rs.rank();
  theta_check_ = rs.coroot_pairing(rs.theta_index());
  for (Index x = 0; x < group_.size(); ++x) x_theta_check_.push_back(group_.act(x, theta_check_));

  const RatMat& inv = rs.cartan_inverse_transpose();
  det_ = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) det_ = std::lcm(det_, inv(i, j).den());
  adj_ = IntMat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) adj_(i, j) = (inv(i, j) * Rational(det_)).num();

  xbits_ = std::max(1, static_cast<int>(std::bit_width(group_.size() - 1)));
  cbits_ = (64 - xbits_) / n;
  if (cbits_ > 32) cbits_ = 32;
  cmax_ = (Int{1} << (cbits_ - 1)) - 2;
}

AffineElt AffineWeylGroup::make(const IntCoweight& lambda, Index x) const {
  if (lambda.size() != rank()) throw std::invalid_argument("coweight has wrong dimension");
  if (x >= group_.size()) throw std::invalid_argument("finite index out of range");
  if (lattice_ == TranslationLattice::Coroot && !root_system().in_coroot_lattice(lambda))
    throw std::invalid_argument("translation [" + join(lambda.coeffs) + "] is not in the coroot lattice");
  return {lambda, x};
}

AffineElt AffineWeylGroup::simple(int i) const {
  if (i < 0 || i > rank()) throw std::invalid_argument("affine simple index out of range");
  if (i == 0) return {theta_check_, group_.reflection_index(root_system().theta_index())};
  return {IntCoweight::zero(rank()), group_.right_simple(0, i - 1)};
}

AffineElt AffineWeylGroup::reflection(int k, Int m) const {
  return {m * root_system().coroot_pairing(k), group_.reflection_index(k)};
}

AffineElt AffineWeylGroup::multiply(const AffineElt& a, const AffineElt& b) const {
  return {a.lambda + group_.act(a.finite, b.lambda), group_.multiply(a.finite, b.finite)};
}

AffineElt AffineWeylGroup::inverse(const AffineElt& a) const {
  Index xi = group_.inverse(a.finite);
  return {-group_.act(xi, a.lambda), xi};
}

AffineElt AffineWeylGroup::left_mul(int i, const AffineElt& w) const {
  if (i == 0) {
    // s_0 t^lambda x = t^{theta^vee + s_theta lambda} s_theta x
    const int th = root_system().theta_index();
    Index st = group_.reflection_index(th);
    return {theta_check_ + group_.act(st, w.lambda), group_.multiply(st, w.finite)};
  }
  const Int li = w.lambda[i - 1];
  IntCoweight l = w.lambda;
  const IntMat& C = root_system().cartan();
  for (int j = 0; j < rank(); ++j) l[j] -= li * C(i - 1, j);
  return {l, group_.left_simple(i - 1, w.finite)};
}

AffineElt AffineWeylGroup::right_mul(const AffineElt& w, int i) const {
  if (i == 0) {
    return {w.lambda + x_theta_check_[w.finite],
            group_.right_reflection(w.finite, root_system().theta_index())};
  }
  return {w.lambda, group_.right_simple(w.finite, i - 1)};
}

int AffineWeylGroup::length(const AffineElt& w) const {
  const RootSystem& rs = root_system();
  int len = 0;
  for (int k = 0; k < rs.num_positive(); ++k) {
    Int v = rs.pairing(rs.root(k), w.lambda) - (group_.inverse_sends_negative(w.finite, k) ? 1 : 0);
    len += static_cast<int>(v < 0 ? -v : v);
  }
  return len;
}

bool AffineWeylGroup::is_left_descent(int i, const AffineElt& w) const {
  const RootSystem& rs = root_system();
  if (i == 0) {
    const int th = rs.theta_index();
    Int t = rs.pairing(rs.theta(), w.lambda);
    return t >= 2 || (t == 1 && !group_.inverse_sends_negative(w.finite, th));
  }
  Int li = w.lambda[i - 1];
  return li < 0 || (li == 0 && group_.inverse_sends_negative(w.finite, rs.simple_index(i - 1)));
}

bool AffineWeylGroup::is_right_descent(const AffineElt& w, int i) const {
  return is_left_descent(i, inverse(w));
}

IntVec AffineWeylGroup::omega(const AffineElt& w) const {
  IntVec c = adj_ * w.lambda.coeffs;
  for (int i = 0; i < c.size(); ++i) c[i] = ((c[i] % det_) + det_) % det_;
  return c;
}

std::uint64_t AffineWeylGroup::pack(const AffineElt& w) const {
  std::uint64_t key = w.finite;
  int shift = xbits_;
  for (int i = 0; i < rank(); ++i) {
    Int c = w.lambda[i];
    if (c > cmax_ || c < -cmax_)
      throw BudgetExceeded("translation coordinate " + std::to_string(c) + " exceeds packable range");
    key |= static_cast<std::uint64_t>(c + (Int{1} << (cbits_ - 1))) << shift;
    shift += cbits_;
  }
  return key;
}

AffineElt AffineWeylGroup::unpack(std::uint64_t key) const {
  AffineElt w;
  w.finite = static_cast<Index>(key & ((std::uint64_t{1} << xbits_) - 1));
  w.lambda = IntCoweight::zero(rank());
  int shift = xbits_;
  const std::uint64_t mask = (std::uint64_t{1} << cbits_) - 1;
  for (int i = 0; i < rank(); ++i) {
    w.lambda[i] = static_cast<Int>((key >> shift) & mask) - (Int{1} << (cbits_ - 1));
    shift += cbits_;
  }
  return w;
}

int geometric_length(const AffineWeylGroup& g, const AffineElt& w) {
  const RootSystem& rs = g.root_system();
  const int n = rs.rank();
  const Rational inv_h(1, rs.coxeter_number());
  Coweight p = Coweight::zero(n);
  for (int i = 0; i < n; ++i) p[i] = inv_h;
  Coweight img(RatVec(g.finite().coweight_action(w.finite).cast<Rational>() * p.coeffs));
  img += to_rational(w.lambda);
  int count = 0;
  for (int k = 0; k < rs.num_positive(); ++k) {
    Rational a = rs.pairing(rs.root(k), p);
    Rational b = rs.pairing(rs.root(k), img);
    Rational lo = std::min(a, b), hi = std::max(a, b);
    count += static_cast<int>(hi.ceil() - lo.floor() - 1);
  }
  return count;
}

AffineWord reduced_word(const AffineWeylGroup& g, const AffineElt& w) {
  AffineWord out;
  AffineElt y = w;
  const int n = g.rank();
  while (true) {
    int found = -1;
    for (int i = 0; i <= n && found < 0; ++i)
      if (g.is_left_descent(i, y)) found = i;
    if (found < 0) break;
    out.letters.push_back(found);
    y = g.left_mul(found, y);
  }
  out.omega = y;
  return out;
}

AffineElt from_word(const AffineWeylGroup& g, const std::vector<int>& letters) {
  AffineElt w = g.identity();
  for (int i : letters) w = g.right_mul(w, i);
  return w;
}

bool bruhat_leq(const AffineWeylGroup& g, const AffineElt& a, const AffineElt& b) {
  if (!g.same_omega(a, b)) return false;
  AffineElt x = a, y = b;
  int lx = g.length(x), ly = g.length(y);
  const int n = g.rank();
  while (true) {
    if (lx > ly) return false;
    if (ly == 0) return x == y;
    int s = 0;
    while (s <= n && !g.is_left_descent(s, y)) ++s;
    if (s > n) throw std::logic_error("no left descent");
    if (g.is_left_descent(s, x)) {
      x = g.left_mul(s, x);
      --lx;
    }
    y = g.left_mul(s, y);
    --ly;
  }
}

BruhatInterval lower_interval(const AffineWeylGroup& g, const AffineElt& w, int budget) {
  int len = g.length(w);
  if (len > budget)
    throw BudgetExceeded("interval below " + format_affine(g, w) + " has length " + std::to_string(len) +
                         " above budget " + std::to_string(budget));
  AffineWord word = reduced_word(g, w);
  std::vector<AffineElt> cur{g.identity()};
  KeySet seen;
  seen.insert(g.pack(cur[0]));
  for (int letter : word.letters) {
    const std::size_t count = cur.size();
    for (std::size_t j = 0; j < count; ++j) {
      AffineElt u = g.right_mul(cur[j], letter);
      if (seen.insert(g.pack(u))) cur.push_back(std::move(u));
    }
  }
  BruhatInterval out;
  out.top = w;
  out.members.reserve(cur.size());
  out.keys.reserve(cur.size());
  const bool trivial_omega = word.omega == g.identity();
  for (AffineElt& u : cur) {
    AffineElt v = trivial_omega ? std::move(u) : g.multiply(u, word.omega);
    out.keys.insert(g.pack(v));
    out.members.push_back(std::move(v));
  }
  return out;
}

std::vector<AffineElt> cocovers(const AffineWeylGroup& g, const AffineElt& w) {
  const RootSystem& rs = g.root_system();
  const int len = g.length(w);
  std::vector<AffineElt> out;
  for (int k = 0; k < rs.num_positive(); ++k) {
    // <alpha, w(p)> lies in (a, a + 1); hyperplanes <alpha, .> = m strictly between p and w(p).
    Int a = rs.pairing(rs.root(k), w.lambda) - (g.finite().inverse_sends_negative(w.finite, k) ? 1 : 0);
    Int lo = a >= 1 ? 1 : a + 1;
    Int hi = a >= 1 ? a : 0;
    for (Int m = lo; m <= hi; ++m) {
      AffineElt v = g.multiply(g.reflection(k, m), w);
      if (g.length(v) == len - 1) out.push_back(std::move(v));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

AffineElt demazure_star(const AffineWeylGroup& g, const AffineElt& x, const AffineElt& y) {
  AffineWord wy = reduced_word(g, y);
  AffineElt r = x;
  int lr = g.length(r);
  for (int i : wy.letters) {
    AffineElt z = g.right_mul(r, i);
    int lz = g.length(z);
    if (lz > lr) {
      r = std::move(z);
      lr = lz;
    }
  }
  return g.multiply(r, wy.omega);
}

AffineElt demazure_rtri(const AffineWeylGroup& g, const AffineElt& x, const AffineElt& y) {
  AffineWord wx = reduced_word(g, x);
  AffineElt z = g.multiply(wx.omega, y);
  for (auto it = wx.letters.rbegin(); it != wx.letters.rend(); ++it)
    if (g.is_left_descent(*it, z)) z = g.left_mul(*it, z);
  return z;
}

AffineElt demazure_ltri(const AffineWeylGroup& g, const AffineElt& x, const AffineElt& y) {
  AffineWord wy = reduced_word(g, y);
  AffineElt z = x;
  int lz = g.length(z);
  for (int j : wy.letters) {
    AffineElt t = g.right_mul(z, j);
    int lt = g.length(t);
    if (lt < lz) {
      z = std::move(t);
      lz = lt;
    }
  }
  return g.multiply(z, wy.omega);
}

std::string format_affine(const AffineWeylGroup& g, const AffineElt& w) {
  std::string out;
  bool zero = (w.lambda.coeffs.array() == 0).all();
  if (!zero) out = "t[" + join(w.lambda.coeffs) + "]";
  if (w.finite != 0 || zero) out += format_word(g.finite().word(w.finite));
  return out;
}

std::string format_affine_word(const std::vector<int>& letters) {
  if (letters.empty()) return "e";
  std::string out;
  for (int i : letters) out += "s" + std::to_string(i);
  return out;
}

}  // namespace adlv
