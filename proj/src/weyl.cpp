#include "adlv/weyl.hpp"

#include <algorithm>
#include <deque>

namespace adlv {

WeylElt simple_reflection(const RootSystem& rs, int i) {
  const int n = rs.rank();
  if (i < 0 || i >= n) throw std::invalid_argument("simple reflection index out of range");
  const IntMat& C = rs.cartan();
  IntMat m = IntMat::Identity(n, n);
  IntMat r = IntMat::Identity(n, n);
  for (int j = 0; j < n; ++j) {
    m(j, i) -= C(i, j);
    r(i, j) -= C(i, j);
  }
  return WeylElt(m, r);
}

WeylElt reflection(const RootSystem& rs, const RootVec& beta) {
  RootVec pos = is_positive(beta) ? beta : -beta;
  int k = rs.root_index(pos);
  if (k < 0) throw std::invalid_argument("reflection: " + format_root(beta) + " is not a root");
  const int n = rs.rank();
  const IntVec& b = pos.coeffs;
  const IntVec& p = rs.coroot_pairing(k).coeffs;
  IntMat m = IntMat::Identity(n, n) - p * b.transpose();
  IntMat r = IntMat::Identity(n, n) - b * p.transpose();
  return WeylElt(m, r);
}

WeylElt from_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylElt x = WeylElt::identity(rs.rank());
  for (int i : word) x = x * simple_reflection(rs, i);
  return x;
}

int length(const RootSystem& rs, const WeylElt& x) {
  int len = 0;
  for (const RootVec& b : rs.positive_roots())
    if (!is_positive(x(b))) ++len;
  return len;
}

std::vector<RootVec> inv_set(const RootSystem& rs, const WeylElt& x) {
  std::vector<RootVec> out;
  for (const RootVec& b : rs.positive_roots())
    if (!is_positive(x(b))) out.push_back(b);
  return out;
}

std::vector<int> reduced_word(const RootSystem& rs, const WeylElt& x) {
  std::vector<int> word;
  WeylElt y = x;
  const int n = rs.rank();
  while (true) {
    int found = -1;
    for (int i = 0; i < n && found < 0; ++i) {
      // s_i y < y iff y^{-1}(alpha_i) < 0; y^{-1} acts on roots by the transposed coweight matrix.
      RootVec img(IntVec(y.coweight_action().row(i).transpose()));
      if (!is_positive(img)) found = i;
    }
    if (found < 0) break;
    word.push_back(found);
    y = simple_reflection(rs, found) * y;
  }
  return word;
}

WeylElt longest_element(const RootSystem& rs) {
  const int n = rs.rank();
  WeylElt x = WeylElt::identity(n);
  while (true) {
    int asc = -1;
    for (int i = 0; i < n && asc < 0; ++i) {
      RootVec img(IntVec(x.root_action().col(i)));
      if (is_positive(img)) asc = i;
    }
    if (asc < 0) return x;
    x = x * simple_reflection(rs, asc);
  }
}

int reflection_length(const RootSystem& rs, const WeylElt& x) {
  const int n = rs.rank();
  IntMat d = x.coweight_action() - IntMat::Identity(n, n);
  return rank_exact(RatMat(d.cast<Rational>()));
}

std::pair<Coweight, WeylElt> dominant_rep(const RootSystem& rs, const Coweight& lambda) {
  Coweight l = lambda;
  WeylElt w = WeylElt::identity(rs.rank());
  while (true) {
    int neg = -1;
    for (int i = 0; i < l.size() && neg < 0; ++i)
      if (l[i] < 0) neg = i;
    if (neg < 0) return {l, w};
    WeylElt s = simple_reflection(rs, neg);
    l = s(l);
    w = s * w;
  }
}

std::pair<IntCoweight, WeylElt> dominant_rep(const RootSystem& rs, const IntCoweight& lambda) {
  auto [l, w] = dominant_rep(rs, to_rational(lambda));
  IntCoweight out = IntCoweight::zero(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) out[i] = l[i].num();
  return {out, w};
}

CorootVec apply(const RootSystem& rs, const WeylElt& x, const CorootVec& c) {
  return rs.to_coroot_lattice(x(rs.to_pairing(c)));
}

std::uint64_t classical_group_order(CartanType t, int n) {
  auto fact = [](int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  switch (t) {
    case CartanType::A: return fact(n + 1);
    case CartanType::B:
    case CartanType::C: return (std::uint64_t{1} << n) * fact(n);
    case CartanType::D: return (std::uint64_t{1} << (n - 1)) * fact(n);
    case CartanType::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case CartanType::F: return 1152;
    case CartanType::G: return 12;
  }
  return 0;
}

namespace {
IntCoweight key_of(const IntMat& m) { return IntCoweight(IntVec(m.rowwise().sum())); }
}  // namespace

GroupTable GroupTable::enumerate(const RootSystem& rs, std::size_t cap) {
  std::uint64_t order = classical_group_order(rs.type(), rs.rank());
  if (order > cap) {
    throw BudgetExceeded("|W(" + rs.name() + ")| = " + std::to_string(order) + " exceeds group cap " +
                         std::to_string(cap));
  }
  const int n = rs.rank();
  GroupTable g;
  g.rs_ = rs;

  std::vector<IntMat> gens;
  for (int i = 0; i < n; ++i) gens.push_back(simple_reflection(rs, i).coweight_action());

  // Breadth-first closure; BFS depth is the length, so the recorded words are reduced.
  std::vector<IntMat> mats{IntMat::Identity(n, n)};
  std::vector<std::vector<int>> words{{}};
  std::unordered_map<IntCoweight, Index, CoordsHash<PairingBasis, Int>> seen;
  seen.emplace(key_of(mats[0]), 0);
  for (std::size_t head = 0; head < mats.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      IntMat m = mats[head] * gens[i];
      IntCoweight k = key_of(m);
      if (seen.count(k)) continue;
      seen.emplace(k, static_cast<Index>(mats.size()));
      mats.push_back(m);
      std::vector<int> w = words[head];
      w.push_back(i);
      words.push_back(std::move(w));
    }
  }
  if (mats.size() != order) throw std::logic_error("group enumeration produced a wrong order");

  std::vector<std::size_t> perm(mats.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (words[a].size() != words[b].size()) return words[a].size() < words[b].size();
    return std::lexicographical_compare(mats[a].data(), mats[a].data() + n * n, mats[b].data(),
                                        mats[b].data() + n * n);
  });
  const std::size_t size = mats.size();
  g.actions_.reserve(size);
  g.words_.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    g.actions_.push_back(mats[perm[i]]);
    g.words_.push_back(words[perm[i]]);
    g.length_.push_back(static_cast<int>(words[perm[i]].size()));
    g.index_.emplace(key_of(g.actions_.back()), static_cast<Index>(i));
  }

  const int m = rs.num_positive();
  std::vector<IntMat> refls;
  for (int k = 0; k < m; ++k) refls.push_back(reflection(rs, rs.root(k)).coweight_action());
  g.right_.resize(size * n);
  g.refl_.resize(size * m);
  g.inv_neg_.resize(size * m);
  for (std::size_t x = 0; x < size; ++x) {
    for (int i = 0; i < n; ++i) g.right_[x * n + i] = g.index_.at(key_of(g.actions_[x] * gens[i]));
    IntVec rho_img = g.actions_[x].rowwise().sum();
    for (int k = 0; k < m; ++k) {
      g.refl_[x * m + k] = g.index_.at(key_of(g.actions_[x] * refls[k]));
      g.inv_neg_[x * m + k] = rs.root(k).coeffs.dot(rho_img) < 0 ? 1 : 0;
    }
  }
  g.inverse_.resize(size);
  for (std::size_t x = 0; x < size; ++x) {
    Index y = 0;
    const auto& w = g.words_[x];
    for (auto it = w.rbegin(); it != w.rend(); ++it) y = g.right_[static_cast<std::size_t>(y) * n + *it];
    g.inverse_[x] = y;
  }
  return g;
}

std::optional<Index> GroupTable::find(const WeylElt& x) const {
  auto it = index_.find(key_of(x.coweight_action()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Index GroupTable::index_of(const WeylElt& x) const {
  auto r = find(x);
  if (!r) throw std::invalid_argument("element not in group table");
  return *r;
}

Index GroupTable::multiply(Index a, Index b) const {
  for (int i : words_[b]) a = right_simple(a, i);
  return a;
}

Index GroupTable::from_word(const std::vector<int>& word) const {
  Index x = 0;
  for (int i : word) {
    if (i < 0 || i >= rank()) throw std::invalid_argument("letter out of range");
    x = right_simple(x, i);
  }
  return x;
}

bool bruhat_leq(const GroupTable& g, Index x, Index y) {
  const int n = g.rank();
  while (true) {
    if (g.length(x) > g.length(y)) return false;
    if (g.length(y) == 0) return x == y;
    int s = 0;
    while (s < n && !g.is_left_descent(s, y)) ++s;
    if (s >= n) throw std::logic_error("no left descent");
    if (g.is_left_descent(s, x)) x = g.left_simple(s, x);
    y = g.left_simple(s, y);
  }
}

Index demazure_star(const GroupTable& g, Index x, Index y) {
  for (int i : g.word(y)) {
    Index z = g.right_simple(x, i);
    if (g.length(z) > g.length(x)) x = z;
  }
  return x;
}

Index demazure_rtri(const GroupTable& g, Index x, Index y) {
  const auto& w = g.word(x);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (g.is_left_descent(*it, y)) y = g.left_simple(*it, y);
  }
  return y;
}

Index demazure_ltri(const GroupTable& g, Index x, Index y) {
  for (int j : g.word(y)) {
    if (g.is_right_descent(x, j)) x = g.right_simple(x, j);
  }
  return x;
}

std::string format_word(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string out;
  for (int i : word) out += "s" + std::to_string(i + 1);
  return out;
}

}  // namespace adlv
