#include "adlv/qbg.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace adlv {

namespace {
constexpr int kUnreached = std::numeric_limits<int>::max();

struct InEdge {
  Index source;
  int root;
  bool down;
};
}  // namespace

QuantumBruhatGraph::QuantumBruhatGraph(const GroupTable& group) : group_(&group) {
  const RootSystem& rs = group.root_system();
  const std::size_t size = group.size();
  const int m = rs.num_positive();
  out_.resize(size);
  std::vector<std::vector<InEdge>> in(size);
  for (Index x = 0; x < size; ++x) {
    const int lx = group.length(x);
    for (int k = 0; k < m; ++k) {
      Index t = group.right_reflection(x, k);
      const int lt = group.length(t);
      if (lt == lx + 1) {
        out_[x].push_back({t, k, false});
        in[t].push_back({x, k, false});
      } else if (lt == lx - rs.two_rho_on_coroot(k) + 1) {
        out_[x].push_back({t, k, true});
        in[t].push_back({x, k, true});
      }
    }
  }

  // Reverse BFS into the identity over all edges.
  const int n = rs.rank();
  dist1_.assign(size, kUnreached);
  wt1_.assign(size, CorootVec::zero(n));
  std::deque<Index> queue{0};
  dist1_[0] = 0;
  while (!queue.empty()) {
    Index v = queue.front();
    queue.pop_front();
    for (const InEdge& e : in[v]) {
      if (dist1_[e.source] != kUnreached) continue;
      dist1_[e.source] = dist1_[v] + 1;
      wt1_[e.source] = wt1_[v];
      if (e.down) wt1_[e.source] += rs.coroot(e.root);
      queue.push_back(e.source);
    }
  }
  for (Index x = 0; x < size; ++x) {
    if (dist1_[x] == kUnreached) throw std::logic_error("quantum Bruhat graph: identity not reachable");
    for (const QbgEdge& e : out_[x]) {
      if (dist1_[e.target] != dist1_[x] - 1) continue;
      CorootVec w = wt1_[e.target];
      if (e.down) w += rs.coroot(e.root);
      if (!(w == wt1_[x]))
        throw std::logic_error("quantum Bruhat graph: shortest paths from " + format_word(group.word(x)) +
                               " to the identity carry different weights");
    }
  }
  PathData fwd = from(0, false);
  for (Index x = 0; x < size; ++x)
    if (fwd.dist[x] == kUnreached) throw std::logic_error("quantum Bruhat graph: not strongly connected");

  // Down-only reverse BFS; first-discovered parent gives the witness.
  down_dist_.assign(size, kUnreached);
  down_next_root_.assign(size, -1);
  down_dist_[0] = 0;
  queue.push_back(0);
  while (!queue.empty()) {
    Index v = queue.front();
    queue.pop_front();
    for (const InEdge& e : in[v]) {
      if (!e.down || down_dist_[e.source] != kUnreached) continue;
      down_dist_[e.source] = down_dist_[v] + 1;
      down_next_root_[e.source] = e.root;
      queue.push_back(e.source);
    }
  }
  for (Index x = 0; x < size; ++x) {
    if (down_dist_[x] != dist1_[x])
      throw std::logic_error("quantum Bruhat graph: down-only distance differs from d(x,1) at " +
                             format_word(group.word(x)));
  }
}

std::size_t QuantumBruhatGraph::edge_count() const {
  std::size_t c = 0;
  for (const auto& v : out_) c += v.size();
  return c;
}

PathData QuantumBruhatGraph::from(Index x, bool verify) const {
  const RootSystem& rs = root_system();
  PathData p;
  p.dist.assign(size(), kUnreached);
  p.weight.assign(size(), CorootVec::zero(rs.rank()));
  std::deque<Index> queue{x};
  p.dist[x] = 0;
  while (!queue.empty()) {
    Index u = queue.front();
    queue.pop_front();
    for (const QbgEdge& e : out_[u]) {
      if (p.dist[e.target] != kUnreached) {
        if (verify && p.dist[e.target] == p.dist[u] + 1) {
          CorootVec w = p.weight[u];
          if (e.down) w += rs.coroot(e.root);
          if (!(w == p.weight[e.target]))
            throw std::logic_error("quantum Bruhat graph: shortest paths from " +
                                   format_word(group_->word(x)) + " to " + format_word(group_->word(e.target)) +
                                   " carry different weights");
        }
        continue;
      }
      p.dist[e.target] = p.dist[u] + 1;
      p.weight[e.target] = p.weight[u];
      if (e.down) p.weight[e.target] += rs.coroot(e.root);
      queue.push_back(e.target);
    }
  }
  return p;
}

std::vector<int> QuantumBruhatGraph::rqrd(Index x) const {
  std::vector<int> path;
  while (x != 0) {
    int k = down_next_root_[x];
    path.push_back(k);
    x = group_->right_reflection(x, k);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

CorootVec wt_w0_closed_form(CartanType type, int n) {
  std::string reason;
  if (!is_valid_type(type, n, &reason)) throw std::invalid_argument(reason);
  CorootVec c = CorootVec::zero(n);
  auto set = [&](int i, Int v) { c[i - 1] = v; };  // 1-based
  switch (type) {
    case CartanType::A:
      for (int i = 1; i <= n; ++i) set(i, std::min(i, n + 1 - i));
      break;
    case CartanType::B:
      if (n % 2 == 0) {
        int k = n / 2;
        for (int j = 1; j <= k - 1; ++j) {
          set(2 * j - 1, 2 * j);
          set(2 * j, 2 * j);
        }
        set(2 * k - 1, 2 * k);
        set(2 * k, k);
      } else {
        int k = n / 2;
        for (int j = 1; j <= k; ++j) {
          set(2 * j - 1, 2 * j);
          set(2 * j, 2 * j);
        }
        set(2 * k + 1, k + 1);
      }
      break;
    case CartanType::C:
      for (int i = 1; i <= n; ++i) set(i, i);
      break;
    case CartanType::D: {
      int k = n / 2;
      for (int j = 1; j <= k - 1; ++j) {
        set(2 * j - 1, 2 * j);
        set(2 * j, 2 * j);
      }
      if (n % 2 == 0) {
        set(2 * k - 1, k);
        set(2 * k, k);
      } else {
        set(2 * k - 1, 2 * k);
        set(2 * k, k);
        set(2 * k + 1, k);
      }
      break;
    }
    case CartanType::E: {
      std::vector<Int> v = n == 6 ? std::vector<Int>{2, 2, 4, 6, 4, 2}
                           : n == 7 ? std::vector<Int>{2, 5, 6, 8, 7, 4, 3}
                                    : std::vector<Int>{4, 8, 10, 14, 12, 8, 6, 2};
      for (int i = 0; i < n; ++i) c[i] = v[i];
      break;
    }
    case CartanType::F:
      c = coroot_vec({2, 6, 4, 2});
      break;
    case CartanType::G:
      c = coroot_vec({2, 2});
      break;
  }
  return c;
}

std::vector<RootVec> w0_exhibit(CartanType type, int n) {
  std::vector<RootVec> out;
  auto range = [&](int lo, int hi) {  // alpha_lo + ... + alpha_hi, 1-based
    RootVec r = RootVec::zero(n);
    for (int i = lo; i <= hi; ++i) r[i - 1] = 1;
    return r;
  };
  switch (type) {
    case CartanType::A:
      for (int i = 1; i <= (n + 1) / 2; ++i) out.push_back(range(i, n + 1 - i));
      break;
    case CartanType::C:
      for (int i = 1; i <= n; ++i) {
        RootVec r = RootVec::zero(n);
        for (int j = i; j < n; ++j) r[j - 1] = 2;
        r[n - 1] = 1;
        out.push_back(r);
      }
      break;
    case CartanType::E:
      if (n == 6) {
        out = {root_vec({1, 2, 2, 3, 2, 1}), root_vec({1, 0, 1, 1, 1, 1}), root_vec({0, 0, 1, 1, 1, 0}),
               root_vec({0, 0, 0, 1, 0, 0})};
      } else if (n == 7) {
        out = {root_vec({2, 2, 3, 4, 3, 2, 1}), root_vec({0, 1, 1, 2, 2, 2, 1}), root_vec({0, 1, 1, 2, 1, 0, 0}),
               RootVec::unit(7, 1), RootVec::unit(7, 2), RootVec::unit(7, 4), RootVec::unit(7, 6)};
      } else {
        out = {root_vec({2, 3, 4, 6, 5, 4, 3, 2}), root_vec({2, 2, 3, 4, 3, 2, 1, 0}),
               root_vec({0, 1, 1, 2, 2, 2, 1, 0}), root_vec({0, 1, 1, 2, 1, 0, 0, 0}),
               RootVec::unit(8, 1), RootVec::unit(8, 2), RootVec::unit(8, 4), RootVec::unit(8, 6)};
      }
      break;
    case CartanType::F:
      out = {root_vec({2, 3, 4, 2}), root_vec({0, 1, 2, 2}), root_vec({0, 1, 2, 0}), RootVec::unit(4, 1)};
      break;
    case CartanType::G:
      out = {root_vec({3, 2}), RootVec::unit(2, 0)};
      break;
    default:
      break;
  }
  return out;
}

RqrdReport verify_rqrd(const RootSystem& rs, const WeylElt& x, const std::vector<RootVec>& factors,
                       const QuantumBruhatGraph* graph) {
  RqrdReport r;
  WeylElt prod = WeylElt::identity(rs.rank());
  int total = 0;
  for (const RootVec& b : factors) {
    int k = rs.root_index(b);
    if (k < 0) {
      r.reason = format_root(b) + " is not a positive root";
      return r;
    }
    if (!rs.is_quantum(k)) {
      r.reason = format_root(b) + " is not a quantum root";
      return r;
    }
    prod = prod * reflection(rs, b);
    total += rs.reflection_length_of_root(k);
  }
  if (!(prod == x)) {
    r.reason = "product of the reflections differs from the element";
    return r;
  }
  int len = length(rs, x);
  if (total != len) {
    r.reason = "lengths not additive: sum " + std::to_string(total) + " vs length " + std::to_string(len);
    return r;
  }
  const int k = static_cast<int>(factors.size());
  if (graph) {
    int down = graph->ell_down(graph->group().index_of(x));
    r.minimal_known = true;
    if (k != down) {
      r.reason = "not minimal: " + std::to_string(k) + " factors but the down-only distance is " +
                 std::to_string(down);
      return r;
    }
  } else {
    int lr = reflection_length(rs, x);
    if (k != lr) {
      r.reason = "minimality undetermined: " + std::to_string(k) + " factors above reflection length " +
                 std::to_string(lr);
      return r;
    }
    r.minimal_known = true;
  }
  r.valid = true;
  return r;
}

Int compute_M(const QuantumBruhatGraph& graph) {
  const RootSystem& rs = graph.root_system();
  Int best = std::numeric_limits<Int>::min();
  for (Index x = 0; x < graph.size(); ++x) {
    IntCoweight p = rs.to_pairing(graph.wt1(x));
    best = std::max(best, p.coeffs.maxCoeff());
  }
  return best;
}

Int m_tilde(CartanType type, int n) {
  switch (type) {
    case CartanType::A: return n + 1;
    case CartanType::B:
    case CartanType::C:
    case CartanType::D: return 2 * n;
    case CartanType::E: return n == 6 ? 12 : n == 7 ? 16 : 28;
    case CartanType::F: return 12;
    case CartanType::G: return 4;
  }
  return 0;
}

int ell_R_w0_table(CartanType type, int n) {
  switch (type) {
    case CartanType::A: return (n + 1) / 2;
    case CartanType::B:
    case CartanType::C: return n;
    case CartanType::D: return 2 * (n / 2);
    case CartanType::E: return n == 6 ? 4 : n == 7 ? 7 : 8;
    case CartanType::F: return 4;
    case CartanType::G: return 2;
  }
  return 0;
}

}  // namespace adlv
