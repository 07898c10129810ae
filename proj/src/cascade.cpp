#include "adlv/cascade.hpp"

#include <deque>
#include <functional>
#include <limits>
#include <queue>

namespace adlv {

bool is_involution(const GroupTable& G, Index x) { return G.inverse(x) == x; }

std::vector<Index> involutions(const GroupTable& G) {
  std::vector<Index> out;
  for (Index x = 0; x < G.size(); ++x)
    if (is_involution(G, x)) out.push_back(x);
  return out;
}

std::vector<int> minus_one_roots(const GroupTable& G, Index x) {
  if (!is_involution(G, x)) throw std::invalid_argument(format_word(G.word(x)) + " is not an involution");
  const RootSystem& rs = G.root_system();
  const WeylElt e = G.element(x);
  std::vector<int> out;
  for (int k = 0; k < rs.num_positive(); ++k)
    if (e(rs.root(k)) == -rs.root(k)) out.push_back(k);
  return out;
}

CascadeResult cascade_r(const GroupTable& G, Index x) {
  const RootSystem& rs = G.root_system();
  CascadeResult c;
  c.involution = x;
  c.r = CorootVec::zero(rs.rank());
  std::vector<int> rest = minus_one_roots(G, x);
  while (!rest.empty()) {
    std::vector<int> level;
    for (int k : rest) {
      bool maximal = true;
      for (int j : rest)
        if (j != k && root_leq(rs.root(k), rs.root(j))) maximal = false;
      if (maximal) level.push_back(k);
    }
    std::vector<int> next;
    for (int k : rest) {
      bool keep = true;
      for (int j : level)
        if (j == k || rs.pairing(rs.root(k), rs.coroot(j)) != 0) keep = false;
      if (keep) next.push_back(k);
    }
    for (int k : level) c.r += rs.coroot(k);
    c.levels.push_back(std::move(level));
    rest = std::move(next);
  }
  return c;
}

int dp_root(const RootSystem& rs, int k) { return (rs.reflection_length_of_root(k) + 1) / 2; }

DepthTables depth_tables(const GroupTable& G) {
  const RootSystem& rs = G.root_system();
  const int m = rs.num_positive();
  constexpr int kInf = std::numeric_limits<int>::max();
  DepthTables t;
  t.dp.assign(G.size(), kInf);
  using Item = std::pair<int, Index>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  t.dp[0] = 0;
  heap.push({0, 0});
  while (!heap.empty()) {
    auto [d, y] = heap.top();
    heap.pop();
    if (d != t.dp[y]) continue;
    for (int k = 0; k < m; ++k) {
      Index z = G.right_reflection(y, k);
      int nd = d + dp_root(rs, k);
      if (nd < t.dp[z]) {
        t.dp[z] = nd;
        heap.push({nd, z});
      }
    }
  }
  t.ell_red.assign(G.size(), kInf);
  t.ell_red[0] = 0;
  std::deque<Index> queue{0};
  while (!queue.empty()) {
    Index y = queue.front();
    queue.pop_front();
    for (int k = 0; k < m; ++k) {
      Index z = G.right_reflection(y, k);
      if (G.length(z) != G.length(y) + rs.reflection_length_of_root(k) || t.ell_red[z] != kInf) continue;
      t.ell_red[z] = t.ell_red[y] + 1;
      queue.push_back(z);
    }
  }
  return t;
}

std::vector<WtRRow> compare_wt_r(const QuantumBruhatGraph& q, const DepthTables& tables) {
  const GroupTable& G = q.group();
  std::vector<WtRRow> rows;
  for (Index x : involutions(G)) {
    WtRRow row;
    row.x = x;
    row.wt = q.wt1(x);
    row.r = cascade_r(G, x).r;
    row.dp = tables.dp[x];
    row.ell_red = tables.ell_red[x];
    row.ell_down = q.ell_down(x);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace adlv
