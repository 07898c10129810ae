#pragma once

#include "adlv/qbg.hpp"

#include <vector>

namespace adlv {

bool is_involution(const GroupTable& G, Index x);
std::vector<Index> involutions(const GroupTable& G);

// Positive roots beta with x(beta) = -beta; x must be an involution.
std::vector<int> minus_one_roots(const GroupTable& G, Index x);

struct CascadeResult {
  Index involution = 0;
  std::vector<std::vector<int>> levels;  // root indices per level
  CorootVec r;
};

// Level i: dominance-maximal -1 roots orthogonal to every earlier level.
CascadeResult cascade_r(const GroupTable& G, Index x);

int dp_root(const RootSystem& rs, int k);

// dp and reduced reflection length for every element, indexed like G.
struct DepthTables {
  std::vector<int> dp;
  std::vector<int> ell_red;
};
DepthTables depth_tables(const GroupTable& G);

struct WtRRow {
  Index x = 0;
  CorootVec wt;
  CorootVec r;
  int dp = 0;
  int ell_red = 0;
  int ell_down = 0;
  bool match() const { return wt == r; }
};

// One row per involution, in group order.
std::vector<WtRRow> compare_wt_r(const QuantumBruhatGraph& q, const DepthTables& tables);

}  // namespace adlv
