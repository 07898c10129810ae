#pragma once

#include "adlv/weyl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace adlv {

struct QbgEdge {
  Index target;
  int root;   // positive root index
  bool down;  // down edges carry the coroot of `root` as weight
};

// Distances and path weights from one source to every vertex.
struct PathData {
  std::vector<int> dist;
  std::vector<CorootVec> weight;
};

// The quantum Bruhat graph on a finite Weyl group. The group table must outlive the graph.
class QuantumBruhatGraph {
 public:
  // Throws std::logic_error if the graph is not strongly connected or shortest
  // paths into the identity disagree on weight.
  explicit QuantumBruhatGraph(const GroupTable& group);

  const GroupTable& group() const { return *group_; }
  const RootSystem& root_system() const { return group_->root_system(); }
  std::size_t size() const { return group_->size(); }
  const std::vector<QbgEdge>& out_edges(Index x) const { return out_[x]; }
  std::size_t edge_count() const;

  // BFS from x. With verify set, every edge of the shortest-path DAG is checked
  // to reproduce the recorded weight (throws std::logic_error otherwise).
  PathData from(Index x, bool verify = true) const;
  CorootVec wt(Index x, Index y) const { return from(x).weight[y]; }
  int d_gamma(Index x, Index y) const { return from(x).dist[y]; }

  // wt(x) := wt(x, 1), and the down-only distance with its witness.
  const CorootVec& wt1(Index x) const { return wt1_[x]; }
  int dist_to_one(Index x) const { return dist1_[x]; }
  int ell_down(Index x) const { return down_dist_[x]; }
  // Root indices beta_1..beta_k with x = s_{beta_1} ... s_{beta_k}, length additive.
  std::vector<int> rqrd(Index x) const;

 private:
  const GroupTable* group_;
  std::vector<std::vector<QbgEdge>> out_;
  std::vector<CorootVec> wt1_;
  std::vector<int> dist1_;
  std::vector<int> down_dist_;
  std::vector<int> down_next_root_;
};

// Closed forms for wt(w_0) per Cartan type.
CorootVec wt_w0_closed_form(CartanType type, int rank);
// A reflection decomposition of w_0 into quantum reflections, for the types where one is tabulated
// (A, C, E, F, G); empty otherwise.
std::vector<RootVec> w0_exhibit(CartanType type, int rank);

struct RqrdReport {
  bool valid = false;
  bool minimal_known = false;
  std::string reason;  // empty when valid
};
// Checks quantum factors, product, length additivity and minimality. Minimality uses the
// graph when given, otherwise the reflection-length lower bound.
RqrdReport verify_rqrd(const RootSystem& rs, const WeylElt& x, const std::vector<RootVec>& factors,
                       const QuantumBruhatGraph* graph = nullptr);

// max over x and simple i of <alpha_i, wt(x)>.
Int compute_M(const QuantumBruhatGraph& graph);
// Tabulated upper bound for compute_M.
Int m_tilde(CartanType type, int rank);
// Tabulated reflection length of w_0.
int ell_R_w0_table(CartanType type, int rank);

}  // namespace adlv
