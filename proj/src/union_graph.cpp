#include "trirain/union_graph.hpp"

namespace trirain {

UnionGraph::UnionGraph(const TriangleFamily& f) : n_(f.n()), adj_(f.n(), 0) {
  for (MemberRef r : f.refs()) {
    for (Edge e : f.triangle(r).edges()) {
      adj_[e.u] |= 1ULL << e.v;
      adj_[e.v] |= 1ULL << e.u;
      owners_[e].push_back(r);
    }
  }
}

int UnionGraph::degree(int v) const { return popcount(adj_[v]); }

std::vector<Edge> UnionGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(owners_.size());
  for (const auto& [e, _] : owners_) out.push_back(e);
  return out;
}

const std::vector<MemberRef>& UnionGraph::owners(Edge e) const {
  static const std::vector<MemberRef> kNone;
  auto it = owners_.find(e);
  return it == owners_.end() ? kNone : it->second;
}

bool UnionGraph::independent(std::uint64_t set) const {
  for (std::uint64_t s = set; s; s &= s - 1) {
    if (adj_[lowest_bit(s)] & set) return false;
  }
  return true;
}

}  // namespace trirain
