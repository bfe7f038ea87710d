#pragma once

#include <utility>
#include <vector>

namespace graphcake {

/// Undirected connected social graph on agents 0..n-1.
///
/// Immutable after construction.  All tie-breaking is lexicographic (lowest
/// id first) so path and center selection are deterministic.  A single
/// isolated vertex (n = 1, no edges) is the only permitted degree-0 case.
class SocialGraph {
 public:
  SocialGraph(int n, const std::vector<std::pair<int, int>>& edges);

  int size() const { return static_cast<int>(adj_.size()); }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  bool adjacent(int u, int v) const;

  /// BFS distances from src.
  std::vector<int> distances_from(int src) const;

  int eccentricity(int v) const;

  /// Lowest-id vertex of minimum eccentricity.  Its eccentricity is at most
  /// floor(n/2) on any connected graph.
  int center_vertex() const;

  /// Deterministic shortest path u, ..., r: BFS from r; every vertex keeps
  /// its lowest-id parent (the smallest neighbor one step closer to r).
  std::vector<int> shortest_path(int u, int r) const;

  /// BFS visit order from src with ascending-id tie-breaking within levels.
  std::vector<int> bfs_order(int src) const;

  std::vector<std::pair<int, int>> edge_list() const;

 private:
  void check_vertex(int v) const;

  std::vector<std::vector<int>> adj_;
};

}  // namespace graphcake
