#include "graphcake/graph.h"

#include <algorithm>
#include <queue>
#include <string>

#include "graphcake/errors.h"

namespace graphcake {

SocialGraph::SocialGraph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw InvalidEdge("graph needs at least one vertex");
  adj_.assign(static_cast<std::size_t>(n), {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw InvalidEdge("edge endpoint out of range");
    }
    if (u == v) throw InvalidEdge("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  std::vector<int> dist = distances_from(0);
  for (int d : dist) {
    if (d < 0) throw DisconnectedGraph("social graph is not connected");
  }
}

void SocialGraph::check_vertex(int v) const {
  if (v < 0 || v >= size()) throw UnknownAgent("unknown vertex " + std::to_string(v));
}

const std::vector<int>& SocialGraph::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

int SocialGraph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool SocialGraph::adjacent(int u, int v) const {
  const auto& nbrs = neighbors(u);
  check_vertex(v);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<int> SocialGraph::distances_from(int src) const {
  check_vertex(src);
  std::vector<int> dist(adj_.size(), -1);
  std::queue<int> q;
  dist[static_cast<std::size_t>(src)] = 0;
  q.push(src);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj_[static_cast<std::size_t>(v)]) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

int SocialGraph::eccentricity(int v) const {
  std::vector<int> dist = distances_from(v);
  return *std::max_element(dist.begin(), dist.end());
}

int SocialGraph::center_vertex() const {
  int best = 0;
  int best_ecc = eccentricity(0);
  for (int v = 1; v < size(); ++v) {
    int e = eccentricity(v);
    if (e < best_ecc) {
      best = v;
      best_ecc = e;
    }
  }
  return best;
}

std::vector<int> SocialGraph::shortest_path(int u, int r) const {
  check_vertex(u);
  std::vector<int> dist = distances_from(r);
  std::vector<int> path{u};
  int cur = u;
  while (cur != r) {
    int next = -1;
    for (int w : adj_[static_cast<std::size_t>(cur)]) {
      if (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(cur)] - 1) {
        next = w;  // neighbors are ascending, so the first hit is the lowest id
        break;
      }
    }
    path.push_back(next);
    cur = next;
  }
  return path;
}

std::vector<int> SocialGraph::bfs_order(int src) const {
  std::vector<int> dist = distances_from(src);
  std::vector<int> order(adj_.size());
  for (int v = 0; v < size(); ++v) order[static_cast<std::size_t>(v)] = v;
  std::stable_sort(order.begin(), order.end(), [&dist](int a, int b) {
    return dist[static_cast<std::size_t>(a)] < dist[static_cast<std::size_t>(b)];
  });
  return order;  // within a level ids stay ascending (stable sort over 0..n-1)
}

std::vector<std::pair<int, int>> SocialGraph::edge_list() const {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < size(); ++v) {
    for (int w : adj_[static_cast<std::size_t>(v)]) {
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return edges;
}

}  // namespace graphcake
