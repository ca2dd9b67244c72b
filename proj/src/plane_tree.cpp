#include "tlc/plane_tree.hpp"

#include <algorithm>
#include <string>

#include "tlc/error.hpp"

namespace tlc {

PlaneTree::PlaneTree() : rotation_(1), incident_(1) {}

PlaneTree::PlaneTree(std::vector<std::vector<Vertex>> rotation)
    : rotation_(std::move(rotation)) {
  const int n = vertex_count();
  if (n == 0) throw Error(ErrorCode::InvalidTree, "tree must have at least one vertex");

  incident_.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    incident_[v].assign(rotation_[v].size(), kNoEdge);
    for (Vertex w : rotation_[v]) {
      if (w < 0 || w >= n || w == v)
        throw Error(ErrorCode::InvalidTree, "bad neighbor " + std::to_string(w) + " at vertex " +
                                                std::to_string(v));
    }
  }
  std::vector<Edge> pairs;
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : rotation_[v]) {
      if (std::count(rotation_[v].begin(), rotation_[v].end(), w) != 1 ||
          std::count(rotation_[w].begin(), rotation_[w].end(), v) != 1)
        throw Error(ErrorCode::InvalidTree, "edge " + std::to_string(v) + "-" + std::to_string(w) +
                                                " must appear once in each endpoint's list");
      if (v < w) pairs.push_back({v, w});
    }
  }
  // ids depend only on endpoints, so mirrored copies share direction maps
  std::sort(pairs.begin(), pairs.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  edges_ = std::move(pairs);
  for (EdgeId e = 0; e < static_cast<EdgeId>(edges_.size()); ++e) {
    const auto [u, v] = edges_[e];
    incident_[u][position_of(u, v)] = e;
    incident_[v][position_of(v, u)] = e;
  }
  if (edge_count() != n - 1) throw Error(ErrorCode::InvalidTree, "a tree on n vertices has n-1 edges");

  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : rotation_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) throw Error(ErrorCode::InvalidTree, "tree is disconnected");
}

EdgeId PlaneTree::edge_between(Vertex u, Vertex v) const {
  const int i = position_of(u, v);
  return i < 0 ? kNoEdge : incident_[u][i];
}

int PlaneTree::position_of(Vertex v, Vertex neighbor) const {
  const auto& rot = rotation_[v];
  const auto it = std::find(rot.begin(), rot.end(), neighbor);
  return it == rot.end() ? -1 : static_cast<int>(it - rot.begin());
}

std::vector<Dart> PlaneTree::contour(Vertex start, int first) const {
  std::vector<Dart> walk;
  if (edge_count() == 0) return walk;
  const int length = 2 * edge_count();
  walk.reserve(length);
  Vertex from = start;
  int index = first;
  for (int step = 0; step < length; ++step) {
    const Vertex to = rotation_[from][index];
    walk.push_back({from, to, incident_[from][index]});
    index = (position_of(to, from) + 1) % degree(to);
    from = to;
  }
  return walk;
}

std::vector<Vertex> PlaneTree::leaves_in_contour_order() const {
  std::vector<Vertex> leaves;
  for (const Dart& d : contour())
    if (degree(d.to) == 1) leaves.push_back(d.to);
  return leaves;
}

PlaneTree PlaneTree::mirrored() const {
  auto rot = rotation_;
  for (auto& list : rot) std::reverse(list.begin(), list.end());
  return PlaneTree(std::move(rot));
}

PlaneTree make_path(int n) {
  std::vector<std::vector<Vertex>> rot(n);
  for (Vertex v = 0; v + 1 < n; ++v) {
    rot[v].push_back(v + 1);
    rot[v + 1].push_back(v);
  }
  return PlaneTree(std::move(rot));
}

PlaneTree make_star(int n) {
  std::vector<std::vector<Vertex>> rot(n);
  for (Vertex v = 1; v < n; ++v) {
    rot[0].push_back(v);
    rot[v].push_back(0);
  }
  return PlaneTree(std::move(rot));
}

}  // namespace tlc
