#pragma once

#include <span>
#include <vector>

namespace tlc {

using Vertex = int;
using EdgeId = int;

inline constexpr Vertex kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;

struct Edge {
  Vertex u;
  Vertex v;

  Vertex other(Vertex w) const { return w == u ? v : u; }
};

/// Directed half-edge used by contour walks.
struct Dart {
  Vertex from;
  Vertex to;
  EdgeId edge;
};

/// A tree embedded in the oriented plane, stored as a rotation system:
/// for each vertex, its neighbors in counterclockwise order.
///
/// The unique face is walked by the rule "arriving at v from u, leave
/// towards the neighbor following u in v's rotation". Every vertex of
/// degree d is visited d times by that walk.
class PlaneTree {
 public:
  /// Single vertex, no edges.
  PlaneTree();

  /// Throws Error(InvalidTree) unless the lists describe a tree in which every
  /// edge appears once in each endpoint's list.
  explicit PlaneTree(std::vector<std::vector<Vertex>> rotation);

  int vertex_count() const { return static_cast<int>(rotation_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int degree(Vertex v) const { return static_cast<int>(rotation_[v].size()); }

  std::span<const Vertex> neighbors(Vertex v) const { return rotation_[v]; }
  const std::vector<std::vector<Vertex>>& rotation() const { return rotation_; }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  /// Edge incident to v at position i of its rotation list.
  EdgeId incident_edge(Vertex v, int i) const { return incident_[v][i]; }
  EdgeId edge_between(Vertex u, Vertex v) const;
  /// Index of `neighbor` in v's rotation list, or -1.
  int position_of(Vertex v, Vertex neighbor) const;

  /// Contour walk of length 2(n-1) starting with the dart leaving `start`
  /// towards its neighbor at rotation index `first`. Empty for n = 1.
  std::vector<Dart> contour(Vertex start = 0, int first = 0) const;

  /// Leaves in the cyclic order met by the contour walk from vertex 0.
  std::vector<Vertex> leaves_in_contour_order() const;

  /// The same tree with every rotation list reversed (plane reflection).
  PlaneTree mirrored() const;

  bool operator==(const PlaneTree& other) const { return rotation_ == other.rotation_; }

 private:
  std::vector<std::vector<Vertex>> rotation_;
  std::vector<std::vector<EdgeId>> incident_;
  std::vector<Edge> edges_;
};

/// Path on n vertices, 0-1-...-(n-1).
PlaneTree make_path(int n);
/// Star with hub 0 and leaves 1..n-1 in counterclockwise order.
PlaneTree make_star(int n);

}  // namespace tlc
