#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tlc/plane_tree.hpp"

namespace tlc {

/// Direction of a tree edge {u, v} (u < v as stored in PlaneTree::edges()).
/// A directed edge points from the containing block to the contained one.
enum class EdgeState : std::uint8_t { Undirected, UtoV, VtoU };

using DirectionMap = std::vector<EdgeState>;

/// Vertex the edge is directed from, if any.
std::optional<Vertex> edge_source(const Edge& e, EdgeState s);
/// State of edge e when directed from `source`.
EdgeState directed_from(const Edge& e, Vertex source);

/// Noncolliding: some vertex r has every directed edge pointing away from r.
bool validate_noncolliding(const PlaneTree& base, const DirectionMap& direction);

/// Plane tree plus a noncolliding partial orientation; the complete
/// combinatorial invariant of a tree-like curve class.
class NcpdTree {
 public:
  /// Single vertex.
  NcpdTree() = default;
  /// Throws Error(Colliding) when the map is not noncolliding.
  NcpdTree(PlaneTree base, DirectionMap direction);

  const PlaneTree& base() const { return base_; }
  const DirectionMap& direction() const { return direction_; }
  EdgeState state(EdgeId e) const { return direction_[e]; }
  bool is_directed(EdgeId e) const { return direction_[e] != EdgeState::Undirected; }

  int vertex_count() const { return base_.vertex_count(); }
  int degree(Vertex v) const { return base_.degree(v); }
  /// Number of edges directed away from v (blocks contained in block v).
  int outgoing(Vertex v) const;
  /// A vertex every directed edge points away from.
  Vertex source_root() const;

 private:
  PlaneTree base_;
  DirectionMap direction_;
};

/// Nested-parenthesis text: "(>()-())". Children follow the rotation order;
/// '>' parent contains child, '<' child contains parent, '-' undirected.
/// Throws ParseError (with column) or Error(Colliding).
NcpdTree parse_tree(std::string_view text);
/// Text form rooted at vertex 0, children starting at rotation index 0.
std::string format_tree(const NcpdTree& t);
/// Text form rooted at `root`, its children starting at rotation index `first`.
std::string encode_rooted(const NcpdTree& t, Vertex root, int first);

struct CoorientationLabels {
  std::vector<int> label;  // +1 outward, -1 inward
  Vertex root = 0;
  int sign = 1;
};

/// Labels flip across undirected edges and persist across directed ones.
CoorientationLabels coorientation(const NcpdTree& t, Vertex root = 0, int sign = 1);

/// |sum of block labels|.
int whitney_index(const NcpdTree& t);

struct Side {
  Vertex vertex;
  /// Sector between rotation positions `sector` and `sector + 1` of `vertex`.
  int sector;
};

struct Passage {
  EdgeId edge;
  Vertex from;
  Vertex to;
  EdgeState state;
};

/// Sides and passages in contour-walk order starting at vertex 0.
/// Passage i leads from side i to side i + 1 (cyclically).
struct CurveTraversal {
  std::vector<Side> sides;
  std::vector<Passage> passages;

  int size() const { return static_cast<int>(sides.size()); }
};

/// Empty for n = 1.
CurveTraversal traversal(const NcpdTree& t);

/// Equal for trees related by an orientation-preserving plane homeomorphism;
/// with `reflect`, orientation-reversing ones are identified as well.
std::string canonical_code(const NcpdTree& t, bool reflect = false);
/// Canonical code of the undirected plane tree.
std::string canonical_code(const PlaneTree& tree, bool reflect = false);

enum class CenterKind { Vertex, Edge };

struct SymmetryInfo {
  int order = 1;
  CenterKind center_kind = CenterKind::Vertex;
  Vertex center_vertex = 0;
  EdgeId center_edge = kNoEdge;
  /// Generator of the rotation group as a vertex permutation.
  std::vector<Vertex> generator;
};

/// Classical center of the tree (leaf peeling): one vertex or one edge.
SymmetryInfo tree_center(const PlaneTree& tree);
/// Cyclic group of planar automorphisms.
SymmetryInfo planar_automorphisms(const PlaneTree& tree);

/// Image of a direction map under a vertex permutation that is a planar
/// automorphism of `base`.
DirectionMap apply_automorphism(const PlaneTree& base, const std::vector<Vertex>& perm,
                                const DirectionMap& direction);

}  // namespace tlc
