#pragma once

#include <optional>
#include <vector>

#include "tlc/ncpd_tree.hpp"

namespace tlc {

/// Per-side sign: +1 outward, -1 inward with respect to the side's block.
/// Indexed by the sides of traversal(t).
struct LocalCoorientation {
  std::vector<int> sigma;

  int size() const { return static_cast<int>(sigma.size()); }
  bool operator==(const LocalCoorientation&) const = default;
};

/// Default exhaustive-search limit, in sides.
inline constexpr int kDefaultBudget = 26;

struct BoundReport {
  int lower = 0;
  std::optional<int> exact;
  int upper = 0;
  int jt = 0;
  int bl = 0;
  std::optional<LocalCoorientation> witness;
};

/// Some continuous coorientation labels every 1- and 2-valent vertex '+', and
/// every '-' vertex of degree k >= 3 has at most k - 3 outgoing edges.
bool is_nonflattening(const NcpdTree& t);

bool is_admissible(const NcpdTree& t, const LocalCoorientation& cc);

/// A passage creates an inflection when its two sides have equal signs
/// across an undirected edge, or opposite signs across a directed edge.
int count_inflections(const NcpdTree& t, const LocalCoorientation& cc);

/// Whether passage p of `tr` creates an inflection under cc.
bool creates_inflection(const CurveTraversal& tr, const LocalCoorientation& cc, int p);

/// The local coorientation induced by a continuous coorientation.
LocalCoorientation continuous_local(const NcpdTree& t, const CoorientationLabels& labels);

/// Exact minimum by branch and bound when the traversal has at most `budget`
/// sides, together with both bounds. The witness is the lexicographically
/// least optimum in traversal order with +1 before -1.
BoundReport min_inflections(const NcpdTree& t, int budget = kDefaultBudget);

/// Number of cyclically consecutive leaf pairs with opposite labels.
int lower_bound_rev(const NcpdTree& t);

struct ConnectingPath {
  /// Traversal side indices from one leaf side to the next, inclusive.
  std::vector<int> sides;
  bool reversing = false;
};

/// One path per cyclically consecutive pair of leaves. Throws DegenerateLeafCount for n = 1.
std::vector<ConnectingPath> connecting_paths(const NcpdTree& t);

struct Thread {
  std::vector<int> sides;
  int path = -1;
};

struct Joint {
  std::vector<Vertex> blocks;
  Thread threads[2];
};

/// Maximal chains of degree-2 vertices joined by undirected edges.
std::vector<Joint> joints(const NcpdTree& t);

/// Signs for path.sides: first side +1, continued so every passage is smooth.
/// Throws PathReversing.
std::vector<int> standard_local_coorientation(const NcpdTree& t, const ConnectingPath& path);

struct UpperBound {
  int value = 0;
  int rev = 0;
  int jt = 0;
  int bl = 0;
};

/// rev + 2 (suspicious joints + suspicious blocks). Throws DegenerateLeafCount for n = 1.
UpperBound upper_bound(const NcpdTree& t);

}  // namespace tlc
