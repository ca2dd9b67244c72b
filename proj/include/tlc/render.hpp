#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "tlc/gauss.hpp"
#include "tlc/inflect.hpp"
#include "tlc/ncpd_tree.hpp"

namespace tlc {

using Point = Eigen::Vector2d;

struct RenderOptions {
  /// Child size relative to the shorter parent side at its corner.
  double contraction = 0.35;
  int max_retries = 20;
  int samples_per_side = 64;
  std::uint64_t seed = 0;
};

/// Samples [begin, end) of the polyline belong to traversal side `side`.
struct SideRange {
  int side;
  int begin;
  int end;
};

struct Crossing {
  /// Polyline segment indices, a < b; segment i joins samples i and i+1 (cyclically).
  int seg_a;
  int seg_b;
  /// Curve parameters: segment index plus fraction along it.
  double param_a;
  double param_b;
  Point point;
  /// Angle between the two segments, radians in [0, pi/2].
  double angle;
};

struct RealizedCurve {
  /// Closed polyline in the unit square; the last sample connects back to the first.
  std::vector<Point> samples;
  std::vector<SideRange> sides;
  std::vector<Crossing> crossings;
  /// Block of each traversal side.
  std::vector<Vertex> side_block;
  /// A point inside each block, near the middle of one of its sides.
  std::vector<Point> block_interior;
  /// Contraction factor that succeeded.
  double contraction = 0;
};

/// Builds a curve whose blocks follow t: one smooth closed block per vertex,
/// children glued at corners, directed children inside, undirected outside.
/// Throws RealizationFailed after the retry schedule.
RealizedCurve realize(const NcpdTree& t, const RenderOptions& opts = {});

/// All transversal self-intersections of a closed polyline.
/// Throws TangentialCrossing when two segments meet at an angle below 1e-3 rad.
std::vector<Crossing> find_crossings(const std::vector<Point>& samples);

/// Crossing labels read along the polyline.
GaussDiagram verify_gauss(const RealizedCurve& rc);

/// Sign changes of discrete curvature, ignoring |curvature| < 1e-6.
int numeric_inflections(const RealizedCurve& rc);

/// Total signed turning of the closed polyline, radians.
double discrete_turning(const std::vector<Point>& samples);
/// Turning divided by 2 pi, rounded.
int turning_number(const RealizedCurve& rc);

/// Boundary polygon of block v (its own sides only).
std::vector<Point> block_polygon(const RealizedCurve& rc, Vertex v);

bool point_in_polygon(const Point& p, const std::vector<Point>& polygon);

/// Directed u->v: v's interior point lies inside u's polygon. Undirected: each
/// block's interior point lies outside the other's polygon.
bool nesting_fidelity(const NcpdTree& t, const RealizedCurve& rc);

struct SvgOptions {
  int width = 512;
  int height = 512;
  double stroke_width = 1.5;
  bool crossing_markers = true;
  /// Per-side colouring: +1 green, -1 red.
  std::optional<LocalCoorientation> coorientation;
  /// Passages to mark as created inflections.
  std::vector<int> inflection_passages;
};

std::string to_svg(const RealizedCurve& rc, const SvgOptions& opts = {});

}  // namespace tlc
