#include "tlc/render.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "tlc/error.hpp"

namespace tlc {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDeg = kPi / 180.0;

// Corner angle limits and the slack required of each block's side turning.
constexpr double kThetaLo = 25.0;
constexpr double kThetaHi = 155.0;
constexpr double kMargin = 15.0;

constexpr double kIntersectTol = 1e-9;
constexpr double kMinCrossingAngle = 1e-3;
constexpr double kFlatCurvature = 1e-6;

Point unit(double heading) { return {std::cos(heading), std::sin(heading)}; }

double cross(const Point& a, const Point& b) { return a.x() * b.y() - a.y() * b.x(); }

// Circular arc (or segment when k == 0) by start point, heading, curvature and length.
struct Arc {
  Point a;
  double h;
  double k;
  double len;

  Point at(double s) const {
    if (std::abs(k * len) < 1e-12) return a + s * unit(h);
    return a + Point(std::sin(h + k * s) - std::sin(h), std::cos(h) - std::cos(h + k * s)) / k;
  }
};

Arc arc_to(const Point& a, double h, const Point& b) {
  const Point c = b - a;
  const double chord = c.norm();
  const double beta = std::atan2(cross(unit(h), c), unit(h).dot(c));
  const double len = std::abs(beta) < 1e-9 ? chord : chord * beta / std::sin(beta);
  return {a, h, len > 0 ? 2 * beta / len : 0.0, len};
}

// Two tangent-continuous arcs from (p0, h0) to (p1, h1), equal tangent lengths.
std::vector<Point> sample_biarc(const Point& p0, double h0, const Point& p1, double h1, int m) {
  const Point t0 = unit(h0), t1 = unit(h1);
  const Point v = p1 - p0;
  const Point t = t0 + t1;
  const double a = 2 * (1 - t0.dot(t1));
  double d;
  if (a < 1e-12) {
    d = v.dot(v) / (2 * v.dot(t));
  } else {
    const double vt = v.dot(t);
    d = (-vt + std::sqrt(vt * vt + a * v.dot(v))) / a;
  }
  const Point q0 = p0 + d * t0;
  const Point q1 = p1 - d * t1;
  const Point join = (q0 + q1) / 2;
  const Arc first = arc_to(p0, h0, join);
  const double hj = std::atan2((q1 - q0).y(), (q1 - q0).x());
  const Arc second = arc_to(join, hj, p1);
  const double total = first.len + second.len;
  std::vector<Point> out;
  out.reserve(m);
  for (int i = 0; i < m; ++i) {
    const double s = (i + 0.5) / m * total;
    out.push_back(s < first.len ? first.at(s) : second.at(s - first.len));
  }
  return out;
}

// One block in its own frame: corner j, then side j towards corner j + 1.
struct BlockShape {
  std::vector<Point> corner;
  std::vector<double> in_heading;
  std::vector<double> out_heading;
  std::vector<std::vector<Point>> side;
  std::vector<double> clearance;
};

bool chords_simple(const std::vector<Point>& v) {
  const int k = static_cast<int>(v.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      const Point p = v[i], r = v[(i + 1) % k] - p;
      const Point q = v[j], s = v[(j + 1) % k] - q;
      const double den = cross(r, s);
      if (std::abs(den) < 1e-12) continue;
      const double tt = cross(q - p, s) / den, uu = cross(q - p, r) / den;
      if (tt > -1e-9 && tt < 1 + 1e-9 && uu > -1e-9 && uu < 1 + 1e-9) return false;
    }
  return true;
}

// Chord polygon with exterior angles e (degrees, counterclockwise, summing to 360).
// Lengths are the point of the closure constraint nearest to all ones.
std::optional<std::vector<Point>> closed_chords(const std::vector<double>& e) {
  const int k = static_cast<int>(e.size());
  for (double ej : e)
    if (std::abs(ej) > 170) return std::nullopt;
  Eigen::MatrixXd u(2, k);
  double heading = 0;
  for (int j = 0; j < k; ++j) {
    if (j > 0) heading += e[j] * kDeg;
    u.col(j) = unit(heading);
  }
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(k);
  const Eigen::Matrix2d gram = u * u.transpose();
  if (std::abs(gram.determinant()) < 1e-9) return std::nullopt;
  const Eigen::VectorXd len = ones - u.transpose() * gram.ldlt().solve(u * ones);
  if (len.minCoeff() < 0.2 * len.maxCoeff()) return std::nullopt;
  std::vector<Point> v(k);
  v[0] = Point::Zero();
  for (int j = 0; j + 1 < k; ++j) v[j + 1] = v[j] + len[j] * u.col(j);
  if (!chords_simple(v)) return std::nullopt;
  // reject slivers: isoperimetric ratio of the chord polygon
  double area = 0, perimeter = 0;
  for (int j = 0; j < k; ++j) {
    area += cross(v[j], v[(j + 1) % k]) / 2;
    perimeter += len[j];
  }
  if (4 * kPi * area < 0.3 * perimeter * perimeter) return std::nullopt;
  return v;
}

// Convex chord polygon circumscribed about the unit circle.
std::vector<Point> tangential_chords(const std::vector<double>& e) {
  const int k = static_cast<int>(e.size());
  std::vector<Point> v(k);
  double psi = -kPi / 2;  // normal of side k-1
  for (int j = 0; j < k; ++j) {
    const double ej = e[j] * kDeg;
    v[j] = unit(psi + ej / 2) / std::cos(ej / 2);
    psi += ej;
  }
  return v;
}

// Counterclockwise block with interior corner angles alpha (degrees).
BlockShape block_ccw(const std::vector<double>& alpha, int m) {
  const int k = static_cast<int>(alpha.size());
  BlockShape b;
  b.corner.resize(k);
  b.in_heading.resize(k);
  b.out_heading.resize(k);
  b.side.resize(k);
  b.clearance.resize(k);

  if (k == 1) {
    // one loop of the curve r = cos(phi) - cos(alpha/2) about its double point
    const double phi0 = alpha[0] * kDeg / 2;
    b.corner[0] = Point::Zero();
    b.out_heading[0] = -phi0;
    b.in_heading[0] = phi0 + kPi;
    for (int i = 0; i < m; ++i) {
      const double phi = -phi0 + (i + 0.5) / m * 2 * phi0;
      b.side[0].push_back((std::cos(phi) - std::cos(phi0)) * unit(phi));
    }
    b.clearance[0] = 1 - std::cos(phi0);
    return b;
  }

  if (k == 2) {
    const double bis = kPi / 2;
    const double a0 = alpha[0] * kDeg, a1 = alpha[1] * kDeg;
    b.corner = {Point::Zero(), unit(bis)};
    b.out_heading = {bis - a0 / 2, bis + kPi - a1 / 2};
    b.in_heading = {bis + kPi + a0 / 2, bis + a1 / 2};
    b.side[0] = sample_biarc(b.corner[0], b.out_heading[0], b.corner[1], b.in_heading[1], m);
    b.side[1] = sample_biarc(b.corner[1], b.out_heading[1], b.corner[0], b.in_heading[0], m);
    b.clearance = {1.0, 1.0};
    return b;
  }

  // exterior corner turns, and the side turning spread evenly over the corners
  std::vector<double> eps(k);
  double eps_sum = 0;
  for (int j = 0; j < k; ++j) eps_sum += eps[j] = 180 - alpha[j];
  const double share = (360 - eps_sum) / k;
  std::vector<double> e(k), g(k);
  for (int j = 0; j < k; ++j) e[j] = eps[j] + share;

  auto chords = closed_chords(e);
  if (!chords) {
    // fall back to a convex chord polygon; clamp and rebalance the corner budget
    double lo = -720, hi = 720;
    for (int it = 0; it < 100; ++it) {
      const double mu = (lo + hi) / 2;
      double sum = 0;
      for (int j = 0; j < k; ++j) sum += std::clamp(eps[j] + mu, 10.0, 170.0);
      (sum < 360 ? lo : hi) = mu;
    }
    for (int j = 0; j < k; ++j) e[j] = std::clamp(eps[j] + (lo + hi) / 2, 10.0, 170.0);
    chords = tangential_chords(e);
  }
  b.corner = *chords;
  for (int j = 0; j < k; ++j) g[j] = e[j] - eps[j];

  std::vector<double> chord_heading(k);
  for (int j = 0; j < k; ++j) {
    const Point d = b.corner[(j + 1) % k] - b.corner[j];
    chord_heading[j] = std::atan2(d.y(), d.x());
  }
  for (int j = 0; j < k; ++j) {
    const int prev = (j + k - 1) % k;
    b.in_heading[j] = chord_heading[prev] + g[j] * kDeg / 2;
    b.out_heading[j] = chord_heading[j] - g[j] * kDeg / 2;
  }
  for (int j = 0; j < k; ++j) {
    const int next = (j + 1) % k;
    b.side[j] = sample_biarc(b.corner[j], b.out_heading[j], b.corner[next], b.in_heading[next], m);
    const int prev = (j + k - 1) % k;
    b.clearance[j] = std::min((b.corner[next] - b.corner[j]).norm(), (b.corner[j] - b.corner[prev]).norm());
  }
  return b;
}

// Block with orientation `sign`, moved so corner 0 is the origin and the curve
// leaves it along +x.
BlockShape block_shape(const std::vector<double>& alpha, int sign, int m) {
  BlockShape b = block_ccw(alpha, m);
  if (sign < 0) {
    auto flip = [](Point& p) { p.y() = -p.y(); };
    for (auto& p : b.corner) flip(p);
    for (auto& side : b.side)
      for (auto& p : side) flip(p);
    for (auto& h : b.in_heading) h = -h;
    for (auto& h : b.out_heading) h = -h;
  }
  const Point origin = b.corner[0];
  const double turn = -b.out_heading[0];
  const Eigen::Rotation2Dd rot(turn);
  auto move = [&](Point& p) { p = rot * (p - origin); };
  for (auto& p : b.corner) move(p);
  for (auto& side : b.side)
    for (auto& p : side) move(p);
  for (auto& h : b.in_heading) h += turn;
  for (auto& h : b.out_heading) h += turn;
  return b;
}

struct Piece {
  Vertex vertex;
  int sector;
  std::vector<Point> points;
};

class Builder {
 public:
  Builder(const NcpdTree& t, const RenderOptions& opts) : t_(t), opts_(opts) {
    const int n = t.vertex_count();
    root_ = t.source_root();
    sign_ = coorientation(t, root_, 1).label;
    parent_.assign(n, kNoVertex);
    order_.push_back(root_);
    std::vector<char> seen(n, 0);
    seen[root_] = 1;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const Vertex v = order_[i];
      for (Vertex w : t.base().neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          parent_[w] = v;
          order_.push_back(w);
        }
    }
    choose_angles();
  }

  std::vector<Piece> build(double contraction) const {
    contraction_ = contraction;
    if (t_.vertex_count() == 1) {
      Piece circle{0, 0, {}};
      const int m = opts_.samples_per_side;
      for (int i = 0; i < m; ++i) circle.points.push_back(unit(2 * kPi * (i + 0.5) / m));
      return {circle};
    }
    return subtree(root_);
  }

  Vertex root() const { return root_; }
  const std::vector<int>& sign() const { return sign_; }

 private:
  int want(Vertex v) const { return c_ * sign_[v]; }

  bool outgoing_edge(Vertex v, Vertex w) const {
    const EdgeId e = t_.base().edge_between(v, w);
    return edge_source(t_.base().edge(e), t_.state(e)) == v;
  }

  int first_position(Vertex v) const {
    return parent_[v] == kNoVertex ? 0 : t_.base().position_of(v, parent_[v]);
  }

  // Which global sense of curvature to aim for: the coorientation satisfying
  // the nonflattening conditions when there is one.
  int pick_sense() const {
    auto violations = [&](int c) {
      int bad = 0;
      for (Vertex v = 0; v < t_.vertex_count(); ++v) {
        const int k = t_.degree(v);
        const int label = c * sign_[v];
        if (k <= 2 && label < 0) ++bad;
        if (k >= 3 && label < 0 && t_.outgoing(v) > k - 3) ++bad;
      }
      return bad;
    };
    return violations(-1) < violations(1) ? -1 : 1;
  }

  // The block condition reads  want(v) * (360 - sum(180 - alpha_j)) >= margin,
  // linear in the corner angles. Intervals of feasible parent-corner angles are
  // found bottom-up, values chosen top-down.
  struct Linear {
    double constant = 0;
    std::vector<std::pair<Vertex, double>> child_coef;
    double parent_coef = 0;
    bool enforce = true;
  };

  Linear linear(Vertex v) const {
    Linear f;
    const int w = want(v);
    const int k = t_.degree(v);
    f.enforce = !(k <= 2 && w < 0) && k > 0;
    double c = 360;
    for (Vertex u : t_.base().neighbors(v)) {
      if (u == parent_[v]) {
        c -= 180;
        f.parent_coef = w;
      } else if (outgoing_edge(v, u)) {
        c += 180;
        f.child_coef.push_back({u, -double(w)});
      } else {
        c -= 180;
        f.child_coef.push_back({u, double(w)});
      }
    }
    f.constant = w * c;
    return f;
  }

  std::pair<double, double> usable(Vertex w) const {
    return lo_[w] <= hi_[w] ? std::pair{lo_[w], hi_[w]} : std::pair{kThetaLo, kThetaHi};
  }

  void choose_angles() {
    const int n = t_.vertex_count();
    c_ = pick_sense();
    lo_.assign(n, kThetaLo);
    hi_.assign(n, kThetaHi);
    theta_.assign(n, 90);
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
      const Vertex v = *it;
      if (v == root_) continue;
      const Linear f = linear(v);
      if (!f.enforce) continue;
      double best = f.constant;
      for (auto [w, coef] : f.child_coef) {
        auto [l, h] = usable(w);
        best += std::max(coef * l, coef * h);
      }
      // best + parent_coef * theta >= margin
      if (f.parent_coef > 0)
        lo_[v] = std::max(kThetaLo, kMargin - best);
      else
        hi_[v] = std::min(kThetaHi, best - kMargin);
    }
    for (Vertex v : order_) {
      const Linear f = linear(v);
      double need = kMargin - f.constant - (v == root_ ? 0 : f.parent_coef * theta_[v]);
      double at_mid = 0, at_fav = 0;
      for (auto [w, coef] : f.child_coef) {
        auto [l, h] = usable(w);
        at_mid += coef * (l + h) / 2;
        at_fav += std::max(coef * l, coef * h);
      }
      double s = 0;
      // a block that cannot be satisfied keeps central angles
      if (f.enforce && at_mid < need && at_fav >= need) s = (need - at_mid) / (at_fav - at_mid);
      for (auto [w, coef] : f.child_coef) {
        auto [l, h] = usable(w);
        const double mid = (l + h) / 2;
        const double fav = coef > 0 ? h : l;
        theta_[w] = mid + s * (fav - mid);
      }
    }
  }

  std::vector<double> corner_angles(Vertex v) const {
    const int k = t_.degree(v);
    const int start = first_position(v);
    std::vector<double> alpha(k);
    for (int j = 0; j < k; ++j) {
      const Vertex w = t_.base().neighbors(v)[(start + j) % k];
      if (w == parent_[v])
        alpha[j] = theta_[v];
      else
        alpha[j] = outgoing_edge(v, w) ? 360 - theta_[w] : theta_[w];
    }
    return alpha;
  }

  // Pieces of v's subtree in v's frame: corner 0 at the origin, leaving along +x.
  std::vector<Piece> subtree(Vertex v) const {
    const int k = t_.degree(v);
    const int start = first_position(v);
    const BlockShape shape = block_shape(corner_angles(v), sign_[v], opts_.samples_per_side);
    std::vector<Piece> out;
    for (int j = 0; j < k; ++j) {
      const int pos = (start + j) % k;
      const Vertex w = t_.base().neighbors(v)[pos];
      if (w != parent_[v]) {
        auto child = subtree(w);
        double radius = 0;
        for (const auto& piece : child)
          for (const auto& p : piece.points) radius = std::max(radius, p.norm());
        const double scale = contraction_ * shape.clearance[j] / radius;
        const Eigen::Rotation2Dd rot(shape.in_heading[j]);
        for (auto& piece : child) {
          for (auto& p : piece.points) p = shape.corner[j] + scale * (rot * p);
          out.push_back(std::move(piece));
        }
      }
      out.push_back({v, pos, shape.side[j]});
    }
    return out;
  }

  const NcpdTree& t_;
  RenderOptions opts_;
  Vertex root_ = 0;
  int c_ = 1;
  std::vector<int> sign_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> order_;
  std::vector<double> lo_, hi_, theta_;
  mutable double contraction_ = 0.35;
};

void normalize(std::vector<Point>& pts) {
  Point lo = pts[0], hi = pts[0];
  for (const auto& p : pts) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  const double span = std::max((hi - lo).maxCoeff(), 1e-300);
  const Point center = (lo + hi) / 2;
  for (auto& p : pts) p = Point(0.5, 0.5) + 0.9 * (p - center) / span;
}

std::optional<std::string> check(const NcpdTree& t, RealizedCurve& rc) {
  try {
    rc.crossings = find_crossings(rc.samples);
  } catch (const Error& e) {
    return std::string(e.what());
  }
  if (static_cast<int>(rc.crossings.size()) != t.vertex_count() - 1)
    return std::to_string(rc.crossings.size()) + " crossings, expected " + std::to_string(t.vertex_count() - 1);
  if (!equivalent(verify_gauss(rc), plane_tree_to_gauss(t.base())))
    return "crossing order does not reproduce the Gauss diagram";
  if (!nesting_fidelity(t, rc)) return "block nesting does not match edge directions";
  return std::nullopt;
}

}  // namespace

RealizedCurve realize(const NcpdTree& t, const RenderOptions& opts) {
  const CurveTraversal tr = traversal(t);
  std::map<std::pair<Vertex, int>, int> side_index;
  for (int i = 0; i < tr.size(); ++i) side_index[{tr.sides[i].vertex, tr.sides[i].sector}] = i;
  // the simple loop has no traversal sides; its one piece is reported as side 0
  if (tr.size() == 0) side_index[{0, 0}] = 0;

  const Builder builder(t, opts);
  std::mt19937_64 rng(opts.seed);
  const double heading = opts.seed == 0 ? 0.0 : std::uniform_real_distribution<double>(0, 2 * kPi)(rng);

  double contraction = opts.contraction;
  std::string last_error;
  for (int attempt = 0; attempt <= opts.max_retries; ++attempt, contraction /= 2) {
    auto pieces = builder.build(contraction);
    // start the polyline at traversal side 0
    auto first = std::find_if(pieces.begin(), pieces.end(), [&](const Piece& p) {
      return side_index.at({p.vertex, p.sector}) == 0;
    });
    std::rotate(pieces.begin(), first, pieces.end());

    RealizedCurve rc;
    rc.contraction = contraction;
    rc.side_block.resize(std::max(tr.size(), 1));
    const Eigen::Rotation2Dd rot(heading);
    for (const auto& piece : pieces) {
      const int side = side_index.at({piece.vertex, piece.sector});
      const int begin = static_cast<int>(rc.samples.size());
      for (const auto& p : piece.points) rc.samples.push_back(rot * p);
      rc.sides.push_back({side, begin, static_cast<int>(rc.samples.size())});
      rc.side_block[side] = piece.vertex;
    }
    normalize(rc.samples);

    // interior points: step off the middle sample of the block's first side
    rc.block_interior.assign(t.vertex_count(), Point::Zero());
    std::vector<char> done(t.vertex_count(), 0);
    for (const auto& range : rc.sides) {
      const Vertex v = rc.side_block[range.side];
      if (done[v]) continue;
      done[v] = 1;
      const auto poly = block_polygon(rc, v);
      Point lo = poly[0], hi = poly[0];
      for (const auto& p : poly) {
        lo = lo.cwiseMin(p);
        hi = hi.cwiseMax(p);
      }
      const int mid = (range.begin + range.end) / 2;
      const Point dir = (rc.samples[mid + 1] - rc.samples[mid - 1]).normalized();
      const Point left(-dir.y(), dir.x());
      const double step = 1e-3 * (hi - lo).norm();
      const Point candidate = rc.samples[mid] + step * left;
      rc.block_interior[v] = point_in_polygon(candidate, poly) ? candidate : Point(rc.samples[mid] - step * left);
    }

    auto problem = check(t, rc);
    if (!problem) return rc;
    last_error = *problem;
  }
  throw Error(ErrorCode::RealizationFailed,
              "no layout after " + std::to_string(opts.max_retries) + " shrink steps for " + format_tree(t) + ": " +
                  last_error);
}

std::vector<Crossing> find_crossings(const std::vector<Point>& samples) {
  const int n = static_cast<int>(samples.size());
  struct Seg {
    int index;
    double xmin, xmax;
  };
  std::vector<Seg> segs(n);
  for (int i = 0; i < n; ++i) {
    const Point& a = samples[i];
    const Point& b = samples[(i + 1) % n];
    segs[i] = {i, std::min(a.x(), b.x()), std::max(a.x(), b.x())};
  }
  std::sort(segs.begin(), segs.end(), [](const Seg& a, const Seg& b) { return a.xmin < b.xmin; });

  std::vector<Crossing> out;
  for (int ii = 0; ii < n; ++ii) {
    for (int jj = ii + 1; jj < n && segs[jj].xmin <= segs[ii].xmax + kIntersectTol; ++jj) {
      int i = segs[ii].index, j = segs[jj].index;
      if (i > j) std::swap(i, j);
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      const Point p = samples[i], r = samples[(i + 1) % n] - p;
      const Point q = samples[j], s = samples[(j + 1) % n] - q;
      const double den = cross(r, s);
      const double scale = r.norm() * s.norm();
      if (std::abs(den) <= kIntersectTol * scale) {
        // parallel: only a problem when the segments overlap
        if (std::abs(cross(q - p, r)) <= kIntersectTol * r.norm()) {
          const double t0 = (q - p).dot(r) / r.squaredNorm();
          const double t1 = (q + s - p).dot(r) / r.squaredNorm();
          if (std::max(t0, t1) >= 0 && std::min(t0, t1) <= 1)
            throw Error(ErrorCode::TangentialCrossing, "overlapping segments " + std::to_string(i) + " and " +
                                                           std::to_string(j));
        }
        continue;
      }
      const double t = cross(q - p, s) / den;
      const double u = cross(q - p, r) / den;
      if (t < 0 || t >= 1 || u < 0 || u >= 1) continue;
      const double angle = std::asin(std::min(1.0, std::abs(den) / scale));
      if (angle < kMinCrossingAngle)
        throw Error(ErrorCode::TangentialCrossing,
                    "segments " + std::to_string(i) + " and " + std::to_string(j) + " meet at a tangency");
      out.push_back({i, j, i + t, j + u, p + t * r, angle});
    }
  }
  std::sort(out.begin(), out.end(), [](const Crossing& a, const Crossing& b) { return a.param_a < b.param_a; });
  return out;
}

GaussDiagram verify_gauss(const RealizedCurve& rc) {
  std::vector<std::pair<double, int>> events;
  for (int c = 0; c < static_cast<int>(rc.crossings.size()); ++c) {
    events.push_back({rc.crossings[c].param_a, c});
    events.push_back({rc.crossings[c].param_b, c});
  }
  std::sort(events.begin(), events.end());
  std::vector<int> word;
  for (const auto& [param, label] : events) word.push_back(label);
  return GaussDiagram(word);
}

double discrete_turning(const std::vector<Point>& samples) {
  const int n = static_cast<int>(samples.size());
  double total = 0;
  for (int i = 0; i < n; ++i) {
    const Point a = samples[(i + 1) % n] - samples[i];
    const Point b = samples[(i + 2) % n] - samples[(i + 1) % n];
    total += std::atan2(cross(a, b), a.dot(b));
  }
  return total;
}

int turning_number(const RealizedCurve& rc) {
  return static_cast<int>(std::lround(discrete_turning(rc.samples) / (2 * kPi)));
}

int numeric_inflections(const RealizedCurve& rc) {
  const auto& s = rc.samples;
  const int n = static_cast<int>(s.size());
  std::vector<int> signs;
  for (int i = 0; i < n; ++i) {
    const Point a = s[i] - s[(i + n - 1) % n];
    const Point b = s[(i + 1) % n] - s[i];
    const double turn = std::atan2(cross(a, b), a.dot(b));
    const double curvature = turn / ((a.norm() + b.norm()) / 2);
    if (std::abs(curvature) >= kFlatCurvature) signs.push_back(curvature > 0 ? 1 : -1);
  }
  int changes = 0;
  for (std::size_t i = 0; i < signs.size(); ++i) changes += signs[i] != signs[(i + 1) % signs.size()];
  return changes;
}

std::vector<Point> block_polygon(const RealizedCurve& rc, Vertex v) {
  std::vector<Point> poly;
  for (const auto& range : rc.sides)
    if (rc.side_block[range.side] == v)
      poly.insert(poly.end(), rc.samples.begin() + range.begin, rc.samples.begin() + range.end);
  return poly;
}

bool point_in_polygon(const Point& p, const std::vector<Point>& polygon) {
  bool inside = false;
  const int n = static_cast<int>(polygon.size());
  for (int i = 0, j = n - 1; i < n; j = i++) {
    const Point& a = polygon[i];
    const Point& b = polygon[j];
    if ((a.y() > p.y()) != (b.y() > p.y()) && p.x() < (b.x() - a.x()) * (p.y() - a.y()) / (b.y() - a.y()) + a.x())
      inside = !inside;
  }
  return inside;
}

bool nesting_fidelity(const NcpdTree& t, const RealizedCurve& rc) {
  const int n = t.vertex_count();
  std::vector<std::vector<Point>> poly(n);
  for (Vertex v = 0; v < n; ++v) {
    poly[v] = block_polygon(rc, v);
    if (!point_in_polygon(rc.block_interior[v], poly[v])) return false;
  }
  for (EdgeId e = 0; e < t.base().edge_count(); ++e) {
    const Edge& edge = t.base().edge(e);
    if (auto src = edge_source(edge, t.state(e))) {
      const Vertex inner = edge.other(*src);
      if (!point_in_polygon(rc.block_interior[inner], poly[*src])) return false;
    } else {
      if (point_in_polygon(rc.block_interior[edge.u], poly[edge.v])) return false;
      if (point_in_polygon(rc.block_interior[edge.v], poly[edge.u])) return false;
    }
  }
  return true;
}

}  // namespace tlc
