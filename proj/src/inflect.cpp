#include "tlc/inflect.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "tlc/error.hpp"

namespace tlc {
namespace {

bool labels_satisfy_criterion(const NcpdTree& t, const std::vector<int>& label) {
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    const int k = t.degree(v);
    if ((k == 1 || k == 2) && label[v] != 1) return false;
    if (k >= 3 && label[v] == -1 && t.outgoing(v) > k - 3) return false;
  }
  return true;
}

// Conditions (b) and (c) for one block, given the signs of its sides.
bool block_admissible(const NcpdTree& t, Vertex v, bool any_outward) {
  const int k = t.degree(v);
  if (k == 2 && !any_outward) return false;
  if (k >= 3 && !any_outward && t.outgoing(v) > k - 3) return false;
  return true;
}

std::vector<std::vector<int>> sides_by_vertex(const NcpdTree& t, const CurveTraversal& tr) {
  std::vector<std::vector<int>> result(t.vertex_count());
  for (int i = 0; i < tr.size(); ++i) result[tr.sides[i].vertex].push_back(i);
  return result;
}

class InflectionSearch {
 public:
  InflectionSearch(const NcpdTree& t, const CurveTraversal& tr) : t_(t), tr_(tr) {
    const int m = tr.size();
    cc_.sigma.assign(m, 1);
    closes_block_.assign(m, kNoVertex);
    forced_outward_.assign(m, 0);
    const auto by_vertex = sides_by_vertex(t, tr);
    for (Vertex v = 0; v < t.vertex_count(); ++v) {
      if (by_vertex[v].empty()) continue;
      closes_block_[by_vertex[v].back()] = v;
      if (t.degree(v) == 1) forced_outward_[by_vertex[v][0]] = 1;
    }
    side_lists_ = by_vertex;
  }

  void run() { descend(0, 0); }

  int best() const { return best_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  int passage_cost(int p) const { return creates_inflection(tr_, cc_, p) ? 1 : 0; }

  void descend(int i, int cost) {
    const int m = tr_.size();
    if (i == m) {
      best_ = cost;
      witness_ = cc_.sigma;
      return;
    }
    for (int s : {1, -1}) {
      if (s == -1 && forced_outward_[i]) continue;
      cc_.sigma[i] = s;
      int next = cost;
      if (i > 0) next += passage_cost(i - 1);
      if (i == m - 1) next += passage_cost(m - 1);
      if (next >= best_) continue;
      if (const Vertex v = closes_block_[i]; v != kNoVertex) {
        bool any_outward = false;
        for (int side : side_lists_[v]) any_outward = any_outward || cc_.sigma[side] == 1;
        if (!block_admissible(t_, v, any_outward)) continue;
      }
      descend(i + 1, next);
    }
    cc_.sigma[i] = 1;
  }

  const NcpdTree& t_;
  const CurveTraversal& tr_;
  LocalCoorientation cc_;
  std::vector<Vertex> closes_block_;
  std::vector<char> forced_outward_;
  std::vector<std::vector<int>> side_lists_;
  int best_ = std::numeric_limits<int>::max();
  std::vector<int> witness_;
};

void require_leaves(const NcpdTree& t) {
  if (t.vertex_count() < 2)
    throw Error(ErrorCode::DegenerateLeafCount, "a single-vertex tree has no leaves to connect");
}

// For each side, the connecting path holding it in its interior; -1 for leaf sides.
std::vector<int> interior_path_of(const std::vector<ConnectingPath>& paths, int side_count) {
  std::vector<int> owner(side_count, -1);
  for (int p = 0; p < static_cast<int>(paths.size()); ++p) {
    const auto& sides = paths[p].sides;
    for (std::size_t j = 1; j + 1 < sides.size(); ++j) owner[sides[j]] = p;
  }
  return owner;
}

}  // namespace

bool is_nonflattening(const NcpdTree& t) {
  for (int sign : {1, -1})
    if (labels_satisfy_criterion(t, coorientation(t, 0, sign).label)) return true;
  return false;
}

bool is_admissible(const NcpdTree& t, const LocalCoorientation& cc) {
  const CurveTraversal tr = traversal(t);
  if (cc.size() != tr.size()) throw std::invalid_argument("local coorientation does not match traversal");
  const auto by_vertex = sides_by_vertex(t, tr);
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    bool any_outward = false;
    for (int side : by_vertex[v]) any_outward = any_outward || cc.sigma[side] == 1;
    if (t.degree(v) == 1 && cc.sigma[by_vertex[v][0]] != 1) return false;
    if (!block_admissible(t, v, any_outward)) return false;
  }
  return true;
}

bool creates_inflection(const CurveTraversal& tr, const LocalCoorientation& cc, int p) {
  const int m = tr.size();
  const bool equal = cc.sigma[p] == cc.sigma[(p + 1) % m];
  return tr.passages[p].state == EdgeState::Undirected ? equal : !equal;
}

int count_inflections(const NcpdTree& t, const LocalCoorientation& cc) {
  const CurveTraversal tr = traversal(t);
  if (cc.size() != tr.size()) throw std::invalid_argument("local coorientation does not match traversal");
  int count = 0;
  for (int p = 0; p < static_cast<int>(tr.passages.size()); ++p) count += creates_inflection(tr, cc, p);
  return count;
}

LocalCoorientation continuous_local(const NcpdTree& t, const CoorientationLabels& labels) {
  const CurveTraversal tr = traversal(t);
  LocalCoorientation cc;
  for (const Side& s : tr.sides) cc.sigma.push_back(labels.label[s.vertex]);
  return cc;
}

BoundReport min_inflections(const NcpdTree& t, int budget) {
  BoundReport report;
  if (t.vertex_count() == 1) {
    report.exact = 0;
    report.witness = LocalCoorientation{};
    return report;
  }
  const UpperBound ub = upper_bound(t);
  report.lower = lower_bound_rev(t);
  report.upper = ub.value;
  report.jt = ub.jt;
  report.bl = ub.bl;

  const CurveTraversal tr = traversal(t);
  if (tr.size() > budget) return report;
  InflectionSearch search(t, tr);
  search.run();
  report.exact = search.best();
  report.witness = LocalCoorientation{search.witness()};
  return report;
}

int lower_bound_rev(const NcpdTree& t) {
  if (t.vertex_count() < 2) return 0;
  const auto label = coorientation(t).label;
  const auto leaves = t.base().leaves_in_contour_order();
  int changes = 0;
  for (std::size_t j = 0; j < leaves.size(); ++j)
    changes += label[leaves[j]] != label[leaves[(j + 1) % leaves.size()]];
  return changes;
}

std::vector<ConnectingPath> connecting_paths(const NcpdTree& t) {
  require_leaves(t);
  const CurveTraversal tr = traversal(t);
  const auto label = coorientation(t).label;
  const int m = tr.size();
  std::vector<int> leaf_sides;
  for (int i = 0; i < m; ++i)
    if (t.degree(tr.sides[i].vertex) == 1) leaf_sides.push_back(i);

  std::vector<ConnectingPath> paths;
  const int count = static_cast<int>(leaf_sides.size());
  for (int j = 0; j < count; ++j) {
    const int from = leaf_sides[j];
    const int to = leaf_sides[(j + 1) % count];
    ConnectingPath path;
    for (int i = from;; i = (i + 1) % m) {
      path.sides.push_back(i);
      if (i == to && path.sides.size() > 1) break;
    }
    path.reversing = label[tr.sides[from].vertex] != label[tr.sides[to].vertex];
    paths.push_back(std::move(path));
  }
  return paths;
}

std::vector<Joint> joints(const NcpdTree& t) {
  std::vector<Joint> result;
  if (t.vertex_count() < 3) return result;
  const PlaneTree& base = t.base();
  const CurveTraversal tr = traversal(t);
  const int m = tr.size();
  const auto paths = connecting_paths(t);
  const auto owner = interior_path_of(paths, m);

  std::vector<char> taken(t.vertex_count(), 0);
  for (Vertex start = 0; start < t.vertex_count(); ++start) {
    if (t.degree(start) != 2 || taken[start]) continue;
    Joint joint;
    std::vector<Vertex> stack{start};
    taken[start] = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      joint.blocks.push_back(v);
      for (int i = 0; i < 2; ++i) {
        const Vertex w = base.neighbors(v)[i];
        if (taken[w] || t.degree(w) != 2 || t.is_directed(base.incident_edge(v, i))) continue;
        taken[w] = 1;
        stack.push_back(w);
      }
    }

    std::vector<char> in_joint(m, 0);
    for (int i = 0; i < m; ++i)
      in_joint[i] = std::find(joint.blocks.begin(), joint.blocks.end(), tr.sides[i].vertex) != joint.blocks.end();
    // Split the joint's sides into maximal cyclic runs; there are exactly two.
    int begin = 0;
    while (in_joint[begin] && in_joint[(begin + m - 1) % m]) ++begin;
    int thread = 0;
    for (int step = 0; step < m; ++step) {
      const int i = (begin + step) % m;
      if (!in_joint[i]) continue;
      const int prev = (i + m - 1) % m;
      if (!in_joint[prev] && !joint.threads[0].sides.empty()) thread = 1;
      joint.threads[thread].sides.push_back(i);
    }
    for (Thread& th : joint.threads) th.path = owner[th.sides.front()];
    std::sort(joint.blocks.begin(), joint.blocks.end(), [&](Vertex a, Vertex b) {
      const auto& first = joint.threads[0].sides;
      auto pos = [&](Vertex v) {
        return std::find_if(first.begin(), first.end(), [&](int s) { return tr.sides[s].vertex == v; }) - first.begin();
      };
      return pos(a) < pos(b);
    });
    result.push_back(std::move(joint));
  }
  return result;
}

std::vector<int> standard_local_coorientation(const NcpdTree& t, const ConnectingPath& path) {
  if (path.reversing) throw Error(ErrorCode::PathReversing, "standard coorientation needs a nonreversing path");
  const CurveTraversal tr = traversal(t);
  std::vector<int> sign{1};
  for (std::size_t j = 1; j < path.sides.size(); ++j) {
    const Passage& p = tr.passages[path.sides[j - 1]];
    sign.push_back(p.state == EdgeState::Undirected ? -sign.back() : sign.back());
  }
  if (sign.back() != 1) throw std::logic_error("nonreversing path must end on an outward side");
  return sign;
}

UpperBound upper_bound(const NcpdTree& t) {
  require_leaves(t);
  const CurveTraversal tr = traversal(t);
  const int m = tr.size();
  const auto paths = connecting_paths(t);

  UpperBound ub;
  // standard[i] collects the sign of side i on each nonreversing path through it
  std::vector<std::vector<int>> standard(m);
  for (const ConnectingPath& path : paths) {
    if (path.reversing) {
      ++ub.rev;
      continue;
    }
    const auto sign = standard_local_coorientation(t, path);
    for (std::size_t j = 0; j < path.sides.size(); ++j) standard[path.sides[j]].push_back(sign[j]);
  }
  auto inward = [&](int side) {
    return !standard[side].empty() &&
           std::all_of(standard[side].begin(), standard[side].end(), [](int s) { return s == -1; });
  };

  for (const Joint& joint : joints(t)) {
    const bool nr0 = !paths[joint.threads[0].path].reversing;
    const bool nr1 = !paths[joint.threads[1].path].reversing;
    bool suspicious = false;
    if (nr0 && nr1) {
      for (Vertex b : joint.blocks) {
        bool both_inward = true;
        for (int i = 0; i < m; ++i)
          if (tr.sides[i].vertex == b) both_inward = both_inward && inward(i);
        suspicious = suspicious || both_inward;
      }
    } else if (nr0 != nr1) {
      const Thread& th = nr0 ? joint.threads[0] : joint.threads[1];
      for (int side : th.sides) suspicious = suspicious || inward(side);
    } else {
      suspicious = true;
    }
    ub.jt += suspicious;
  }

  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    const int k = t.degree(v);
    if (t.outgoing(v) < std::max(k - 3, 0)) continue;
    bool all_inward = true;
    for (int i = 0; i < m; ++i) {
      if (tr.sides[i].vertex != v) continue;
      for (int s : standard[i]) all_inward = all_inward && s == -1;
    }
    ub.bl += all_inward;
  }
  ub.value = ub.rev + 2 * (ub.jt + ub.bl);
  return ub;
}

}  // namespace tlc
