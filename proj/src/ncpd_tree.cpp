#include "tlc/ncpd_tree.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "tlc/error.hpp"

namespace tlc {

std::optional<Vertex> edge_source(const Edge& e, EdgeState s) {
  switch (s) {
    case EdgeState::UtoV: return e.u;
    case EdgeState::VtoU: return e.v;
    case EdgeState::Undirected: break;
  }
  return std::nullopt;
}

EdgeState directed_from(const Edge& e, Vertex source) {
  return source == e.u ? EdgeState::UtoV : EdgeState::VtoU;
}

namespace {

// Parent of every vertex when the tree hangs from `root`.
std::vector<Vertex> parents_from(const PlaneTree& tree, Vertex root) {
  std::vector<Vertex> parent(tree.vertex_count(), kNoVertex);
  std::vector<Vertex> stack{root};
  parent[root] = root;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : tree.neighbors(v)) {
      if (parent[w] == kNoVertex) {
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  return parent;
}

bool points_away_from(const PlaneTree& tree, const DirectionMap& direction, Vertex root) {
  const auto parent = parents_from(tree, root);
  for (EdgeId e = 0; e < tree.edge_count(); ++e) {
    const auto src = edge_source(tree.edge(e), direction[e]);
    if (!src) continue;
    const Vertex dst = tree.edge(e).other(*src);
    if (parent[dst] != *src) return false;
  }
  return true;
}

}  // namespace

bool validate_noncolliding(const PlaneTree& base, const DirectionMap& direction) {
  if (static_cast<int>(direction.size()) != base.edge_count()) return false;
  for (Vertex r = 0; r < base.vertex_count(); ++r)
    if (points_away_from(base, direction, r)) return true;
  return false;
}

NcpdTree::NcpdTree(PlaneTree base, DirectionMap direction)
    : base_(std::move(base)), direction_(std::move(direction)) {
  if (static_cast<int>(direction_.size()) != base_.edge_count())
    throw Error(ErrorCode::InvalidTree, "direction map size does not match edge count");
  if (!validate_noncolliding(base_, direction_))
    throw Error(ErrorCode::Colliding, "two directed edges point at each other");
}

int NcpdTree::outgoing(Vertex v) const {
  int count = 0;
  for (int i = 0; i < base_.degree(v); ++i) {
    const EdgeId e = base_.incident_edge(v, i);
    if (edge_source(base_.edge(e), direction_[e]) == v) ++count;
  }
  return count;
}

Vertex NcpdTree::source_root() const {
  for (Vertex r = 0; r < vertex_count(); ++r)
    if (points_away_from(base_, direction_, r)) return r;
  return 0;  // unreachable for a validated tree
}

// --- text format -----------------------------------------------------------

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  NcpdTree parse() {
    skip_space();
    node(kNoVertex);
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters after tree");

    const int n = static_cast<int>(rotation_.size());
    PlaneTree base(std::move(rotation_));
    DirectionMap direction(n - 1, EdgeState::Undirected);
    for (const auto& [parent, child, marker] : links_) {
      const EdgeId e = base.edge_between(parent, child);
      if (marker == '>') direction[e] = directed_from(base.edge(e), parent);
      if (marker == '<') direction[e] = directed_from(base.edge(e), child);
    }
    return NcpdTree(std::move(base), std::move(direction));
  }

 private:
  struct Link {
    Vertex parent;
    Vertex child;
    char marker;
  };

  void node(Vertex parent) {
    expect('(');
    const Vertex self = static_cast<Vertex>(rotation_.size());
    rotation_.emplace_back();
    if (parent != kNoVertex) rotation_[self].push_back(parent);
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) fail("unterminated '('");
      const char c = text_[pos_];
      if (c == ')') {
        advance();
        return;
      }
      if (c != '>' && c != '<' && c != '-') fail(std::string("expected edge marker '>', '<' or '-', got '") + c + "'");
      advance();
      skip_space();
      const Vertex child = static_cast<Vertex>(rotation_.size());
      rotation_[self].push_back(child);
      links_.push_back({self, child, c});
      node(self);
    }
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, column_, what); }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  std::vector<std::vector<Vertex>> rotation_;
  std::vector<Link> links_;
};

char marker(const NcpdTree& t, Vertex from, Vertex to) {
  const EdgeId e = t.base().edge_between(from, to);
  const auto src = edge_source(t.base().edge(e), t.state(e));
  if (!src) return '-';
  return *src == from ? '>' : '<';
}

void encode_subtree(const NcpdTree& t, Vertex v, Vertex parent, int start, std::string& out) {
  const auto nbrs = t.base().neighbors(v);
  const int d = static_cast<int>(nbrs.size());
  out.push_back('(');
  for (int j = 0; j < d; ++j) {
    const Vertex w = nbrs[(start + j) % d];
    if (w == parent) continue;
    out.push_back(marker(t, v, w));
    encode_subtree(t, w, v, (t.base().position_of(w, v) + 1) % t.degree(w), out);
  }
  out.push_back(')');
}

std::string subtree_code(const NcpdTree& t, Vertex v, Vertex parent) {
  std::string out;
  encode_subtree(t, v, parent, (t.base().position_of(v, parent) + 1) % t.degree(v), out);
  return out;
}

}  // namespace

NcpdTree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

std::string encode_rooted(const NcpdTree& t, Vertex root, int first) {
  std::string out;
  encode_subtree(t, root, kNoVertex, first, out);
  return out;
}

std::string format_tree(const NcpdTree& t) { return encode_rooted(t, 0, 0); }

// --- coorientation and index ---------------------------------------------

CoorientationLabels coorientation(const NcpdTree& t, Vertex root, int sign) {
  CoorientationLabels result;
  result.root = root;
  result.sign = sign;
  result.label.assign(t.vertex_count(), 0);
  result.label[root] = sign;
  std::vector<Vertex> stack{root};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (int i = 0; i < t.degree(v); ++i) {
      const Vertex w = t.base().neighbors(v)[i];
      if (result.label[w] != 0) continue;
      const EdgeId e = t.base().incident_edge(v, i);
      result.label[w] = t.is_directed(e) ? result.label[v] : -result.label[v];
      stack.push_back(w);
    }
  }
  return result;
}

int whitney_index(const NcpdTree& t) {
  int sum = 0;
  for (int label : coorientation(t).label) sum += label;
  return sum < 0 ? -sum : sum;
}

CurveTraversal traversal(const NcpdTree& t) {
  CurveTraversal tr;
  const auto walk = t.base().contour();
  if (walk.empty()) return tr;
  const int m = static_cast<int>(walk.size());
  tr.sides.reserve(m);
  tr.passages.reserve(m);
  for (int i = 0; i < m; ++i) {
    const Dart& arrive = walk[(i + m - 1) % m];
    const Dart& leave = walk[i];
    tr.sides.push_back({leave.from, t.base().position_of(leave.from, arrive.from)});
    tr.passages.push_back({leave.edge, leave.from, leave.to, t.state(leave.edge)});
  }
  return tr;
}

std::string canonical_code(const NcpdTree& t, bool reflect) {
  std::string best;
  auto consider = [&best](const NcpdTree& tree) {
    if (tree.vertex_count() == 1) {
      best = "()";
      return;
    }
    for (Vertex v = 0; v < tree.vertex_count(); ++v) {
      for (int i = 0; i < tree.degree(v); ++i) {
        auto code = encode_rooted(tree, v, i);
        if (best.empty() || code < best) best = std::move(code);
      }
    }
  };
  consider(t);
  if (reflect) consider(NcpdTree(t.base().mirrored(), t.direction()));
  return best;
}

std::string canonical_code(const PlaneTree& tree, bool reflect) {
  return canonical_code(NcpdTree(tree, DirectionMap(tree.edge_count(), EdgeState::Undirected)), reflect);
}

// --- symmetry ------------------------------------------------------------

SymmetryInfo tree_center(const PlaneTree& tree) {
  SymmetryInfo info;
  const int n = tree.vertex_count();
  info.generator.resize(n);
  for (Vertex v = 0; v < n; ++v) info.generator[v] = v;

  std::vector<int> degree(n);
  std::vector<char> removed(n, 0);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = tree.degree(v);
    if (degree[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      removed[v] = 1;
      --remaining;
      for (Vertex w : tree.neighbors(v))
        if (!removed[w] && --degree[w] == 1) next.push_back(w);
    }
    layer = std::move(next);
  }
  std::vector<Vertex> center;
  for (Vertex v = 0; v < n; ++v)
    if (!removed[v]) center.push_back(v);
  if (center.size() == 1) {
    info.center_kind = CenterKind::Vertex;
    info.center_vertex = center[0];
  } else {
    info.center_kind = CenterKind::Edge;
    info.center_vertex = kNoVertex;
    info.center_edge = tree.edge_between(center[0], center[1]);
  }
  return info;
}

SymmetryInfo planar_automorphisms(const PlaneTree& tree) {
  SymmetryInfo info = tree_center(tree);
  const NcpdTree plain(tree, DirectionMap(tree.edge_count(), EdgeState::Undirected));

  std::function<void(Vertex, Vertex, Vertex, Vertex)> map_subtree =
      [&](Vertex x, Vertex px, Vertex y, Vertex py) {
        info.generator[x] = y;
        const int d = tree.degree(x);
        const int ix = tree.position_of(x, px);
        const int iy = tree.position_of(y, py);
        for (int j = 1; j < d; ++j)
          map_subtree(tree.neighbors(x)[(ix + j) % d], x, tree.neighbors(y)[(iy + j) % d], y);
      };

  if (info.center_kind == CenterKind::Edge) {
    const auto [u, v] = tree.edge(info.center_edge);
    if (subtree_code(plain, u, v) == subtree_code(plain, v, u)) {
      info.order = 2;
      map_subtree(u, v, v, u);
      map_subtree(v, u, u, v);
    }
    return info;
  }

  const Vertex c = info.center_vertex;
  const int d = tree.degree(c);
  if (d == 0) return info;
  std::vector<std::string> arms;
  for (Vertex w : tree.neighbors(c)) arms.push_back(subtree_code(plain, w, c));
  int shift = d;
  for (int s = 1; s < d; ++s) {
    if (d % s != 0) continue;
    bool same = true;
    for (int j = 0; j < d && same; ++j) same = arms[j] == arms[(j + s) % d];
    if (same) {
      shift = s;
      break;
    }
  }
  info.order = d / shift;
  if (info.order > 1) {
    for (int j = 0; j < d; ++j)
      map_subtree(tree.neighbors(c)[j], c, tree.neighbors(c)[(j + shift) % d], c);
  }
  return info;
}

DirectionMap apply_automorphism(const PlaneTree& base, const std::vector<Vertex>& perm,
                                const DirectionMap& direction) {
  DirectionMap image(direction.size(), EdgeState::Undirected);
  for (EdgeId e = 0; e < base.edge_count(); ++e) {
    const Edge& edge = base.edge(e);
    const EdgeId target = base.edge_between(perm[edge.u], perm[edge.v]);
    if (const auto src = edge_source(edge, direction[e]))
      image[target] = directed_from(base.edge(target), perm[*src]);
  }
  return image;
}

}  // namespace tlc
