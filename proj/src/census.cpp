#include "tlc/census.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "tlc/error.hpp"

namespace tlc {
namespace {

void check_size(int n) {
  if (n < 1 || n > kMaxCensusVertices)
    throw Error(ErrorCode::SizeLimit, "vertex count must lie in 1.." + std::to_string(kMaxCensusVertices) +
                                          ", got " + std::to_string(n));
}

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

PlaneTree tree_from_dyck(const std::vector<char>& steps) {
  std::vector<std::vector<Vertex>> rot(1);
  std::vector<Vertex> stack{0};
  for (char up : steps) {
    if (up) {
      const Vertex child = static_cast<Vertex>(rot.size());
      rot.push_back({stack.back()});
      rot[stack.back()].push_back(child);
      stack.push_back(child);
    } else {
      stack.pop_back();
    }
  }
  return PlaneTree(std::move(rot));
}

void for_each_dyck(int pairs, std::vector<char>& steps, int open, int close,
                   const std::function<void(const std::vector<char>&)>& visit) {
  if (close == pairs) {
    visit(steps);
    return;
  }
  if (open < pairs) {
    steps.push_back(1);
    for_each_dyck(pairs, steps, open + 1, close, visit);
    steps.pop_back();
  }
  if (close < open) {
    steps.push_back(0);
    for_each_dyck(pairs, steps, open, close + 1, visit);
    steps.pop_back();
  }
}

std::vector<EdgeId> edge_permutation(const PlaneTree& base, const std::vector<Vertex>& perm) {
  std::vector<EdgeId> image(base.edge_count());
  for (EdgeId e = 0; e < base.edge_count(); ++e)
    image[e] = base.edge_between(perm[base.edge(e).u], perm[base.edge(e).v]);
  return image;
}

std::vector<Vertex> power(const std::vector<Vertex>& perm, int exponent) {
  std::vector<Vertex> result(perm.size());
  std::iota(result.begin(), result.end(), 0);
  for (int i = 0; i < exponent; ++i)
    for (auto& v : result) v = perm[v];
  return result;
}

std::vector<int> divisors(int p) {
  std::vector<int> result;
  for (int d = 1; d <= p; ++d)
    if (p % d == 0) result.push_back(d);
  return result;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

std::vector<PlaneTree> enumerate_plane_trees(int n) {
  check_size(n);
  std::set<std::string> codes;
  std::vector<char> steps;
  for_each_dyck(n - 1, steps, 0, 0,
                [&codes](const std::vector<char>& s) { codes.insert(canonical_code(tree_from_dyck(s))); });
  std::vector<PlaneTree> trees;
  for (const auto& code : codes) trees.push_back(parse_tree(code).base());
  return trees;
}

namespace {

int undirected_components(const PlaneTree& base, std::uint32_t mask, std::vector<Vertex>& comp) {
  const int n = base.vertex_count();
  comp.assign(n, kNoVertex);
  int comps = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != kNoVertex) continue;
    std::vector<Vertex> stack{s};
    comp[s] = comps;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (int i = 0; i < base.degree(v); ++i) {
        const Vertex w = base.neighbors(v)[i];
        if (comp[w] == kNoVertex && (mask >> base.incident_edge(v, i) & 1u)) {
          comp[w] = comps;
          stack.push_back(w);
        }
      }
    }
    ++comps;
  }
  return comps;
}

}  // namespace

std::vector<DirectionMap> enumerate_ncpd(const PlaneTree& base) {
  const int n = base.vertex_count();
  const int m = base.edge_count();
  std::vector<DirectionMap> maps;
  maps.reserve(static_cast<std::size_t>(count_total_ncpd(n)));
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<Vertex> comp;
    const int comps = undirected_components(base, mask, comp);
    for (int source = 0; source < comps; ++source) {
      DirectionMap dir(m, EdgeState::Undirected);
      std::vector<char> seen(n, 0);
      std::vector<Vertex> stack;
      for (Vertex v = 0; v < n; ++v)
        if (comp[v] == source) {
          seen[v] = 1;
          stack.push_back(v);
        }
      while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (int i = 0; i < base.degree(v); ++i) {
          const Vertex w = base.neighbors(v)[i];
          if (seen[w]) continue;
          const EdgeId e = base.incident_edge(v, i);
          if (!(mask >> e & 1u)) dir[e] = directed_from(base.edge(e), v);
          seen[w] = 1;
          stack.push_back(w);
        }
      }
      maps.push_back(std::move(dir));
    }
  }
  return maps;
}

std::int64_t count_ncpd(const PlaneTree& base) {
  std::int64_t count = 0;
  std::vector<Vertex> comp;
  for (std::uint32_t mask = 0; mask < (1u << base.edge_count()); ++mask)
    count += undirected_components(base, mask, comp);
  return count;
}

std::int64_t count_total_ncpd(int n) {
  if (n == 1) return 1;
  return pow2(n - 1) + static_cast<std::int64_t>(n - 1) * pow2(n - 2);
}

std::int64_t count_fixed_maps(const PlaneTree& base, const std::vector<Vertex>& perm) {
  const int m = base.edge_count();
  const auto image = edge_permutation(base, perm);
  std::vector<std::vector<EdgeId>> orbits;
  std::vector<char> seen(m, 0);
  for (EdgeId e = 0; e < m; ++e) {
    if (seen[e]) continue;
    orbits.emplace_back();
    for (EdgeId f = e; !seen[f]; f = image[f]) {
      seen[f] = 1;
      orbits.back().push_back(f);
    }
  }

  std::int64_t fixed = 0;
  const int k = static_cast<int>(orbits.size());
  std::vector<int> choice(k, 0);
  DirectionMap dir(m);
  for (;;) {
    bool consistent = true;
    for (int o = 0; o < k && consistent; ++o) {
      const auto& orbit = orbits[o];
      const Edge& rep = base.edge(orbit[0]);
      std::optional<Vertex> src;
      if (choice[o] == 1) src = rep.u;
      if (choice[o] == 2) src = rep.v;
      for (EdgeId f : orbit) {
        dir[f] = src ? directed_from(base.edge(f), *src) : EdgeState::Undirected;
        if (src) src = perm[*src];
      }
      // closing the cycle must reproduce the representative's state
      if (src && *src != (choice[o] == 1 ? rep.u : rep.v)) consistent = false;
    }
    if (consistent && validate_noncolliding(base, dir)) ++fixed;

    int o = 0;
    while (o < k && ++choice[o] == 3) choice[o++] = 0;
    if (o == k) break;
  }
  return fixed;
}

std::map<int, std::int64_t> index_histogram(const PlaneTree& base) {
  std::map<int, std::int64_t> histogram;
  for (auto& dir : enumerate_ncpd(base)) ++histogram[whitney_index(NcpdTree(base, std::move(dir)))];
  return histogram;
}

int mobius(int n) {
  int result = 1;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    n /= q;
    if (n % q == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

std::map<int, std::int64_t> exact_symmetry_counts(const PlaneTree& base) {
  const SymmetryInfo sym = planar_automorphisms(base);
  if (sym.center_kind != CenterKind::Vertex)
    throw Error(ErrorCode::NotVertexCentered, "rotation center is an edge midpoint");
  std::vector<std::vector<Vertex>> group;
  for (int j = 0; j < sym.order; ++j) group.push_back(power(sym.generator, j));

  std::map<int, std::int64_t> counts;
  for (int d : divisors(sym.order)) counts[d] = 0;
  for (const auto& dir : enumerate_ncpd(base)) {
    int stabilizer = 0;
    for (const auto& g : group) stabilizer += apply_automorphism(base, g, dir) == dir;
    ++counts[stabilizer];
  }
  return counts;
}

std::map<int, std::int64_t> exact_symmetry_counts_lattice(const PlaneTree& base) {
  const SymmetryInfo sym = planar_automorphisms(base);
  if (sym.center_kind != CenterKind::Vertex)
    throw Error(ErrorCode::NotVertexCentered, "rotation center is an edge midpoint");
  const int n = base.vertex_count();
  const int p = sym.order;
  auto at_least = [&](int d) { return d == 1 ? count_total_ncpd(n) : pow2((n - 1) / d); };
  std::map<int, std::int64_t> counts;
  for (int d : divisors(p)) {
    std::int64_t exact = 0;
    for (int e : divisors(p))
      if (e % d == 0) exact += mobius(e / d) * at_least(e);
    counts[d] = exact;
  }
  return counts;
}

std::map<int, std::int64_t> exact_symmetry_counts_literal(const PlaneTree& base) {
  const SymmetryInfo sym = planar_automorphisms(base);
  std::map<int, std::int64_t> counts;
  const int p = sym.order;
  if (sym.center_kind != CenterKind::Vertex || p < 2 || is_prime(p)) return counts;
  const int k = (base.vertex_count() - 1) / p;
  for (int d : divisors(p)) {
    if (d == 1) continue;
    std::int64_t value = 0;
    for (int dp : divisors(d)) value += mobius(dp) * pow2(k * d / dp);
    counts[d] = value;
  }
  return counts;
}

CensusRow orbit_count(const PlaneTree& base) {
  check_size(base.vertex_count());
  const SymmetryInfo sym = planar_automorphisms(base);
  CensusRow row;
  row.tree_code = canonical_code(base);
  row.n = base.vertex_count();
  row.p = sym.order;
  row.center = sym.center_kind;
  row.total = count_ncpd(base);

  row.burnside_sum = row.total;
  for (int j = 1; j < sym.order; ++j) row.burnside_sum += count_fixed_maps(base, power(sym.generator, j));
  row.orbits = row.burnside_sum / row.p;

  const int n = row.n;
  const std::int64_t t = count_total_ncpd(n);
  if (row.p == 1) {
    row.formula = t;
  } else if (row.center == CenterKind::Edge) {
    const int k = n / 2;
    // 2^(2k-2) + (2k-1) 2^(2k-3) + 2^(k-2), scaled by 8 to stay integral for k = 1
    const std::int64_t scaled = pow2(2 * k + 1) + (2 * k - 1) * pow2(2 * k) + pow2(k + 1);
    row.formula = scaled / 8;
  } else if (is_prime(row.p)) {
    const int k = (n - 1) / row.p;
    row.formula = pow2(k) + (t - pow2(k)) / row.p;
  } else {
    const auto lattice = exact_symmetry_counts_lattice(base);
    std::int64_t weighted = 0;
    for (const auto& [d, count] : lattice) weighted += count * d;
    row.formula = weighted / row.p;
  }
  row.agree = row.formula == row.orbits;

  if (row.center == CenterKind::Vertex && row.p > 1) {
    row.exact_direct = exact_symmetry_counts(base);
    row.exact_lattice = exact_symmetry_counts_lattice(base);
    row.lattice_agrees = row.exact_direct == row.exact_lattice;
    row.exact_literal = exact_symmetry_counts_literal(base);
    for (const auto& [d, count] : row.exact_literal)
      row.literal_agrees = row.literal_agrees && row.exact_direct[d] == count;
  }
  return row;
}

std::vector<CensusRow> census_table(int n_max, int n_from) {
  check_size(n_max);
  std::vector<CensusRow> rows;
  for (int n = std::max(n_from, 1); n <= n_max; ++n)
    for (const PlaneTree& tree : enumerate_plane_trees(n)) rows.push_back(orbit_count(tree));
  return rows;
}

}  // namespace tlc
