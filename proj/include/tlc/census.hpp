#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tlc/ncpd_tree.hpp"

namespace tlc {

inline constexpr int kMaxCensusVertices = 12;

/// All plane trees on n vertices up to orientation-preserving equivalence,
/// each rebuilt from its canonical code, sorted by that code. Throws SizeLimit.
std::vector<PlaneTree> enumerate_plane_trees(int n);

/// Every noncolliding direction map on `base`, generated as (undirected edge
/// set, source component) pairs.
std::vector<DirectionMap> enumerate_ncpd(const PlaneTree& base);

/// |enumerate_ncpd(base)| by the same (undirected set, source component)
/// enumeration, without materializing the maps.
std::int64_t count_ncpd(const PlaneTree& base);

/// 2^(n-1) + (n-1) 2^(n-2).
std::int64_t count_total_ncpd(int n);

/// Direction maps fixed by the automorphism `perm`, counted by assigning
/// states on edge orbits and filtering for noncolliding.
std::int64_t count_fixed_maps(const PlaneTree& base, const std::vector<Vertex>& perm);

/// Number of noncolliding maps on `base` per |Whitney index|.
std::map<int, std::int64_t> index_histogram(const PlaneTree& base);

int mobius(int n);

/// Stabilizer order d -> number of maps whose stabilizer in the planar
/// automorphism group is exactly Z/d, by classifying every map.
/// Throws NotVertexCentered for edge-centered trees.
std::map<int, std::int64_t> exact_symmetry_counts(const PlaneTree& base);

/// The same counts by Moebius inversion over the subgroup lattice of Z/p from
/// the at-least counts 2^((n-1)/d) (d > 1) and T(n) (d = 1).
std::map<int, std::int64_t> exact_symmetry_counts_lattice(const PlaneTree& base);

/// The closed form sum_{d'|d} mu(d') 2^(k d / d'), k = (n-1)/p, for each
/// nontrivial divisor d of a composite p. Kept for documentation only.
std::map<int, std::int64_t> exact_symmetry_counts_literal(const PlaneTree& base);

struct CensusRow {
  std::string tree_code;
  int n = 1;
  int p = 1;
  CenterKind center = CenterKind::Vertex;
  std::int64_t total = 0;
  std::int64_t orbits = 0;
  /// Sum over group elements of fixed-map counts; equals orbits * p.
  std::int64_t burnside_sum = 0;
  std::optional<std::int64_t> formula;
  bool agree = true;

  /// Vertex-centered rows with p > 1 only.
  std::map<int, std::int64_t> exact_direct;
  std::map<int, std::int64_t> exact_lattice;
  /// Composite p only.
  std::map<int, std::int64_t> exact_literal;
  bool lattice_agrees = true;
  bool literal_agrees = true;
};

/// Burnside orbit count of noncolliding maps under planar automorphisms,
/// with the matching closed form.
CensusRow orbit_count(const PlaneTree& base);

/// One row per plane tree for n_from <= n <= n_max. Throws SizeLimit.
std::vector<CensusRow> census_table(int n_max, int n_from = 1);

}  // namespace tlc
