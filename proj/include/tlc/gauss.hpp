#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tlc/plane_tree.hpp"

namespace tlc {

/// Double-occurrence word read cyclically around the source circle of a
/// generic immersion. Chords are labelled 0..k-1 in order of first occurrence.
class GaussDiagram {
 public:
  GaussDiagram() = default;

  /// Normalizes labels to first-occurrence order. Throws OddLength or
  /// BadMultiplicity.
  explicit GaussDiagram(const std::vector<int>& word);

  int chord_count() const { return static_cast<int>(word_.size() / 2); }
  const std::vector<int>& word() const { return word_; }

  /// Lexicographically least relabelled rotation; equal for equivalent diagrams.
  std::vector<int> canonical_word() const;

  /// Space-separated, 1-based labels ("1 2 2 1").
  std::string to_string() const;

  bool operator==(const GaussDiagram&) const = default;

 private:
  std::vector<int> word_;
};

/// Equal up to cyclic rotation and relabelling.
bool equivalent(const GaussDiagram& a, const GaussDiagram& b);

/// Whitespace-separated tokens; any token text is a label.
GaussDiagram parse_gauss_code(std::string_view text);

/// True iff no two chords interleave.
bool is_tree_like(const GaussDiagram& gd);

struct DualTree {
  PlaneTree tree;
  /// chord label -> tree edge
  std::vector<EdgeId> chord_edge;
  /// arc i (between word positions i and i+1, cyclically) -> tree vertex (disk face)
  std::vector<Vertex> arc_face;
};

/// Dual tree of the chord arrangement in the disk. Vertex 0 is the face
/// holding the arc that closes the word. Throws NotTreeLike.
DualTree gauss_to_plane_tree(const GaussDiagram& gd);

/// Edges crossed by the contour walk from vertex 0.
GaussDiagram plane_tree_to_gauss(const PlaneTree& tree);

}  // namespace tlc
