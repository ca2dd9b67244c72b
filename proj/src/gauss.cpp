#include "tlc/gauss.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "tlc/error.hpp"

namespace tlc {
namespace {

std::vector<int> relabel_first_occurrence(const std::vector<int>& word) {
  std::map<int, int> relabel;
  std::vector<int> out;
  out.reserve(word.size());
  for (int label : word) {
    auto [it, inserted] = relabel.try_emplace(label, static_cast<int>(relabel.size()));
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

GaussDiagram::GaussDiagram(const std::vector<int>& word) {
  if (word.size() % 2 != 0)
    throw Error(ErrorCode::OddLength, "Gauss code has odd length " + std::to_string(word.size()));
  std::map<int, int> count;
  for (int label : word) ++count[label];
  for (const auto& [label, c] : count)
    if (c != 2)
      throw Error(ErrorCode::BadMultiplicity,
                  "label occurs " + std::to_string(c) + " times; every label must occur twice");
  word_ = relabel_first_occurrence(word);
}

std::vector<int> GaussDiagram::canonical_word() const {
  std::vector<int> best = word_;
  std::vector<int> rotated(word_.size());
  for (std::size_t shift = 1; shift < word_.size(); ++shift) {
    std::rotate_copy(word_.begin(), word_.begin() + shift, word_.end(), rotated.begin());
    auto candidate = relabel_first_occurrence(rotated);
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

std::string GaussDiagram::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out << ' ';
    out << word_[i] + 1;
  }
  return out.str();
}

bool equivalent(const GaussDiagram& a, const GaussDiagram& b) {
  return a.chord_count() == b.chord_count() && a.canonical_word() == b.canonical_word();
}

GaussDiagram parse_gauss_code(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::map<std::string, int> ids;
  std::vector<int> word;
  std::string token;
  while (in >> token) {
    auto [it, inserted] = ids.try_emplace(token, static_cast<int>(ids.size()));
    word.push_back(it->second);
  }
  return GaussDiagram(word);
}

bool is_tree_like(const GaussDiagram& gd) {
  // A non-crossing chord set is well nested from any starting point.
  std::vector<int> stack;
  std::vector<char> open(gd.chord_count(), 0);
  for (int label : gd.word()) {
    if (!stack.empty() && stack.back() == label) {
      stack.pop_back();
    } else if (open[label]) {
      return false;
    } else {
      open[label] = 1;
      stack.push_back(label);
    }
  }
  return stack.empty();
}

DualTree gauss_to_plane_tree(const GaussDiagram& gd) {
  if (!is_tree_like(gd)) throw Error(ErrorCode::NotTreeLike, "Gauss diagram is not planar (chords interleave)");

  const int k = gd.chord_count();
  std::vector<std::vector<Vertex>> rot(1);
  std::vector<Vertex> chord_child(k, kNoVertex);
  std::vector<Vertex> arc_face(gd.word().size());
  std::vector<Vertex> stack;
  Vertex current = 0;
  for (std::size_t i = 0; i < gd.word().size(); ++i) {
    const int chord = gd.word()[i];
    if (chord_child[chord] == kNoVertex) {
      const Vertex child = static_cast<Vertex>(rot.size());
      rot.push_back({current});
      rot[current].push_back(child);
      chord_child[chord] = child;
      stack.push_back(current);
      current = child;
    } else {
      current = stack.back();
      stack.pop_back();
    }
    arc_face[i] = current;
  }

  DualTree dual{PlaneTree(std::move(rot)), std::vector<EdgeId>(k), std::move(arc_face)};
  for (int chord = 0; chord < k; ++chord) {
    const Vertex child = chord_child[chord];
    dual.chord_edge[chord] = dual.tree.edge_between(child, dual.tree.neighbors(child)[0]);
  }
  return dual;
}

GaussDiagram plane_tree_to_gauss(const PlaneTree& tree) {
  std::vector<int> word;
  for (const Dart& d : tree.contour()) word.push_back(d.edge);
  return GaussDiagram(word);
}

}  // namespace tlc
