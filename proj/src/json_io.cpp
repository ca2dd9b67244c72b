#include "tlc/json_io.hpp"

#include <sstream>

#include "tlc/error.hpp"

namespace tlc {
namespace {

const char* center_name(CenterKind c) { return c == CenterKind::Vertex ? "vertex" : "edge"; }

Json node_json(const NcpdTree& t, Vertex v, Vertex parent) {
  Json children = Json::array();
  const int k = t.degree(v);
  const int start = parent == kNoVertex ? 0 : t.base().position_of(v, parent) + 1;
  for (int i = 0; i < k; ++i) {
    const int pos = (start + i) % k;
    const Vertex w = t.base().neighbors(v)[pos];
    if (w == parent) continue;
    const EdgeId e = t.base().incident_edge(v, pos);
    const auto src = edge_source(t.base().edge(e), t.state(e));
    Json child = node_json(t, w, v);
    Json entry;
    entry["edge"] = !src ? "-" : (*src == v ? ">" : "<");
    entry["children"] = std::move(child["children"]);
    children.push_back(std::move(entry));
  }
  Json node;
  node["children"] = std::move(children);
  return node;
}

std::string node_text(const Json& node, const std::string& path) {
  if (!node.is_object() || !node.contains("children") || !node["children"].is_array())
    throw ParseError(1, 1, path + ": expected an object with a \"children\" array");
  std::string out = "(";
  int i = 0;
  for (const auto& child : node["children"]) {
    const std::string here = path + ".children[" + std::to_string(i++) + "]";
    if (!child.is_object() || !child.contains("edge") || !child["edge"].is_string())
      throw ParseError(1, 1, here + ": missing \"edge\" marker");
    const std::string marker = child["edge"];
    if (marker != ">" && marker != "<" && marker != "-")
      throw ParseError(1, 1, here + ": edge marker must be \">\", \"<\" or \"-\"");
    out += marker + node_text(child, here);
  }
  return out + ")";
}

}  // namespace

Json to_json(const GaussDiagram& gd) {
  Json j;
  j["k"] = gd.chord_count();
  Json word = Json::array();
  for (int label : gd.word()) word.push_back(label + 1);
  j["word"] = std::move(word);
  return j;
}

Json to_json(const PlaneTree& tree) {
  Json j;
  j["n"] = tree.vertex_count();
  j["rotation"] = tree.rotation();
  return j;
}

Json to_json(const NcpdTree& t) {
  Json j;
  j["code"] = format_tree(t);
  j["root"] = node_json(t, 0, kNoVertex);
  return j;
}

Json to_json(const BoundReport& r) {
  Json j;
  j["lower"] = r.lower;
  j["exact"] = r.exact ? Json(*r.exact) : Json(nullptr);
  j["upper"] = r.upper;
  j["jt"] = r.jt;
  j["bl"] = r.bl;
  j["witness"] = r.witness ? Json(r.witness->sigma) : Json(nullptr);
  return j;
}

Json to_json(const CensusRow& row) {
  Json j;
  j["n"] = row.n;
  j["tree_code"] = row.tree_code;
  j["p"] = row.p;
  j["center"] = center_name(row.center);
  j["total"] = row.total;
  j["orbits"] = row.orbits;
  j["formula"] = row.formula ? Json(*row.formula) : Json(nullptr);
  j["agree"] = row.agree;
  j["burnside_sum"] = row.burnside_sum;
  if (!row.exact_direct.empty()) {
    Json exact;
    auto as_object = [](const std::map<int, std::int64_t>& m) {
      Json o = Json::object();
      for (const auto& [d, count] : m) o[std::to_string(d)] = count;
      return o;
    };
    exact["direct"] = as_object(row.exact_direct);
    exact["lattice"] = as_object(row.exact_lattice);
    exact["lattice_agrees"] = row.lattice_agrees;
    if (!row.exact_literal.empty()) {
      exact["literal"] = as_object(row.exact_literal);
      exact["literal_agrees"] = row.literal_agrees;
    }
    j["stabilizers"] = std::move(exact);
  }
  return j;
}

NcpdTree tree_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("root")) throw ParseError(1, 1, "expected an object with a \"root\" node");
  return parse_tree(node_text(j["root"], "root"));
}

std::string census_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream out;
  out << "n,tree_code,p,center,total,orbits,formula,agree\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.tree_code << ',' << r.p << ',' << center_name(r.center) << ',' << r.total << ','
        << r.orbits << ',';
    if (r.formula) out << *r.formula;
    out << ',' << (r.agree ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace tlc
