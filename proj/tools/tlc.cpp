// tlc: command-line front end for tree-like curve analysis.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tlc/census.hpp"
#include "tlc/error.hpp"
#include "tlc/gauss.hpp"
#include "tlc/inflect.hpp"
#include "tlc/json_io.hpp"
#include "tlc/ncpd_tree.hpp"
#include "tlc/render.hpp"

namespace {

using namespace tlc;

enum Exit { kOk = 0, kDomain = 1, kParse = 2, kSize = 3, kDisagree = 4 };

constexpr int kMaxAllDirections = 8;

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::OddLength:
    case ErrorCode::BadMultiplicity:
    case ErrorCode::ParseError:
    case ErrorCode::InvalidTree:
      return kParse;
    case ErrorCode::SizeLimit:
      return kSize;
    default:
      return kDomain;
  }
}

struct Input {
  std::string gauss;
  std::string tree;
  // one --gauss option per subcommand that accepts it
  std::vector<CLI::Option*> gauss_opts;

  bool is_gauss() const {
    return std::any_of(gauss_opts.begin(), gauss_opts.end(), [](const CLI::Option* o) { return o->count() > 0; });
  }
};

// "-" reads stdin, "@path" reads a file, anything else is the text itself.
std::string load(const std::string& value) {
  if (value == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  if (!value.empty() && value[0] == '@') {
    std::ifstream in(value.substr(1));
    if (!in) throw ParseError(1, 1, "cannot open " + value.substr(1));
    return {std::istreambuf_iterator<char>(in), {}};
  }
  return value;
}

int resolve_budget(int flag) {
  if (flag >= 0) return flag;
  if (const char* env = std::getenv("TLC_BUDGET")) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(env, &used);
      if (used == std::string(env).size() && value >= 0) return value;
    } catch (const std::exception&) {
    }
    throw ParseError(1, 1, std::string("TLC_BUDGET is not a nonnegative integer: ") + env);
  }
  return kDefaultBudget;
}

CLI::Option_group* add_input(CLI::App* cmd, Input& in, bool gauss_allowed) {
  auto* group = cmd->add_option_group("input");
  group->add_option("--tree", in.tree, "ncpd-tree text, e.g. \"(>()-())\"; - for stdin, @file");
  if (gauss_allowed)
    in.gauss_opts.push_back(
        group->add_option("--gauss", in.gauss, "Gauss code, e.g. \"1 2 2 1\"; - for stdin, @file")
            ->expected(0, 1));
  group->require_option(1);
  return group;
}

std::string signs(const std::vector<int>& sigma) {
  std::string out;
  for (int s : sigma) out += s > 0 ? '+' : '-';
  return out;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string rotation_text(const PlaneTree& tree) {
  std::ostringstream out;
  for (Vertex v = 0; v < tree.vertex_count(); ++v) {
    out << (v ? " | " : "") << v << ":";
    for (Vertex w : tree.neighbors(v)) out << ' ' << w;
  }
  return out.str();
}

Json tree_summary(const NcpdTree& t, int budget, bool reflect) {
  Json j;
  j["tree"] = to_json(t);
  j["canonical_code"] = canonical_code(t, reflect);
  j["whitney_index"] = whitney_index(t);
  j["nonflattening"] = is_nonflattening(t);
  j["bounds"] = to_json(min_inflections(t, budget));
  return j;
}

void print_tree_summary(const Json& j, const std::string& indent) {
  std::cout << indent << "canonical_code=" << j["canonical_code"].get<std::string>() << '\n'
            << indent << "index=" << j["whitney_index"] << '\n'
            << indent << "nonflattening=" << bool_text(j["nonflattening"]) << '\n';
  const Json& b = j["bounds"];
  std::cout << indent << "lower=" << b["lower"] << '\n'
            << indent << "exact=" << (b["exact"].is_null() ? std::string("unknown") : b["exact"].dump()) << '\n'
            << indent << "upper=" << b["upper"] << " (jt=" << b["jt"] << ", bl=" << b["bl"] << ")\n";
  if (!b["witness"].is_null()) std::cout << indent << "witness=" << signs(b["witness"]) << '\n';
}

// --- analyze --------------------------------------------------------------

int run_analyze(const Input& in, bool json, bool all_directions, bool reflect, int budget) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  std::optional<NcpdTree> tree;
  GaussDiagram gd;
  if (in.is_gauss()) {
    const std::string text = load(in.gauss);
    gd = parse_gauss_code(text);
    out["input"] = {{"kind", "gauss"}, {"text", text}};
  } else {
    const std::string text = load(in.tree);
    tree = parse_tree(text);
    gd = plane_tree_to_gauss(tree->base());
    out["input"] = {{"kind", "tree"}, {"text", text}};
  }
  out["gauss"] = to_json(gd);
  out["tree_like"] = is_tree_like(gd);
  if (!is_tree_like(gd)) {
    if (json)
      std::cout << out.dump(2) << '\n';
    else
      std::cout << "tree_like=false\n";
    std::cerr << "tlc: not tree-like: two chords interleave\n";
    return kDomain;
  }
  const PlaneTree base = tree ? tree->base() : gauss_to_plane_tree(gd).tree;
  out["dual_tree"] = to_json(base);
  out["plane_code"] = canonical_code(base, reflect);
  if (tree) out["summary"] = tree_summary(*tree, budget, reflect);

  if (all_directions) {
    if (base.vertex_count() > kMaxAllDirections)
      throw Error(ErrorCode::SizeLimit, "--all-directions needs at most " + std::to_string(kMaxAllDirections) +
                                            " vertices, got " + std::to_string(base.vertex_count()));
    Json list = Json::array();
    for (auto& dir : enumerate_ncpd(base)) list.push_back(tree_summary(NcpdTree(base, std::move(dir)), budget, reflect));
    out["directions"] = std::move(list);
  }

  if (json) {
    std::cout << out.dump(2) << '\n';
    return kOk;
  }
  std::cout << "tree_like=true\n"
            << "gauss=" << gd.to_string() << '\n'
            << "dual_tree=" << rotation_text(base) << '\n'
            << "plane_code=" << out["plane_code"].get<std::string>() << '\n';
  if (tree) {
    std::cout << "tree=" << format_tree(*tree) << '\n';
    print_tree_summary(out["summary"], "");
  }
  if (all_directions) {
    std::cout << "directions=" << out["directions"].size() << '\n';
    for (const auto& d : out["directions"]) {
      std::cout << "- tree=" << d["tree"]["code"].get<std::string>() << '\n';
      print_tree_summary(d, "  ");
    }
  }
  return kOk;
}

// --- minimize -------------------------------------------------------------

int run_minimize(const Input& in, int budget) {
  const NcpdTree t = parse_tree(load(in.tree));
  const BoundReport report = min_inflections(t, budget);
  Json out = to_json(report);
  out["schema_version"] = kSchemaVersion;
  std::cout << out.dump() << '\n';
  if (!report.exact) {
    std::cerr << "tlc: " << traversal(t).size() << " sides exceed the search budget of " << budget << '\n';
    return kSize;
  }
  return kOk;
}

// --- count ----------------------------------------------------------------

int run_count(const Input& in, int n, bool json, bool strict, bool reflect) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  if (n > 0) {
    if (n > kMaxCensusVertices)
      throw Error(ErrorCode::SizeLimit, "--n must be at most " + std::to_string(kMaxCensusVertices));
    const auto rows = census_table(n, n);
    std::int64_t orbits = 0;
    bool agree = true;
    for (const auto& r : rows) {
      orbits += r.orbits;
      agree = agree && r.agree && r.lattice_agrees;
    }
    out["n"] = n;
    out["total_ncpd"] = count_total_ncpd(n);
    out["plane_trees"] = rows.size();
    out["orbits"] = orbits;
    out["agree"] = agree;
    if (json) {
      std::cout << out.dump(2) << '\n';
    } else {
      std::cout << "n=" << n << "\ntotal_ncpd=" << count_total_ncpd(n) << "\nplane_trees=" << rows.size()
                << "\norbits=" << orbits << "\nagree=" << bool_text(agree) << '\n';
    }
    return strict && !agree ? kDisagree : kOk;
  }

  PlaneTree base;
  if (in.is_gauss())
    base = gauss_to_plane_tree(parse_gauss_code(load(in.gauss))).tree;
  else
    base = parse_tree(load(in.tree)).base();
  const CensusRow row = orbit_count(base);
  const auto histogram = index_histogram(base);
  Json r = to_json(row);
  if (reflect) r["tree_code"] = canonical_code(base, true);
  out["row"] = r;
  Json h = Json::object();
  for (const auto& [index, count] : histogram) h[std::to_string(index)] = count;
  out["index_histogram"] = h;

  if (json) {
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "tree_code=" << r["tree_code"].get<std::string>() << "\nn=" << row.n << "\np=" << row.p
              << "\ncenter=" << r["center"].get<std::string>() << "\ntotal=" << row.total << "\norbits=" << row.orbits
              << "\nformula=" << (row.formula ? std::to_string(*row.formula) : "n/a")
              << "\nagree=" << bool_text(row.agree) << '\n';
    for (const auto& [index, count] : histogram) std::cout << "index " << index << ": " << count << '\n';
  }
  return strict && !(row.agree && row.lattice_agrees) ? kDisagree : kOk;
}

// --- enumerate ------------------------------------------------------------

void print_stabilizers(const CensusRow& r) {
  std::cout << "  " << r.tree_code << " (n=" << r.n << ", p=" << r.p << ")\n";
  std::cout << "    d  direct  lattice  literal\n";
  for (const auto& [d, direct] : r.exact_direct) {
    std::cout << "    " << std::setw(1) << d << "  " << std::setw(6) << direct << "  " << std::setw(7)
              << r.exact_lattice.at(d) << "  ";
    auto lit = r.exact_literal.find(d);
    if (lit == r.exact_literal.end())
      std::cout << std::setw(7) << "-";
    else
      std::cout << std::setw(7) << lit->second << (lit->second != direct ? "  differs from direct count" : "");
    std::cout << '\n';
  }
}

int run_enumerate(int n, int from, bool csv, bool json, bool strict, bool document, bool inject_fault) {
  if (from <= 0) from = n;
  auto rows = census_table(n, from);
  if (inject_fault && !rows.empty()) rows.front().agree = false;
  bool agree = true;
  for (const auto& r : rows) agree = agree && r.agree && r.lattice_agrees;

  if (json) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["n_from"] = from;
    out["n_max"] = n;
    Json list = Json::array();
    for (const auto& r : rows) list.push_back(to_json(r));
    out["rows"] = std::move(list);
    out["all_agree"] = agree;
    std::cout << out.dump(2) << '\n';
  } else if (csv) {
    std::cout << census_csv(rows);
  } else {
    std::cout << std::left << std::setw(4) << "n" << std::setw(28) << "tree_code" << std::setw(4) << "p"
              << std::setw(8) << "center" << std::setw(8) << "total" << std::setw(8) << "orbits" << std::setw(9)
              << "formula"
              << "agree\n";
    for (const auto& r : rows)
      std::cout << std::setw(4) << r.n << std::setw(28) << r.tree_code << std::setw(4) << r.p << std::setw(8)
                << (r.center == CenterKind::Vertex ? "vertex" : "edge") << std::setw(8) << r.total << std::setw(8)
                << r.orbits << std::setw(9) << (r.formula ? std::to_string(*r.formula) : "n/a") << bool_text(r.agree)
                << '\n';
    std::cout << std::right;
  }

  if (document) {
    std::ostream& doc = (json || csv) ? std::cerr : std::cout;
    std::streambuf* saved = std::cout.rdbuf(doc.rdbuf());
    std::cout << "\nstabilizer counts (vertex-centered rows with p > 1):\n";
    int discrepancies = 0;
    for (const auto& r : rows) {
      if (r.exact_direct.empty()) continue;
      print_stabilizers(r);
      discrepancies += !r.literal_agrees;
    }
    std::cout << "literal closed form disagrees with the direct count on " << discrepancies << " row(s)\n";
    std::cout.rdbuf(saved);
  }
  return strict && !agree ? kDisagree : kOk;
}

// --- render ---------------------------------------------------------------

int run_render(const Input& in, const std::string& svg_path, std::uint64_t seed, const std::string& coorient,
               bool json, int budget) {
  const NcpdTree t = parse_tree(load(in.tree));
  RenderOptions opts;
  opts.seed = seed;
  const RealizedCurve rc = realize(t, opts);
  const CurveTraversal tr = traversal(t);

  SvgOptions svg;
  if (coorient == "continuous") {
    const auto labels = coorientation(t);
    LocalCoorientation cc;
    for (const auto& side : tr.sides) cc.sigma.push_back(labels.label[side.vertex]);
    svg.coorientation = cc;
  } else if (coorient == "witness") {
    const BoundReport report = min_inflections(t, budget);
    if (!report.witness) throw Error(ErrorCode::SizeLimit, "no witness within the search budget");
    svg.coorientation = *report.witness;
  }
  if (svg.coorientation)
    for (int p = 0; p < static_cast<int>(tr.passages.size()); ++p)
      if (creates_inflection(tr, *svg.coorientation, p)) svg.inflection_passages.push_back(p);

  std::ofstream file(svg_path);
  if (!file) throw std::runtime_error("cannot write " + svg_path);
  file << to_svg(rc, svg);

  const GaussDiagram gd = verify_gauss(rc);
  const bool matches = equivalent(gd, plane_tree_to_gauss(t.base()));
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["svg"] = svg_path;
  out["crossings"] = rc.crossings.size();
  out["gauss"] = to_json(gd);
  out["matches"] = matches;
  out["turning_number"] = turning_number(rc);
  out["whitney_index"] = whitney_index(t);
  out["numeric_inflections"] = numeric_inflections(rc);
  if (json) {
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "svg=" << svg_path << "\ncrossings=" << rc.crossings.size() << "\ngauss=" << gd.to_string()
              << "\nmatches=" << bool_text(matches) << "\nturning_number=" << turning_number(rc)
              << "\nindex=" << whitney_index(t) << "\nnumeric_inflections=" << numeric_inflections(rc) << '\n';
  }
  return matches ? kOk : kDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inflection points and curve classes of tree-like plane curves"};
  app.require_subcommand(1);

  Input in;
  bool json = false, csv = false, strict = false, all_directions = false, reflect = false;
  bool document = false, inject_fault = false;
  int budget_flag = -1, n = 0, from = 0;
  std::string svg_path, coorient = "none";
  std::uint64_t seed = 0;

  auto* analyze = app.add_subcommand("analyze", "tree-likeness, dual tree, index, nonflattening and bounds");
  add_input(analyze, in, true);
  analyze->add_flag("--json", json, "emit JSON");
  analyze->add_flag("--all-directions", all_directions, "summarize every noncolliding direction map (n <= 8)");
  analyze->add_flag("--reflect", reflect, "identify mirror images in canonical codes");
  analyze->add_option("--budget", budget_flag, "exhaustive search limit in sides (default $TLC_BUDGET or 26)");

  auto* minimize = app.add_subcommand("minimize", "minimal number of inflection points, with bounds (JSON)");
  add_input(minimize, in, false);
  minimize->add_option("--budget", budget_flag, "exhaustive search limit in sides (default $TLC_BUDGET or 26)");
  minimize->add_flag("--json", json, "accepted for symmetry; output is always JSON");

  auto* count = app.add_subcommand("count", "curve classes over one plane tree, or totals for --n");
  add_input(count, in, true)->add_option("--n", n, "vertex count (1..12); totals over all plane trees");
  count->add_flag("--json", json, "emit JSON");
  count->add_flag("--strict", strict, "exit 4 when a closed form disagrees with the brute count");
  count->add_flag("--reflect", reflect, "identify mirror images in the reported code");

  auto* enumerate = app.add_subcommand("enumerate", "census of plane trees with orbit counts");
  enumerate->add_option("--n", n, "largest vertex count (1..12)")->required();
  enumerate->add_option("--from", from, "smallest vertex count (default: --n)");
  enumerate->add_flag("--csv", csv, "emit CSV");
  enumerate->add_flag("--json", json, "emit JSON");
  enumerate->add_flag("--strict", strict, "exit 4 on any formula/brute disagreement");
  enumerate->add_flag("--document", document, "also print stabilizer counts by all three methods");
  enumerate->add_flag("--inject-fault", inject_fault, "flip the first agreement flag (tests strict mode)")
      ->group("");

  auto* render = app.add_subcommand("render", "draw a curve realizing an ncpd-tree as SVG");
  add_input(render, in, false);
  render->add_option("--svg", svg_path, "output file")->required();
  render->add_option("--seed", seed, "layout jitter seed");
  render->add_option("--coorient", coorient, "side colouring")->check(CLI::IsMember({"none", "continuous", "witness"}));
  render->add_option("--budget", budget_flag, "search limit for --coorient witness");
  render->add_flag("--json", json, "emit JSON summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    const int budget = resolve_budget(budget_flag);
    if (analyze->parsed()) return run_analyze(in, json, all_directions, reflect, budget);
    if (minimize->parsed()) return run_minimize(in, budget);
    if (count->parsed()) return run_count(in, n, json, strict, reflect);
    if (enumerate->parsed()) return run_enumerate(n, from, csv, json, strict, document, inject_fault);
    if (render->parsed()) return run_render(in, svg_path, seed, coorient, json, budget);
  } catch (const Error& e) {
    std::cerr << "tlc: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "tlc: " << e.what() << '\n';
    return kDomain;
  }
  return kOk;
}
