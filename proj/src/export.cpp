#include "collab/export.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include <fmt/format.h>

#include "collab/error.hpp"

namespace collab {

namespace {

// Qualitative palette, one colour per faculty in sorted order.
constexpr Rgb kFacultyPalette[] = {
    {27, 158, 119}, {217, 95, 2}, {117, 112, 179}, {231, 41, 138}, {102, 166, 30},
    {230, 171, 2},  {166, 118, 29}, {102, 102, 102}, {31, 120, 180}, {251, 154, 153},
};

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::map<std::string, Rgb> faculty_colors(const std::vector<std::string>& faculties) {
  std::set<std::string> distinct(faculties.begin(), faculties.end());
  std::map<std::string, Rgb> out;
  std::size_t x = 0;
  for (const auto& f : distinct) out[f] = kFacultyPalette[x++ % std::size(kFacultyPalette)];
  return out;
}

}  // namespace

GraphFormat parse_graph_format(const std::string& name) {
  if (name == "dot" || name == "DOT") return GraphFormat::Dot;
  if (name == "graphml" || name == "GraphML") return GraphFormat::GraphML;
  throw ValidationError(fmt::format("unknown graph format '{}' (expected dot or graphml)", name));
}

std::string Rgb::hex() const { return fmt::format("#{:02x}{:02x}{:02x}", r, g, b); }

Rgb red_blue_ramp(double t) {
  t = std::clamp(t, 0.0, 1.0);
  constexpr Rgb red{178, 24, 43};
  constexpr Rgb blue{33, 102, 172};
  auto lerp = [t](int a, int b) { return static_cast<int>(std::lround(a + (b - a) * t)); };
  return Rgb{lerp(red.r, blue.r), lerp(red.g, blue.g), lerp(red.b, blue.b)};
}

std::vector<std::string> school_faculties(const Corpus& corpus, const OrganisationTable* organisations) {
  std::vector<std::string> out(corpus.school_count(), "?");
  for (SchoolIndex k = 0; k < corpus.school_count(); ++k) {
    if (organisations) {
      if (const auto* e = organisations->find(corpus.schools()[k])) out[k] = e->faculty;
    }
  }
  for (ResearcherIndex i = 0; i < corpus.researcher_count(); ++i) {
    const auto& r = corpus.researchers()[i];
    if (r.schools.size() != 1 || r.faculties.size() != 1) continue;
    auto& slot = out[corpus.schools_of(i)[0]];
    if (slot == "?") slot = r.faculties[0];
  }
  return out;
}

std::vector<FigureEdge> figure_edges(const Prediction& pred, const SchoolEdgeSet& new_edges,
                                     const SchoolWeights& test_weights) {
  auto weight_of = [](const SchoolWeights& w, const SchoolPair& p) {
    auto it = w.find(p);
    return it == w.end() ? 0.0 : it->second;
  };
  double max_pred = 0.0;
  for (const auto& p : pred.edges) max_pred = std::max(max_pred, weight_of(pred.weights, p));
  double lo = 0.0, hi = 0.0;
  bool first = true;
  for (const auto& p : new_edges) {
    const double v = weight_of(test_weights, p);
    lo = first ? v : std::min(lo, v);
    hi = first ? v : std::max(hi, v);
    first = false;
  }

  SchoolEdgeSet all = pred.edges;
  all.insert(new_edges.begin(), new_edges.end());
  std::vector<FigureEdge> out;
  for (const auto& p : all) {
    FigureEdge e{p, pred.edges.contains(p), new_edges.contains(p), 0.2, kFalsePositiveGrey};
    if (e.predicted) e.width = 0.2 + (max_pred > 0.0 ? 4.8 * weight_of(pred.weights, p) / max_pred : 0.0);
    if (e.correct) {
      const double t = hi > lo ? (weight_of(test_weights, p) - lo) / (hi - lo) : 1.0;
      e.color = red_blue_ramp(t);
    }
    out.push_back(e);
  }
  return out;
}

std::string render_graph(GraphFormat format, const Corpus& corpus, const std::vector<std::string>& faculties,
                         const Prediction& pred, const SchoolEdgeSet& new_edges, const SchoolWeights& test_weights) {
  if (faculties.size() != corpus.school_count()) throw std::invalid_argument("faculty list does not match schools");
  const auto colors = faculty_colors(faculties);
  const auto edges = figure_edges(pred, new_edges, test_weights);
  const auto& schools = corpus.schools();
  std::string out;

  if (format == GraphFormat::Dot) {
    out += "graph schools {\n";
    out += "  graph [overlap=false, splines=true];\n";
    out += "  node [shape=circle, style=filled, fontsize=10];\n";
    for (SchoolIndex k = 0; k < schools.size(); ++k)
      out += fmt::format("  \"{}\" [fillcolor=\"{}\", faculty=\"{}\"];\n", dot_escape(schools[k]),
                         colors.at(faculties[k]).hex(), dot_escape(faculties[k]));
    for (const auto& e : edges)
      out += fmt::format("  \"{}\" -- \"{}\" [style={}, penwidth={}, color=\"{}\"];\n", dot_escape(schools[e.pair.k]),
                         dot_escape(schools[e.pair.l]), e.predicted ? "solid" : "dashed", format_real(e.width),
                         e.color.hex());
    out += "}\n";
    return out;
  }

  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
  out += "  <key id=\"faculty\" for=\"node\" attr.name=\"faculty\" attr.type=\"string\"/>\n";
  out += "  <key id=\"fill\" for=\"node\" attr.name=\"color\" attr.type=\"string\"/>\n";
  out += "  <key id=\"style\" for=\"edge\" attr.name=\"style\" attr.type=\"string\"/>\n";
  out += "  <key id=\"width\" for=\"edge\" attr.name=\"width\" attr.type=\"double\"/>\n";
  out += "  <key id=\"stroke\" for=\"edge\" attr.name=\"color\" attr.type=\"string\"/>\n";
  out += "  <key id=\"predicted\" for=\"edge\" attr.name=\"predicted\" attr.type=\"boolean\"/>\n";
  out += "  <key id=\"new\" for=\"edge\" attr.name=\"new\" attr.type=\"boolean\"/>\n";
  out += "  <graph id=\"schools\" edgedefault=\"undirected\">\n";
  for (SchoolIndex k = 0; k < schools.size(); ++k)
    out += fmt::format(
        "    <node id=\"{}\"><data key=\"faculty\">{}</data><data key=\"fill\">{}</data></node>\n",
        xml_escape(schools[k]), xml_escape(faculties[k]), colors.at(faculties[k]).hex());
  std::size_t id = 0;
  for (const auto& e : edges)
    out += fmt::format(
        "    <edge id=\"e{}\" source=\"{}\" target=\"{}\"><data key=\"style\">{}</data><data "
        "key=\"width\">{}</data><data key=\"stroke\">{}</data><data key=\"predicted\">{}</data><data "
        "key=\"new\">{}</data></edge>\n",
        id++, xml_escape(schools[e.pair.k]), xml_escape(schools[e.pair.l]), e.predicted ? "solid" : "dashed",
        format_real(e.width), e.color.hex(), e.predicted ? "true" : "false", e.correct ? "true" : "false");
  out += "  </graph>\n</graphml>\n";
  return out;
}

}  // namespace collab
