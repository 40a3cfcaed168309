#pragma once

#include <string>
#include <vector>

#include "collab/ingest.hpp"
#include "collab/predictor.hpp"
#include "collab/school_network.hpp"

namespace collab {

enum class GraphFormat { Dot, GraphML };

GraphFormat parse_graph_format(const std::string& name);

struct Rgb {
  int r, g, b;
  std::string hex() const;
  bool operator==(const Rgb&) const = default;
};

/// Linear RGB interpolation from red (t = 0) to blue (t = 1).
Rgb red_blue_ramp(double t);
inline constexpr Rgb kFalsePositiveGrey{128, 128, 128};

/// Faculty code of each school, index-aligned with corpus.schools(). Uses
/// the organisation table when given, else the faculties of single-school
/// researchers; "?" when undetermined.
std::vector<std::string> school_faculties(const Corpus& corpus, const OrganisationTable* organisations);

/// One drawn edge of the prediction figure.
struct FigureEdge {
  SchoolPair pair;
  bool predicted;  // solid if true, dashed otherwise (missed new edge)
  bool correct;    // in the new-edge set
  double width;
  Rgb color;
};

/// Edges of E^pred union E^new with their drawing attributes. Predicted
/// widths are 0.2 + w_kl / max w_kl * 4.8; missed new edges get 0.2. New
/// edges are coloured by their test weight, min-max normalised over E^new.
std::vector<FigureEdge> figure_edges(const Prediction& pred, const SchoolEdgeSet& new_edges,
                                     const SchoolWeights& test_weights);

std::string render_graph(GraphFormat format, const Corpus& corpus, const std::vector<std::string>& faculties,
                         const Prediction& pred, const SchoolEdgeSet& new_edges, const SchoolWeights& test_weights);

}  // namespace collab
