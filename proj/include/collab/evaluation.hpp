#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "collab/school_network.hpp"

namespace collab {

struct EvalReport {
  std::size_t n_predicted = 0;
  std::size_t n_correct = 0;
  std::size_t m_new = 0;
  std::size_t n_candidates = 0;
  double accuracy = 0.0;               // n_correct / n_predicted, 0 if nothing predicted
  double recall = 0.0;                 // n_correct / m_new, 0 if no new edges
  double random_guess_accuracy = 0.0;  // m_new / n_candidates

  bool operator==(const EvalReport&) const = default;
};

/// Closed-form counts; used when only the sizes are known.
EvalReport evaluate_counts(std::size_t n_predicted, std::size_t n_correct, std::size_t m_new,
                           std::size_t n_candidates);

/// Throws ValidationError if `pred` or `new_edges` leaves `candidates`.
EvalReport evaluate(const SchoolEdgeSet& pred, const SchoolEdgeSet& new_edges, const SchoolEdgeSet& candidates);

}  // namespace collab
